#include "sympsig/matrix.hpp"

#include "sympsig/errors.hpp"

namespace sympsig {

Mat::Mat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols, Rat(0)) {}

Mat::Mat(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  e_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw invalid_input("ragged matrix literal");
    for (const auto& x : row) e_.push_back(x);
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::operator*(const Mat& rhs) const {
  if (cols_ != rhs.rows_) throw invalid_input("matrix product shape mismatch");
  Mat out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Rat& b = rhs(k, j);
        if (b != 0) out(i, j) += a * b;
      }
    }
  return out;
}

Mat Mat::operator+(const Mat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw invalid_input("matrix sum shape mismatch");
  Mat out(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + rhs.e_[i];
  return out;
}

Mat Mat::operator-(const Mat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw invalid_input("matrix difference shape mismatch");
  Mat out(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - rhs.e_[i];
  return out;
}

Mat Mat::operator-() const {
  Mat out(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = -e_[i];
  return out;
}

Mat operator*(const Rat& c, const Mat& m) {
  Mat out(m.rows_, m.cols_);
  for (std::size_t i = 0; i < m.e_.size(); ++i) out.e_[i] = c * m.e_[i];
  return out;
}

Mat Mat::transpose() const {
  Mat out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool Mat::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool Mat::is_zero() const {
  for (const auto& x : e_)
    if (x != 0) return false;
  return true;
}

bool Mat::is_integral() const {
  for (const auto& x : e_)
    if (!is_integer(x)) return false;
  return true;
}

void Mat::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void Mat::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

Mat hstack(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw invalid_input("hstack row mismatch");
  Mat out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) throw invalid_input("vstack column mismatch");
  Mat out(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, j) = b(i, j);
  return out;
}

Mat column_vector(const std::vector<Rat>& v) {
  Mat out(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) out(i, 0) = v[i];
  return out;
}

}  // namespace sympsig
