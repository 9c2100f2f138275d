#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "sympsig/rational.hpp"

namespace sympsig {

// Dense matrix over the rationals, row major. Immutable use is the norm;
// mutating accessors exist for construction and for the elimination routines.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);
  Mat(std::initializer_list<std::initializer_list<Rat>> rows);

  static Mat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rat& operator()(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }
  Rat& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

  Mat operator*(const Mat& rhs) const;
  Mat operator+(const Mat& rhs) const;
  Mat operator-(const Mat& rhs) const;
  Mat operator-() const;
  friend Mat operator*(const Rat& c, const Mat& m);

  bool operator==(const Mat& rhs) const = default;

  Mat transpose() const;

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_zero() const;
  bool is_integral() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> e_;
};

// [a | b], equal row counts.
Mat hstack(const Mat& a, const Mat& b);

// [a ; b], equal column counts.
Mat vstack(const Mat& a, const Mat& b);

Mat column_vector(const std::vector<Rat>& v);

}  // namespace sympsig
