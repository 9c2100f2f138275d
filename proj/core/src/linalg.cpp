#include "sympsig/linalg.hpp"

#include <vector>

#include "sympsig/errors.hpp"

namespace sympsig {

Inertia signature_of_symmetric(const Mat& s) {
  if (!s.is_square()) throw invalid_input("signature of a non-square matrix");
  if (!s.is_symmetric())
    throw invalid_input("signature of an asymmetric matrix");
  Mat a = s;
  const std::size_t n = a.rows();
  Inertia out;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      // Prefer a nonzero diagonal entry below; swapping rows and columns
      // together is a congruence.
      std::size_t l = k + 1;
      while (l < n && a(l, l) == 0) ++l;
      if (l < n) {
        a.swap_rows(k, l);
        a.swap_cols(k, l);
      } else {
        // All remaining diagonal entries vanish. A nonzero off-diagonal
        // a(k, j) yields the pivot 2 a(k, j) after adding row and column j.
        std::size_t j = k + 1;
        while (j < n && a(k, j) == 0) ++j;
        if (j == n) {
          ++out.n_zero;
          continue;
        }
        for (std::size_t c = 0; c < n; ++c) a(k, c) += a(j, c);
        for (std::size_t r = 0; r < n; ++r) a(r, k) += a(r, j);
      }
    }
    const Rat p = a(k, k);
    if (p > 0)
      ++out.n_plus;
    else
      ++out.n_minus;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rat f = a(i, k) / p;
      for (std::size_t c = 0; c < n; ++c) a(i, c) -= f * a(k, c);
      for (std::size_t r = 0; r < n; ++r) a(r, i) -= f * a(r, k);
    }
  }
  return out;
}

Mat rref(Mat a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t lead = 0;
  for (std::size_t r = 0; r < rows && lead < cols; ++r) {
    std::size_t i = r;
    while (i < rows && a(i, lead) == 0) ++i;
    if (i == rows) {
      ++lead;
      --r;
      continue;
    }
    a.swap_rows(i, r);
    const Rat p = a(r, lead);
    for (std::size_t j = lead; j < cols; ++j) a(r, j) /= p;
    for (std::size_t k = 0; k < rows; ++k) {
      if (k == r || a(k, lead) == 0) continue;
      const Rat f = a(k, lead);
      for (std::size_t j = lead; j < cols; ++j) a(k, j) -= f * a(r, j);
    }
    ++lead;
  }
  return a;
}

Mat rcef(const Mat& a) {
  Mat r = rref(a.transpose());
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    bool z = true;
    for (std::size_t j = 0; j < r.cols(); ++j)
      if (r(i, j) != 0) {
        z = false;
        break;
      }
    if (!z) ++nonzero;
  }
  // Rows of a reduced row echelon form are zero only at the bottom.
  Mat out(a.rows(), nonzero);
  for (std::size_t c = 0; c < nonzero; ++c)
    for (std::size_t i = 0; i < a.rows(); ++i) out(i, c) = r(c, i);
  return out;
}

std::size_t rank(const Mat& a) {
  Mat r = rref(a);
  std::size_t count = 0;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j)
      if (r(i, j) != 0) {
        ++count;
        break;
      }
  return count;
}

Mat kernel_basis(const Mat& a) {
  const std::size_t cols = a.cols();
  Mat r = rref(a);
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (r(i, j) != 0) {
        pivot_col.push_back(j);
        is_pivot[j] = true;
        break;
      }
  std::vector<std::size_t> free_col;
  for (std::size_t j = 0; j < cols; ++j)
    if (!is_pivot[j]) free_col.push_back(j);

  Mat k(cols, free_col.size());
  for (std::size_t c = 0; c < free_col.size(); ++c) {
    const std::size_t f = free_col[c];
    k(f, c) = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      k(pivot_col[i], c) = -r(i, f);
  }
  return rcef(k);
}

Mat inverse(const Mat& a) {
  if (!a.is_square()) throw invalid_input("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Mat aug = hstack(a, Mat::identity(n));
  aug = rref(aug);
  for (std::size_t i = 0; i < n; ++i)
    if (aug(i, i) != 1) throw invalid_input("inverse of a singular matrix");
  Mat out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

bool spans_equal(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) return false;
  return rcef(a) == rcef(b);
}

}  // namespace sympsig
