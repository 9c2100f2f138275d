#pragma once

#include "sympsig/matrix.hpp"

namespace sympsig {

struct Inertia {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;

  long signature() const {
    return static_cast<long>(n_plus) - static_cast<long>(n_minus);
  }
  bool operator==(const Inertia&) const = default;
};

// Sylvester inertia of a symmetric matrix by exact congruence
// diagonalization. Invariant under S -> P^T S P for invertible P.
Inertia signature_of_symmetric(const Mat& s);

// Reduced row echelon form with leading entries 1.
Mat rref(Mat a);

// Reduced column echelon form with topmost pivot entries 1; zero columns
// are dropped, so the result is the canonical basis of the column span.
Mat rcef(const Mat& a);

std::size_t rank(const Mat& a);

// Columns span the right kernel of a, in canonical reduced column form.
// Column count is cols(a) - rank(a).
Mat kernel_basis(const Mat& a);

// Gaussian inverse; throws invalid_input when singular.
Mat inverse(const Mat& a);

// Equality of column spans.
bool spans_equal(const Mat& a, const Mat& b);

}  // namespace sympsig
