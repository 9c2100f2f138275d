#include "sympsig/lagrangian.hpp"

#include "sympsig/errors.hpp"
#include "sympsig/linalg.hpp"

namespace sympsig {

Lagrangian lagrangian_from_basis(const Mat& cols, std::size_t g) {
  if (g == 0) throw invalid_input("genus must be positive");
  if (cols.rows() != 2 * g || cols.cols() != g)
    throw invalid_input("lagrangian basis must be 2g x g");
  if (rank(cols) != g) throw invalid_input("lagrangian basis is rank deficient");
  const Mat j = symplectic_form(g);
  if (!(cols.transpose() * j * cols).is_zero())
    throw not_lagrangian("basis spans a non-isotropic subspace");
  return Lagrangian{g, rcef(cols)};
}

Lagrangian default_lagrangian(std::size_t g) {
  Mat b(2 * g, g);
  for (std::size_t i = 0; i < g; ++i) b(i, i) = 1;
  return Lagrangian{g, std::move(b)};
}

Lagrangian apply(const SpMat& a, const Lagrangian& l) {
  if (a.g != l.g) throw invalid_input("genus mismatch in lagrangian image");
  return Lagrangian{l.g, rcef(a.m * l.basis)};
}

Lagrangian line_lagrangian(const Rat& p, const Rat& q) {
  Mat b(2, 1);
  b(0, 0) = p;
  b(1, 0) = q;
  return lagrangian_from_basis(b, 1);
}

Lagrangian stabilize_lagrangian(const Lagrangian& l, std::size_t target_genus) {
  const std::size_t g = l.g, tg = target_genus;
  if (tg < g) throw invalid_input("stabilization cannot shrink the genus");
  if (tg == g) return l;
  Mat b(2 * tg, tg);
  for (std::size_t c = 0; c < g; ++c) {
    for (std::size_t i = 0; i < g; ++i) b(i, c) = l.basis(i, c);
    for (std::size_t i = 0; i < g; ++i) b(tg + i, c) = l.basis(g + i, c);
  }
  for (std::size_t k = g; k < tg; ++k) b(k, k) = 1;
  return Lagrangian{tg, rcef(b)};
}

Mat doubled_form(std::size_t g) {
  const Mat j = symplectic_form(g);
  Mat b(4 * g, 4 * g);
  for (std::size_t i = 0; i < 2 * g; ++i)
    for (std::size_t k = 0; k < 2 * g; ++k) {
      b(i, k) = -j(i, k);
      b(2 * g + i, 2 * g + k) = j(i, k);
    }
  return b;
}

DoubledLagrangian graph_lagrangian(const SpMat& m) {
  const std::size_t g = m.g;
  Mat b(4 * g, 2 * g);
  for (std::size_t k = 0; k < 2 * g; ++k) {
    b(k, k) = 1;
    for (std::size_t i = 0; i < 2 * g; ++i) b(2 * g + i, k) = m.m(i, k);
  }
  return DoubledLagrangian{g, std::move(b)};
}

}  // namespace sympsig
