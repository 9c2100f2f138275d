#include "sympsig/maslov.hpp"

#include <utility>

#include "sympsig/errors.hpp"
#include "sympsig/linalg.hpp"

namespace sympsig {

int triple_index(const Mat& form, const Mat& j1, const Mat& j2,
                 const Mat& j3) {
  const std::size_t k = j1.cols();
  const Mat j3b = j3.transpose() * form;
  const Mat n = hstack(j3b * j1, j3b * j2);
  const Mat ker = kernel_basis(n);

  Mat q(2 * k, 2 * k);
  const Mat pairing = j1.transpose() * form * j2;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) q(i, k + j) = pairing(i, j);

  const Mat gm = ker.transpose() * q * ker;
  if (!gm.is_symmetric())
    throw construction_bug("restricted index form is not symmetric");
  return static_cast<int>(signature_of_symmetric(gm).signature());
}

int wall_maslov(const Lagrangian& l1, const Lagrangian& l2,
                const Lagrangian& l3) {
  if (l1.g != l2.g || l1.g != l3.g)
    throw invalid_input("lagrangian triple with mismatched genus");
  return triple_index(symplectic_form(l1.g), l1.basis, l2.basis, l3.basis);
}

int wall_maslov(const DoubledLagrangian& l1, const DoubledLagrangian& l2,
                const DoubledLagrangian& l3) {
  if (l1.g != l2.g || l1.g != l3.g)
    throw invalid_input("doubled triple with mismatched genus");
  return triple_index(doubled_form(l1.g), l1.basis, l2.basis, l3.basis);
}

namespace {

std::pair<Rat, Rat> normalize_direction(std::pair<Rat, Rat> d) {
  if (d.first == 0 && d.second == 0)
    throw invalid_input("zero direction has no line");
  if (d.second < 0 || (d.second == 0 && d.first < 0))
    return {-d.first, -d.second};
  return d;
}

}  // namespace

int wall_maslov_g1_closed(std::pair<Rat, Rat> d1, std::pair<Rat, Rat> d2,
                          std::pair<Rat, Rat> d3) {
  d1 = normalize_direction(std::move(d1));
  d2 = normalize_direction(std::move(d2));
  d3 = normalize_direction(std::move(d3));
  const Rat s12 = d1.first * d2.second - d1.second * d2.first;
  const Rat s23 = d2.first * d3.second - d2.second * d3.first;
  const Rat s31 = d3.first * d1.second - d3.second * d1.first;
  return sign_of(s12) * sign_of(s23) * sign_of(s31);
}

int maslov_cocycle(const SpMat& a, const SpMat& b) {
  return maslov_cocycle(a, b, default_lagrangian(a.g));
}

int maslov_cocycle(const SpMat& a, const SpMat& b, const Lagrangian& l) {
  if (a.g != b.g || a.g != l.g)
    throw invalid_input("genus mismatch in cocycle evaluation");
  const Lagrangian al = apply(a, l);
  const Lagrangian abl = apply(a * b, l);
  return wall_maslov(l, al, abl);
}

}  // namespace sympsig
