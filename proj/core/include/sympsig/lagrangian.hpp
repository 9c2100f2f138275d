#pragma once

#include "sympsig/symplectic.hpp"

namespace sympsig {

// Rank-g isotropic subspace of the standard 2g-dimensional symplectic
// space, stored as the canonical reduced column basis; equal subspaces
// compare equal.
struct Lagrangian {
  std::size_t g = 0;
  Mat basis;  // 2g x g, canonical

  bool operator==(const Lagrangian&) const = default;
};

// Validates shape, rank, and isotropy, then canonicalizes.
Lagrangian lagrangian_from_basis(const Mat& cols, std::size_t g);

// span{v_1, ..., v_g}.
Lagrangian default_lagrangian(std::size_t g);

// The image subspace a(L), canonicalized.
Lagrangian apply(const SpMat& a, const Lagrangian& l);

// The line through (p, q) for g = 1; (p, q) must be nonzero.
Lagrangian line_lagrangian(const Rat& p, const Rat& q);

// Appends the new v-basis vectors to reach the target genus.
Lagrangian stabilize_lagrangian(const Lagrangian& l, std::size_t target_genus);

// Rank-2g isotropic subspace of the doubled space V + V. The doubled
// space carries the difference form diag(-J(g), J(g)); see
// docs/conventions.md for the orientation choice.
struct DoubledLagrangian {
  std::size_t g = 0;
  Mat basis;  // 4g x 2g

  bool operator==(const DoubledLagrangian&) const = default;
};

// Difference form on V + V: diag(-J(g), J(g)).
Mat doubled_form(std::size_t g);

// Columns (e_k, M e_k); isotropic for the difference form.
DoubledLagrangian graph_lagrangian(const SpMat& m);

}  // namespace sympsig
