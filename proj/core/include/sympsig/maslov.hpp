#pragma once

#include "sympsig/lagrangian.hpp"

namespace sympsig {

// Index of a triple of pairwise equal-rank isotropic column spans j1, j2,
// j3 inside an ambient form b: the signature of the composition form
// restricted to ker((j3^T b j1 | j3^T b j2)) in L1 + L2 coordinates,
// with the bilinear matrix [[0, j1^T b j2], [0, 0]]. The restricted
// matrix is asserted symmetric, unconditionally.
int triple_index(const Mat& form, const Mat& j1, const Mat& j2, const Mat& j3);

// Wall's non-additivity index of a lagrangian triple.
int wall_maslov(const Lagrangian& l1, const Lagrangian& l2,
                const Lagrangian& l3);

// Same index for graph lagrangians in the doubled space.
int wall_maslov(const DoubledLagrangian& l1, const DoubledLagrangian& l2,
                const DoubledLagrangian& l3);

// Genus-1 closed form on rational lines through (p, q). Directions are
// normalized to q > 0, or q = 0 and p > 0, so each line corresponds to an
// angle pi a with a in [0, 1); the cross product p_i q_k - q_i p_k then
// has the sign of sin pi(a_k - a_i), and the index is
// sign((p1 q2 - q1 p2)(p2 q3 - q2 p3)(p3 q1 - q3 p1)).
int wall_maslov_g1_closed(std::pair<Rat, Rat> d1, std::pair<Rat, Rat> d2,
                          std::pair<Rat, Rat> d3);

// tau'(a, b) = index(L, aL, abL); independent of the lagrangian choice.
int maslov_cocycle(const SpMat& a, const SpMat& b);
int maslov_cocycle(const SpMat& a, const SpMat& b, const Lagrangian& l);

}  // namespace sympsig
