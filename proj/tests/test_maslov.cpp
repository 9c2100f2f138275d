// Wall-Maslov index of lagrangian triples: closed genus-1 form against the
// general computation, symmetry and invariance properties, degenerate
// triples, and input validation.

#include <utility>

#include "doctest.h"

#include "sympsig/errors.hpp"
#include "sympsig/lagrangian.hpp"
#include "sympsig/maslov.hpp"
#include "sympsig/rational.hpp"
#include "sympsig/symplectic.hpp"

using namespace sympsig;

namespace {

Rat R(long n, long d = 1) { return make_rat(n, d); }

Lagrangian random_lagrangian(std::size_t g, Rng& rng) {
  const SpMat a = random_symplectic(g, 1 + rng.below(6), rng);
  return apply(a, default_lagrangian(g));
}

std::pair<Rat, Rat> random_direction(Rng& rng) {
  while (true) {
    const Rat p = R(static_cast<long>(rng.below(9)) - 4);
    const Rat q = R(static_cast<long>(rng.below(9)) - 4);
    if (sign_of(p) != 0 || sign_of(q) != 0) return {p, q};
  }
}

}  // namespace

TEST_CASE("axis, diagonal, vertical triple") {
  const Lagrangian l0 = line_lagrangian(R(1), R(0));
  const Lagrangian l45 = line_lagrangian(R(1), R(1));
  const Lagrangian l90 = line_lagrangian(R(0), R(1));
  CHECK(wall_maslov(l0, l45, l90) == -1);
  CHECK(wall_maslov(l90, l45, l0) == 1);
  CHECK(wall_maslov_g1_closed({R(1), R(0)}, {R(1), R(1)}, {R(0), R(1)}) == -1);
}

TEST_CASE("line normalization identifies projectively equal directions") {
  CHECK(line_lagrangian(R(1), R(0)) == default_lagrangian(1));
  CHECK(line_lagrangian(R(2), R(0)) == line_lagrangian(R(1), R(0)));
  CHECK(line_lagrangian(R(-1), R(-1)) == line_lagrangian(R(1), R(1)));
  CHECK(line_lagrangian(R(1, 2), R(1)) == line_lagrangian(R(1), R(2)));
}

TEST_CASE("closed genus-1 form agrees with the general computation") {
  Rng rng(301);
  for (int trial = 0; trial < 50; ++trial) {
    const auto d1 = random_direction(rng);
    const auto d2 = random_direction(rng);
    const auto d3 = random_direction(rng);
    const int closed = wall_maslov_g1_closed(d1, d2, d3);
    const int general =
        wall_maslov(line_lagrangian(d1.first, d1.second),
                    line_lagrangian(d2.first, d2.second),
                    line_lagrangian(d3.first, d3.second));
    REQUIRE(closed == general);
  }
}

TEST_CASE("dihedral symmetry and degenerate triples") {
  Rng rng(302);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t g = 1 + rng.below(2);
    const Lagrangian l1 = random_lagrangian(g, rng);
    const Lagrangian l2 = random_lagrangian(g, rng);
    const Lagrangian l3 = random_lagrangian(g, rng);
    const int tau = wall_maslov(l1, l2, l3);
    CHECK(wall_maslov(l2, l3, l1) == tau);
    CHECK(wall_maslov(l3, l1, l2) == tau);
    CHECK(wall_maslov(l2, l1, l3) == -tau);
    CHECK(wall_maslov(l1, l1, l3) == 0);
    CHECK(wall_maslov(l1, l2, l2) == 0);
    CHECK(wall_maslov(l1, l2, l1) == 0);
  }
}

TEST_CASE("symplectic invariance") {
  Rng rng(303);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t g = 1 + rng.below(2);
    const Lagrangian l1 = random_lagrangian(g, rng);
    const Lagrangian l2 = random_lagrangian(g, rng);
    const Lagrangian l3 = random_lagrangian(g, rng);
    const SpMat a = random_symplectic(g, 1 + rng.below(6), rng);
    REQUIRE(wall_maslov(apply(a, l1), apply(a, l2), apply(a, l3)) ==
            wall_maslov(l1, l2, l3));
  }
}

TEST_CASE("stabilization preserves the index") {
  Rng rng(304);
  for (int trial = 0; trial < 40; ++trial) {
    const Lagrangian l1 = random_lagrangian(1, rng);
    const Lagrangian l2 = random_lagrangian(1, rng);
    const Lagrangian l3 = random_lagrangian(1, rng);
    REQUIRE(wall_maslov(stabilize_lagrangian(l1, 3),
                        stabilize_lagrangian(l2, 3),
                        stabilize_lagrangian(l3, 3)) ==
            wall_maslov(l1, l2, l3));
  }
}

TEST_CASE("lagrangian validation") {
  // Not isotropic: span{v_1, w_1} pairs to 1.
  const Mat bad = hstack(column_vector({R(1), R(0), R(0), R(0)}),
                         column_vector({R(0), R(0), R(1), R(0)}));
  CHECK_THROWS_AS(lagrangian_from_basis(bad, 2), not_lagrangian);
  // Rank too small: malformed input, rejected before the isotropy check and
  // therefore not reported as an isotropy failure.
  const Mat thin = hstack(column_vector({R(1), R(0), R(0), R(0)}),
                          column_vector({R(2), R(0), R(0), R(0)}));
  try {
    lagrangian_from_basis(thin, 2);
    CHECK_MESSAGE(false, "rank-deficient basis was accepted");
  } catch (const not_lagrangian&) {
    CHECK_MESSAGE(false, "rank deficiency misreported as isotropy failure");
  } catch (const invalid_input&) {
    CHECK(true);
  }
  CHECK_THROWS_AS(line_lagrangian(R(0), R(0)), invalid_input);
  // Canonicalization: two bases of one subspace compare equal.
  const Mat b1 = hstack(column_vector({R(1), R(0), R(0), R(0)}),
                        column_vector({R(0), R(1), R(0), R(0)}));
  const Mat b2 = hstack(column_vector({R(2), R(1), R(0), R(0)}),
                        column_vector({R(1), R(1), R(0), R(0)}));
  CHECK(lagrangian_from_basis(b1, 2) == lagrangian_from_basis(b2, 2));
}

TEST_CASE("graph lagrangians in the doubled space") {
  Rng rng(305);
  const Mat form = doubled_form(1);
  CHECK(form.rows() == 4);
  for (int trial = 0; trial < 20; ++trial) {
    const SpMat a = random_symplectic(1, 1 + rng.below(6), rng);
    const DoubledLagrangian ga = graph_lagrangian(a);
    // Isotropy of the graph columns for the difference form.
    CHECK((ga.basis.transpose() * form * ga.basis).is_zero());
  }
  // The doubled-route index of three graphs is computed by the same
  // engine; the identity triple is degenerate.
  const SpMat i1 = SpMat::identity(1);
  CHECK(wall_maslov(graph_lagrangian(i1), graph_lagrangian(i1),
                    graph_lagrangian(i1)) == 0);
}
