// The signature cocycle on the symplectic group: anchor values on the
// rotation subgroup, agreement of the two independent computational routes,
// the cocycle identity, conjugation invariance, restriction under
// stabilization, and the twisted-product layer built on top of it.

#include <cstdlib>

#include "doctest.h"

#include "sympsig/circle.hpp"
#include "sympsig/conventions.hpp"
#include "sympsig/errors.hpp"
#include "sympsig/extension.hpp"
#include "sympsig/maslov.hpp"
#include "sympsig/meyer.hpp"
#include "sympsig/rational.hpp"
#include "sympsig/symplectic.hpp"

using namespace sympsig;

namespace {

Rat R(long n, long d = 1) { return make_rat(n, d); }

SpMat quarter_rotation() {
  return SpMat(1, Mat{{R(0), R(-1)}, {R(1), R(0)}});
}

}  // namespace

TEST_CASE("anchor value on the quarter rotation") {
  const SpMat r = quarter_rotation();
  CHECK(meyer_cocycle(r, r) == conventions::kMeyerAnchor);
  CHECK(meyer_cocycle(r, r) == -2);
  CHECK(meyer_via_graphs(r, r) == -2);
}

TEST_CASE("rotation subgroup table matches the closed form") {
  const SpMat r = quarter_rotation();
  SpMat a = SpMat::identity(1);
  for (int i = 0; i < 4; ++i) {
    SpMat b = SpMat::identity(1);
    for (int j = 0; j < 4; ++j) {
      const int kernel_route = meyer_cocycle(a, b);
      const int graph_route = meyer_via_graphs(a, b);
      const long closed = tau1_closed(make_rat(i, 4), make_rat(j, 4));
      REQUIRE(kernel_route == graph_route);
      REQUIRE(kernel_route == closed);
      REQUIRE((kernel_route == 0 || std::abs(kernel_route) == 2));
      b = b * r;
    }
    a = a * r;
  }
}

TEST_CASE("the two routes agree on random words") {
  Rng rng(401);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t g = 1 + rng.below(3);
    const SpMat a = random_symplectic(g, 1 + rng.below(8), rng);
    const SpMat b = random_symplectic(g, 1 + rng.below(8), rng);
    REQUIRE(meyer_cocycle(a, b) == meyer_via_graphs(a, b));
  }
  for (int trial = 0; trial < 20; ++trial) {
    const SpMat a = random_gamma4(2, 1 + rng.below(5), rng);
    const SpMat b = random_gamma4(2, 1 + rng.below(5), rng);
    REQUIRE(meyer_cocycle(a, b) == meyer_via_graphs(a, b));
  }
}

TEST_CASE("cocycle identity for both cocycles") {
  Rng rng(402);
  const Cocycle kernel_route = [](const SpMat& a, const SpMat& b) {
    return static_cast<long>(meyer_cocycle(a, b));
  };
  const Cocycle lagrangian_route = [](const SpMat& a, const SpMat& b) {
    return static_cast<long>(maslov_cocycle(a, b));
  };
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t g = 1 + rng.below(3);
    const SpMat a = random_symplectic(g, 1 + rng.below(6), rng);
    const SpMat b = random_symplectic(g, 1 + rng.below(6), rng);
    const SpMat c = random_symplectic(g, 1 + rng.below(6), rng);
    REQUIRE(check_cocycle_identity(kernel_route, a, b, c));
    REQUIRE(check_cocycle_identity(lagrangian_route, a, b, c));
  }
}

TEST_CASE("conjugation invariance and the elementary bound") {
  Rng rng(403);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t g = 1 + rng.below(3);
    const SpMat a = random_symplectic(g, 1 + rng.below(6), rng);
    const SpMat b = random_symplectic(g, 1 + rng.below(6), rng);
    const SpMat c = random_symplectic(g, 1 + rng.below(6), rng);
    const SpMat ci = symplectic_inverse(c);
    const int value = meyer_cocycle(a, b);
    REQUIRE(meyer_cocycle(c * a * ci, c * b * ci) == value);
    REQUIRE(std::abs(value) <= 2 * static_cast<int>(g));
  }
}

TEST_CASE("values restrict under stabilization") {
  Rng rng(404);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t g = 1 + rng.below(2);
    const SpMat a = random_symplectic(g, 1 + rng.below(6), rng);
    const SpMat b = random_symplectic(g, 1 + rng.below(6), rng);
    REQUIRE(meyer_cocycle(embed_stabilize(a, g + 2),
                          embed_stabilize(b, g + 2)) == meyer_cocycle(a, b));
  }
}

TEST_CASE("lagrangian-route cocycle: base-point change conjugates the "
          "arguments") {
  // Moving the base lagrangian by c is the same as conjugating both
  // arguments by c.  The values themselves are NOT independent of the base
  // point: the regression below pins a pair where the default base gives 0
  // (the shear b fixes the default line, so the triple degenerates) while a
  // generic base gives -1.  The two choices give cohomologous cocycles, not
  // equal ones.
  Rng rng(405);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t g = 1 + rng.below(2);
    const SpMat a = random_symplectic(g, 1 + rng.below(6), rng);
    const SpMat b = random_symplectic(g, 1 + rng.below(6), rng);
    const SpMat c = random_symplectic(g, 1 + rng.below(6), rng);
    const Lagrangian l = apply(c, default_lagrangian(g));
    const SpMat ci = symplectic_inverse(c);
    REQUIRE(maslov_cocycle(a, b, l) ==
            maslov_cocycle(ci * a * c, ci * b * c));

    const Lagrangian base = l;
    const Cocycle based = [&base](const SpMat& x, const SpMat& y) {
      return static_cast<long>(maslov_cocycle(x, y, base));
    };
    const SpMat d = random_symplectic(g, 1 + rng.below(6), rng);
    REQUIRE(check_cocycle_identity(based, a, b, d));
  }

  const SpMat a(1, Mat{{R(-1), R(3)}, {R(-1), R(2)}});
  const SpMat b(1, Mat{{R(1), R(-1)}, {R(0), R(1)}});
  const SpMat c(1, Mat{{R(-5), R(2)}, {R(2), R(-1)}});
  CHECK(maslov_cocycle(a, b) == 0);
  CHECK(maslov_cocycle(a, b, apply(c, default_lagrangian(1))) == -1);
}

TEST_CASE("twisted products: units, inverses, associativity") {
  const auto ctx = make_ext_context(
      "kernel", coeff_integers(), 1, [](const SpMat& a, const SpMat& b) {
        return static_cast<long>(meyer_cocycle(a, b));
      });
  Rng rng(406);
  for (int trial = 0; trial < 30; ++trial) {
    const SpMat a = random_symplectic(1, 1 + rng.below(6), rng);
    const SpMat b = random_symplectic(1, 1 + rng.below(6), rng);
    const SpMat c = random_symplectic(1, 1 + rng.below(6), rng);
    const ExtElement x = ext_lift(ctx, a, static_cast<long>(rng.below(5)));
    const ExtElement y = ext_lift(ctx, b);
    const ExtElement z = ext_lift(ctx, c);
    REQUIRE(ext_equal(ext_mul(ext_mul(x, y), z), ext_mul(x, ext_mul(y, z))));
    REQUIRE(ext_equal(ext_mul(x, ext_identity(ctx)), x));
    REQUIRE(ext_equal(ext_mul(ext_identity(ctx), x), x));
    REQUIRE(ext_equal(ext_mul(x, ext_inv(x)), ext_identity(ctx)));
    REQUIRE(ext_equal(ext_mul(ext_inv(x), x), ext_identity(ctx)));
  }
}

TEST_CASE("twisted products reduce decorations into the coefficient group") {
  const auto ctx = make_ext_context(
      "kernel-mod4", coeff_mod(4), 1, [](const SpMat& a, const SpMat& b) {
        return static_cast<long>(meyer_cocycle(a, b));
      });
  const SpMat r = quarter_rotation();
  const ExtElement x = ext_lift(ctx, r);
  const ExtElement xx = ext_mul(x, x);
  // tau(r, r) = -2 reduces to 2 mod 4.
  CHECK(xx.decoration == 2);
  CHECK(reduce_into(-2, coeff_mod(4)) == 2);
  CHECK(reduce_into(-2, coeff_integers()) == -2);
  CHECK_THROWS_AS(coeff_mod(1), invalid_input);
}
