// Exact linear algebra and symplectic-group basics: matrix arithmetic,
// echelon forms, Sylvester inertia against an independent characteristic-
// polynomial oracle, transvections, and the deterministic generator.

#include <cstddef>
#include <vector>

#include "doctest.h"

#include "sympsig/errors.hpp"
#include "sympsig/linalg.hpp"
#include "sympsig/matrix.hpp"
#include "sympsig/rational.hpp"
#include "sympsig/symplectic.hpp"

using namespace sympsig;

namespace {

Rat R(long n, long d = 1) { return make_rat(n, d); }

Mat mat2(long a, long b, long c, long d) {
  return Mat{{R(a), R(b)}, {R(c), R(d)}};
}

// Characteristic polynomial x^n + c[1] x^{n-1} + ... + c[n] by the
// Faddeev-LeVerrier recurrence, exact over the rationals.
std::vector<Rat> charpoly(const Mat& a) {
  const std::size_t n = a.rows();
  std::vector<Rat> c(n + 1, Rat(0));
  c[0] = Rat(1);
  Mat nk = Mat::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const Mat mk = a * nk;
    Rat tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += mk(i, i);
    c[k] = -tr / Rat(static_cast<long>(k));
    nk = mk;
    for (std::size_t i = 0; i < n; ++i) nk(i, i) += c[k];
  }
  return c;
}

// For a real-rooted polynomial, Descartes' bound on positive roots is
// attained, so sign changes count positive eigenvalues exactly.
std::size_t sign_changes(const std::vector<Rat>& coeff) {
  std::size_t changes = 0;
  int prev = 0;
  for (const Rat& c : coeff) {
    const int s = sign_of(c);
    if (s != 0 && prev != 0 && s != prev) ++changes;
    if (s != 0) prev = s;
  }
  return changes;
}

Inertia inertia_by_charpoly(const Mat& s) {
  const std::vector<Rat> p = charpoly(s);
  std::vector<Rat> p_neg = p;  // coefficients of p(-x), sign-adjusted
  for (std::size_t k = 1; k < p_neg.size(); k += 2) p_neg[k] = -p_neg[k];
  std::size_t zeros = 0;
  for (std::size_t k = p.size(); k-- > 0 && sign_of(p[k]) == 0;) ++zeros;
  return Inertia{sign_changes(p), sign_changes(p_neg),
                 zeros};
}

}  // namespace

TEST_CASE("matrix arithmetic and views") {
  const Mat j = mat2(0, 1, -1, 0);
  const Mat t = mat2(1, 1, 0, 1);
  CHECK(j * t == Mat{{R(0), R(1)}, {R(-1), R(-1)}});
  CHECK(j.transpose() == -j);
  CHECK(j + (-j) == Mat(2, 2));
  CHECK(R(3) * t == mat2(3, 3, 0, 3));
  CHECK(hstack(j, t).cols() == 4);
  CHECK(vstack(j, t).rows() == 4);
  CHECK(column_vector({R(1), R(2)})(1, 0) == R(2));
  CHECK(mat2(1, 2, 2, 5).is_symmetric());
  CHECK_FALSE(t.is_symmetric());
  CHECK(mat2(1, 2, 0, 1).is_integral());
  CHECK_FALSE(Mat{{R(1, 2)}}.is_integral());
}

TEST_CASE("commutator of the rotation and the shear") {
  const SpMat j(1, mat2(0, 1, -1, 0));
  const SpMat t(1, mat2(1, 1, 0, 1));
  CHECK(commutator(j, t).m == mat2(1, -1, -1, 2));
}

TEST_CASE("echelon forms, rank, kernel, inverse") {
  const Mat singular = mat2(1, 1, 1, 1);
  CHECK(rank(singular) == 1);
  CHECK(spans_equal(kernel_basis(singular), column_vector({R(1), R(-1)})));
  CHECK(kernel_basis(Mat::identity(3)).cols() == 0);
  CHECK(inverse(mat2(1, 1, 0, 1)) == mat2(1, -1, 0, 1));
  CHECK_THROWS_AS(inverse(singular), invalid_input);
  CHECK(rref(mat2(2, 4, 1, 2)) == mat2(1, 2, 0, 0));
  CHECK(spans_equal(rcef(hstack(column_vector({R(2), R(0)}),
                                column_vector({R(3), R(0)}))),
                    column_vector({R(1), R(0)})));
}

TEST_CASE("inertia matches the characteristic-polynomial oracle") {
  CHECK(signature_of_symmetric(mat2(1, 0, 0, -1)) == Inertia{1, 1, 0});
  CHECK(signature_of_symmetric(Mat(2, 2)) == Inertia{0, 0, 2});
  CHECK(signature_of_symmetric(mat2(0, 1, 1, 0)).signature() == 0);

  Rng rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + rng.below(6);
    Mat b = Mat(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        b(i, j) = make_rat(static_cast<long>(rng.below(11)) - 5,
                           1 + static_cast<long>(rng.below(3)));
    const Mat s = b + b.transpose();
    const Inertia direct = signature_of_symmetric(s);
    const Inertia oracle = inertia_by_charpoly(s);
    REQUIRE(direct == oracle);
  }
}

TEST_CASE("symplectic relation, inverse, and stabilization") {
  const Mat form = symplectic_form(2);
  CHECK(form == -form.transpose());
  CHECK(is_symplectic(Mat::identity(4), 2));
  CHECK_FALSE(is_symplectic(mat2(1, 1, 1, 1), 1));
  CHECK_THROWS_AS(SpMat(1, mat2(1, 1, 1, 1)), precondition_error);

  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t g = 1 + rng.below(3);
    const SpMat a = random_symplectic(g, 1 + rng.below(8), rng);
    CHECK(a * symplectic_inverse(a) == SpMat::identity(g));
    CHECK(symplectic_inverse(a).m == inverse(a.m));
    const SpMat big = embed_stabilize(a, g + 2);
    CHECK(big.g == g + 2);
    CHECK(big.m(2 * g + 2, 2 * g + 2) == R(1));
  }

  const auto alphabet = transvection_alphabet(2);
  CHECK(alphabet.size() == 2 * 2 + 2 + 1);  // e_i, f_i, e_i + f_i, e_1 + e_2
  for (const auto& v : alphabet) {
    const SpMat tv = transvection(v, R(1), 2);
    CHECK(is_symplectic(tv.m, 2));
  }
  // A transvection fixes its own direction.
  const SpMat te1 = transvection({R(1), R(0), R(0), R(0)}, R(5), 2);
  CHECK(te1.m * column_vector({R(1), R(0), R(0), R(0)}) ==
        column_vector({R(1), R(0), R(0), R(0)}));
}

TEST_CASE("interleaving permutation conjugates the two form conventions") {
  const Mat p = block_to_interleaved(2);
  const Mat interleaved = p.transpose() * symplectic_form(2) * p;
  // In the interleaved basis the form is block diagonal with 2x2 blocks.
  CHECK(interleaved(0, 1) == R(1));
  CHECK(interleaved(1, 0) == R(-1));
  CHECK(interleaved(0, 2) == R(0));
  CHECK(interleaved(2, 3) == R(1));
}

TEST_CASE("gamma4 words reduce to the identity mod 4") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const SpMat a = random_gamma4(2, 1 + rng.below(6), rng);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        const Rat residue = a.m(i, j) - (i == j ? R(1) : R(0));
        CHECK(is_integer(residue / R(4)));
      }
  }
}

TEST_CASE("seeded generator is reproducible") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) REQUIRE(a.next() == b.next());
  CHECK(random_symplectic(2, 6, 42) == random_symplectic(2, 6, 42));
}

TEST_CASE("rational parsing and printing are canonical") {
  CHECK(parse_rat("-3/6") == R(-1, 2));
  CHECK(rat_to_string(parse_rat("-3/6")) == "-1/2");
  CHECK(rat_to_string(R(4, 2)) == "2");
  CHECK(parse_rat("7") == R(7));
  CHECK_THROWS_AS(parse_rat("1/0"), invalid_input);
  CHECK_THROWS_AS(parse_rat("abc"), invalid_input);
  CHECK_THROWS_AS(parse_rat("1.5"), invalid_input);
  CHECK(rat_floor(R(-3, 2)) == Int(-2));
  CHECK(rat_frac(R(-3, 2)) == R(1, 2));
  CHECK(sign_of(R(-2, 7)) == -1);
  CHECK(is_integer(R(6, 3)));
}
