#include "sympsig/bundle.hpp"

#include <utility>

#include "sympsig/errors.hpp"
#include "sympsig/matrix.hpp"

namespace sympsig {

Monodromy make_monodromy(std::vector<std::pair<SpMat, SpMat>> pairs) {
  if (pairs.empty()) throw invalid_input("monodromy needs at least one handle");
  const std::size_t g = pairs.front().first.g;
  for (const auto& [a, b] : pairs)
    if (a.g != g || b.g != g)
      throw invalid_input("monodromy mixes matrices of different genus");
  Monodromy m;
  m.g = g;
  m.h = pairs.size();
  m.pairs = std::move(pairs);
  return m;
}

SpMat relator(const Monodromy& m) {
  SpMat r = SpMat::identity(m.g);
  for (const auto& [a, b] : m.pairs) r = r * commutator(a, b);
  return r;
}

bool is_closed(const Monodromy& m) { return relator(m).is_identity(); }

long bundle_signature(const Monodromy& m, bool allow_open) {
  if (!allow_open && !is_closed(m))
    throw precondition_error("monodromy does not close up");
  std::vector<SpMat> c;
  c.reserve(m.h);
  for (const auto& [a, b] : m.pairs) c.push_back(commutator(a, b));
  long sigma = 0;
  for (const auto& [a, b] : m.pairs) {
    const SpMat conj = b * symplectic_inverse(a) * symplectic_inverse(b);
    sigma -= meyer_cocycle(a, conj);
  }
  SpMat partial = c[0];
  for (std::size_t i = 1; i < m.h; ++i) {
    sigma -= meyer_cocycle(partial, c[i]);
    partial = partial * c[i];
  }
  return sigma;
}

namespace {

ExtContextPtr meyer_context(std::size_t g, CoeffGroup coeff) {
  return make_ext_context("meyer", coeff, g,
                          [](const SpMat& a, const SpMat& b) {
                            return static_cast<long>(meyer_cocycle(a, b));
                          });
}

}  // namespace

long bundle_signature_lifts(const Monodromy& m) {
  const ExtContextPtr ctx = meyer_context(m.g, coeff_integers());
  ExtElement acc = ext_identity(ctx);
  for (const auto& [a, b] : m.pairs) {
    acc = ext_mul(acc, ext_lift(ctx, a));
    acc = ext_mul(acc, ext_lift(ctx, b));
    acc = ext_mul(acc, ext_lift(ctx, symplectic_inverse(a)));
    acc = ext_mul(acc, ext_lift(ctx, symplectic_inverse(b)));
  }
  if (!acc.elem.is_identity())
    throw precondition_error("monodromy does not close up");
  return -acc.decoration;
}

long evaluate_class(const Cocycle& tau, const Monodromy& m,
                    const CoeffGroup& coeff) {
  const ExtContextPtr ctx = make_ext_context("class", coeff, m.g, tau);
  ExtElement acc = ext_identity(ctx);
  for (const auto& [a, b] : m.pairs) {
    const ExtElement x = ext_lift(ctx, a);
    const ExtElement y = ext_lift(ctx, b);
    const ExtElement comm =
        ext_mul(ext_mul(x, y), ext_mul(ext_inv(x), ext_inv(y)));
    acc = ext_mul(acc, comm);
  }
  if (!acc.elem.is_identity())
    throw precondition_error("monodromy does not close up");
  return acc.decoration;
}

ModSignature signature_mod(const Monodromy& m, long N) {
  if (N != 2 && N != 4 && N != 8)
    throw invalid_input(
        "modulus must be 2, 4, or 8; no larger finite quotient carries "
        "additional signature information");
  if (!is_closed(m)) throw precondition_error("monodromy does not close up");
  const long sigma = bundle_signature(m);
  ModSignature out;
  out.residue = ((sigma % N) + N) % N;
  if (N == 8 && sigma % 4 == 0)
    out.sigma_div4_mod2 = (((sigma / 4) % 2) + 2) % 2;
  return out;
}

namespace {

SpMat random_factor(std::size_t g, Rng& rng, bool level4) {
  const std::size_t len = 2 + rng.below(4);
  return level4 ? random_gamma4(g, len, rng) : random_symplectic(g, len, rng);
}

std::pair<SpMat, SpMat> conjugated_swap(const SpMat& a, const SpMat& b) {
  const SpMat c = commutator(a, b);
  const SpMat cinv = symplectic_inverse(c);
  return {c * b * cinv, c * a * cinv};
}

std::pair<SpMat, SpMat> commuting_transvections(std::size_t g, Rng& rng,
                                                bool level4) {
  std::vector<Rat> v(2 * g, Rat(0));
  bool all_zero = true;
  while (all_zero) {
    for (auto& entry : v) {
      entry = Rat(static_cast<long>(rng.below(5)) - 2);
      if (entry != 0) all_zero = false;
    }
  }
  const long unit = level4 ? 4 : 1;
  const long c1 = unit * (1 + static_cast<long>(rng.below(2)));
  const long c2 = unit * (rng.below(2) ? -1 : 2);
  return {transvection(v, Rat(c1), g), transvection(v, Rat(c2), g)};
}

}  // namespace

Monodromy random_closed_monodromy(std::size_t g, Rng& rng, unsigned family,
                                  bool level4) {
  switch (family % 5) {
    case 0: {
      const SpMat a = random_factor(g, rng, level4);
      const SpMat b = random_factor(g, rng, level4);
      return make_monodromy({{a, b}, {b, a}});
    }
    case 1: {
      const SpMat a = random_factor(g, rng, level4);
      const SpMat b = random_factor(g, rng, level4);
      return make_monodromy({{a, b}, conjugated_swap(a, b)});
    }
    case 2: {
      const SpMat a = random_factor(g, rng, level4);
      const SpMat b = random_factor(g, rng, level4);
      const SpMat x = random_factor(g, rng, level4);
      const SpMat y = random_factor(g, rng, level4);
      return make_monodromy({{a, b}, {b, a}, {x, y}, conjugated_swap(x, y)});
    }
    case 3:
      return make_monodromy({commuting_transvections(g, rng, level4)});
    default: {
      const SpMat a = random_factor(g, rng, level4);
      return make_monodromy({{a, a}});
    }
  }
}

}  // namespace sympsig
