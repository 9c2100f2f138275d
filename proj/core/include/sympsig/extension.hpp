#pragma once

#include <memory>
#include <string>

#include "sympsig/meyer.hpp"

namespace sympsig {

// Coefficient group: the integers (modulus 0) or Z/N (modulus N >= 2).
struct CoeffGroup {
  long modulus = 0;

  bool operator==(const CoeffGroup&) const = default;
};

CoeffGroup coeff_integers();
CoeffGroup coeff_mod(long n);

long reduce_into(long value, const CoeffGroup& a);

// A twisted product context: decorated pairs multiply by
// (m, a)(n, b) = (m + n + tau(a, b), ab), decorations reduced into the
// coefficient group. Elements combine only within one context.
struct ExtContext {
  std::string cocycle_id;
  CoeffGroup coeff;
  std::size_t g = 0;
  Cocycle tau;
};

using ExtContextPtr = std::shared_ptr<const ExtContext>;

ExtContextPtr make_ext_context(std::string cocycle_id, CoeffGroup coeff,
                               std::size_t g, Cocycle tau);

struct ExtElement {
  long decoration = 0;
  SpMat elem;
  ExtContextPtr ctx;
};

// Lift with a chosen decoration (default 0).
ExtElement ext_lift(const ExtContextPtr& ctx, const SpMat& a,
                    long decoration = 0);

ExtElement ext_mul(const ExtElement& x, const ExtElement& y);

// (-tau(1, 1), I); the neutral element even for unnormalized cocycles.
ExtElement ext_identity(const ExtContextPtr& ctx);

// (-m - tau(a, a^{-1}) - tau(1, 1), a^{-1}).
ExtElement ext_inv(const ExtElement& x);

bool ext_equal(const ExtElement& x, const ExtElement& y);

}  // namespace sympsig
