#include "sympsig/extension.hpp"

#include "sympsig/errors.hpp"

namespace sympsig {

CoeffGroup coeff_integers() { return CoeffGroup{0}; }

CoeffGroup coeff_mod(long n) {
  if (n < 2) throw invalid_input("coefficient modulus must be 0 or >= 2");
  return CoeffGroup{n};
}

long reduce_into(long value, const CoeffGroup& a) {
  if (a.modulus == 0) return value;
  long r = value % a.modulus;
  if (r < 0) r += a.modulus;
  return r;
}

ExtContextPtr make_ext_context(std::string cocycle_id, CoeffGroup coeff,
                               std::size_t g, Cocycle tau) {
  auto ctx = std::make_shared<ExtContext>();
  ctx->cocycle_id = std::move(cocycle_id);
  ctx->coeff = coeff;
  ctx->g = g;
  ctx->tau = std::move(tau);
  return ctx;
}

namespace {

void require_same_context(const ExtElement& x, const ExtElement& y) {
  if (!x.ctx || !y.ctx) throw invalid_input("element without a context");
  if (x.ctx == y.ctx) return;
  if (x.ctx->cocycle_id != y.ctx->cocycle_id || x.ctx->coeff != y.ctx->coeff ||
      x.ctx->g != y.ctx->g)
    throw invalid_input("twisted product across different contexts");
}

}  // namespace

ExtElement ext_lift(const ExtContextPtr& ctx, const SpMat& a,
                    long decoration) {
  if (!ctx) throw invalid_input("lift without a context");
  if (a.g != ctx->g) throw invalid_input("lift with mismatched genus");
  return ExtElement{reduce_into(decoration, ctx->coeff), a, ctx};
}

ExtElement ext_mul(const ExtElement& x, const ExtElement& y) {
  require_same_context(x, y);
  const long tw = x.ctx->tau(x.elem, y.elem);
  return ExtElement{reduce_into(x.decoration + y.decoration + tw,
                                x.ctx->coeff),
                    x.elem * y.elem, x.ctx};
}

ExtElement ext_identity(const ExtContextPtr& ctx) {
  if (!ctx) throw invalid_input("identity without a context");
  const SpMat one = SpMat::identity(ctx->g);
  return ExtElement{reduce_into(-ctx->tau(one, one), ctx->coeff), one, ctx};
}

ExtElement ext_inv(const ExtElement& x) {
  if (!x.ctx) throw invalid_input("element without a context");
  const SpMat inv = symplectic_inverse(x.elem);
  const SpMat one = SpMat::identity(x.ctx->g);
  const long dec =
      -x.decoration - x.ctx->tau(x.elem, inv) - x.ctx->tau(one, one);
  return ExtElement{reduce_into(dec, x.ctx->coeff), inv, x.ctx};
}

bool ext_equal(const ExtElement& x, const ExtElement& y) {
  require_same_context(x, y);
  return x.decoration == y.decoration && x.elem == y.elem;
}

}  // namespace sympsig
