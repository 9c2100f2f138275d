#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "sympsig/extension.hpp"
#include "sympsig/meyer.hpp"
#include "sympsig/symplectic.hpp"

namespace sympsig {

/// Monodromy data of a genus-g surface bundle over a genus-h base surface:
/// one pair of symplectic matrices per handle, the images of the standard
/// generators of the base fundamental group.
///
/// Closedness (trivial relator) is a checkable predicate, not an invariant;
/// open bundles over a once-punctured base are legitimate values.
struct Monodromy {
  std::size_t g = 0;
  std::size_t h = 0;
  std::vector<std::pair<SpMat, SpMat>> pairs;
};

/// Builds a monodromy from handle pairs.
/// Throws invalid_input when the sequence is empty or the genera disagree.
Monodromy make_monodromy(std::vector<std::pair<SpMat, SpMat>> pairs);

/// Product of commutators [a_1,b_1]...[a_h,b_h].
SpMat relator(const Monodromy& m);

/// True iff the relator is the identity.
bool is_closed(const Monodromy& m);

/// Signature of the total space, summed handle by handle:
///
///   sigma = -sum_i tau(a_i, b_i a_i^{-1} b_i^{-1})
///           - sum_{i<h} tau(c_1...c_i, c_{i+1})
///
/// with c_i = [a_i, b_i] and tau the genus-g kernel-presentation cocycle.
/// The first sum is the signature contribution of each handle block, the
/// second accumulates the gluing terms along the partial products.
/// A non-closed monodromy is rejected with precondition_error unless
/// allow_open is set; with the flag the same sum is reported, but the
/// divisibility statements proved for closed bundles do not apply to it.
long bundle_signature(const Monodromy& m, bool allow_open = false);

/// The same signature through the twisted product: multiplies the
/// zero-decorated lifts (0,a_1)(0,b_1)(0,a_1^{-1})(0,b_1^{-1})... and reads
/// off minus the accumulated decoration.  The group component of the product
/// is the relator; a non-identity component raises precondition_error.
long bundle_signature_lifts(const Monodromy& m);

/// Pairs a 2-cocycle against the fundamental class of the base: the
/// decoration of the product of extension commutators
/// [(0,a_i),(0,b_i)], accumulated in the coefficient group.
/// Requires a closed monodromy (precondition_error otherwise).
long evaluate_class(const Cocycle& tau, const Monodromy& m,
                    const CoeffGroup& coeff);

/// Residue report for the reduced signature.
struct ModSignature {
  /// sigma mod N, normalized into [0, N).
  long residue = 0;
  /// (sigma/4) mod 2; present only for N = 8 when 4 divides sigma.
  std::optional<long> sigma_div4_mod2;
};

/// Reduces the closed-bundle signature mod N.  Only N in {2, 4, 8} carry
/// information (the finite quotients of the signature class stop at 8);
/// other moduli raise invalid_input.  Non-closed monodromies raise
/// precondition_error.
ModSignature signature_mod(const Monodromy& m, long N);

/// Seeded families of relator-trivial monodromies, selected by family % 5:
///   0  swap pair ((a,b),(b,a)), h = 2
///   1  conjugated swap ((a,b),(c b c^{-1}, c a c^{-1})) with c = [a,b], h = 2
///   2  one swap block followed by one conjugated-swap block, h = 4
///   3  commuting pair of transvections along a shared vector, h = 1
///   4  repeated element (a,a), h = 1
/// With level4 set, every factor is drawn from coefficient-4 transvections,
/// so all entries are congruent to the identity mod 4.
Monodromy random_closed_monodromy(std::size_t g, Rng& rng, unsigned family,
                                  bool level4 = false);

}  // namespace sympsig
