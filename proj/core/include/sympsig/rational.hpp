#pragma once

#include <gmpxx.h>

#include <string>

namespace sympsig {

// Exact scalars. mpq_class keeps gcd(num, den) = 1 and den > 0 after
// canonicalization; every constructor below canonicalizes.
using Rat = mpq_class;
using Int = mpz_class;

Rat make_rat(const Int& num, const Int& den);
Rat make_rat(long num, long den);

// Accepts "p/q" or a plain decimal integer, with optional sign.
Rat parse_rat(const std::string& text);

// Canonical form: "n" when the denominator is 1, "p/q" otherwise.
std::string rat_to_string(const Rat& x);

bool is_integer(const Rat& x);

Int rat_floor(const Rat& x);

// x - floor(x), in [0, 1).
Rat rat_frac(const Rat& x);

int sign_of(const Rat& x);

}  // namespace sympsig
