#include "sympsig/rational.hpp"

#include <cctype>

#include "sympsig/errors.hpp"

namespace sympsig {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw invalid_input("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw invalid_input("empty rational literal");
  for (char c : text) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' ||
          c == '+' || c == '/'))
      throw invalid_input("bad rational literal: " + text);
  }
  Rat r;
  if (r.set_str(text, 10) != 0)
    throw invalid_input("bad rational literal: " + text);
  if (r.get_den() == 0) throw invalid_input("zero denominator: " + text);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

bool is_integer(const Rat& x) { return x.get_den() == 1; }

Int rat_floor(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

Rat rat_frac(const Rat& x) { return x - Rat(rat_floor(x)); }

int sign_of(const Rat& x) { return sgn(x); }

}  // namespace sympsig
