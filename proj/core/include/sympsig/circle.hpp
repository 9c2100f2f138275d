#pragma once

#include <cstddef>
#include <map>
#include <tuple>
#include <vector>

#include "sympsig/rational.hpp"

namespace sympsig {

/// Sawtooth ((x)): {x} - 1/2 off the integers, 0 at integers.
/// Periodic with period 1 and odd.
Rat dedekind(const Rat& x);

/// Exact sign of sin(pi x): 0 iff x is an integer, otherwise +1 when
/// floor(x) is even and -1 when it is odd.
int sign_sin_pi(const Rat& x);

/// Genus-1 closed forms, exact in the rationals:
///   tau1(a, b)  = 4(((a)) + ((b)) - ((a+b)))      values in {0, +-2}
///   tau1'(a, b) = 2(((2a)) + ((2b)) - ((2a+2b)))  values in {0, +-1}
/// Signs are calibrated against the kernel-presentation route; see
/// docs/conventions.md.
long tau1_closed(const Rat& a, const Rat& b);
long tau1prime_closed(const Rat& a, const Rat& b);

/// Piecewise constant integer function on the circle: value values[i] on
/// [breaks[i], breaks[i+1]) and values.back() on [breaks.back(), 1).
/// breaks are strictly increasing in [0, 1) and start at 0.
struct NiceCochain {
  std::vector<Rat> breaks;
  std::vector<long> values;
};

/// Validates and builds a cochain; throws invalid_input on an empty,
/// unsorted, or out-of-range breakpoint list or a value-count mismatch.
NiceCochain make_nice_cochain(std::vector<Rat> breaks,
                              std::vector<long> values);

NiceCochain constant_cochain(long c);

/// p on [0, 1/2), q on [1/2, 1).
NiceCochain step_cochain(long p, long q);

/// f(x) with x reduced mod 1; right-continuous interval lookup.
long cochain_eval(const NiceCochain& f, const Rat& x);

/// (delta f)(a, b) = f(a) + f(b) - f(a + b), all arguments mod 1.
long coboundary_eval(const NiceCochain& f, const Rat& a, const Rat& b);

/// Piecewise constant function on [0,1)^2 cut by vertical lines a = a_i,
/// horizontal lines b = b_j, and slope -1 lines a + b = c. A cell is
/// addressed by (a-interval, b-interval, band), where band counts the
/// diagonal constants c <= a + b for the mod-1 representatives of a and b
/// (the sum itself is not wrapped; it ranges over [0, 2)).
struct PiecewiseCocycle {
  std::vector<Rat> a_breaks;     // sorted, first 0, inside [0, 1)
  std::vector<Rat> b_breaks;     // sorted, first 0, inside [0, 1)
  std::vector<Rat> diag_consts;  // sorted, inside (0, 2)
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, long> cells;
  /// Set when the cell data is known to satisfy the cocycle identity,
  /// either by construction or by a validation pass.
  bool is_cocycle = false;
};

/// m times the standard cocycle (0 below a+b = 1, 1 on and above) plus the
/// coboundary of f. The result satisfies the cocycle identity by
/// construction.
PiecewiseCocycle from_standard_plus_coboundary(long m, const NiceCochain& f);

/// from_standard_plus_coboundary(1, 0).
PiecewiseCocycle standard_cocycle();

/// Builds a cocycle from explicit arrangement data. Throws invalid_input
/// when the breakpoint lists are malformed or the cells do not cover the
/// arrangement regions exactly once; runs validate_cocycle to set the
/// is_cocycle flag.
PiecewiseCocycle make_piecewise(
    std::vector<Rat> a_breaks, std::vector<Rat> b_breaks,
    std::vector<Rat> diag_consts,
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, long> cells);

/// Value at (a mod 1, b mod 1).
long cocycle_eval(const PiecewiseCocycle& t, const Rat& a, const Rat& b);

/// Checks the cocycle identity t(x,y) + t(x+y,z) = t(y,z) + t(x,y+z)
/// (arguments mod 1) over all triples from the grid of cell sample
/// coordinates. Quantifier-complete for piecewise constant data on the
/// sample arrangement.
bool validate_cocycle(const PiecewiseCocycle& t);

/// Cellwise sum; the two arrangements must coincide (invalid_input
/// otherwise).
PiecewiseCocycle add_cocycles(const PiecewiseCocycle& t1,
                              const PiecewiseCocycle& t2);

/// The class of a nice cocycle: for each diagonal, the jump across it
/// (sampled at exact rational offsets inside the adjacent cells) weighted
/// by the a-axis projection length of each constant stretch, summed over
/// all diagonals. Throws not_a_cocycle when the input is not certified as
/// a cocycle or the total is not an integer.
long covering_number(const PiecewiseCocycle& t);

}  // namespace sympsig
