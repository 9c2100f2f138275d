#pragma once

// Sign-convention lock. Two global sign conventions for the genus-1
// closed forms circulate in the literature; this library pins one of them
// by calibrating against the kernel-presentation route once, and the
// constants below record the outcome. Tests assert them; changing any of
// them is an interface break. docs/conventions.md has the narrative.

namespace sympsig::conventions {

// meyer_cocycle(R, R) with R = [[0, -1], [1, 0]] (the quarter rotation).
inline constexpr int kMeyerAnchor = -2;

// meyer_cocycle(rot(a), rot(b)) = kTau1Sign * tau1_closed(a, b) on the
// rational rotations rot(a), a in {0, 1/4, 1/2, 3/4}.
inline constexpr int kTau1Sign = +1;

// maslov_cocycle(rot(a), rot(b)) = kTau1PrimeSign * tau1prime_closed(a, b)
// on the same rotations (both sides vanish there; the sign is pinned by
// the line-lagrangian closed form instead).
inline constexpr int kTau1PrimeSign = +1;

// wall_maslov on the lines through (1,0), (1,1), (0,1), in this order.
inline constexpr int kTripleAnchor = -1;

// Orientation of the difference form on the doubled space: diag(-J, +J).
// With the opposite orientation the graph route returns the negative of
// the kernel-presentation route on every non-degenerate input.
inline constexpr int kDoubledFormFirstBlockSign = -1;

}  // namespace sympsig::conventions
