#pragma once

#include <cstdint>
#include <vector>

#include "sympsig/linalg.hpp"
#include "sympsig/matrix.hpp"

namespace sympsig {

// Standard symplectic form in the block basis v_1..v_g, w_1..w_g:
// J(g) = [[0, I], [-I, 0]], pairing <x, y> = x^T J y.
Mat symplectic_form(std::size_t g);

// Permutation P sending the block basis (v_1..v_g, w_1..w_g) to the
// interleaved basis (v_1, w_1, v_2, w_2, ...): the two common conventions
// are conjugate by this matrix.
Mat block_to_interleaved(std::size_t g);

// True iff M^T J(g) M = J(g); the shape must be 2g x 2g.
bool is_symplectic(const Mat& m, std::size_t g);

// A 2g x 2g rational matrix satisfying the symplectic relation.
struct SpMat {
  std::size_t g = 0;
  Mat m;

  SpMat() = default;
  // Validates the relation; throws precondition_error when it fails.
  SpMat(std::size_t genus, Mat mat);

  static SpMat identity(std::size_t g);
  bool is_identity() const;
  bool operator==(const SpMat&) const = default;
};

SpMat operator*(const SpMat& a, const SpMat& b);

// M^{-1} = -J M^T J; exact, no elimination.
SpMat symplectic_inverse(const SpMat& m);

// a b a^{-1} b^{-1}.
SpMat commutator(const SpMat& a, const SpMat& b);

// x -> x + c <x, v> v; symplectic for every direction v and scalar c.
SpMat transvection(const std::vector<Rat>& v, const Rat& c, std::size_t g);

// Extends M to act as the identity on the appended hyperbolic pairs
// v_{g+1}, w_{g+1}, ..., keeping the block basis order.
SpMat embed_stabilize(const SpMat& m, std::size_t target_genus);

// 64-bit linear congruential generator (Knuth's MMIX multiplier
// 6364136223846793005 and increment 1442695040888963407). State is caller
// held; identical seeds give identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

// Fixed transvection direction alphabet, in this order:
// e_1..e_g, f_1..f_g, e_i + f_i (i = 1..g), e_i + e_j (i < j, lexicographic).
// Here e_i is the i-th v-basis vector and f_i the i-th w-basis vector.
std::vector<std::vector<Rat>> transvection_alphabet(std::size_t g);

// Product of word_len alphabet transvections with coefficients +-1.
SpMat random_symplectic(std::size_t g, std::size_t word_len, Rng& rng);
SpMat random_symplectic(std::size_t g, std::size_t word_len,
                        std::uint64_t seed);

// Same scheme with coefficients +-4; every factor, hence every product,
// is congruent to the identity mod 4.
SpMat random_gamma4(std::size_t g, std::size_t word_len, Rng& rng);

}  // namespace sympsig
