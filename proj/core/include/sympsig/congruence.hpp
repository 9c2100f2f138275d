#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sympsig/rational.hpp"
#include "sympsig/symplectic.hpp"

namespace sympsig {

/// A 2g x 2g matrix of residues mod N, N in [2, 255]. Whether the entries
/// satisfy the symplectic relation mod N is a checkable predicate, not an
/// invariant of the type.
struct ModMat {
  std::size_t g = 0;
  unsigned modulus = 0;
  std::vector<std::uint8_t> entries;  // row-major, 2g x 2g

  std::size_t dim() const { return 2 * g; }
  std::uint8_t at(std::size_t i, std::size_t j) const {
    return entries[i * dim() + j];
  }
  std::uint8_t& at(std::size_t i, std::size_t j) {
    return entries[i * dim() + j];
  }
  bool operator==(const ModMat&) const = default;
};

ModMat mod_identity(std::size_t g, unsigned modulus);

/// Entrywise residues of an integer symplectic matrix. Throws invalid_input
/// for a modulus outside [2, 255] or non-integer entries.
ModMat reduce_mod(const SpMat& m, unsigned modulus);

/// Same reduction for a plain integer square matrix of even dimension.
ModMat reduce_mod(const Mat& m, unsigned modulus);

bool is_symplectic_mod(const ModMat& m);

ModMat mod_mul(const ModMat& a, const ModMat& b);

/// -J M^T J mod N; inverts every matrix satisfying the symplectic
/// relation mod N.
ModMat mod_inverse(const ModMat& m);

/// True iff M = I (mod N).
bool in_principal_congruence(const SpMat& m, unsigned modulus);

/// Membership in the subgroup cut out by the parity conditions: M = I
/// (mod 2) and, writing M = [[I+2a, 2b],[2c, I+2d]], the diagonals of b
/// and c are even and Tr(a) is even. All conditions depend on M mod 4
/// only. in_K takes an integer symplectic matrix; in_Y takes the residue
/// matrix itself and requires modulus 4.
bool in_K(const SpMat& m);
bool in_Y(const ModMat& m);

enum class GroupKind { sp_mod2, sp_mod4, H, Y, lie_sp_mod2 };

/// Closed-form orders, with P = prod_{i=1..g} (2^{2i} - 1):
///   sp_mod2      2^{g^2} P
///   sp_mod4      2^{g(3g+1)} P
///   H            2^{(g+1)^2} P
///   Y            2^{(2g+1)(g-1)}
///   lie_sp_mod2  2^{g(2g+1)}
Int group_order_formula(std::size_t g, GroupKind which);

/// Transvections along the core alphabet with coefficients +-1, reduced
/// mod N and deduplicated.
std::vector<ModMat> sp_generators_mod(std::size_t g, unsigned modulus);

/// Fixed-width byte string of the residues, row-major: the canonical hash
/// and ordering key for group elements.
std::string encode_modmat(const ModMat& m);
ModMat decode_modmat(const std::string& bytes, std::size_t g,
                     unsigned modulus);

/// A finite matrix group held as the sorted set of canonical encodings.
struct GroupTable {
  std::size_t g = 0;
  unsigned modulus = 0;
  std::vector<ModMat> generators;
  std::vector<std::string> elements;  // sorted, unique

  std::size_t size() const { return elements.size(); }
  bool contains(const ModMat& m) const;
  bool contains(const std::string& encoding) const;
};

/// Breadth-first closure of the generators (and their inverses) under
/// multiplication, starting from the identity. Deterministic element set.
/// Exceeding the element budget raises resource_error carrying the count
/// reached.
GroupTable closure_bfs(std::size_t g, unsigned modulus,
                       const std::vector<ModMat>& generators,
                       std::size_t budget = 2000000);

/// Encodings of the table elements satisfying the predicate, in table
/// order (sorted).
std::vector<std::string> subgroup_filter(
    const GroupTable& tbl, const std::function<bool(const ModMat&)>& pred);

/// True iff conjugation by every generator maps the subset into itself.
/// subset must be sorted (as produced by subgroup_filter).
bool is_normal(const GroupTable& tbl, const std::vector<std::string>& subset);

/// True iff all subset members commute pairwise and square to the identity.
bool is_elementary_abelian(const std::vector<std::string>& subset,
                           const GroupTable& tbl);

/// Same property for the image of subset in the quotient by a normal
/// subgroup: every square and every commutator lands in normal_subset.
/// Both subsets must be sorted.
bool is_elementary_abelian_quotient(const std::vector<std::string>& subset,
                                    const std::vector<std::string>& normal_subset,
                                    const GroupTable& tbl);

/// Order-independent digest of (g, modulus, generator list); keys cached
/// tables to the generating set that built them.
std::uint64_t generator_hash(std::size_t g, unsigned modulus,
                             const std::vector<ModMat>& generators);

/// Binary cache with a versioned header ("SGTB"); load validates the
/// header, the generator hash, and the element ordering, and throws
/// invalid_input on any corruption.
void save_table(const GroupTable& tbl, const std::string& path);
GroupTable load_table(const std::string& path);

struct OrderRow {
  std::size_t g = 0;
  unsigned modulus = 0;
  Int formula_order;
  std::optional<Int> enumerated_order;
};

/// CSV with header g,N,formula_order,enumerated_order; the last field is
/// empty when no enumeration was run.
std::string order_table_csv(const std::vector<OrderRow>& rows);

}  // namespace sympsig
