#include "sympsig/congruence.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "sympsig/errors.hpp"
#include "sympsig/matrix.hpp"

namespace sympsig {

namespace {

void check_modulus(unsigned modulus) {
  if (modulus < 2 || modulus > 255)
    throw invalid_input("modulus must lie in [2, 255]");
}

std::uint8_t residue_of(const Rat& x, unsigned modulus) {
  if (!is_integer(x))
    throw invalid_input("only integer matrices reduce mod N");
  Int r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_num().get_mpz_t(), modulus);
  return static_cast<std::uint8_t>(r.get_ui());
}

ModMat reduce_entries(const Mat& m, std::size_t g, unsigned modulus) {
  ModMat out;
  out.g = g;
  out.modulus = modulus;
  out.entries.resize(4 * g * g);
  for (std::size_t i = 0; i < 2 * g; ++i)
    for (std::size_t j = 0; j < 2 * g; ++j)
      out.at(i, j) = residue_of(m(i, j), modulus);
  return out;
}

}  // namespace

ModMat mod_identity(std::size_t g, unsigned modulus) {
  check_modulus(modulus);
  ModMat out;
  out.g = g;
  out.modulus = modulus;
  out.entries.assign(4 * g * g, 0);
  for (std::size_t i = 0; i < 2 * g; ++i) out.at(i, i) = 1;
  return out;
}

ModMat reduce_mod(const SpMat& m, unsigned modulus) {
  check_modulus(modulus);
  return reduce_entries(m.m, m.g, modulus);
}

ModMat reduce_mod(const Mat& m, unsigned modulus) {
  check_modulus(modulus);
  if (!m.is_square() || m.rows() % 2 != 0)
    throw invalid_input("reduction needs a square matrix of even dimension");
  return reduce_entries(m, m.rows() / 2, modulus);
}

bool is_symplectic_mod(const ModMat& m) {
  const std::size_t g = m.g;
  const std::size_t n = 2 * g;
  const unsigned mod = m.modulus;
  // Compare M^T J M with J entrywise; J has I in the upper right block
  // and -I in the lower left.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      unsigned acc = 0;
      for (std::size_t k = 0; k < g; ++k) {
        // (J M)(k, j) = M(g + k, j) and (J M)(g + k, j) = -M(k, j).
        acc = (acc + m.at(k, i) * m.at(g + k, j)) % mod;
        acc = (acc + m.at(g + k, i) * (mod - m.at(k, j) % mod)) % mod;
      }
      unsigned expected = 0;
      if (j == i + g) expected = 1 % mod;
      if (i == j + g) expected = (mod - 1) % mod;
      if (acc != expected) return false;
    }
  }
  return true;
}

ModMat mod_mul(const ModMat& a, const ModMat& b) {
  if (a.g != b.g || a.modulus != b.modulus)
    throw invalid_input("residue matrices of different shape or modulus");
  const std::size_t n = a.dim();
  ModMat out;
  out.g = a.g;
  out.modulus = a.modulus;
  out.entries.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      unsigned acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += a.at(i, k) * b.at(k, j);
      out.at(i, j) = static_cast<std::uint8_t>(acc % a.modulus);
    }
  }
  return out;
}

ModMat mod_inverse(const ModMat& m) {
  const std::size_t g = m.g;
  const std::size_t n = 2 * g;
  const unsigned mod = m.modulus;
  // -J M^T J: block transposes with sign twists, entirely index shuffling.
  // Writing M = [[A, B], [C, D]] in g x g blocks, the inverse is
  // [[D^T, -B^T], [-C^T, A^T]].
  ModMat out;
  out.g = g;
  out.modulus = mod;
  out.entries.resize(n * n);
  auto neg = [mod](std::uint8_t x) {
    return static_cast<std::uint8_t>((mod - x % mod) % mod);
  };
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < g; ++j) {
      out.at(i, j) = m.at(g + j, g + i);
      out.at(i, g + j) = neg(m.at(j, g + i));
      out.at(g + i, j) = neg(m.at(g + j, i));
      out.at(g + i, g + j) = m.at(j, i);
    }
  }
  return out;
}

bool in_principal_congruence(const SpMat& m, unsigned modulus) {
  return reduce_mod(m, modulus) == mod_identity(m.g, modulus);
}

namespace {

// The parity conditions, read off the residue matrix mod 4.
bool parity_conditions(const ModMat& r) {
  const std::size_t g = r.g;
  for (std::size_t i = 0; i < 2 * g; ++i)
    for (std::size_t j = 0; j < 2 * g; ++j)
      if (static_cast<unsigned>(r.at(i, j) % 2) != (i == j ? 1u : 0u))
        return false;
  unsigned trace_half = 0;
  for (std::size_t i = 0; i < g; ++i) {
    if (r.at(i, g + i) % 4 != 0) return false;      // Diag(b) even
    if (r.at(g + i, i) % 4 != 0) return false;      // Diag(c) even
    trace_half += (r.at(i, i) - 1) / 2;             // entries of Diag(a)
  }
  return trace_half % 2 == 0;  // Tr(a) even
}

}  // namespace

bool in_K(const SpMat& m) { return parity_conditions(reduce_mod(m, 4)); }

bool in_Y(const ModMat& m) {
  if (m.modulus != 4)
    throw invalid_input("membership is defined on residues mod 4");
  return parity_conditions(m);
}

Int group_order_formula(std::size_t g, GroupKind which) {
  if (g < 1) throw invalid_input("genus must be at least 1");
  auto pow2 = [](unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
  };
  Int odd_part = 1;
  for (std::size_t i = 1; i <= g; ++i) odd_part *= pow2(2 * i) - 1;
  switch (which) {
    case GroupKind::sp_mod2:
      return pow2(g * g) * odd_part;
    case GroupKind::sp_mod4:
      return pow2(g * (3 * g + 1)) * odd_part;
    case GroupKind::H:
      return pow2((g + 1) * (g + 1)) * odd_part;
    case GroupKind::Y:
      return pow2((2 * g + 1) * (g - 1));
    case GroupKind::lie_sp_mod2:
      return pow2(g * (2 * g + 1));
  }
  throw invalid_input("unknown group kind");
}

std::vector<ModMat> sp_generators_mod(std::size_t g, unsigned modulus) {
  check_modulus(modulus);
  std::vector<ModMat> gens;
  std::unordered_set<std::string> seen;
  for (const auto& v : transvection_alphabet(g)) {
    for (long c : {1L, -1L}) {
      const ModMat r = reduce_mod(transvection(v, Rat(c), g), modulus);
      if (seen.insert(encode_modmat(r)).second) gens.push_back(r);
    }
  }
  return gens;
}

std::string encode_modmat(const ModMat& m) {
  return std::string(reinterpret_cast<const char*>(m.entries.data()),
                     m.entries.size());
}

ModMat decode_modmat(const std::string& bytes, std::size_t g,
                     unsigned modulus) {
  if (bytes.size() != 4 * g * g)
    throw invalid_input("encoded element has the wrong byte length");
  ModMat out;
  out.g = g;
  out.modulus = modulus;
  out.entries.assign(bytes.begin(), bytes.end());
  for (std::uint8_t entry : out.entries)
    if (entry >= modulus)
      throw invalid_input("encoded element has residues outside the modulus");
  return out;
}

bool GroupTable::contains(const ModMat& m) const {
  return contains(encode_modmat(m));
}

bool GroupTable::contains(const std::string& encoding) const {
  return std::binary_search(elements.begin(), elements.end(), encoding);
}

GroupTable closure_bfs(std::size_t g, unsigned modulus,
                       const std::vector<ModMat>& generators,
                       std::size_t budget) {
  check_modulus(modulus);
  for (const auto& gen : generators) {
    if (gen.g != g || gen.modulus != modulus)
      throw invalid_input("generator shape or modulus mismatch");
    if (!is_symplectic_mod(gen))
      throw invalid_input("generators must satisfy the symplectic relation");
  }
  std::vector<ModMat> steps = generators;
  {
    std::unordered_set<std::string> step_keys;
    for (const auto& gen : generators) step_keys.insert(encode_modmat(gen));
    for (const auto& gen : generators) {
      const ModMat inv = mod_inverse(gen);
      if (step_keys.insert(encode_modmat(inv)).second) steps.push_back(inv);
    }
  }

  std::unordered_set<std::string> seen;
  std::deque<std::string> frontier;
  const std::string identity = encode_modmat(mod_identity(g, modulus));
  seen.insert(identity);
  frontier.push_back(identity);
  while (!frontier.empty()) {
    const ModMat current = decode_modmat(frontier.front(), g, modulus);
    frontier.pop_front();
    for (const auto& step : steps) {
      std::string key = encode_modmat(mod_mul(current, step));
      if (seen.insert(key).second) {
        if (seen.size() > budget)
          throw resource_error("group closure exceeded the element budget",
                               seen.size());
        frontier.push_back(std::move(key));
      }
    }
  }

  GroupTable tbl;
  tbl.g = g;
  tbl.modulus = modulus;
  tbl.generators = generators;
  tbl.elements.assign(seen.begin(), seen.end());
  std::sort(tbl.elements.begin(), tbl.elements.end());
  return tbl;
}

std::vector<std::string> subgroup_filter(
    const GroupTable& tbl, const std::function<bool(const ModMat&)>& pred) {
  std::vector<std::string> out;
  for (const auto& key : tbl.elements)
    if (pred(decode_modmat(key, tbl.g, tbl.modulus))) out.push_back(key);
  return out;
}

bool is_normal(const GroupTable& tbl, const std::vector<std::string>& subset) {
  for (const auto& key : subset) {
    const ModMat s = decode_modmat(key, tbl.g, tbl.modulus);
    for (const auto& gen : tbl.generators) {
      const ModMat conj = mod_mul(mod_mul(gen, s), mod_inverse(gen));
      if (!std::binary_search(subset.begin(), subset.end(),
                              encode_modmat(conj)))
        return false;
    }
  }
  return true;
}

bool is_elementary_abelian(const std::vector<std::string>& subset,
                           const GroupTable& tbl) {
  std::vector<ModMat> members;
  members.reserve(subset.size());
  for (const auto& key : subset)
    members.push_back(decode_modmat(key, tbl.g, tbl.modulus));
  const ModMat id = mod_identity(tbl.g, tbl.modulus);
  for (const auto& x : members)
    if (!(mod_mul(x, x) == id)) return false;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!(mod_mul(members[i], members[j]) == mod_mul(members[j], members[i])))
        return false;
  return true;
}

bool is_elementary_abelian_quotient(
    const std::vector<std::string>& subset,
    const std::vector<std::string>& normal_subset, const GroupTable& tbl) {
  auto in_normal = [&](const ModMat& m) {
    return std::binary_search(normal_subset.begin(), normal_subset.end(),
                              encode_modmat(m));
  };
  std::vector<ModMat> members;
  members.reserve(subset.size());
  for (const auto& key : subset)
    members.push_back(decode_modmat(key, tbl.g, tbl.modulus));
  for (const auto& x : members)
    if (!in_normal(mod_mul(x, x))) return false;
  std::vector<ModMat> inverses;
  inverses.reserve(members.size());
  for (const auto& x : members) inverses.push_back(mod_inverse(x));
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const ModMat comm = mod_mul(mod_mul(members[i], members[j]),
                                  mod_mul(inverses[i], inverses[j]));
      if (!in_normal(comm)) return false;
    }
  }
  return true;
}

std::uint64_t generator_hash(std::size_t g, unsigned modulus,
                             const std::vector<ModMat>& generators) {
  // Each generator is digested on its own and the digests are summed, so
  // the result does not depend on the order of the generator list (the
  // list is morally a set) while duplicates still contribute.
  const auto fnv1a = [](std::uint64_t h, std::uint8_t byte) {
    h ^= byte;
    return h * 1099511628211ULL;  // FNV-1a prime
  };
  std::uint64_t seed = 1469598103934665603ULL;  // FNV-1a offset basis
  seed = fnv1a(seed, static_cast<std::uint8_t>(g));
  seed = fnv1a(seed, static_cast<std::uint8_t>(modulus));
  std::uint64_t total = seed;
  for (const auto& gen : generators) {
    std::uint64_t h = seed;
    for (std::uint8_t byte : gen.entries) h = fnv1a(h, byte);
    total += h;
  }
  return total;
}

namespace {

void put_u32(std::ostream& out, std::uint32_t v) {
  for (int s = 0; s < 32; s += 8)
    out.put(static_cast<char>((v >> s) & 0xff));
}

void put_u64(std::ostream& out, std::uint64_t v) {
  for (int s = 0; s < 64; s += 8)
    out.put(static_cast<char>((v >> s) & 0xff));
}

std::uint32_t get_u32(std::istream& in) {
  std::uint32_t v = 0;
  for (int s = 0; s < 32; s += 8) {
    const int c = in.get();
    if (c == EOF) throw invalid_input("truncated table file");
    v |= static_cast<std::uint32_t>(c & 0xff) << s;
  }
  return v;
}

std::uint64_t get_u64(std::istream& in) {
  std::uint64_t v = 0;
  for (int s = 0; s < 64; s += 8) {
    const int c = in.get();
    if (c == EOF) throw invalid_input("truncated table file");
    v |= static_cast<std::uint64_t>(c & 0xff) << s;
  }
  return v;
}

constexpr char kTableMagic[4] = {'S', 'G', 'T', 'B'};
constexpr std::uint32_t kTableVersion = 1;

}  // namespace

void save_table(const GroupTable& tbl, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw invalid_input("cannot open table file for writing: " + path);
  out.write(kTableMagic, 4);
  put_u32(out, kTableVersion);
  put_u32(out, static_cast<std::uint32_t>(tbl.g));
  put_u32(out, tbl.modulus);
  put_u64(out, generator_hash(tbl.g, tbl.modulus, tbl.generators));
  put_u32(out, static_cast<std::uint32_t>(tbl.generators.size()));
  for (const auto& gen : tbl.generators) {
    const std::string bytes = encode_modmat(gen);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  }
  put_u64(out, tbl.elements.size());
  for (const auto& key : tbl.elements)
    out.write(key.data(), static_cast<std::streamsize>(key.size()));
  if (!out) throw invalid_input("failed writing table file: " + path);
}

GroupTable load_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw invalid_input("cannot open table file: " + path);
  char magic[4];
  in.read(magic, 4);
  if (!in || !std::equal(magic, magic + 4, kTableMagic))
    throw invalid_input("not a group table file");
  if (get_u32(in) != kTableVersion)
    throw invalid_input("unsupported table file version");
  GroupTable tbl;
  tbl.g = get_u32(in);
  tbl.modulus = get_u32(in);
  if (tbl.g == 0) throw invalid_input("corrupt table header: genus 0");
  check_modulus(tbl.modulus);
  const std::uint64_t stored_hash = get_u64(in);
  const std::uint32_t gen_count = get_u32(in);
  const std::size_t width = 4 * tbl.g * tbl.g;
  std::string buffer(width, '\0');
  for (std::uint32_t k = 0; k < gen_count; ++k) {
    in.read(buffer.data(), static_cast<std::streamsize>(width));
    if (!in) throw invalid_input("truncated table file");
    tbl.generators.push_back(decode_modmat(buffer, tbl.g, tbl.modulus));
  }
  if (generator_hash(tbl.g, tbl.modulus, tbl.generators) != stored_hash)
    throw invalid_input("generator hash mismatch in table file");
  const std::uint64_t count = get_u64(in);
  tbl.elements.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) {
    in.read(buffer.data(), static_cast<std::streamsize>(width));
    if (!in) throw invalid_input("truncated table file");
    if (!tbl.elements.empty() && buffer <= tbl.elements.back())
      throw invalid_input("table file elements are not sorted");
    tbl.elements.push_back(buffer);
  }
  if (in.get() != EOF) throw invalid_input("trailing bytes in table file");
  return tbl;
}

std::string order_table_csv(const std::vector<OrderRow>& rows) {
  std::ostringstream out;
  out << "g,N,formula_order,enumerated_order\n";
  for (const auto& row : rows) {
    out << row.g << ',' << row.modulus << ',' << row.formula_order.get_str()
        << ',';
    if (row.enumerated_order) out << row.enumerated_order->get_str();
    out << '\n';
  }
  return out.str();
}

}  // namespace sympsig
