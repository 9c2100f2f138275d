#include "sympsig/symplectic.hpp"

#include "sympsig/errors.hpp"

namespace sympsig {

Mat symplectic_form(std::size_t g) {
  Mat j(2 * g, 2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    j(i, g + i) = 1;
    j(g + i, i) = -1;
  }
  return j;
}

Mat block_to_interleaved(std::size_t g) {
  Mat p(2 * g, 2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    p(2 * i, i) = 1;
    p(2 * i + 1, g + i) = 1;
  }
  return p;
}

bool is_symplectic(const Mat& m, std::size_t g) {
  if (g == 0) throw invalid_input("genus must be positive");
  if (m.rows() != 2 * g || m.cols() != 2 * g)
    throw invalid_input("symplectic test on a matrix of the wrong shape");
  const Mat j = symplectic_form(g);
  return m.transpose() * j * m == j;
}

SpMat::SpMat(std::size_t genus, Mat mat) : g(genus), m(std::move(mat)) {
  if (g == 0) throw invalid_input("genus must be positive");
  if (m.rows() != 2 * g || m.cols() != 2 * g)
    throw invalid_input("symplectic matrix of the wrong shape");
  if (!is_symplectic(m, g))
    throw precondition_error("matrix does not satisfy the symplectic relation");
}

SpMat SpMat::identity(std::size_t g) { return SpMat(g, Mat::identity(2 * g)); }

bool SpMat::is_identity() const { return m == Mat::identity(2 * g); }

SpMat operator*(const SpMat& a, const SpMat& b) {
  if (a.g != b.g) throw invalid_input("genus mismatch in product");
  SpMat out;
  out.g = a.g;
  out.m = a.m * b.m;
  return out;
}

SpMat symplectic_inverse(const SpMat& m) {
  const Mat j = symplectic_form(m.g);
  SpMat out;
  out.g = m.g;
  out.m = -(j * m.m.transpose() * j);
  return out;
}

SpMat commutator(const SpMat& a, const SpMat& b) {
  if (a.g != b.g) throw invalid_input("genus mismatch in commutator");
  return a * b * symplectic_inverse(a) * symplectic_inverse(b);
}

SpMat transvection(const std::vector<Rat>& v, const Rat& c, std::size_t g) {
  if (v.size() != 2 * g) throw invalid_input("transvection direction shape");
  bool zero = true;
  for (const auto& x : v)
    if (x != 0) {
      zero = false;
      break;
    }
  if (zero) throw invalid_input("transvection along the zero vector");
  // x + c <x, v> v = (I + c v (Jv)^T) x.
  const Mat j = symplectic_form(g);
  Mat vm = column_vector(v);
  Mat t = Mat::identity(2 * g) + c * (vm * (j * vm).transpose());
  SpMat out;
  out.g = g;
  out.m = std::move(t);
  return out;
}

SpMat embed_stabilize(const SpMat& m, std::size_t target_genus) {
  const std::size_t g = m.g, tg = target_genus;
  if (tg < g) throw invalid_input("stabilization cannot shrink the genus");
  if (tg == g) return m;
  Mat big = Mat::identity(2 * tg);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      big(i, j) = m.m(i, j);
      big(i, tg + j) = m.m(i, g + j);
      big(tg + i, j) = m.m(g + i, j);
      big(tg + i, tg + j) = m.m(g + i, g + j);
    }
  SpMat out;
  out.g = tg;
  out.m = std::move(big);
  return out;
}

std::vector<std::vector<Rat>> transvection_alphabet(std::size_t g) {
  std::vector<std::vector<Rat>> out;
  auto unit = [g](std::size_t k) {
    std::vector<Rat> v(2 * g, Rat(0));
    v[k] = 1;
    return v;
  };
  for (std::size_t i = 0; i < g; ++i) out.push_back(unit(i));
  for (std::size_t i = 0; i < g; ++i) out.push_back(unit(g + i));
  for (std::size_t i = 0; i < g; ++i) {
    auto v = unit(i);
    v[g + i] = 1;
    out.push_back(v);
  }
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i + 1; j < g; ++j) {
      auto v = unit(i);
      v[j] = 1;
      out.push_back(v);
    }
  return out;
}

namespace {

SpMat random_word(std::size_t g, std::size_t word_len, Rng& rng,
                  const Rat& magnitude) {
  const auto alphabet = transvection_alphabet(g);
  SpMat acc = SpMat::identity(g);
  for (std::size_t k = 0; k < word_len; ++k) {
    const auto& v = alphabet[rng.below(alphabet.size())];
    const Rat c = rng.below(2) == 0 ? magnitude : -magnitude;
    acc = acc * transvection(v, c, g);
  }
  return acc;
}

}  // namespace

SpMat random_symplectic(std::size_t g, std::size_t word_len, Rng& rng) {
  return random_word(g, word_len, rng, Rat(1));
}

SpMat random_symplectic(std::size_t g, std::size_t word_len,
                        std::uint64_t seed) {
  Rng rng(seed);
  return random_symplectic(g, word_len, rng);
}

SpMat random_gamma4(std::size_t g, std::size_t word_len, Rng& rng) {
  return random_word(g, word_len, rng, Rat(4));
}

}  // namespace sympsig
