#include "sympsig/circle.hpp"

#include <algorithm>
#include <utility>

#include "sympsig/errors.hpp"

namespace sympsig {

Rat dedekind(const Rat& x) {
  if (is_integer(x)) return Rat(0);
  return rat_frac(x) - make_rat(1, 2);
}

int sign_sin_pi(const Rat& x) {
  if (is_integer(x)) return 0;
  return mpz_even_p(rat_floor(x).get_mpz_t()) ? 1 : -1;
}

namespace {

long to_integer(const Rat& x) {
  if (!is_integer(x)) throw construction_bug("closed form left the integers");
  return x.get_num().get_si();
}

}  // namespace

long tau1_closed(const Rat& a, const Rat& b) {
  return to_integer(4 * (dedekind(a) + dedekind(b) - dedekind(a + b)));
}

long tau1prime_closed(const Rat& a, const Rat& b) {
  return to_integer(
      2 * (dedekind(2 * a) + dedekind(2 * b) - dedekind(2 * (a + b))));
}

NiceCochain make_nice_cochain(std::vector<Rat> breaks,
                              std::vector<long> values) {
  if (breaks.empty()) throw invalid_input("cochain needs at least one break");
  if (breaks.front() != 0) throw invalid_input("first break must be 0");
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    if (breaks[i] < 0 || breaks[i] >= 1)
      throw invalid_input("breaks must lie in [0, 1)");
    if (i > 0 && !(breaks[i - 1] < breaks[i]))
      throw invalid_input("breaks must be strictly increasing");
  }
  if (values.size() != breaks.size())
    throw invalid_input("one value per interval is required");
  return NiceCochain{std::move(breaks), std::move(values)};
}

NiceCochain constant_cochain(long c) { return make_nice_cochain({Rat(0)}, {c}); }

NiceCochain step_cochain(long p, long q) {
  return make_nice_cochain({Rat(0), make_rat(1, 2)}, {p, q});
}

namespace {

// Index of the rightmost breakpoint <= x; x must be in [0, 1) and the
// list sorted starting at 0.
std::size_t interval_index(const std::vector<Rat>& breaks, const Rat& x) {
  std::size_t lo = 0;
  std::size_t hi = breaks.size();
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (breaks[mid] <= x)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

// Number of diagonal constants <= s.
std::size_t band_index(const std::vector<Rat>& diag, const Rat& s) {
  std::size_t count = 0;
  for (const auto& c : diag) {
    if (c <= s)
      ++count;
    else
      break;
  }
  return count;
}

}  // namespace

long cochain_eval(const NiceCochain& f, const Rat& x) {
  return f.values[interval_index(f.breaks, rat_frac(x))];
}

long coboundary_eval(const NiceCochain& f, const Rat& a, const Rat& b) {
  return cochain_eval(f, a) + cochain_eval(f, b) - cochain_eval(f, a + b);
}

namespace {

struct CellSample {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t band = 0;
  Rat a;
  Rat b;
};

// One interior sample point per region of the arrangement. Each region is
// {a in [a_i, a_{i+1}), b in [b_j, b_{j+1}), band(a + b) = k}; its interior
// is nonempty exactly when the open diagonal range of the rectangle meets
// the open band range.
std::vector<CellSample> enumerate_cells(const std::vector<Rat>& a_breaks,
                                        const std::vector<Rat>& b_breaks,
                                        const std::vector<Rat>& diag) {
  std::vector<CellSample> cells;
  const std::size_t bands = diag.size() + 1;
  for (std::size_t i = 0; i < a_breaks.size(); ++i) {
    const Rat a_lo = a_breaks[i];
    const Rat a_hi = i + 1 < a_breaks.size() ? a_breaks[i + 1] : Rat(1);
    for (std::size_t j = 0; j < b_breaks.size(); ++j) {
      const Rat b_lo = b_breaks[j];
      const Rat b_hi = j + 1 < b_breaks.size() ? b_breaks[j + 1] : Rat(1);
      for (std::size_t k = 0; k < bands; ++k) {
        const Rat band_lo = k == 0 ? Rat(0) : diag[k - 1];
        const Rat band_hi = k == diag.size() ? Rat(2) : diag[k];
        const Rat s_lo = std::max(band_lo, Rat(a_lo + b_lo));
        const Rat s_hi = std::min(band_hi, Rat(a_hi + b_hi));
        if (!(s_lo < s_hi)) continue;
        const Rat s = (s_lo + s_hi) / 2;
        const Rat a_min = std::max(a_lo, Rat(s - b_hi));
        const Rat a_max = std::min(a_hi, Rat(s - b_lo));
        const Rat a = (a_min + a_max) / 2;
        cells.push_back(CellSample{i, j, k, a, s - a});
      }
    }
  }
  return cells;
}

void check_breaks(const std::vector<Rat>& breaks, const char* axis) {
  if (breaks.empty() || breaks.front() != 0)
    throw invalid_input(std::string(axis) + " breaks must start at 0");
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    if (breaks[i] < 0 || breaks[i] >= 1)
      throw invalid_input(std::string(axis) + " breaks must lie in [0, 1)");
    if (i > 0 && !(breaks[i - 1] < breaks[i]))
      throw invalid_input(std::string(axis) +
                          " breaks must be strictly increasing");
  }
}

void check_diag(const std::vector<Rat>& diag) {
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (!(diag[i] > 0) || !(diag[i] < 2))
      throw invalid_input("diagonal constants must lie in (0, 2)");
    if (i > 0 && !(diag[i - 1] < diag[i]))
      throw invalid_input("diagonal constants must be strictly increasing");
  }
}

}  // namespace

PiecewiseCocycle from_standard_plus_coboundary(long m, const NiceCochain& f) {
  PiecewiseCocycle t;
  t.a_breaks = f.breaks;
  t.b_breaks = f.breaks;
  t.diag_consts.push_back(Rat(1));
  for (const auto& x : f.breaks) {
    if (x == 0) continue;
    t.diag_consts.push_back(x);
    t.diag_consts.push_back(x + 1);
  }
  std::sort(t.diag_consts.begin(), t.diag_consts.end());
  t.diag_consts.erase(
      std::unique(t.diag_consts.begin(), t.diag_consts.end()),
      t.diag_consts.end());
  for (const auto& cell :
       enumerate_cells(t.a_breaks, t.b_breaks, t.diag_consts)) {
    const long standard = cell.a + cell.b >= 1 ? 1 : 0;
    t.cells[{cell.i, cell.j, cell.band}] =
        m * standard + coboundary_eval(f, cell.a, cell.b);
  }
  t.is_cocycle = true;
  return t;
}

PiecewiseCocycle standard_cocycle() {
  return from_standard_plus_coboundary(1, constant_cochain(0));
}

PiecewiseCocycle make_piecewise(
    std::vector<Rat> a_breaks, std::vector<Rat> b_breaks,
    std::vector<Rat> diag_consts,
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, long> cells) {
  check_breaks(a_breaks, "a");
  check_breaks(b_breaks, "b");
  check_diag(diag_consts);
  PiecewiseCocycle t;
  t.a_breaks = std::move(a_breaks);
  t.b_breaks = std::move(b_breaks);
  t.diag_consts = std::move(diag_consts);
  t.cells = std::move(cells);
  const auto expected = enumerate_cells(t.a_breaks, t.b_breaks, t.diag_consts);
  if (expected.size() != t.cells.size())
    throw invalid_input("cell list does not match the arrangement");
  for (const auto& cell : expected)
    if (!t.cells.count({cell.i, cell.j, cell.band}))
      throw invalid_input("a region of the arrangement has no value");
  t.is_cocycle = validate_cocycle(t);
  return t;
}

long cocycle_eval(const PiecewiseCocycle& t, const Rat& a, const Rat& b) {
  const Rat ar = rat_frac(a);
  const Rat br = rat_frac(b);
  const std::size_t i = interval_index(t.a_breaks, ar);
  const std::size_t j = interval_index(t.b_breaks, br);
  const std::size_t band = band_index(t.diag_consts, ar + br);
  const auto it = t.cells.find({i, j, band});
  if (it == t.cells.end())
    throw invalid_input("no value stored for the queried region");
  return it->second;
}

bool validate_cocycle(const PiecewiseCocycle& t) {
  std::vector<Rat> grid;
  for (const auto& cell :
       enumerate_cells(t.a_breaks, t.b_breaks, t.diag_consts)) {
    grid.push_back(cell.a);
    grid.push_back(cell.b);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  for (const auto& x : grid) {
    for (const auto& y : grid) {
      const Rat xy = rat_frac(x + y);
      const long t_xy = cocycle_eval(t, x, y);
      for (const auto& z : grid) {
        if (t_xy + cocycle_eval(t, xy, z) !=
            cocycle_eval(t, y, z) + cocycle_eval(t, x, y + z))
          return false;
      }
    }
  }
  return true;
}

PiecewiseCocycle add_cocycles(const PiecewiseCocycle& t1,
                              const PiecewiseCocycle& t2) {
  if (t1.a_breaks != t2.a_breaks || t1.b_breaks != t2.b_breaks ||
      t1.diag_consts != t2.diag_consts)
    throw invalid_input("cocycles live on different arrangements");
  PiecewiseCocycle sum = t1;
  for (auto& [key, value] : sum.cells) value += t2.cells.at(key);
  sum.is_cocycle = t1.is_cocycle && t2.is_cocycle;
  return sum;
}

long covering_number(const PiecewiseCocycle& t) {
  if (!t.is_cocycle)
    throw not_a_cocycle("input is not certified as a cocycle");
  Rat total(0);
  for (const auto& c : t.diag_consts) {
    // The diagonal a + b = c crosses the unit square over this a-range.
    const Rat a_lo = std::max(Rat(0), Rat(c - 1));
    const Rat a_hi = std::min(Rat(1), c);
    std::vector<Rat> cuts{a_lo, a_hi};
    for (const auto& x : t.a_breaks)
      if (a_lo < x && x < a_hi) cuts.push_back(x);
    for (const auto& y : t.b_breaks) {
      const Rat crossing = c - y;
      if (a_lo < crossing && crossing < a_hi) cuts.push_back(crossing);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t e = 0; e + 1 < cuts.size(); ++e) {
      const Rat a = (cuts[e] + cuts[e + 1]) / 2;
      const Rat b = c - a;
      // Largest vertical offset that stays inside the two adjacent cells:
      // half the distance to the nearest horizontal line or other diagonal.
      Rat clearance = std::min(b, Rat(Rat(1) - b));
      for (const auto& y : t.b_breaks)
        if (y != 0) clearance = std::min(clearance, Rat(abs(b - y)));
      for (const auto& other : t.diag_consts)
        if (other != c) clearance = std::min(clearance, Rat(abs(other - c)));
      const Rat offset = clearance / 2;
      const long above = cocycle_eval(t, a, b + offset);
      const long below = cocycle_eval(t, a, b - offset);
      total += Rat(above - below) * (cuts[e + 1] - cuts[e]);
    }
  }
  if (!is_integer(total))
    throw not_a_cocycle("diagonal jumps do not sum to an integer");
  return total.get_num().get_si();
}

}  // namespace sympsig
