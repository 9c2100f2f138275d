#include "sympsig/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "sympsig/bundle.hpp"
#include "sympsig/circle.hpp"
#include "sympsig/congruence.hpp"
#include "sympsig/conventions.hpp"
#include "sympsig/errors.hpp"
#include "sympsig/lagrangian.hpp"
#include "sympsig/maslov.hpp"
#include "sympsig/meyer.hpp"
#include "sympsig/symplectic.hpp"

namespace sympsig {
namespace {

using Clock = std::chrono::steady_clock;

struct SharedState {
  std::vector<std::pair<Monodromy, long>> monodromies;
  std::vector<std::pair<Monodromy, long>> level4_monodromies;
  GroupTable sp14;
  GroupTable sp24;
  bool have_sp24 = false;
};

using Outcome = std::pair<bool, std::string>;

std::string fmt_hist(const std::map<long, std::size_t>& h) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [value, count] : h) {
    if (!first) os << ", ";
    first = false;
    os << value << ":" << count;
  }
  os << "}";
  return os.str();
}

Cocycle kernel_route() {
  return [](const SpMat& a, const SpMat& b) {
    return static_cast<long>(meyer_cocycle(a, b));
  };
}

Cocycle lagrangian_route() {
  return [](const SpMat& a, const SpMat& b) {
    return static_cast<long>(maslov_cocycle(a, b));
  };
}

Lagrangian random_lagrangian(std::size_t g, Rng& rng) {
  return apply(random_symplectic(g, 1 + rng.below(6), rng),
               default_lagrangian(g));
}

Rat random_rational(Rng& rng) {
  const long num = static_cast<long>(rng.below(401)) - 200;
  const long den = 1 + static_cast<long>(rng.below(60));
  return make_rat(num, den);
}

bool is_mod2_identity(const ModMat& m) {
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (m.at(i, j) % 2 != (i == j ? 1 : 0)) return false;
  return true;
}

// 1. Genus-1 rotation table: the kernel route, the graph route, and the
// closed form agree on all sixteen quarter-rotation pairs.
Outcome criterion_calibration(Rng&, bool, SharedState&) {
  const SpMat r(1, Mat{{Rat(0), Rat(-1)}, {Rat(1), Rat(0)}});
  std::vector<SpMat> rot = {SpMat::identity(1), r, r * r, r * r * r};
  std::vector<Rat> angle = {Rat(0), make_rat(1, 4), make_rat(1, 2),
                            make_rat(3, 4)};

  if (meyer_cocycle(r, r) != conventions::kMeyerAnchor)
    return {false, "anchor value off: expected -2 on the quarter rotation"};

  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const int direct = meyer_cocycle(rot[i], rot[j]);
      const int graphs = meyer_via_graphs(rot[i], rot[j]);
      const long closed =
          conventions::kTau1Sign * tau1_closed(angle[i], angle[j]);
      const long closed_prime =
          conventions::kTau1PrimeSign * tau1prime_closed(angle[i], angle[j]);
      const int via_lines = maslov_cocycle(rot[i], rot[j]);
      std::ostringstream bad;
      if (direct != graphs)
        bad << "kernel " << direct << " vs graph " << graphs;
      else if (direct != closed)
        bad << "kernel " << direct << " vs closed form " << closed;
      else if (direct != 0 && direct != 2 && direct != -2)
        bad << "value " << direct << " outside {0, +-2}";
      else if (via_lines != closed_prime)
        bad << "lagrangian " << via_lines << " vs closed form "
            << closed_prime;
      if (!bad.str().empty()) {
        std::ostringstream os;
        os << "rotation pair (" << i << ", " << j << "): " << bad.str();
        return {false, os.str()};
      }
    }
  }
  return {true,
          "16 rotation pairs agree across the kernel, graph, and closed-form "
          "routes; anchor -2; values in {0, +-2}"};
}

// 2. Cocycle identity on random triples for both cocycles.
Outcome criterion_cocycle_identity(Rng& rng, bool quick, SharedState&) {
  const std::size_t trials = quick ? 100 : 1000;
  const Cocycle kernel = kernel_route();
  const Cocycle lines = lagrangian_route();
  std::size_t kernel_bad = 0;
  std::size_t lines_bad = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t g = 1 + t % 3;
    const SpMat a = random_symplectic(g, 1 + rng.below(8), rng);
    const SpMat b = random_symplectic(g, 1 + rng.below(8), rng);
    const SpMat c = random_symplectic(g, 1 + rng.below(8), rng);
    if (!check_cocycle_identity(kernel, a, b, c)) ++kernel_bad;
    if (!check_cocycle_identity(lines, a, b, c)) ++lines_bad;
  }
  std::ostringstream os;
  os << trials << " seeded triples with g in {1, 2, 3}: kernel route "
     << "violations " << kernel_bad << ", lagrangian route violations "
     << lines_bad;
  return {kernel_bad == 0 && lines_bad == 0, os.str()};
}

// 3. Signature divisibility on seeded relator-trivial monodromies:
// zero for g <= 2, divisible by 4 for g = 3, divisible by 8 for the
// level-4 batch. The value histogram is reported for inspection.
Outcome criterion_divisibility(Rng& rng, bool quick, SharedState& shared) {
  const std::size_t per_genus = quick ? 20 : 200;
  std::size_t not_closed = 0;
  std::size_t bad = 0;
  std::ostringstream hist_text;
  std::map<long, std::size_t> handle_hist;
  for (std::size_t g = 1; g <= 3; ++g) {
    std::map<long, std::size_t> hist;
    for (std::size_t t = 0; t < per_genus; ++t) {
      const Monodromy m =
          random_closed_monodromy(g, rng, static_cast<unsigned>(t % 5));
      if (!is_closed(m)) {
        ++not_closed;
        continue;
      }
      const long s = bundle_signature(m);
      ++hist[s];
      if (g <= 2 && s != 0) ++bad;
      if (g == 3 && s % 4 != 0) ++bad;
      if (g == 3) {
        const auto& [a, b] = m.pairs.front();
        const SpMat conj =
            b * symplectic_inverse(a) * symplectic_inverse(b);
        ++handle_hist[meyer_cocycle(a, conj)];
      }
      shared.monodromies.emplace_back(m, s);
    }
    hist_text << " g" << g << " " << fmt_hist(hist);
  }
  std::map<long, std::size_t> hist4;
  for (std::size_t t = 0; t < per_genus; ++t) {
    const Monodromy m =
        random_closed_monodromy(3, rng, static_cast<unsigned>(t % 5), true);
    if (!is_closed(m)) {
      ++not_closed;
      continue;
    }
    const long s = bundle_signature(m);
    ++hist4[s];
    if (s % 8 != 0) ++bad;
    shared.level4_monodromies.emplace_back(m, s);
  }
  hist_text << " level4-g3 " << fmt_hist(hist4);
  hist_text << "; nonzero cocycle terms cancel exactly: first-handle term "
               "histogram g3 "
            << fmt_hist(handle_hist);

  std::ostringstream os;
  os << "sigma histogram" << hist_text.str();
  if (not_closed > 0) os << "; " << not_closed << " families not closed";
  if (bad > 0) os << "; " << bad << " divisibility violations";
  if (not_closed == 0 && bad == 0)
    os << "; zero for g <= 2, 4 | sigma at g = 3, 8 | sigma at level 4";
  return {not_closed == 0 && bad == 0, os.str()};
}

// 4. Route agreement on the stored monodromies: the twisted-product route
// reproduces the handle sum, and pairing either cocycle against the base
// class gives the same answer (minus the signature for the kernel route).
Outcome criterion_dual_routes(Rng&, bool, SharedState& shared) {
  if (shared.monodromies.empty())
    return {false, "no stored monodromies (the divisibility run is empty)"};
  const Cocycle kernel = kernel_route();
  const Cocycle lines = lagrangian_route();
  const CoeffGroup zz = coeff_integers();
  std::size_t lift_bad = 0;
  std::size_t pair_bad = 0;
  std::size_t route_bad = 0;
  std::size_t total = 0;
  for (const auto* batch : {&shared.monodromies, &shared.level4_monodromies}) {
    for (const auto& [m, sigma] : *batch) {
      ++total;
      if (bundle_signature_lifts(m) != sigma) ++lift_bad;
      const long via_kernel = evaluate_class(kernel, m, zz);
      if (via_kernel != -sigma) ++pair_bad;
      const long via_lines = evaluate_class(lines, m, zz);
      if (via_lines != via_kernel) ++route_bad;
    }
  }
  std::ostringstream os;
  os << total << " monodromies: lift-route mismatches " << lift_bad
     << ", class-pairing mismatches " << pair_bad
     << ", kernel-vs-lagrangian mismatches " << route_bad;
  return {lift_bad == 0 && pair_bad == 0 && route_bad == 0, os.str()};
}

// 5. Group orders by enumeration against the closed-form formulas.
Outcome criterion_group_orders(Rng&, bool quick, SharedState& shared) {
  std::vector<std::string> notes;
  bool ok = true;
  auto check = [&](const char* label, const Int& got, const Int& want) {
    if (got != want) {
      std::ostringstream os;
      os << label << " " << got.get_str() << " != " << want.get_str();
      notes.push_back(os.str());
      ok = false;
    }
  };

  auto enumerate = [](std::size_t g, unsigned n) {
    return closure_bfs(g, n, sp_generators_mod(g, n));
  };
  const GroupTable t12 = enumerate(1, 2);
  const GroupTable t22 = enumerate(2, 2);
  shared.sp14 = enumerate(1, 4);
  check("|Sp(2, Z/2)|", Int(static_cast<unsigned long>(t12.size())),
        group_order_formula(1, GroupKind::sp_mod2));
  check("|Sp(4, Z/2)|", Int(static_cast<unsigned long>(t22.size())),
        group_order_formula(2, GroupKind::sp_mod2));
  check("|Sp(2, Z/4)|", Int(static_cast<unsigned long>(shared.sp14.size())),
        group_order_formula(1, GroupKind::sp_mod4));

  const auto y1 = subgroup_filter(shared.sp14, in_Y);
  check("|Y|, g = 1", Int(static_cast<unsigned long>(y1.size())),
        group_order_formula(1, GroupKind::Y));
  check("quotient order, g = 1",
        Int(static_cast<unsigned long>(shared.sp14.size() / y1.size())),
        group_order_formula(1, GroupKind::H));
  const auto k1 = subgroup_filter(shared.sp14, is_mod2_identity);
  check("mod-2 kernel, g = 1", Int(static_cast<unsigned long>(k1.size())),
        group_order_formula(1, GroupKind::lie_sp_mod2));

  std::ostringstream os;
  if (!quick) {
    shared.sp24 = enumerate(2, 4);
    shared.have_sp24 = true;
    check("|Sp(4, Z/4)|", Int(static_cast<unsigned long>(shared.sp24.size())),
          group_order_formula(2, GroupKind::sp_mod4));
    const auto y2 = subgroup_filter(shared.sp24, in_Y);
    check("|Y|, g = 2", Int(static_cast<unsigned long>(y2.size())),
          group_order_formula(2, GroupKind::Y));
    check("quotient order, g = 2",
          Int(static_cast<unsigned long>(shared.sp24.size() / y2.size())),
          group_order_formula(2, GroupKind::H));
    const auto k2 = subgroup_filter(shared.sp24, is_mod2_identity);
    check("mod-2 kernel, g = 2", Int(static_cast<unsigned long>(k2.size())),
          group_order_formula(2, GroupKind::lie_sp_mod2));
    if (ok)
      os << "closures 6, 48, 720, 737280; |Y| 1, 32; quotients 48, 23040; "
            "mod-2 kernels 8, 1024: all match the formulas";
  } else if (ok) {
    os << "closures 6, 48, 720; |Y| 1; quotient 48; mod-2 kernel 8: all "
          "match the formulas (largest enumeration skipped)";
  }
  if (!ok) {
    bool first = true;
    for (const auto& n : notes) {
      if (!first) os << "; ";
      first = false;
      os << n;
    }
  }
  return {ok, os.str()};
}

// 6. Subgroup structure inside Sp mod 4: the parity subgroup is normal,
// sits inside the mod-2 kernel, and the kernel modulo it is elementary
// abelian of order 2^(2g+1).
Outcome criterion_subgroups(Rng&, bool, SharedState& shared) {
  if (shared.sp14.g == 0)
    return {false, "group tables unavailable (the order run is empty)"};
  bool ok = true;
  std::ostringstream os;
  bool first = true;
  std::vector<const GroupTable*> tables = {&shared.sp14};
  if (shared.have_sp24) tables.push_back(&shared.sp24);
  for (const GroupTable* tbl : tables) {
    const auto y = subgroup_filter(*tbl, in_Y);
    const auto kernel = subgroup_filter(*tbl, is_mod2_identity);
    const bool contained = std::includes(kernel.begin(), kernel.end(),
                                         y.begin(), y.end());
    const bool y_normal = is_normal(*tbl, y);
    const bool kernel_normal = is_normal(*tbl, kernel);
    const std::size_t expected_index = 1ULL << (2 * tbl->g + 1);
    const bool index_right =
        !y.empty() && kernel.size() == y.size() * expected_index;
    const bool quotient_ea =
        is_elementary_abelian_quotient(kernel, y, *tbl);
    ok = ok && contained && y_normal && kernel_normal && index_right &&
         quotient_ea;
    if (!first) os << "; ";
    first = false;
    os << "g = " << tbl->g << ": Y " << (y_normal ? "normal" : "NOT normal")
       << ", kernel " << (kernel_normal ? "normal" : "NOT normal")
       << ", Y inside kernel " << (contained ? "yes" : "NO")
       << ", kernel/Y order " << (y.empty() ? 0 : kernel.size() / y.size())
       << " (expected " << expected_index << ")"
       << ", elementary abelian " << (quotient_ea ? "yes" : "NO");
  }
  return {ok, os.str()};
}

NiceCochain random_cochain(Rng& rng) {
  std::vector<Rat> breaks = {Rat(0)};
  const std::size_t extra = rng.below(6);
  for (std::size_t k = 0; k < extra; ++k) {
    const long den = 2 + static_cast<long>(rng.below(14));
    const long num = 1 + static_cast<long>(rng.below(den - 1));
    breaks.push_back(make_rat(num, den));
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  std::vector<long> values;
  values.reserve(breaks.size());
  for (std::size_t k = 0; k < breaks.size(); ++k)
    values.push_back(static_cast<long>(rng.below(11)) - 5);
  return make_nice_cochain(std::move(breaks), std::move(values));
}

// 7. Covering numbers: 1 for the standard cocycle, the multiplier for
// random multiples plus coboundaries, 4 for both genus-1 pictures, and
// pointwise agreement of the pictures with the closed forms off the
// arrangement lines.
Outcome criterion_covering(Rng& rng, bool quick, SharedState&) {
  if (covering_number(standard_cocycle()) != 1)
    return {false, "standard cocycle does not have covering number 1"};

  const std::size_t cases = quick ? 10 : 100;
  std::size_t wrong = 0;
  for (std::size_t t = 0; t < cases; ++t) {
    const long m =
        (t % 5 == 0) ? 0 : static_cast<long>(rng.below(13)) - 6;
    const NiceCochain f = random_cochain(rng);
    if (covering_number(from_standard_plus_coboundary(m, f)) != m) ++wrong;
  }

  const PiecewiseCocycle pic1 =
      from_standard_plus_coboundary(4, constant_cochain(-2));
  const PiecewiseCocycle pic1p =
      from_standard_plus_coboundary(4, step_cochain(-1, -3));
  const bool pic_ok =
      covering_number(pic1) == 4 && covering_number(pic1p) == 4;

  auto safe_sample = [&rng](const PiecewiseCocycle& t) {
    while (true) {
      const long q1 = 3 + static_cast<long>(rng.below(60));
      const Rat a = make_rat(1 + static_cast<long>(rng.below(q1 - 1)), q1);
      const long q2 = 3 + static_cast<long>(rng.below(60));
      const Rat b = make_rat(1 + static_cast<long>(rng.below(q2 - 1)), q2);
      if (std::binary_search(t.a_breaks.begin(), t.a_breaks.end(), a))
        continue;
      if (std::binary_search(t.b_breaks.begin(), t.b_breaks.end(), b))
        continue;
      const Rat s = a + b;
      if (std::binary_search(t.diag_consts.begin(), t.diag_consts.end(), s))
        continue;
      return std::make_pair(a, b);
    }
  };
  const std::size_t points = quick ? 10 : 50;
  std::size_t pointwise_bad = 0;
  for (std::size_t t = 0; t < points; ++t) {
    const auto [a, b] = safe_sample(pic1);
    if (cocycle_eval(pic1, a, b) != tau1_closed(a, b)) ++pointwise_bad;
    const auto [c, d] = safe_sample(pic1p);
    if (cocycle_eval(pic1p, c, d) != tau1prime_closed(c, d)) ++pointwise_bad;
  }

  std::ostringstream os;
  os << "standard 1; " << cases << " random multiples plus coboundaries, "
     << wrong << " wrong; both genus-1 pictures cover 4"
     << (pic_ok ? "" : " FAILED") << "; pointwise picture-vs-closed-form "
     << "mismatches off the lines " << pointwise_bad;
  return {wrong == 0 && pic_ok && pointwise_bad == 0, os.str()};
}

// 8. Invariance and symmetry suites for the triple index, stabilization
// for all three core maps, and the sawtooth identities.
Outcome criterion_invariance(Rng& rng, bool quick, SharedState&) {
  const std::size_t n = quick ? 20 : 200;
  std::size_t invariance_bad = 0;
  std::size_t four_term_bad = 0;
  std::size_t dihedral_bad = 0;
  std::size_t stabilize_bad = 0;
  std::size_t sawtooth_bad = 0;

  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t g = 1 + t % 3;
    const Lagrangian l1 = random_lagrangian(g, rng);
    const Lagrangian l2 = random_lagrangian(g, rng);
    const Lagrangian l3 = random_lagrangian(g, rng);
    const SpMat a = random_symplectic(g, 1 + rng.below(6), rng);
    if (wall_maslov(apply(a, l1), apply(a, l2), apply(a, l3)) !=
        wall_maslov(l1, l2, l3))
      ++invariance_bad;
  }

  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t g = 1 + t % 3;
    const Lagrangian l1 = random_lagrangian(g, rng);
    const Lagrangian l2 = random_lagrangian(g, rng);
    const Lagrangian l3 = random_lagrangian(g, rng);
    const Lagrangian l4 = random_lagrangian(g, rng);
    const int total = wall_maslov(l1, l2, l3) - wall_maslov(l1, l2, l4) +
                      wall_maslov(l1, l3, l4) - wall_maslov(l2, l3, l4);
    if (total != 0) ++four_term_bad;
  }

  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t g = 1 + t % 3;
    const Lagrangian l1 = random_lagrangian(g, rng);
    const Lagrangian l2 = random_lagrangian(g, rng);
    const Lagrangian l3 = random_lagrangian(g, rng);
    const int base = wall_maslov(l1, l2, l3);
    if (wall_maslov(l2, l3, l1) != base) ++dihedral_bad;
    if (wall_maslov(l2, l1, l3) != -base) ++dihedral_bad;
  }

  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t g = 1 + t % 3;
    const Lagrangian l1 = random_lagrangian(g, rng);
    const Lagrangian l2 = random_lagrangian(g, rng);
    const Lagrangian l3 = random_lagrangian(g, rng);
    if (wall_maslov(stabilize_lagrangian(l1, g + 1),
                    stabilize_lagrangian(l2, g + 1),
                    stabilize_lagrangian(l3, g + 1)) !=
        wall_maslov(l1, l2, l3))
      ++stabilize_bad;
    const SpMat a = random_symplectic(g, 1 + rng.below(6), rng);
    const SpMat b = random_symplectic(g, 1 + rng.below(6), rng);
    const SpMat ae = embed_stabilize(a, g + 1);
    const SpMat be = embed_stabilize(b, g + 1);
    if (meyer_cocycle(ae, be) != meyer_cocycle(a, b)) ++stabilize_bad;
    if (maslov_cocycle(ae, be) != maslov_cocycle(a, b)) ++stabilize_bad;
  }

  const std::size_t saw_n = quick ? 100 : 1000;
  const Rat half = make_rat(1, 2);
  const Rat third = make_rat(1, 3);
  for (std::size_t t = 0; t < saw_n; ++t) {
    const Rat x = random_rational(rng);
    const Rat y = random_rational(rng);
    if (dedekind(Rat(-x)) != Rat(-dedekind(x))) ++sawtooth_bad;
    if (dedekind(Rat(x + 1)) != dedekind(x)) ++sawtooth_bad;
    if (Rat(dedekind(x) + dedekind(Rat(x + half))) != dedekind(Rat(2 * x)))
      ++sawtooth_bad;
    if (Rat(dedekind(x) + dedekind(Rat(x + third)) +
            dedekind(Rat(x + 2 * third))) != dedekind(Rat(3 * x)))
      ++sawtooth_bad;
    const int product =
        sign_sin_pi(x) * sign_sin_pi(y) * sign_sin_pi(Rat(x + y));
    const Rat lhs =
        Rat(2) * Rat(dedekind(x) + dedekind(y) - dedekind(Rat(x + y)));
    if (lhs != Rat(-product)) ++sawtooth_bad;
    if (tau1_closed(x, y) != -2 * product) ++sawtooth_bad;
  }

  std::ostringstream os;
  os << n << " cases per suite: invariance " << invariance_bad
     << ", four-term " << four_term_bad << ", dihedral " << dihedral_bad
     << ", stabilization " << stabilize_bad << " violations; sawtooth "
     << "identities at " << saw_n << " points, " << sawtooth_bad
     << " violations";
  const bool ok = invariance_bad == 0 && four_term_bad == 0 &&
                  dihedral_bad == 0 && stabilize_bad == 0 &&
                  sawtooth_bad == 0;
  return {ok, os.str()};
}

}  // namespace

bool AcceptanceReport::all_pass() const {
  for (const auto& c : criteria)
    if (!c.pass) return false;
  return !criteria.empty();
}

AcceptanceReport run_acceptance(std::uint64_t seed, bool quick,
                                std::ostream* progress) {
  struct Entry {
    int id;
    const char* name;
    double budget;
    Outcome (*body)(Rng&, bool, SharedState&);
  };
  const std::vector<Entry> entries = {
      {1, "calibration-table", 1.0, criterion_calibration},
      {2, "cocycle-identity", 60.0, criterion_cocycle_identity},
      {3, "signature-divisibility", 120.0, criterion_divisibility},
      {4, "dual-route-agreement", 0.0, criterion_dual_routes},
      {5, "group-orders", 90.0, criterion_group_orders},
      {6, "subgroup-structure", 0.0, criterion_subgroups},
      {7, "covering-numbers", 10.0, criterion_covering},
      {8, "invariance-suite", 0.0, criterion_invariance},
  };

  AcceptanceReport report;
  report.seed = seed;
  report.quick = quick;
  SharedState shared;
  for (const auto& entry : entries) {
    CriterionResult r;
    r.id = entry.id;
    r.name = entry.name;
    r.budget_seconds = entry.budget;
    Rng rng(seed * 1000003ULL + static_cast<std::uint64_t>(entry.id));
    const auto start = Clock::now();
    try {
      auto [pass, detail] = entry.body(rng, quick, shared);
      r.pass = pass;
      r.detail = std::move(detail);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("unexpected exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (r.budget_seconds > 0 && r.seconds > r.budget_seconds) {
      r.pass = false;
      r.detail = "time budget exceeded";
    }
    if (progress) {
      std::ostringstream line;
      line.setf(std::ios::fixed);
      line.precision(2);
      line << "criterion " << r.id << " " << r.name << ": "
           << (r.pass ? "pass" : "FAIL") << " [" << r.seconds << "s";
      if (r.budget_seconds > 0) line << ", budget " << r.budget_seconds << "s";
      line << "] " << r.detail;
      *progress << line.str() << "\n";
      progress->flush();
    }
    report.criteria.push_back(std::move(r));
  }
  return report;
}

}  // namespace sympsig
