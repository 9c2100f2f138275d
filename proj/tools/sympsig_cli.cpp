// Batch command-line interface: every computation the library exposes,
// with JSON input files, JSON (or CSV) on standard output, diagnostics on
// standard error, and deterministic output for identical inputs and seeds.
//
// Exit codes:
//   0  success
//   1  malformed input (unreadable file, bad JSON, bad command line,
//      budget exhaustion, internal failure)
//   2  precondition violation (non-symplectic matrix, non-closed
//      monodromy without --open, residue modulus outside {2, 4, 8})

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sympsig/bundle.hpp"
#include "sympsig/circle.hpp"
#include "sympsig/congruence.hpp"
#include "sympsig/errors.hpp"
#include "sympsig/io.hpp"
#include "sympsig/maslov.hpp"
#include "sympsig/meyer.hpp"
#include "sympsig/selftest.hpp"

namespace {

using nlohmann::ordered_json;
using namespace sympsig;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw invalid_input("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const ordered_json& out) { std::cout << out.dump(2) << "\n"; }

int run_meyer(const std::string& alpha_path, const std::string& beta_path) {
  const SpMat a = parse_spmat_json(read_file(alpha_path));
  const SpMat b = parse_spmat_json(read_file(beta_path));
  ordered_json out;
  out["meyer"] = meyer_cocycle(a, b);
  emit(out);
  return 0;
}

int run_maslov(const std::string& l1_path, const std::string& l2_path,
               const std::string& l3_path) {
  const Lagrangian l1 = parse_lagrangian_json(read_file(l1_path));
  const Lagrangian l2 = parse_lagrangian_json(read_file(l2_path));
  const Lagrangian l3 = parse_lagrangian_json(read_file(l3_path));
  ordered_json out;
  out["tau"] = wall_maslov(l1, l2, l3);
  emit(out);
  return 0;
}

int run_bundle(const std::string& monodromy_path, std::optional<long> mod,
               bool allow_open) {
  if (mod && *mod != 2 && *mod != 4 && *mod != 8)
    throw precondition_error("--mod must be 2, 4, or 8");
  const Monodromy m = parse_monodromy_json(read_file(monodromy_path));
  const long sigma = bundle_signature(m, allow_open);
  const bool closed = is_closed(m);
  ordered_json out;
  out["sigma"] = sigma;
  out["closed"] = closed;
  if (closed) {
    out["sigma_mod4"] = signature_mod(m, 4).residue;
    const ModSignature m8 = signature_mod(m, 8);
    out["sigma_mod8"] = m8.residue;
    if (mod && *mod == 2) out["sigma_mod2"] = signature_mod(m, 2).residue;
    if (mod && *mod == 8 && m8.sigma_div4_mod2)
      out["sigma_div4_mod2"] = *m8.sigma_div4_mod2;
  } else if (mod) {
    signature_mod(m, *mod);  // reports the precondition violation
  }
  emit(out);
  return 0;
}

int run_member(const std::string& which, const std::string& matrix_path,
               std::optional<unsigned> modulus) {
  const SpMat m = parse_spmat_json(read_file(matrix_path));
  bool member = false;
  if (which == "gammaN") {
    if (!modulus)
      throw invalid_input("--which gammaN requires --modulus");
    member = in_principal_congruence(m, *modulus);
  } else {
    if (modulus)
      throw invalid_input("--modulus only applies to --which gammaN");
    if (which == "K") {
      member = in_K(m);
    } else if (which == "Y") {
      member = in_Y(reduce_mod(m, 4));
    } else {
      throw invalid_input("--which must be gammaN, K, or Y");
    }
  }
  ordered_json out;
  out["member"] = member;
  emit(out);
  return 0;
}

bool reduces_to_identity_mod2(const ModMat& m) {
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (m.at(i, j) % 2 != (i == j ? 1u : 0u)) return false;
  return true;
}

GroupKind parse_group_kind(const std::string& which) {
  static const std::map<std::string, GroupKind> kinds = {
      {"sp_mod2", GroupKind::sp_mod2},
      {"sp_mod4", GroupKind::sp_mod4},
      {"H", GroupKind::H},
      {"Y", GroupKind::Y},
      {"lie_sp_mod2", GroupKind::lie_sp_mod2},
  };
  const auto it = kinds.find(which);
  if (it == kinds.end())
    throw invalid_input(
        "--which must be one of sp_mod2, sp_mod4, H, Y, lie_sp_mod2");
  return it->second;
}

unsigned kind_modulus(GroupKind kind) {
  switch (kind) {
    case GroupKind::sp_mod2:
    case GroupKind::lie_sp_mod2:
      return 2;
    case GroupKind::sp_mod4:
    case GroupKind::H:
    case GroupKind::Y:
      return 4;
  }
  throw construction_bug("unhandled group kind");
}

Int enumerate_order(std::size_t g, GroupKind kind) {
  if (kind == GroupKind::sp_mod2) {
    const GroupTable tbl = closure_bfs(g, 2, sp_generators_mod(g, 2));
    return Int(tbl.size());
  }
  const GroupTable tbl = closure_bfs(g, 4, sp_generators_mod(g, 4));
  switch (kind) {
    case GroupKind::sp_mod4:
      return Int(tbl.size());
    case GroupKind::Y:
      return Int(subgroup_filter(tbl, in_Y).size());
    case GroupKind::H: {
      const Int y(subgroup_filter(tbl, in_Y).size());
      return Int(tbl.size()) / y;
    }
    case GroupKind::lie_sp_mod2:
      return Int(subgroup_filter(tbl, reduces_to_identity_mod2).size());
    default:
      throw construction_bug("unhandled group kind");
  }
}

int run_order(std::size_t g, const std::string& which, bool enumerate,
              const std::string& format) {
  if (format != "json" && format != "csv")
    throw invalid_input("--format must be json or csv");
  const GroupKind kind = parse_group_kind(which);
  const Int formula = group_order_formula(g, kind);
  std::optional<Int> enumerated;
  if (enumerate) enumerated = enumerate_order(g, kind);
  if (format == "csv") {
    OrderRow row;
    row.g = g;
    row.modulus = kind_modulus(kind);
    row.formula_order = formula;
    row.enumerated_order = enumerated;
    std::cout << order_table_csv({row});
    return 0;
  }
  ordered_json out;
  out["order"] = formula.get_str();
  if (enumerated) out["enumerated"] = enumerated->get_str();
  emit(out);
  return 0;
}

int run_covering(const std::string& cocycle_path) {
  const PiecewiseCocycle c = parse_cocycle_json(read_file(cocycle_path));
  ordered_json out;
  out["covering_number"] = covering_number(c);
  emit(out);
  return 0;
}

int run_selftest(std::uint64_t seed, bool quick) {
  const AcceptanceReport report = run_acceptance(seed, quick, &std::cerr);
  ordered_json out;
  out["seed"] = report.seed;
  out["quick"] = report.quick;
  out["all_pass"] = report.all_pass();
  out["criteria"] = ordered_json::array();
  for (const CriterionResult& c : report.criteria) {
    ordered_json row;
    row["id"] = c.id;
    row["name"] = c.name;
    row["pass"] = c.pass;
    row["detail"] = c.detail;
    out["criteria"].push_back(row);
  }
  emit(out);
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact signature cocycles on symplectic groups: Meyer and "
      "Wall-Maslov values, surface-bundle signatures, congruence-subgroup "
      "orders and membership, circle-cocycle covering numbers."};
  app.require_subcommand(1);

  auto* meyer = app.add_subcommand(
      "meyer", "Meyer cocycle value of two integer symplectic matrices");
  std::string alpha_path, beta_path;
  meyer->add_option("--alpha", alpha_path, "matrix JSON file")->required();
  meyer->add_option("--beta", beta_path, "matrix JSON file")->required();

  auto* maslov = app.add_subcommand(
      "maslov", "Wall-Maslov index of a triple of lagrangians");
  std::string l1_path, l2_path, l3_path;
  maslov->add_option("--l1", l1_path, "lagrangian JSON file")->required();
  maslov->add_option("--l2", l2_path, "lagrangian JSON file")->required();
  maslov->add_option("--l3", l3_path, "lagrangian JSON file")->required();

  auto* bundle = app.add_subcommand(
      "bundle", "signature of a surface bundle from its monodromy");
  std::string monodromy_path;
  std::optional<long> mod;
  bool allow_open = false;
  bundle->add_option("--monodromy", monodromy_path, "monodromy JSON file")
      ->required();
  bundle->add_option("--mod", mod, "also reduce mod 2, 4, or 8");
  bundle->add_flag("--open", allow_open,
                   "accept a monodromy whose relator is not the identity");

  auto* member = app.add_subcommand(
      "member", "congruence-subgroup membership of a symplectic matrix");
  std::string member_which, matrix_path;
  std::optional<unsigned> modulus;
  member->add_option("--which", member_which, "gammaN, K, or Y")->required();
  member->add_option("--matrix", matrix_path, "matrix JSON file")->required();
  member->add_option("--modulus", modulus,
                     "modulus N for --which gammaN (2..255)");

  auto* order = app.add_subcommand(
      "order", "order of a symplectic group over a small residue ring");
  std::size_t order_g = 1;
  std::string order_which, order_format = "json";
  bool enumerate = false;
  order->add_option("--g", order_g, "genus (half the matrix dimension)")
      ->required()
      ->check(CLI::PositiveNumber);
  order
      ->add_option("--which", order_which,
                   "sp_mod2, sp_mod4, H, Y, or lie_sp_mod2")
      ->required();
  order->add_flag("--enumerate", enumerate,
                  "also enumerate the group by breadth-first closure");
  order->add_option("--format", order_format, "json (default) or csv");

  auto* covering = app.add_subcommand(
      "covering", "covering number of a piecewise-constant circle cocycle");
  std::string cocycle_path;
  covering->add_option("--cocycle", cocycle_path, "cocycle JSON file")
      ->required();

  auto* selftest = app.add_subcommand(
      "selftest", "run the acceptance suite and report every criterion");
  std::uint64_t seed = 0;
  bool quick = false;
  selftest->add_option("--seed", seed, "seed for the randomized checks");
  selftest->add_flag("--quick", quick, "reduced case counts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (meyer->parsed()) return run_meyer(alpha_path, beta_path);
    if (maslov->parsed()) return run_maslov(l1_path, l2_path, l3_path);
    if (bundle->parsed()) return run_bundle(monodromy_path, mod, allow_open);
    if (member->parsed()) return run_member(member_which, matrix_path, modulus);
    if (order->parsed())
      return run_order(order_g, order_which, enumerate, order_format);
    if (covering->parsed()) return run_covering(cocycle_path);
    if (selftest->parsed()) return run_selftest(seed, quick);
    std::cerr << "error: no subcommand\n";
    return 1;
  } catch (const precondition_error& e) {
    std::cerr << "precondition violation: " << e.what() << "\n";
    return 2;
  } catch (const invalid_input& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 1;
  } catch (const resource_error& e) {
    std::cerr << "budget exhausted: " << e.what() << " (reached "
              << e.partial_count << " elements)\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
