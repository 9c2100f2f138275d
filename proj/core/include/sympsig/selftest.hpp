#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace sympsig {

/// One acceptance criterion outcome. detail is deterministic for a fixed
/// (seed, quick) pair; seconds is wall time and excluded from canonical
/// output for that reason.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;  // 0 means no budget
};

struct AcceptanceReport {
  std::uint64_t seed = 0;
  bool quick = false;
  std::vector<CriterionResult> criteria;

  bool all_pass() const;
};

/// Runs the eight acceptance criteria in order. Each criterion draws from
/// its own generator seeded as seed * 1000003 + id, so results are
/// reproducible per criterion. quick scales sampled counts down tenfold
/// and skips the largest group enumeration. Criteria with a positive
/// budget fail when they overrun it. progress, when non-null, receives
/// one line per criterion as it finishes (including timings).
AcceptanceReport run_acceptance(std::uint64_t seed, bool quick,
                                std::ostream* progress = nullptr);

}  // namespace sympsig
