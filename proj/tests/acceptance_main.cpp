// Acceptance gate runner: executes the eight release criteria and prints one
// pass/fail line per criterion.  Exit status 0 only when every criterion
// passes.
//
// Usage: acceptance [--seed S] [--quick]

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "sympsig/selftest.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 0;
  bool quick = false;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) {
      seed = std::strtoull(argv[++i], nullptr, 10);
    } else if (arg == "--quick") {
      quick = true;
    } else {
      std::cerr << "usage: acceptance [--seed S] [--quick]\n";
      return 1;
    }
  }

  const auto report = sympsig::run_acceptance(seed, quick, &std::cout);
  if (report.all_pass()) {
    std::cout << "ALL PASS\n";
    return 0;
  }
  std::cout << "ACCEPTANCE FAILURES\n";
  return 1;
}
