// Benchmarks for the hot paths: the two cocycle routes, exact signature
// computation, finite-group closures, covering numbers, and total-space
// signatures.  All inputs are seeded, so timings are comparable run to run.

#include <cstddef>
#include <utility>
#include <vector>

#include <benchmark/benchmark.h>

#include "sympsig/bundle.hpp"
#include "sympsig/circle.hpp"
#include "sympsig/congruence.hpp"
#include "sympsig/lagrangian.hpp"
#include "sympsig/linalg.hpp"
#include "sympsig/maslov.hpp"
#include "sympsig/meyer.hpp"
#include "sympsig/rational.hpp"
#include "sympsig/symplectic.hpp"

namespace {

using namespace sympsig;

void BM_meyer(benchmark::State& state) {
  const auto g = static_cast<std::size_t>(state.range(0));
  Rng rng(11);
  const SpMat a = random_symplectic(g, 12, rng);
  const SpMat b = random_symplectic(g, 12, rng);
  for (auto _ : state) benchmark::DoNotOptimize(meyer_cocycle(a, b));
}
BENCHMARK(BM_meyer)->Arg(1)->Arg(2)->Arg(3);

void BM_meyer_via_graphs(benchmark::State& state) {
  const auto g = static_cast<std::size_t>(state.range(0));
  Rng rng(11);
  const SpMat a = random_symplectic(g, 12, rng);
  const SpMat b = random_symplectic(g, 12, rng);
  for (auto _ : state) benchmark::DoNotOptimize(meyer_via_graphs(a, b));
}
BENCHMARK(BM_meyer_via_graphs)->Arg(1)->Arg(2)->Arg(3);

void BM_wall_maslov(benchmark::State& state) {
  const std::size_t g = 2;
  Rng rng(5);
  const Lagrangian l1 = apply(random_symplectic(g, 10, rng),
                              default_lagrangian(g));
  const Lagrangian l2 = apply(random_symplectic(g, 10, rng),
                              default_lagrangian(g));
  const Lagrangian l3 = apply(random_symplectic(g, 10, rng),
                              default_lagrangian(g));
  for (auto _ : state) benchmark::DoNotOptimize(wall_maslov(l1, l2, l3));
}
BENCHMARK(BM_wall_maslov);

void BM_signature_of_symmetric(benchmark::State& state) {
  const std::size_t n = 6;
  Rng rng(7);
  Mat b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      b(i, j) = make_rat(static_cast<long>(rng.below(19)) - 9,
                         1 + static_cast<long>(rng.below(3)));
  const Mat s = b + b.transpose();
  for (auto _ : state) benchmark::DoNotOptimize(signature_of_symmetric(s));
}
BENCHMARK(BM_signature_of_symmetric);

void BM_closure(benchmark::State& state) {
  const auto g = static_cast<std::size_t>(state.range(0));
  const auto modulus = static_cast<unsigned>(state.range(1));
  const auto gens = sp_generators_mod(g, modulus);
  for (auto _ : state)
    benchmark::DoNotOptimize(closure_bfs(g, modulus, gens));
}
BENCHMARK(BM_closure)->Args({1, 4})->Args({2, 2});

void BM_covering_number(benchmark::State& state) {
  const PiecewiseCocycle pic = from_standard_plus_coboundary(
      4, make_nice_cochain({make_rat(0, 1), make_rat(1, 2)}, {-1, -3}));
  for (auto _ : state) benchmark::DoNotOptimize(covering_number(pic));
}
BENCHMARK(BM_covering_number);

void BM_bundle_signature(benchmark::State& state) {
  Rng rng(3);
  const Monodromy m = random_closed_monodromy(3, rng, 2);
  for (auto _ : state) benchmark::DoNotOptimize(bundle_signature(m));
}
BENCHMARK(BM_bundle_signature);

}  // namespace

BENCHMARK_MAIN();
