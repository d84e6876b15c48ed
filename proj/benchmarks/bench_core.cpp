#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "fuzzyces/difference.hpp"
#include "fuzzyces/functionals.hpp"
#include "fuzzyces/fuzzy_real.hpp"
#include "fuzzyces/harness.hpp"

using namespace fuzzyces;

namespace {

FuzzyReal staircase(std::mt19937_64& rng, int levels) {
  std::uniform_real_distribution<double> step(0.0, 1.0);
  std::vector<FuzzyReal::Level> v(static_cast<std::size_t>(levels));
  double lo = 0, hi = 0;
  for (int j = levels - 1; j >= 0; --j) {
    v[static_cast<std::size_t>(j)] = {static_cast<double>(j) / (levels - 1), {lo, hi}};
    lo -= step(rng);
    hi += step(rng);
  }
  return FuzzyReal::from_levels(std::move(v));
}

void BM_DBar(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto x = staircase(rng, static_cast<int>(state.range(0)));
  const auto y = staircase(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(d_bar(x, y));
}
BENCHMARK(BM_DBar)->Arg(2)->Arg(16)->Arg(128);

void BM_DeltaBinomial(benchmark::State& state) {
  const auto x = harness::random_triangular_sequence(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto values = x.take(64);
  for (auto _ : state) {
    for (std::size_t k = 1; k <= 32; ++k) benchmark::DoNotOptimize(delta_binomial(values, 3, n, k));
  }
  state.SetItemsProcessed(state.iterations() * 32);
}
BENCHMARK(BM_DeltaBinomial)->DenseRange(1, 4);

void BM_Luxemburg(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  std::vector<double> a(static_cast<std::size_t>(state.range(0)));
  for (auto& v : a) v = u(rng);
  const DistSeq d(a);
  const auto kind = SpaceKind::cp(2);
  const auto m = OrliczSpec::cube();
  for (auto _ : state) benchmark::DoNotOptimize(luxemburg(kind, m, d, 1e-10));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Luxemburg)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_MembershipDiagnostic(benchmark::State& state) {
  const auto pair = harness::shrinking_and_widening_tents();
  const std::vector<std::size_t> schedule{50, 100, 200};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        membership_diagnostic(SpaceKind::cinf(), OrliczSpec::cube(), 3, 1, pair.y, schedule, 1.0));
  }
}
BENCHMARK(BM_MembershipDiagnostic);

}  // namespace

BENCHMARK_MAIN();
