#include <benchmark/benchmark.h>

#include "nakayama/nakayama.hpp"

using namespace nakayama;

namespace {

AdmissibleSequence staircase(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) p[static_cast<std::size_t>(a)] = 2 + (a % 2);
  return validate_sequence(p);
}

void BM_GradedCartanDet(benchmark::State& state) {
  const auto A = staircase(static_cast<int>(state.range(0)));
  const auto G = graded_cartan_matrix(A, Grading::length(A.order()));
  for (auto _ : state) benchmark::DoNotOptimize(det_bareiss(G));
}
BENCHMARK(BM_GradedCartanDet)->DenseRange(4, 16, 4);

void BM_GradedWeighting(benchmark::State& state) {
  const auto A = staircase(static_cast<int>(state.range(0)));
  const auto d = Grading::length(A.order());
  for (auto _ : state) benchmark::DoNotOptimize(graded_weighting(A, d));
}
BENCHMARK(BM_GradedWeighting)->DenseRange(3, 9, 3);

void BM_MagnitudeEnumeration(benchmark::State& state) {
  const int n_max = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Rational total;
    for (int n = 1; n <= n_max; ++n) {
      for_each_sequence(n, 6, [&](const AdmissibleSequence& A) { total += magnitude_nakayama(A); });
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_MagnitudeEnumeration)->DenseRange(3, 5, 1)->Unit(benchmark::kMillisecond);

void BM_DimensionReport(benchmark::State& state) {
  const auto A = staircase(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dimension_report(A));
}
BENCHMARK(BM_DimensionReport)->DenseRange(8, 32, 8);

}  // namespace

BENCHMARK_MAIN();
