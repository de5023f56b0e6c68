#include <benchmark/benchmark.h>

#include "qpe/bounds.hpp"
#include "qpe/planner.hpp"
#include "qpe/search.hpp"
#include "qpe/simulation.hpp"
#include "qpe/trigamma.hpp"

namespace {

void BM_TrigammaHalfInteger(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qpe::trigamma_half_integer(n));
  }
}
BENCHMARK(BM_TrigammaHalfInteger)->RangeMultiplier(10)->Range(1, 10000);

void BM_WorstCaseFailure(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qpe::worst_case_failure({8, p}).epsilon);
  }
  state.SetComplexityN(std::int64_t{1} << (p - 1));
}
BENCHMARK(BM_WorstCaseFailure)->DenseRange(4, 22, 6)->Complexity();

void BM_FailureProbability(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        qpe::failure_probability({8, p}, 0.375, qpe::WindowConvention::Symmetric).epsilon);
  }
}
BENCHMARK(BM_FailureProbability)->DenseRange(4, 22, 6);

void BM_Distribution(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qpe::distribution(t, 0.3).probs.back());
  }
  state.SetComplexityN(std::int64_t{1} << t);
}
BENCHMARK(BM_Distribution)->DenseRange(8, 20, 4)->Complexity();

void BM_InverseQft(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  const auto input = qpe::stage1_state(t, 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qpe::inverse_qft(input).amplitudes.back());
  }
  state.SetComplexityN(std::int64_t{1} << t);
}
BENCHMARK(BM_InverseQft)->DenseRange(8, 18, 2)->Complexity();

void BM_RotationDemo(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qpe::rotation_demo({t - 1, 1}, 0.3).probs.back());
  }
}
BENCHMARK(BM_RotationDemo)->DenseRange(8, 16, 4);

void BM_MaximizeFailure(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qpe::maximize_failure({4, p}).epsilon_star);
  }
}
BENCHMARK(BM_MaximizeFailure)->DenseRange(1, 9, 4);

void BM_CompareBounds(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(qpe::compare_bounds(10, 1e-4).p_exact);
  }
}
BENCHMARK(BM_CompareBounds);

}  // namespace

BENCHMARK_MAIN();
