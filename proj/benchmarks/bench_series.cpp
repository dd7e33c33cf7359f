#include <benchmark/benchmark.h>

#include "tiltcara/caratheodory.hpp"
#include "tiltcara/extremal.hpp"
#include "tiltcara/series.hpp"

using namespace tiltcara;

namespace {

Series kernel(std::size_t order) { return kernel_series(TiltAngle(0.6), std::polar(1.0, 0.4), order); }

void BM_Mul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Series a = kernel(n), b = kernel_series(TiltAngle(-0.3), 1.0, n);
  for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Mul)->RangeMultiplier(2)->Range(16, 256)->Complexity(benchmark::oNSquared);

void BM_Div(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Series a = kernel(n), b = kernel_series(TiltAngle(-0.3), 1.0, n);
  for (auto _ : state) benchmark::DoNotOptimize(div(a, b));
}
BENCHMARK(BM_Div)->RangeMultiplier(2)->Range(16, 256);

void BM_Cpow(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Series base = Series::linear(1.0, -1.0, n);
  for (auto _ : state) benchmark::DoNotOptimize(cpow(base, Complex(0.4, -1.1)));
}
BENCHMARK(BM_Cpow)->RangeMultiplier(2)->Range(16, 256);

void BM_Compose(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto p = random_member(TiltAngle(0.6), 4, 1, n);
  const Series outer = kernel_series(TiltAngle(0.6), 1.0, n);
  const Series omega = subordination_omega(p);
  for (auto _ : state) benchmark::DoNotOptimize(compose(outer, omega));
}
BENCHMARK(BM_Compose)->RangeMultiplier(2)->Range(16, 64);

void BM_Evaluate(benchmark::State& state) {
  const Series a = kernel(64);
  const Complex z(0.3, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(a, z));
}
BENCHMARK(BM_Evaluate);

}  // namespace
