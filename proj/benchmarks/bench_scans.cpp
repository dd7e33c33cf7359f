#include <benchmark/benchmark.h>

#include "tiltcara/applications.hpp"
#include "tiltcara/extremal.hpp"

using namespace tiltcara;

namespace {

void BM_Certificate(benchmark::State& state) {
  CertificateOptions opts;
  opts.lattice_size = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sharpness_certificate("logderiv_M", TiltAngle(0.9), 0.5, opts));
}
BENCHMARK(BM_Certificate)->Arg(64)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_MembershipGrid(benchmark::State& state) {
  const auto p = random_member(TiltAngle(0.4), 6, 3);
  const auto grid = EvaluationGrid::standard();
  const auto f = p.value_function();
  for (auto _ : state) benchmark::DoNotOptimize(membership_test(f, p.tilt(), grid));
}
BENCHMARK(BM_MembershipGrid)->Unit(benchmark::kMillisecond);

void BM_RobertsonPredicate(benchmark::State& state) {
  const TiltAngle tilt(0.8);
  for (auto _ : state) benchmark::DoNotOptimize(robertson_predicate(tilt, 0.9));
}
BENCHMARK(BM_RobertsonPredicate)->Unit(benchmark::kMicrosecond);

void BM_RobertsonRadius(benchmark::State& state) {
  const TiltAngle tilt(0.8);
  for (auto _ : state) benchmark::DoNotOptimize(robertson_radius(tilt, 1e-5));
}
BENCHMARK(BM_RobertsonRadius)->Unit(benchmark::kMillisecond);

void BM_CtcScan(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(ctc_scan(TiltAngle(0.5), 0.6, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_CtcScan)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

}  // namespace
