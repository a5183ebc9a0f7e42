#include "sposet/construct.hpp"
#include "sposet/facering.hpp"
#include "sposet/hvec.hpp"
#include "sposet/shelling.hpp"

#include <benchmark/benchmark.h>

namespace {

using sposet::HVector;
using sposet::Integer;

HVector flat_h(int d) {
  std::vector<Integer> e(static_cast<std::size_t>(d) + 1, 1);
  e.back() = 0;
  return HVector(e);
}

void BM_FToH(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const sposet::FVector f = sposet::h_to_f(flat_h(d));
  for (auto _ : state) benchmark::DoNotOptimize(sposet::f_to_h(f));
}
BENCHMARK(BM_FToH)->Arg(4)->Arg(16)->Arg(64);

void BM_ConstructAuto(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const HVector h = flat_h(d);
  for (auto _ : state) benchmark::DoNotOptimize(sposet::construct_auto(h));
}
BENCHMARK(BM_ConstructAuto)->Arg(3)->Arg(4)->Arg(6);

void BM_RandomBall(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(sposet::random_shellable_ball(4, n, seed++));
}
BENCHMARK(BM_RandomBall)->Arg(10)->Arg(40);

void BM_VerifyShelling(benchmark::State& state) {
  const sposet::RandomBall b = sposet::random_shellable_ball(4, static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(sposet::verify_shelling(b.complex, b.order));
}
BENCHMARK(BM_VerifyShelling)->Arg(10)->Arg(40);

void BM_QuotientHilbert(benchmark::State& state) {
  const sposet::RandomBall b = sposet::random_shellable_ball(static_cast<int>(state.range(0)), 6, 3);
  const sposet::Lsop l = sposet::random_lsop(b.complex, 1);
  for (auto _ : state) benchmark::DoNotOptimize(sposet::quotient_hilbert(b.complex, l));
}
BENCHMARK(BM_QuotientHilbert)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
