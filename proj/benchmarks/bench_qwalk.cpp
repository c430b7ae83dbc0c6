#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include <qwalk/qwalk.hpp>

namespace {

const qwalk::WalkParams kParams(std::numbers::sqrt2 / 2.0, std::numbers::pi / 4);
const qwalk::CoinSpinor kCoin{1.0, 0.0};

void BM_Evolve(benchmark::State& state) {
  const auto t = state.range(0);
  const auto v = state.range(1) == 0 ? qwalk::Variant::full : qwalk::Variant::cmv_only;
  for (auto _ : state) benchmark::DoNotOptimize(qwalk::evolve(kCoin, kParams, t, v));
  state.SetComplexityN(t);
}
BENCHMARK(BM_Evolve)->ArgsProduct({{100, 500, 2000}, {0, 1}})->Complexity();

void BM_EvolveFourier(benchmark::State& state) {
  const auto t = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qwalk::evolve_fourier(kCoin, kParams, t, qwalk::Variant::full));
  }
}
BENCHMARK(BM_EvolveFourier)->Arg(50)->Arg(200);

void BM_Moment(benchmark::State& state) {
  const qwalk::LimitDensity law(qwalk::LawKind::theorem1(), kParams, kCoin);
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qwalk::moment(law, r));
}
BENCHMARK(BM_Moment)->Arg(1)->Arg(3);

void BM_FourierMoment(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qwalk::asymptotic_moment_fourier(2, kParams, kCoin));
}
BENCHMARK(BM_FourierMoment);

void BM_CdfTable(benchmark::State& state) {
  const qwalk::LimitDensity law(qwalk::LawKind::theorem1(), kParams, kCoin);
  for (auto _ : state) benchmark::DoNotOptimize(qwalk::LimitCdfTable(law));
}
BENCHMARK(BM_CdfTable);

void BM_Comparison(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        qwalk::run_comparison(kParams, kCoin, 500, qwalk::Variant::full, qwalk::LawKind::theorem1()));
  }
}
BENCHMARK(BM_Comparison)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
