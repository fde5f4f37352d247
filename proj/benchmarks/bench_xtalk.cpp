#include "xtalk/analysis.hpp"
#include "xtalk/protocols.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace xtalk;

void BM_total_propagator(benchmark::State& state) {
  AttackConfig cfg;
  cfg.substeps_per_step = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(total_propagator(cfg));
}
BENCHMARK(BM_total_propagator)->Arg(1)->Arg(4)->Arg(16);

void BM_victim_channel(benchmark::State& state) {
  const AttackConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(victim_channel(cfg));
}
BENCHMARK(BM_victim_channel);

void BM_tomography_roundtrip(benchmark::State& state) {
  const AttackConfig cfg;
  const QuantumChannel ch = victim_channel(cfg);
  const ChannelFn apply = [&ch](const CMat& rho) {
    return channel_apply(ch, rho);
  };
  for (auto _ : state)
    benchmark::DoNotOptimize(kraus_from_chi(chi_from_choi(reconstruct_channel(apply))));
}
BENCHMARK(BM_tomography_roundtrip);

void BM_fit_channel(benchmark::State& state) {
  const KrausSet k = theory_kraus(0.3);
  for (auto _ : state) benchmark::DoNotOptimize(fit_channel(k));
}
BENCHMARK(BM_fit_channel);

void BM_fit_attack(benchmark::State& state) {
  const AttackConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(fit_attack(cfg));
}
BENCHMARK(BM_fit_attack);

void BM_coin_curve(benchmark::State& state) {
  const QuantumChannel ch = victim_channel(AttackConfig{});
  for (auto _ : state) {
    double acc = 0.0;
    for (int k = 0; k <= 180; ++k)
      acc += coin_flip_p1(kPi / 2.0 * k / 180.0,
                          ScenarioTiming::AttackerFirst, &ch);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_coin_curve);

}  // namespace

BENCHMARK_MAIN();
