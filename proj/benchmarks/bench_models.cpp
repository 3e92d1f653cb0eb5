#include <benchmark/benchmark.h>

#include "qprop/cognition.hpp"
#include "qprop/propensity.hpp"
#include "qprop/qcore.hpp"

namespace {

using namespace qprop;

void BM_OrderEffectCircuit(benchmark::State& state) {
  const auto order = state.range(0) ? cognition::QuestionOrder::BThenA : cognition::QuestionOrder::AThenB;
  double theta = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cognition::order_effect_circuit({theta, 0.7, order}));
    theta += 1e-3;
  }
}
BENCHMARK(BM_OrderEffectCircuit)->Arg(0)->Arg(1);

void BM_ApplyTwoQubitGate(benchmark::State& state) {
  const Gate g = cnot(1) * tensor(rotation_gate(0.3), rotation_gate(1.1));
  StateVector s = initial_state(2);
  for (auto _ : state) {
    s = apply(g, s);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_ApplyTwoQubitGate);

void BM_EquivalenceCheck(benchmark::State& state) {
  RandomStream rng(1);
  for (auto _ : state) {
    const Gate a = random_unitary_2x2(rng);
    const Gate b = random_unitary_2x2(rng);
    benchmark::DoNotOptimize(cognition::equivalence_check(a, b, 1e-12));
  }
}
BENCHMARK(BM_EquivalenceCheck);

void BM_SampleSequential(benchmark::State& state) {
  RandomStream rng(2);
  const Gate a = rotation_gate(0.6);
  const Gate b = rotation_gate(-0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        cognition::sample_sequential_measurement(a, b, static_cast<std::uint64_t>(state.range(0)), rng));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleSequential)->Arg(1000)->Arg(100000);

void BM_JointPropensity(benchmark::State& state) {
  const auto buyer = propensity::PropensityCurve::gaussian(1.1, 0.1);
  const auto seller = propensity::PropensityCurve::gaussian(0.9, 0.15);
  for (auto _ : state) benchmark::DoNotOptimize(propensity::joint_propensity(buyer, seller));
}
BENCHMARK(BM_JointPropensity);

void BM_SamplePrices(benchmark::State& state) {
  const auto j = propensity::joint_propensity(propensity::PropensityCurve::gaussian(1.1, 0.1),
                                              propensity::PropensityCurve::gaussian(0.9, 0.1));
  RandomStream rng(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(propensity::sample_prices(j, static_cast<std::size_t>(state.range(0)), rng));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SamplePrices)->Arg(1000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
