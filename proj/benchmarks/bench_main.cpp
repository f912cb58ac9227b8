#include <benchmark/benchmark.h>

#include <numbers>

#include "bgrover/dictionary.hpp"
#include "bgrover/grover_circuits.hpp"
#include "bgrover/grover_math.hpp"

namespace {

using namespace bgrover;

void BM_GateApplication(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  StateVector s = build_uniform_prep(n).run_from_zero();
  int q = 0;
  for (auto _ : state) {
    s.apply_gate(SingleQubitGate::RY(0.3), q);
    q = (q + 1) % n;
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * (int64_t{1} << n));
}
BENCHMARK(BM_GateApplication)->DenseRange(10, 20, 5);

void BM_GroverIterate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const OracleSpec target = OracleSpec::exact_target(n, BasisPattern::from_integer(3, n));
  const CircuitProgram g = grover_iterate(build_uniform_prep(n), build_oracle(target),
                                          IterateVariant::conjugated(std::numbers::pi / 3));
  StateVector s = build_uniform_prep(n).run_from_zero();
  for (auto _ : state) {
    g.run(s);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
}
BENCHMARK(BM_GroverIterate)->DenseRange(8, 16, 4);

void BM_Plan(benchmark::State& state) {
  int k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(plan(16, k));
    k = (k + 1) % 17;
  }
}
BENCHMARK(BM_Plan);

void BM_DictionaryState(benchmark::State& state) {
  DictionarySpec spec{{3, -1, 4, 1, -5, 9}, 4, {}};
  for (auto _ : state) benchmark::DoNotOptimize(build_dictionary_state(spec));
}
BENCHMARK(BM_DictionaryState);

}  // namespace

BENCHMARK_MAIN();
