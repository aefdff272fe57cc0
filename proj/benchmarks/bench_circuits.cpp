#include <benchmark/benchmark.h>

#include "dks/baselines.hpp"
#include "dks/circuits.hpp"
#include "dks/search.hpp"

using namespace dks;

namespace {

Graph bench_graph(int n) { return erdos_renyi(n, 0.5, 1234); }

void BM_OracleBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = bench_graph(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_circuit(g, 4, 2).gates().size());
  }
}
BENCHMARK(BM_OracleBuild)->Arg(10)->Arg(14)->Arg(18);

void BM_GroverRound(benchmark::State& state) {
  // One oracle + diffusion application on a live statevector.
  const int n = static_cast<int>(state.range(0));
  const Graph g = bench_graph(n);
  const int k = 4;
  const QuantumCircuit oracle = oracle_circuit(g, k, 2);
  QuantumCircuit diffusion(oracle.layout());
  diffusion.append(diffusion_circuit(n, k));
  QuantumCircuit prep(oracle.layout());
  prep.append(dicke_preparation(n, k));
  StateVector sv = run_circuit(prep, StateVector::zero_state(prep.num_qubits()));
  for (auto _ : state) {
    apply_gates(sv, oracle.gates());
    apply_gates(sv, diffusion.gates());
    benchmark::DoNotOptimize(sv.amps.data());
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(oracle.gates().size() + diffusion.gates().size()));
}
BENCHMARK(BM_GroverRound)->Arg(8)->Arg(10)->Arg(12);

void BM_AdaptiveSearchSim(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = bench_graph(n);
  const Executor ex = make_quantum_executor();
  std::uint64_t seed = 0;
  for (auto _ : state) {
    SearchConfig cfg;
    cfg.seed = seed++;
    benchmark::DoNotOptimize(adaptive_search(g, 3, cfg, ex).total_calls);
  }
}
BENCHMARK(BM_AdaptiveSearchSim)->Arg(7)->Arg(8)->Arg(9);

void BM_AdaptiveSearchEmulator(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = bench_graph(n);
  const Executor ex = make_black_box_executor();
  std::uint64_t seed = 0;
  for (auto _ : state) {
    SearchConfig cfg;
    cfg.seed = seed++;
    benchmark::DoNotOptimize(adaptive_search(g, 4, cfg, ex).total_calls);
  }
}
BENCHMARK(BM_AdaptiveSearchEmulator)->Arg(16)->Arg(24)->Arg(32);

}  // namespace
