#include <benchmark/benchmark.h>

#include "dks/sim.hpp"

using namespace dks;

namespace {

void BM_HadamardSweep(benchmark::State& state) {
  const int qubits = static_cast<int>(state.range(0));
  QuantumCircuit qc(RegisterLayout::single("q", qubits));
  for (int q = 0; q < qubits; ++q) qc.h(q);
  StateVector sv = StateVector::zero_state(qubits);
  for (auto _ : state) {
    apply_gates(sv, qc.gates());
    benchmark::DoNotOptimize(sv.amps.data());
  }
  state.SetItemsProcessed(state.iterations() * qubits * (1ll << qubits));
}
BENCHMARK(BM_HadamardSweep)->Arg(12)->Arg(16)->Arg(20);

void BM_DoublyControlledPhase(benchmark::State& state) {
  const int qubits = static_cast<int>(state.range(0));
  QuantumCircuit qc(RegisterLayout::single("q", qubits));
  for (int q = 0; q < qubits; ++q) qc.h(q);
  QuantumCircuit phases(qc.layout());
  for (int q = 2; q < qubits; ++q) phases.phase(0.3, q, {0, 1});
  StateVector sv = run_circuit(qc, StateVector::zero_state(qubits));
  for (auto _ : state) {
    apply_gates(sv, phases.gates());
    benchmark::DoNotOptimize(sv.amps.data());
  }
  state.SetItemsProcessed(state.iterations() * (qubits - 2) * (1ll << qubits));
}
BENCHMARK(BM_DoublyControlledPhase)->Arg(12)->Arg(16)->Arg(20);

void BM_RegisterSample(benchmark::State& state) {
  const int qubits = static_cast<int>(state.range(0));
  QuantumCircuit qc(RegisterLayout::single("q", qubits));
  for (int q = 0; q < qubits; ++q) qc.h(q);
  const StateVector sv = run_circuit(qc, StateVector::zero_state(qubits));
  Rng rng(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_register(sv, qc.layout(), "q", rng));
  }
}
BENCHMARK(BM_RegisterSample)->Arg(12)->Arg(16)->Arg(20);

}  // namespace
