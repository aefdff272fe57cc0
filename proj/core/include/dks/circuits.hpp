#pragma once

#include <cstdint>

#include "dks/graph.hpp"
#include "dks/sim.hpp"

namespace dks {

/// Geometry of the edge counter and its threshold comparator.
///
/// The counter must hold any induced edge count of a k-subset, i.e. values
/// up to max_edges = k(k-1)/2, in count_bits = ceil(log2(max_edges + 1))
/// bits. One extra qubit (q_res) on top serves as the comparison bit, so
/// adding comparator_constant = 2^width - m leaves q_res = 1 exactly when
/// the count is below the threshold m. Thresholds up to max_edges + 1 are
/// accepted; at max_edges + 1 no count passes, so nothing gets marked.
struct CounterSpec {
  int max_edges = 0;
  int count_bits = 0;                   // L
  int width = 0;                        // L + 1, q_edge plus q_res
  int threshold = 0;                    // m
  std::uint64_t comparator_constant = 0;  // C, 0 when m == 0

  static CounterSpec for_threshold(int k, int m);
};

/// Prepares the equal-amplitude superposition of all weight-k basis states
/// of n qubits from |0...0>: X gates establish Hamming weight k, then a
/// network of split-and-cyclic-shift blocks (controlled-Ry cascades)
/// distributes the amplitude over every weight-k string.
QuantumCircuit dicke_preparation(int n, int k);

/// Fourier-basis edge counter over the algorithm layout. Starting from a
/// counter in |0...0>: Hadamards put the counter in the Fourier basis, each
/// graph edge contributes doubly-controlled phase rotations implementing a
/// +1, the comparator constant is folded into the same pass as uncontrolled
/// rotations, and an inverse QFT decodes. Net effect on |x>|0>:
/// |x>|(edges(x) + C) mod 2^width>.
QuantumCircuit edge_counter_circuit(const Graph& g, const CounterSpec& spec);

/// Phase oracle: edge counter, phase flip on the q_res = 0 branch (count at
/// least m), exact uncompute. On |x>|0> with edges(x) <= max_edges this is
/// (-1)^[edges(x) >= m] |x>|0>.
QuantumCircuit oracle_circuit(const Graph& g, int k, int m);

/// Reflection about the weight-k superposition (up to global phase),
/// built by conjugating the zero-state reflection with the preparation
/// circuit.
QuantumCircuit diffusion_circuit(int n, int k);

/// Full search circuit: state preparation followed by t rounds of
/// oracle + diffusion. The caller measures q_node.
QuantumCircuit grover_circuit(const Graph& g, int k, int m, int t);

/// Gate accounting. two_qubit_gates converts each gate to an equivalent
/// two-qubit count under a fixed decomposition model:
///   0 controls -> 0, 1 control -> 1, 2 controls -> 5 (standard
///   doubly-controlled decomposition), c >= 3 controls -> 12c - 11
///   (2(c-1) Toffolis at 6 each plus one two-qubit gate, using c-1
///   ancillas). Depth is greedy ASAP layering assuming all-to-all
///   connectivity.
struct ResourceReport {
  std::int64_t total_gates = 0;
  std::int64_t two_qubit_gates = 0;
  std::int64_t depth = 0;
  int qubits = 0;
};

ResourceReport resource_report(const QuantumCircuit& c);

void write_resource_report(std::ostream& out, const ResourceReport& r);

}  // namespace dks
