#include "dks/circuits.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace dks {

namespace {

constexpr double pi = std::numbers::pi;

// Split step at prefix length m for the block handling weight level i:
// on the relevant inputs, |..0..1> stays with amplitude sqrt(i/m) and
// moves to |..1..0> with amplitude sqrt((m-i)/m). The negative Ry angle
// keeps both branches positive.
double split_angle(int i, int m) { return -2.0 * std::acos(std::sqrt(static_cast<double>(i) / m)); }

// Emits the preparation network onto qubits [0, n) of qc.
void emit_dicke(QuantumCircuit& qc, int n, int k) {
  for (int q = n - k; q < n; ++q) qc.x(q);
  for (int m = n; m >= 2; --m) {
    const int lmax = std::min(k, m - 1);
    if (lmax < 1) continue;
    const int last = m - 1;  // highest qubit of the active prefix
    // Two-qubit block: splits the weight-1 level of this prefix.
    qc.x(m - 2, {last});
    qc.ry(split_angle(1, m), last, {m - 2});
    qc.x(m - 2, {last});
    // Three-qubit blocks: split level i, witnessed by the one at m-i.
    for (int i = 2; i <= lmax; ++i) {
      qc.x(m - i - 1, {last});
      qc.ry(split_angle(i, m), last, {m - i - 1, m - i});
      qc.x(m - i - 1, {last});
    }
  }
}

// Fourier-basis decode: inverse of the map |v> -> prod_j (|0> +
// exp(2 pi i v / 2^{j+1}) |1>)/sqrt(2) on counter qubits base..base+w-1.
// The forward map is H on qubit j (descending) followed by conditional
// phases from the lower qubits; we emit it and invert.
QuantumCircuit fourier_encode(const RegisterLayout& layout, int base, int w) {
  QuantumCircuit enc(layout);
  for (int j = w - 1; j >= 0; --j) {
    enc.h(base + j);
    for (int l = 0; l < j; ++l) {
      enc.phase(pi / static_cast<double>(1ull << (j - l)), base + j, {base + l});
    }
  }
  return enc;
}

// Phase angle that adds `a` to counter qubit j while in the Fourier basis.
double add_angle(std::uint64_t a, int j) {
  const double full = std::ldexp(static_cast<double>(a), -j);  // a / 2^j
  return pi * full;
}

}  // namespace

CounterSpec CounterSpec::for_threshold(int k, int m) {
  if (k < 0) throw std::invalid_argument("CounterSpec: k must be non-negative");
  CounterSpec s;
  s.max_edges = k * (k - 1) / 2;
  s.count_bits = std::bit_width(static_cast<unsigned>(s.max_edges));
  s.width = s.count_bits + 1;
  if (m < 0 || m > s.max_edges + 1) {
    throw std::invalid_argument("CounterSpec: threshold out of range");
  }
  s.threshold = m;
  s.comparator_constant = (m == 0) ? 0 : (1ull << s.width) - static_cast<std::uint64_t>(m);
  return s;
}

QuantumCircuit dicke_preparation(int n, int k) {
  if (n < 1) throw std::invalid_argument("dicke_preparation: need n >= 1");
  if (k < 0 || k > n) throw std::invalid_argument("dicke_preparation: need 0 <= k <= n");
  QuantumCircuit qc(RegisterLayout::single("q_node", n));
  emit_dicke(qc, n, k);
  return qc;
}

QuantumCircuit edge_counter_circuit(const Graph& g, const CounterSpec& spec) {
  const int n = g.vertex_count();
  const int base = n;  // counter starts right above the node register
  QuantumCircuit qc(RegisterLayout::algorithm(n, spec.width));
  // Counter starts in |0..0>, so the Fourier encode collapses to Hadamards.
  for (int j = 0; j < spec.width; ++j) qc.h(base + j);
  for (const auto& [u, v] : g.edges()) {
    for (int j = 0; j < spec.width; ++j) {
      qc.phase(add_angle(1, j), base + j, {u, v});
    }
  }
  if (spec.comparator_constant != 0) {
    for (int j = 0; j < spec.width; ++j) {
      // Reduce mod 2^{j+1}: full turns on this qubit act as identity.
      const std::uint64_t effective = spec.comparator_constant & ((2ull << j) - 1);
      if (effective == 0) continue;
      qc.phase(add_angle(effective, j), base + j);
    }
  }
  qc.append_inverse(fourier_encode(qc.layout(), base, spec.width));
  return qc;
}

QuantumCircuit oracle_circuit(const Graph& g, int k, int m) {
  const CounterSpec spec = CounterSpec::for_threshold(k, m);
  const QuantumCircuit counter = edge_counter_circuit(g, spec);
  QuantumCircuit qc(counter.layout());
  const int res = qc.layout().reg("q_res").offset;
  qc.append(counter);
  // q_res = 0 after the comparator means count >= m; flip that branch.
  qc.x(res);
  qc.z(res);
  qc.x(res);
  qc.append_inverse(counter);
  return qc;
}

QuantumCircuit diffusion_circuit(int n, int k) {
  if (n < 1) throw std::invalid_argument("diffusion_circuit: need n >= 1");
  if (k < 0 || k > n) throw std::invalid_argument("diffusion_circuit: need 0 <= k <= n");
  QuantumCircuit prep(RegisterLayout::single("q_node", n));
  emit_dicke(prep, n, k);
  QuantumCircuit qc(prep.layout());
  qc.append_inverse(prep);
  for (int q = 0; q < n; ++q) qc.x(q);
  {
    // Reflection about |0...0> up to global phase: phase-flip |1...1>.
    std::vector<int> controls;
    for (int q = 0; q < n - 1; ++q) controls.push_back(q);
    qc.z(n - 1, std::move(controls));
  }
  for (int q = 0; q < n; ++q) qc.x(q);
  qc.append(prep);
  return qc;
}

QuantumCircuit grover_circuit(const Graph& g, int k, int m, int t) {
  if (t < 0) throw std::invalid_argument("grover_circuit: need t >= 0");
  const int n = g.vertex_count();
  if (k < 0 || k > n) throw std::invalid_argument("grover_circuit: need 0 <= k <= n");
  const CounterSpec spec = CounterSpec::for_threshold(k, m);
  QuantumCircuit qc(RegisterLayout::algorithm(n, spec.width));
  emit_dicke(qc, n, k);
  if (t > 0) {
    const QuantumCircuit oracle = oracle_circuit(g, k, m);
    QuantumCircuit diffusion(qc.layout());
    {
      const QuantumCircuit node_diffusion = diffusion_circuit(n, k);
      diffusion.append(node_diffusion);  // node register occupies the same low qubits
    }
    for (int round = 0; round < t; ++round) {
      qc.append(oracle);
      qc.append(diffusion);
    }
  }
  return qc;
}

ResourceReport resource_report(const QuantumCircuit& c) {
  ResourceReport r;
  r.qubits = c.num_qubits();
  r.total_gates = static_cast<std::int64_t>(c.gates().size());
  std::vector<std::int64_t> busy_until(static_cast<std::size_t>(c.num_qubits()), 0);
  for (const auto& g : c.gates()) {
    const int nc = static_cast<int>(g.controls.size());
    if (nc == 1) {
      r.two_qubit_gates += 1;
    } else if (nc == 2) {
      r.two_qubit_gates += 5;
    } else if (nc >= 3) {
      r.two_qubit_gates += 12ll * nc - 11;
    }
    std::int64_t layer = busy_until[static_cast<std::size_t>(g.target)];
    for (int q : g.controls) layer = std::max(layer, busy_until[static_cast<std::size_t>(q)]);
    ++layer;
    busy_until[static_cast<std::size_t>(g.target)] = layer;
    for (int q : g.controls) busy_until[static_cast<std::size_t>(q)] = layer;
    r.depth = std::max(r.depth, layer);
  }
  return r;
}

void write_resource_report(std::ostream& out, const ResourceReport& r) {
  out << "gates " << r.total_gates << '\n'
      << "two_qubit_gates " << r.two_qubit_gates << '\n'
      << "depth " << r.depth << '\n'
      << "qubits " << r.qubits << '\n';
}

}  // namespace dks
