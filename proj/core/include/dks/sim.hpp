#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dks/common.hpp"
#include "dks/rng.hpp"

namespace dks {

struct Register {
  std::string name;
  int offset = 0;  // first qubit index
  int width = 0;
};

/// Named, disjoint, contiguous qubit ranges. Qubit 0 is the least
/// significant bit of a basis-state index.
class RegisterLayout {
 public:
  static RegisterLayout single(std::string name, int width);
  /// q_node (n qubits, low order), q_edge (counter_width - 1), q_res (1).
  static RegisterLayout algorithm(int n, int counter_width);

  RegisterLayout() = default;
  explicit RegisterLayout(std::vector<Register> regs);

  const Register& reg(std::string_view name) const;
  bool has(std::string_view name) const;
  int total_qubits() const { return total_; }
  const std::vector<Register>& registers() const { return regs_; }

 private:
  std::vector<Register> regs_;
  int total_ = 0;
};

enum class GateKind : std::uint8_t { H, X, Z, Phase, Ry };

/// One gate: a single-qubit kind plus an arbitrary set of control qubits.
/// theta is in radians and only meaningful for Phase and Ry.
///   Phase(t) = diag(1, e^{i t});  Ry(t) = [[cos t/2, -sin t/2], [sin t/2, cos t/2]].
struct GateOp {
  GateKind kind = GateKind::H;
  int target = 0;
  std::vector<int> controls;
  double theta = 0.0;
};

class QuantumCircuit {
 public:
  explicit QuantumCircuit(RegisterLayout layout) : layout_(std::move(layout)) {}

  void add(GateOp op);  // validates indices at construction time
  void h(int q) { add({GateKind::H, q, {}, 0.0}); }
  void x(int q, std::vector<int> controls = {}) { add({GateKind::X, q, std::move(controls), 0.0}); }
  void z(int q, std::vector<int> controls = {}) { add({GateKind::Z, q, std::move(controls), 0.0}); }
  void phase(double theta, int q, std::vector<int> controls = {}) {
    add({GateKind::Phase, q, std::move(controls), theta});
  }
  void ry(double theta, int q, std::vector<int> controls = {}) {
    add({GateKind::Ry, q, std::move(controls), theta});
  }

  /// Appends another circuit's gates; its qubit indices must fit this layout.
  void append(const QuantumCircuit& other);
  /// Appends the exact inverse of `other` (reversed order, negated angles).
  void append_inverse(const QuantumCircuit& other);

  QuantumCircuit inverse() const;

  const RegisterLayout& layout() const { return layout_; }
  const std::vector<GateOp>& gates() const { return gates_; }
  int num_qubits() const { return layout_.total_qubits(); }

  /// One gate per line: "KIND target [controls...] [theta]".
  void dump(std::ostream& out) const;

 private:
  RegisterLayout layout_;
  std::vector<GateOp> gates_;
};

struct StateVector {
  int num_qubits = 0;
  std::vector<std::complex<double>> amps;

  static StateVector zero_state(int num_qubits);  // |0...0>
  static StateVector basis(int num_qubits, std::uint64_t index);
  double norm_sq() const;
};

/// Applies gates in order to a copy of `initial`.
StateVector run_circuit(const QuantumCircuit& c, StateVector initial);

/// In-place core used by run_circuit and by hot loops.
void apply_gates(StateVector& sv, std::span<const GateOp> gates);

/// Probability of each value of a register (marginal over the rest).
std::vector<double> register_marginal(const StateVector& sv, const RegisterLayout& layout,
                                      std::string_view reg);

/// Born-rule sample of a register value. Deterministic given the rng state.
std::uint64_t sample_register(const StateVector& sv, const RegisterLayout& layout,
                              std::string_view reg, Rng& rng);

/// Column-major dense unitary of a circuit; refuses more than 12 qubits.
struct Unitary {
  int dim = 0;
  std::vector<std::complex<double>> a;  // a[col * dim + row]
  std::complex<double> at(int row, int col) const {
    return a[static_cast<std::size_t>(col) * dim + row];
  }
};

Unitary circuit_unitary(const QuantumCircuit& c);

}  // namespace dks
