#include "dks/sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace dks {

RegisterLayout::RegisterLayout(std::vector<Register> regs) : regs_(std::move(regs)) {
  int expected = 0;
  for (const auto& r : regs_) {
    if (r.width < 0 || r.offset != expected) {
      throw std::invalid_argument("RegisterLayout: registers must be contiguous and ordered");
    }
    expected += r.width;
  }
  total_ = expected;
  if (total_ > 62) throw capacity_error("RegisterLayout: too many qubits");
}

RegisterLayout RegisterLayout::single(std::string name, int width) {
  return RegisterLayout({Register{std::move(name), 0, width}});
}

RegisterLayout RegisterLayout::algorithm(int n, int counter_width) {
  if (n < 1 || counter_width < 1) {
    throw std::invalid_argument("RegisterLayout::algorithm: bad register widths");
  }
  return RegisterLayout({Register{"q_node", 0, n},
                         Register{"q_edge", n, counter_width - 1},
                         Register{"q_res", n + counter_width - 1, 1}});
}

const Register& RegisterLayout::reg(std::string_view name) const {
  for (const auto& r : regs_) {
    if (r.name == name) return r;
  }
  throw std::invalid_argument("RegisterLayout: no register named '" + std::string(name) + "'");
}

bool RegisterLayout::has(std::string_view name) const {
  for (const auto& r : regs_) {
    if (r.name == name) return true;
  }
  return false;
}

void QuantumCircuit::add(GateOp op) {
  const int q = num_qubits();
  auto check = [q](int idx) {
    if (idx < 0 || idx >= q) throw std::invalid_argument("GateOp: qubit index out of range");
  };
  check(op.target);
  for (int c : op.controls) {
    check(c);
    if (c == op.target) throw std::invalid_argument("GateOp: control equals target");
  }
  for (std::size_t i = 0; i + 1 < op.controls.size(); ++i) {
    for (std::size_t j = i + 1; j < op.controls.size(); ++j) {
      if (op.controls[i] == op.controls[j]) {
        throw std::invalid_argument("GateOp: duplicate control");
      }
    }
  }
  gates_.push_back(std::move(op));
}

void QuantumCircuit::append(const QuantumCircuit& other) {
  for (const auto& g : other.gates_) add(g);
}

void QuantumCircuit::append_inverse(const QuantumCircuit& other) {
  for (auto it = other.gates_.rbegin(); it != other.gates_.rend(); ++it) {
    GateOp g = *it;
    if (g.kind == GateKind::Phase || g.kind == GateKind::Ry) g.theta = -g.theta;
    add(std::move(g));
  }
}

QuantumCircuit QuantumCircuit::inverse() const {
  QuantumCircuit inv(layout_);
  inv.append_inverse(*this);
  return inv;
}

void QuantumCircuit::dump(std::ostream& out) const {
  static constexpr const char* names[] = {"H", "X", "Z", "PHASE", "RY"};
  char buf[32];
  for (const auto& g : gates_) {
    out << names[static_cast<int>(g.kind)] << ' ' << g.target;
    for (int c : g.controls) out << ' ' << c;
    if (g.kind == GateKind::Phase || g.kind == GateKind::Ry) {
      std::snprintf(buf, sizeof buf, "%.17g", g.theta);
      out << ' ' << buf;
    }
    out << '\n';
  }
}

StateVector StateVector::zero_state(int num_qubits) { return basis(num_qubits, 0); }

StateVector StateVector::basis(int num_qubits, std::uint64_t index) {
  if (num_qubits < 0 || num_qubits > 62) throw capacity_error("StateVector: too many qubits");
  StateVector sv;
  sv.num_qubits = num_qubits;
  sv.amps.assign(1ull << num_qubits, {0.0, 0.0});
  sv.amps.at(index) = {1.0, 0.0};
  return sv;
}

double StateVector::norm_sq() const {
  double s = 0.0;
  for (const auto& a : amps) s += std::norm(a);
  return s;
}

namespace {

std::uint64_t control_mask(const GateOp& g) {
  std::uint64_t m = 0;
  for (int c : g.controls) m |= 1ull << c;
  return m;
}

void apply_one(StateVector& sv, const GateOp& g) {
  auto* amp = sv.amps.data();
  const std::uint64_t dim = sv.amps.size();
  const std::uint64_t t = 1ull << g.target;
  const std::uint64_t cmask = control_mask(g);

  switch (g.kind) {
    case GateKind::Z: {
      const std::uint64_t need = cmask | t;
      for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & need) == need) amp[i] = -amp[i];
      }
      return;
    }
    case GateKind::Phase: {
      const std::complex<double> ph(std::cos(g.theta), std::sin(g.theta));
      const std::uint64_t need = cmask | t;
      for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & need) == need) amp[i] *= ph;
      }
      return;
    }
    case GateKind::X: {
      for (std::uint64_t hi = 0; hi < dim; hi += t << 1) {
        for (std::uint64_t lo = 0; lo < t; ++lo) {
          const std::uint64_t i = hi | lo;
          if ((i & cmask) != cmask) continue;
          std::swap(amp[i], amp[i | t]);
        }
      }
      return;
    }
    case GateKind::H: {
      constexpr double inv_sqrt2 = 0.70710678118654752440;
      for (std::uint64_t hi = 0; hi < dim; hi += t << 1) {
        for (std::uint64_t lo = 0; lo < t; ++lo) {
          const std::uint64_t i = hi | lo;
          if ((i & cmask) != cmask) continue;
          const auto a = amp[i];
          const auto b = amp[i | t];
          amp[i] = (a + b) * inv_sqrt2;
          amp[i | t] = (a - b) * inv_sqrt2;
        }
      }
      return;
    }
    case GateKind::Ry: {
      const double c = std::cos(g.theta / 2.0);
      const double s = std::sin(g.theta / 2.0);
      for (std::uint64_t hi = 0; hi < dim; hi += t << 1) {
        for (std::uint64_t lo = 0; lo < t; ++lo) {
          const std::uint64_t i = hi | lo;
          if ((i & cmask) != cmask) continue;
          const auto a = amp[i];
          const auto b = amp[i | t];
          amp[i] = c * a - s * b;
          amp[i | t] = s * a + c * b;
        }
      }
      return;
    }
  }
}

}  // namespace

void apply_gates(StateVector& sv, std::span<const GateOp> gates) {
  for (const auto& g : gates) apply_one(sv, g);
}

StateVector run_circuit(const QuantumCircuit& c, StateVector initial) {
  if (initial.num_qubits != c.num_qubits()) {
    throw std::invalid_argument("run_circuit: state and circuit widths differ");
  }
  apply_gates(initial, c.gates());
  return initial;
}

std::vector<double> register_marginal(const StateVector& sv, const RegisterLayout& layout,
                                      std::string_view reg) {
  if (layout.total_qubits() != sv.num_qubits) {
    throw std::invalid_argument("register_marginal: layout does not match state");
  }
  const Register& r = layout.reg(reg);
  const std::uint64_t values = 1ull << r.width;
  const std::uint64_t vmask = values - 1;
  std::vector<double> prob(values, 0.0);
  for (std::uint64_t i = 0; i < sv.amps.size(); ++i) {
    prob[(i >> r.offset) & vmask] += std::norm(sv.amps[i]);
  }
  return prob;
}

std::uint64_t sample_register(const StateVector& sv, const RegisterLayout& layout,
                              std::string_view reg, Rng& rng) {
  const std::vector<double> prob = register_marginal(sv, layout, reg);
  const double u = uniform01(rng);
  double acc = 0.0;
  for (std::size_t v = 0; v < prob.size(); ++v) {
    acc += prob[v];
    if (u < acc) return v;
  }
  return prob.size() - 1;  // u landed in rounding slack at the top
}

Unitary circuit_unitary(const QuantumCircuit& c) {
  const int q = c.num_qubits();
  if (q > 12) throw capacity_error("circuit_unitary: refusing more than 12 qubits");
  Unitary u;
  u.dim = 1 << q;
  u.a.resize(static_cast<std::size_t>(u.dim) * u.dim);
  for (int col = 0; col < u.dim; ++col) {
    StateVector sv = run_circuit(c, StateVector::basis(q, static_cast<std::uint64_t>(col)));
    std::copy(sv.amps.begin(), sv.amps.end(), u.a.begin() + static_cast<std::size_t>(col) * u.dim);
  }
  return u;
}

}  // namespace dks
