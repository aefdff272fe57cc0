#include "dks/search.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <optional>
#include <ostream>
#include <unordered_map>

#include "dks/circuits.hpp"
#include "dks/sim.hpp"

namespace dks {

int required_failures(double p, double s) {
  if (!(p > 0.0 && p < 1.0) || !(s > 0.0 && s < 1.0)) {
    throw std::invalid_argument("required_failures: probabilities must lie strictly in (0, 1)");
  }
  int r = static_cast<int>(std::ceil(std::log(1.0 - p) / std::log(1.0 - s)));
  if (r < 1) r = 1;
  // Fix up floating-point edge cases against the defining inequality.
  while (std::pow(1.0 - s, r) > 1.0 - p) ++r;
  while (r > 1 && std::pow(1.0 - s, r - 1) <= 1.0 - p) --r;
  return r;
}

int iteration_grid_size(std::uint64_t search_space) {
  if (search_space < 1) throw std::invalid_argument("iteration_grid_size: need N >= 1");
  const double t = std::numbers::pi / 4.0 * std::sqrt(static_cast<double>(search_space));
  return static_cast<int>(std::ceil(t));
}

int sample_iteration_count(std::uint64_t search_space, Rng& rng) {
  const int grid = std::max(1, iteration_grid_size(search_space));
  return static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(grid)));
}

double average_success_floor(std::uint64_t marked, std::uint64_t search_space) {
  if (marked < 1 || marked > search_space) {
    throw std::invalid_argument("average_success_floor: need 1 <= M <= N");
  }
  const double theta =
      std::asin(std::sqrt(static_cast<double>(marked) / static_cast<double>(search_space)));
  const int grid = iteration_grid_size(search_space);
  double sum = 0.0;
  for (int t = 0; t < grid; ++t) {
    const double s = std::sin((2.0 * t + 1.0) * theta);
    sum += s * s;
  }
  return sum / grid;
}

std::vector<int> SearchTrace::best_by_call() const {
  std::vector<int> series(static_cast<std::size_t>(total_calls), 0);
  int best = 0;
  std::int64_t cum = 0;
  std::size_t fill = 0;  // series[i] is the best after call i+1
  for (const auto& a : attempts) {
    const std::int64_t done = cum + a.charged_calls;
    // Calls that finish before this attempt's measurement see the old best.
    while (fill < series.size() && static_cast<std::int64_t>(fill) < done - 1) {
      series[fill++] = best;
    }
    cum = done;
    best = std::max(best, a.measured_edges);
    // The slot at `done` itself is filled later so that zero-cost attempts
    // landing on the same call index are folded in first.
  }
  while (fill < series.size()) series[fill++] = best;
  return series;
}

SearchTrace adaptive_search(const Graph& g, int k, const SearchConfig& cfg, const Executor& ex) {
  const int n = g.vertex_count();
  if (k < 1 || k > n) throw std::invalid_argument("adaptive_search: need 1 <= k <= n");
  const int rounds = cfg.required_failures > 0
                         ? cfg.required_failures
                         : required_failures(cfg.confidence, cfg.success_floor);
  Rng rng(cfg.seed);
  SearchTrace trace;
  int level = initial_threshold(g, k);
  trace.thresholds.push_back(level);
  int best_edges = -1;
  VertexSubset best_subset = 0;
  int failures = 0;
  while (true) {
    // Mark strictly denser subsets: a hit is exactly an improvement, which
    // keeps the per-attempt success probability at the schedule's floor.
    ExecutorResult res = ex(g, k, level + 1, rng);
    Attempt a;
    a.threshold = level;
    a.iterations = res.iterations;
    a.measured = res.candidate;
    a.measured_edges = edge_count(g, res.candidate);
    a.charged_calls = res.charged_calls + (cfg.charge_verification ? 1 : 0);
    trace.total_calls += a.charged_calls;
    if (best_edges < a.measured_edges) {
      best_edges = a.measured_edges;
      best_subset = res.candidate;
    }
    if (a.measured_edges > level) {
      a.outcome = AttemptOutcome::Improvement;
      level = a.measured_edges;
      trace.thresholds.push_back(level);
      failures = 0;
      trace.attempts.push_back(a);
    } else {
      a.outcome = AttemptOutcome::Failure;
      trace.attempts.push_back(a);
      if (++failures >= rounds) break;
    }
  }
  trace.best_subset = best_subset;
  trace.best_edges = std::max(best_edges, 0);
  trace.levels_visited = static_cast<int>(trace.thresholds.size());
  return trace;
}

namespace {

struct QuantumExecutorState {
  const Graph* graph = nullptr;
  int k = -1;
  std::uint64_t search_space = 0;
  std::unique_ptr<QuantumCircuit> prep;
  std::unique_ptr<QuantumCircuit> diffusion;
  std::unordered_map<int, QuantumCircuit> oracles;

  void rebind(const Graph& g, int k_, int max_qubits) {
    const CounterSpec spec = CounterSpec::for_threshold(k_, 0);
    const int qubits = g.vertex_count() + spec.width;
    if (qubits > max_qubits) {
      throw capacity_error("quantum executor: instance needs " + std::to_string(qubits) +
                           " qubits, cap is " + std::to_string(max_qubits) +
                           "; use the black-box emulator");
    }
    graph = &g;
    k = k_;
    search_space = binomial(g.vertex_count(), k_);
    oracles.clear();
    const RegisterLayout layout = RegisterLayout::algorithm(g.vertex_count(), spec.width);
    // Node-only builders drop into the full layout unchanged because q_node
    // occupies the low-order qubits.
    prep = std::make_unique<QuantumCircuit>(layout);
    prep->append(dicke_preparation(g.vertex_count(), k_));
    diffusion = std::make_unique<QuantumCircuit>(layout);
    diffusion->append(diffusion_circuit(g.vertex_count(), k_));
  }

  const QuantumCircuit& oracle_at(int m) {
    auto it = oracles.find(m);
    if (it == oracles.end()) {
      it = oracles.emplace(m, oracle_circuit(*graph, k, m)).first;
    }
    return it->second;
  }
};

}  // namespace

Executor make_quantum_executor(int max_qubits) {
  auto state = std::make_shared<QuantumExecutorState>();
  return [state, max_qubits](const Graph& g, int k, int marking_threshold,
                             Rng& rng) -> ExecutorResult {
    if (state->graph != &g || state->k != k) state->rebind(g, k, max_qubits);
    const int t = sample_iteration_count(state->search_space, rng);
    StateVector sv = StateVector::zero_state(state->prep->num_qubits());
    apply_gates(sv, state->prep->gates());
    if (t > 0) {
      const QuantumCircuit& oracle = state->oracle_at(marking_threshold);
      for (int round = 0; round < t; ++round) {
        apply_gates(sv, oracle.gates());
        apply_gates(sv, state->diffusion->gates());
      }
    }
    ExecutorResult res;
    res.candidate = sample_register(sv, state->prep->layout(), "q_node", rng);
    res.charged_calls = t;
    res.iterations = t;
    return res;
  };
}

void write_trace_csv_header(std::ostream& out) {
  out << "run_id,attempt_idx,m,t,charged_calls,cumulative_calls,measured_edges,outcome,"
         "best_so_far\n";
}

void write_trace_csv(std::ostream& out, const SearchTrace& trace, int run_id) {
  std::int64_t cum = 0;
  int best = 0;
  int idx = 0;
  for (const auto& a : trace.attempts) {
    cum += a.charged_calls;
    best = std::max(best, a.measured_edges);
    out << run_id << ',' << idx++ << ',' << a.threshold << ',' << a.iterations << ','
        << a.charged_calls << ',' << cum << ',' << a.measured_edges << ','
        << (a.outcome == AttemptOutcome::Improvement ? "improvement" : "failure") << ',' << best
        << '\n';
  }
}

}  // namespace dks
