#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "dks/graph.hpp"
#include "dks/rng.hpp"

namespace dks {

struct SearchConfig {
  double confidence = 0.95;      // target certainty p that no denser subset exists
  double success_floor = 0.25;   // per-attempt success bound s
  int required_failures = 0;     // R; 0 derives it from (confidence, success_floor)
  std::uint64_t seed = 0;
  bool charge_verification = false;  // charge the classical check as an oracle call
};

/// One search call at a marking threshold: returns a weight-k candidate and
/// the oracle calls to charge for it. `iterations` is the sampled Grover
/// iteration count t; `used_marked_branch` is instrumentation for the
/// black-box emulator (always false for the simulator executor).
struct ExecutorResult {
  VertexSubset candidate = 0;
  std::int64_t charged_calls = 0;
  int iterations = 0;
  bool used_marked_branch = false;
};

/// Contract shared by the quantum-simulation executor and the black-box
/// emulator. `marking_threshold` is the minimum edge count a subset must
/// have to be marked; it may exceed the best possible count, in which case
/// nothing is marked and the call returns an unamplified sample.
using Executor =
    std::function<ExecutorResult(const Graph& g, int k, int marking_threshold, Rng& rng)>;

enum class AttemptOutcome { Improvement, Failure };

struct Attempt {
  int threshold = 0;       // level m_i the attempt ran at
  int iterations = 0;      // sampled t
  VertexSubset measured = 0;
  int measured_edges = 0;
  std::int64_t charged_calls = 0;
  AttemptOutcome outcome = AttemptOutcome::Failure;
};

struct SearchTrace {
  std::vector<Attempt> attempts;
  std::vector<int> thresholds;   // m_0 < m_1 < ... (levels visited)
  std::int64_t total_calls = 0;
  VertexSubset best_subset = 0;
  int best_edges = 0;
  int levels_visited = 0;

  /// Best-so-far edge count after each oracle call, indices 1..total_calls.
  /// Before the first completed attempt the best is reported as 0.
  std::vector<int> best_by_call() const;
};

/// Smallest R with (1-s)^R <= 1-p.
int required_failures(double p, double s);

/// T = ceil(pi/4 * sqrt(N)), the iteration-count grid size.
int iteration_grid_size(std::uint64_t search_space);

/// Uniform draw from {0, ..., T-1}.
int sample_iteration_count(std::uint64_t search_space, Rng& rng);

/// (1/T) sum_{t=0}^{T-1} sin^2((2t+1) theta) with sin^2 theta = M/N.
/// This is the per-attempt success probability averaged over the iteration
/// grid; it is at least 1/4 whenever marked states exist.
double average_success_floor(std::uint64_t marked, std::uint64_t search_space);

/// Threshold-by-threshold search. Starts at the density-based initial
/// threshold; each attempt asks the executor for a candidate marked at
/// strictly more than the current level, verifies it classically, raises
/// the level on strict improvement, and stops after R consecutive failures
/// at one level. The returned best reflects every measurement made.
SearchTrace adaptive_search(const Graph& g, int k, const SearchConfig& cfg, const Executor& ex);

/// Executor that samples t, builds the Grover circuit at the requested
/// marking threshold, runs it on the statevector simulator and samples the
/// node register; charges t oracle calls. Circuits are cached per
/// (graph, k, threshold). Throws capacity_error if n plus the counter width
/// exceeds max_qubits.
Executor make_quantum_executor(int max_qubits = 24);

/// Trace rows: run_id, attempt_idx, m, t, charged_calls, cumulative_calls,
/// measured_edges, outcome, best_so_far.
void write_trace_csv_header(std::ostream& out);
void write_trace_csv(std::ostream& out, const SearchTrace& trace, int run_id);

}  // namespace dks
