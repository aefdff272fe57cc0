#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "dks/graph.hpp"
#include "dks/search.hpp"

namespace dks {

/// One black-box search call at a marking threshold: samples t from the
/// same iteration grid as the quantum executor and charges it; then with
/// probability exactly 0.25, if any k-subset with at least m edges exists,
/// returns the first such subset in mask order, and otherwise a uniformly
/// random k-subset. The internal scan is not charged.
ExecutorResult black_box_grover(const Graph& g, int k, int m, Rng& rng);

/// Executor wrapper around black_box_grover that memoizes the first-marked
/// scan per threshold, so repeated attempts at one level cost one scan.
Executor make_black_box_executor();

/// Expected cost of exhaustive search in random order to the stated success
/// probability: p_target * N.
double brute_force_expected_cost(std::uint64_t search_space, double p_target);

struct SaParams {
  int steps = 0;        // oracle calls per run d; 0 derives 30 * n
  double t0 = 1.0;      // initial temperature
  double alpha = 0.98;  // geometric cooling factor, in (0, 1)
  int tenure = -1;      // tabu tenure in steps; -1 derives k
};

struct SaStep {
  int call_index = 0;  // 1-based oracle-call index
  int current_edges = 0;
  int best_edges = 0;
  double temperature = 0.0;
  bool accepted = false;
};

struct SaResult {
  VertexSubset best_subset = 0;
  int best_edges = 0;
  std::vector<SaStep> trace;  // exactly `steps` rows
};

/// Single annealing run over the swap neighborhood: start from a uniform
/// random k-subset (call 1), then steps-1 proposed swaps of one in-vertex
/// for one out-vertex, both drawn uniformly among non-tabu vertices (all
/// vertices when a side is fully tabu). A proposal costs one call; it is
/// accepted when it does not lose edges, else with probability
/// exp(delta / temperature). Accepted swaps make both endpoints tabu for
/// `tenure` steps. k == n degenerates to re-evaluating the full set.
SaResult simulated_annealing_run(const Graph& g, int k, const SaParams& params, Rng& rng);

/// Independent runs needed for 95% overall success given single-run success
/// probability s: max(1, log(0.05) / log(1 - s)).
double sa_required_runs(double s);

/// SA trace rows: run_id, call_idx, current_edges, best_so_far, temperature,
/// accepted.
void write_sa_trace_csv_header(std::ostream& out);
void write_sa_trace_csv(std::ostream& out, const SaResult& result, int run_id);

}  // namespace dks
