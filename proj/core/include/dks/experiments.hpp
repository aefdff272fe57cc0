#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dks/baselines.hpp"
#include "dks/graph.hpp"
#include "dks/search.hpp"
#include "dks/stats.hpp"

namespace dks {

enum class SearchAlgorithm { QuantumGrover, BlackBoxGrover, BruteForce, SimulatedAnnealing };

const char* to_string(SearchAlgorithm a);

struct ConvergencePoint {
  std::int64_t call_index = 0;  // 1-based
  double mean = 0.0;
  double lo = 0.0;  // lower band percentile
  double hi = 0.0;
};

struct ConvergenceSeries {
  SearchAlgorithm algorithm;
  std::vector<ConvergencePoint> points;
};

struct ConvergenceConfig {
  int runs = 1000;
  std::uint64_t seed = 0;
  double band = 0.90;  // central band mass; 0.90 gives 5th/95th percentiles
  SearchConfig search;
  SaParams sa;
  int sim_qubit_cap = 24;
  int jobs = 1;
};

/// Runs each algorithm `runs` times with derived seeds, aligns per-run
/// best-so-far series on the oracle-call axis (shorter runs padded with
/// their final value) and reports the pointwise mean and percentile band.
std::vector<ConvergenceSeries> convergence_experiment(const Graph& g, int k,
                                                      std::span<const SearchAlgorithm> algorithms,
                                                      const ConvergenceConfig& cfg);

enum class ExecutorPolicy { Auto, Simulator, Emulator };

struct ScalingSeries {
  int k = 0;
  int n_min = 0;
  int n_max = 0;  // inclusive
  int n_step = 1;
};

struct ScalingConfig {
  int graphs = 20;
  int runs = 20;
  double p_graph = 0.5;
  std::uint64_t seed = 0;
  ExecutorPolicy policy = ExecutorPolicy::Auto;
  double sim_sqrt_limit = 20.0;  // Auto: simulator when sqrt(N) <= this
  int sim_qubit_cap = 24;
  std::uint64_t max_search_space = 2'000'000;  // points beyond are skipped
  int n_boot = 2000;
  double ci = 0.99;
  SearchConfig search;
  int jobs = 1;
};

struct ScalingPoint {
  int n = 0;
  int k = 0;
  std::uint64_t search_space = 0;  // N = C(n, k)
  std::string executor;            // "sim" or "emulator"
  double mean_calls = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  double optimum_rate = 0.0;  // fraction of runs that found the true optimum
};

/// For each (k, n): generates `graphs` random graphs, runs the adaptive
/// search `runs` times per graph, and aggregates the per-run total oracle
/// calls with the two-level bootstrap. The executor is the statevector
/// simulator when sqrt(N) is at most sim_sqrt_limit (unless overridden),
/// and the black-box emulator otherwise.
std::vector<ScalingPoint> scaling_experiment(std::span<const ScalingSeries> series,
                                             const ScalingConfig& cfg);

struct SaScalingConfig {
  int graphs = 100;
  int runs_per_graph = 1000;
  double p_graph = 0.5;
  std::uint64_t seed = 0;
  SaParams sa;
  double cost_cap = 1e9;  // recorded when a graph's success rate is zero
  std::uint64_t max_search_space = 2'000'000;
  int generation_attempts = 10000;
  int n_boot = 2000;
  double ci = 0.99;
  int jobs = 1;
};

struct SaScalingPoint {
  int n = 0;
  int k = 0;
  std::uint64_t search_space = 0;
  double mean_cost = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  double mean_success = 0.0;  // average single-run success probability
  int capped_graphs = 0;      // graphs whose success rate was zero
};

/// Per (k, n): `graphs` unique-optimum random graphs; per graph the
/// single-run success probability s is estimated over runs_per_graph runs
/// and converted to the oracle cost ceil(T(s) * d); costs are averaged over
/// graphs via bootstrap. Graphs with s = 0 record cost_cap and are counted
/// in capped_graphs.
std::vector<SaScalingPoint> sa_scaling_experiment(std::span<const ScalingSeries> series,
                                                  const SaScalingConfig& cfg);

// --- tabular output ---------------------------------------------------------

void write_convergence_csv(std::ostream& out, std::span<const ConvergenceSeries> series);
void write_scaling_csv(std::ostream& out, std::span<const ScalingPoint> points);
void write_sa_scaling_csv(std::ostream& out, std::span<const SaScalingPoint> points);

}  // namespace dks
