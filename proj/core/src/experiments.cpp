#include "dks/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include "csv_util.hpp"

namespace dks {

namespace {

// Index-sharded parallel loop; exceptions are rethrown on the caller.
template <typename F>
void parallel_for(int count, int jobs, F&& body) {
  jobs = std::clamp(jobs, 1, count > 0 ? count : 1);
  if (jobs <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(jobs));
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

std::uint64_t series_key(int k, int n) {
  return (static_cast<std::uint64_t>(k) << 32) | static_cast<std::uint64_t>(n);
}

std::vector<int> brute_force_series(const Graph& g, int k, Rng& rng) {
  std::vector<VertexSubset> order;
  order.reserve(binomial(g.vertex_count(), k));
  for_each_k_subset(g.vertex_count(), k, [&](VertexSubset s) { order.push_back(s); });
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[uniform_below(rng, i)]);
  }
  std::vector<int> series;
  series.reserve(order.size());
  int best = 0;
  for (VertexSubset s : order) {
    best = std::max(best, edge_count(g, s));
    series.push_back(best);
  }
  return series;
}

std::vector<int> sa_series(const Graph& g, int k, const SaParams& params, Rng& rng) {
  const SaResult r = simulated_annealing_run(g, k, params, rng);
  std::vector<int> series;
  series.reserve(r.trace.size());
  for (const auto& s : r.trace) series.push_back(s.best_edges);
  return series;
}

std::vector<int> run_one(const Graph& g, int k, SearchAlgorithm algo, const ConvergenceConfig& cfg,
                         std::uint64_t run_seed) {
  switch (algo) {
    case SearchAlgorithm::QuantumGrover: {
      SearchConfig sc = cfg.search;
      sc.seed = run_seed;
      const Executor ex = make_quantum_executor(cfg.sim_qubit_cap);
      return adaptive_search(g, k, sc, ex).best_by_call();
    }
    case SearchAlgorithm::BlackBoxGrover: {
      SearchConfig sc = cfg.search;
      sc.seed = run_seed;
      const Executor ex = make_black_box_executor();
      return adaptive_search(g, k, sc, ex).best_by_call();
    }
    case SearchAlgorithm::BruteForce: {
      Rng rng(run_seed);
      return brute_force_series(g, k, rng);
    }
    case SearchAlgorithm::SimulatedAnnealing: {
      Rng rng(run_seed);
      return sa_series(g, k, cfg.sa, rng);
    }
  }
  throw std::invalid_argument("run_one: unknown algorithm");
}

}  // namespace

const char* to_string(SearchAlgorithm a) {
  switch (a) {
    case SearchAlgorithm::QuantumGrover: return "grover";
    case SearchAlgorithm::BlackBoxGrover: return "emulator";
    case SearchAlgorithm::BruteForce: return "brute";
    case SearchAlgorithm::SimulatedAnnealing: return "sa";
  }
  return "?";
}

std::vector<ConvergenceSeries> convergence_experiment(const Graph& g, int k,
                                                      std::span<const SearchAlgorithm> algorithms,
                                                      const ConvergenceConfig& cfg) {
  if (cfg.runs < 1) throw std::invalid_argument("convergence_experiment: need runs >= 1");
  std::vector<ConvergenceSeries> out;
  for (std::size_t ai = 0; ai < algorithms.size(); ++ai) {
    const SearchAlgorithm algo = algorithms[ai];
    std::vector<std::vector<int>> runs(static_cast<std::size_t>(cfg.runs));
    parallel_for(cfg.runs, cfg.jobs, [&](int ri) {
      runs[static_cast<std::size_t>(ri)] =
          run_one(g, k, algo, cfg, derive_seed(cfg.seed, ai, static_cast<std::uint64_t>(ri)));
    });
    std::size_t longest = 0;
    for (const auto& r : runs) longest = std::max(longest, r.size());
    ConvergenceSeries series{algo, {}};
    series.points.reserve(longest);
    std::vector<double> column(runs.size());
    const double tail = (1.0 - cfg.band) / 2.0;
    for (std::size_t c = 0; c < longest; ++c) {
      double sum = 0.0;
      for (std::size_t ri = 0; ri < runs.size(); ++ri) {
        const auto& r = runs[ri];
        // Finished runs keep reporting their final best.
        const double v = r.empty() ? 0.0 : static_cast<double>(c < r.size() ? r[c] : r.back());
        column[ri] = v;
        sum += v;
      }
      ConvergencePoint p;
      p.call_index = static_cast<std::int64_t>(c) + 1;
      p.mean = sum / static_cast<double>(runs.size());
      // Percentile band, widened to the mean when skew puts it outside.
      p.lo = std::min(quantile(column, tail), p.mean);
      p.hi = std::max(quantile(column, 1.0 - tail), p.mean);
      series.points.push_back(p);
    }
    out.push_back(std::move(series));
  }
  return out;
}

std::vector<ScalingPoint> scaling_experiment(std::span<const ScalingSeries> series,
                                             const ScalingConfig& cfg) {
  std::vector<ScalingPoint> points;
  for (const auto& s : series) {
    if (s.k < 1 || s.n_min < s.k || s.n_max < s.n_min || s.n_step < 1) {
      throw std::invalid_argument("scaling_experiment: bad series spec");
    }
    for (int n = s.n_min; n <= s.n_max; n += s.n_step) {
      std::uint64_t space = 0;
      try {
        space = binomial(n, s.k);
      } catch (const capacity_error&) {
        continue;  // beyond any budget we would accept
      }
      if (space > cfg.max_search_space) continue;

      bool use_sim = false;
      switch (cfg.policy) {
        case ExecutorPolicy::Auto:
          use_sim = std::sqrt(static_cast<double>(space)) <= cfg.sim_sqrt_limit;
          break;
        case ExecutorPolicy::Simulator: use_sim = true; break;
        case ExecutorPolicy::Emulator: use_sim = false; break;
      }

      const std::uint64_t key = series_key(s.k, n);
      std::vector<std::vector<double>> costs(static_cast<std::size_t>(cfg.graphs));
      std::vector<int> found(static_cast<std::size_t>(cfg.graphs), 0);
      parallel_for(cfg.graphs, cfg.jobs, [&](int gi) {
        const Graph graph =
            erdos_renyi(n, cfg.p_graph, derive_seed(cfg.seed, key, static_cast<std::uint64_t>(gi)));
        const int optimum = brute_force_densest(graph, s.k).best_edges;
        const Executor ex = use_sim ? make_quantum_executor(cfg.sim_qubit_cap)
                                    : make_black_box_executor();
        auto& graph_costs = costs[static_cast<std::size_t>(gi)];
        graph_costs.reserve(static_cast<std::size_t>(cfg.runs));
        for (int ri = 0; ri < cfg.runs; ++ri) {
          SearchConfig sc = cfg.search;
          sc.seed = derive_seed(cfg.seed, key, static_cast<std::uint64_t>(gi),
                                static_cast<std::uint64_t>(ri) + 1);
          const SearchTrace trace = adaptive_search(graph, s.k, sc, ex);
          graph_costs.push_back(static_cast<double>(trace.total_calls));
          if (trace.best_edges == optimum) ++found[static_cast<std::size_t>(gi)];
        }
      });

      Rng boot_rng(derive_seed(cfg.seed, key, 0xB007));
      const BootstrapResult boot = hierarchical_bootstrap(costs, cfg.n_boot, cfg.ci, boot_rng);
      ScalingPoint p;
      p.n = n;
      p.k = s.k;
      p.search_space = space;
      p.executor = use_sim ? "sim" : "emulator";
      p.mean_calls = boot.mean;
      p.ci_lo = boot.lo;
      p.ci_hi = boot.hi;
      int total_found = 0;
      for (int f : found) total_found += f;
      p.optimum_rate = static_cast<double>(total_found) /
                       (static_cast<double>(cfg.graphs) * static_cast<double>(cfg.runs));
      points.push_back(std::move(p));
    }
  }
  return points;
}

std::vector<SaScalingPoint> sa_scaling_experiment(std::span<const ScalingSeries> series,
                                                  const SaScalingConfig& cfg) {
  std::vector<SaScalingPoint> points;
  for (const auto& s : series) {
    if (s.k < 1 || s.n_min < s.k || s.n_max < s.n_min || s.n_step < 1) {
      throw std::invalid_argument("sa_scaling_experiment: bad series spec");
    }
    for (int n = s.n_min; n <= s.n_max; n += s.n_step) {
      std::uint64_t space = 0;
      try {
        space = binomial(n, s.k);
      } catch (const capacity_error&) {
        continue;
      }
      if (space > cfg.max_search_space) continue;

      const std::uint64_t key = series_key(s.k, n);
      std::vector<std::vector<double>> costs(static_cast<std::size_t>(cfg.graphs));
      std::vector<double> success(static_cast<std::size_t>(cfg.graphs), 0.0);
      std::atomic<int> capped{0};
      parallel_for(cfg.graphs, cfg.jobs, [&](int gi) {
        const Graph graph = erdos_renyi_unique_densest(
            n, cfg.p_graph, s.k, derive_seed(cfg.seed, key, static_cast<std::uint64_t>(gi)),
            cfg.generation_attempts);
        const int optimum = brute_force_densest(graph, s.k).best_edges;
        const int d = cfg.sa.steps > 0 ? cfg.sa.steps : 30 * n;
        int hits = 0;
        for (int ri = 0; ri < cfg.runs_per_graph; ++ri) {
          Rng rng(derive_seed(cfg.seed, key, static_cast<std::uint64_t>(gi),
                              static_cast<std::uint64_t>(ri) + 1));
          if (simulated_annealing_run(graph, s.k, cfg.sa, rng).best_edges == optimum) ++hits;
        }
        const double rate = static_cast<double>(hits) / cfg.runs_per_graph;
        success[static_cast<std::size_t>(gi)] = rate;
        double cost = cfg.cost_cap;
        if (hits > 0) {
          cost = std::ceil(sa_required_runs(rate) * static_cast<double>(d));
        } else {
          capped.fetch_add(1);
        }
        costs[static_cast<std::size_t>(gi)] = {cost};
      });

      Rng boot_rng(derive_seed(cfg.seed, key, 0xB007));
      const BootstrapResult boot = hierarchical_bootstrap(costs, cfg.n_boot, cfg.ci, boot_rng);
      SaScalingPoint p;
      p.n = n;
      p.k = s.k;
      p.search_space = space;
      p.mean_cost = boot.mean;
      p.ci_lo = boot.lo;
      p.ci_hi = boot.hi;
      double sum = 0.0;
      for (double v : success) sum += v;
      p.mean_success = sum / static_cast<double>(cfg.graphs);
      p.capped_graphs = capped.load();
      points.push_back(std::move(p));
    }
  }
  return points;
}

void write_convergence_csv(std::ostream& out, std::span<const ConvergenceSeries> series) {
  out << "algorithm,call_idx,mean_best,band_lo,band_hi\n";
  for (const auto& s : series) {
    for (const auto& p : s.points) {
      out << to_string(s.algorithm) << ',' << p.call_index << ',';
      detail::write_double(out, p.mean);
      out << ',';
      detail::write_double(out, p.lo);
      out << ',';
      detail::write_double(out, p.hi);
      out << '\n';
    }
  }
}

void write_scaling_csv(std::ostream& out, std::span<const ScalingPoint> points) {
  out << "k,n,search_space,executor,mean_calls,ci_lo,ci_hi,optimum_rate\n";
  for (const auto& p : points) {
    out << p.k << ',' << p.n << ',' << p.search_space << ',' << p.executor << ',';
    detail::write_double(out, p.mean_calls);
    out << ',';
    detail::write_double(out, p.ci_lo);
    out << ',';
    detail::write_double(out, p.ci_hi);
    out << ',';
    detail::write_double(out, p.optimum_rate);
    out << '\n';
  }
}

void write_sa_scaling_csv(std::ostream& out, std::span<const SaScalingPoint> points) {
  out << "k,n,search_space,mean_cost,ci_lo,ci_hi,mean_success,capped_graphs\n";
  for (const auto& p : points) {
    out << p.k << ',' << p.n << ',' << p.search_space << ',';
    detail::write_double(out, p.mean_cost);
    out << ',';
    detail::write_double(out, p.ci_lo);
    out << ',';
    detail::write_double(out, p.ci_hi);
    out << ',';
    detail::write_double(out, p.mean_success);
    out << ',' << p.capped_graphs << '\n';
  }
}

}  // namespace dks
