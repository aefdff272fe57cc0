#include "dks/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <optional>
#include <ostream>
#include <unordered_map>

#include "csv_util.hpp"

namespace dks {

namespace {

// First weight-k mask with at least m induced edges, in increasing mask
// order; nullopt when none exists.
std::optional<VertexSubset> first_marked(const Graph& g, int k, int m) {
  std::optional<VertexSubset> found;
  for_each_k_subset(g.vertex_count(), k, [&](VertexSubset s) {
    if (!found && edge_count(g, s) >= m) found = s;
  });
  return found;
}

ExecutorResult black_box_call(const Graph& g, int k, Rng& rng,
                              const std::optional<VertexSubset>& marked) {
  ExecutorResult res;
  const std::uint64_t space = binomial(g.vertex_count(), k);
  res.iterations = sample_iteration_count(space, rng);
  res.charged_calls = res.iterations;
  const bool heads = bernoulli(rng, 0.25);
  if (heads && marked) {
    res.candidate = *marked;
    res.used_marked_branch = true;
  } else {
    res.candidate = random_k_subset(rng, g.vertex_count(), k);
  }
  return res;
}

}  // namespace

ExecutorResult black_box_grover(const Graph& g, int k, int m, Rng& rng) {
  if (k < 0 || k > g.vertex_count()) throw std::invalid_argument("black_box_grover: bad k");
  return black_box_call(g, k, rng, first_marked(g, k, m));
}

Executor make_black_box_executor() {
  struct Cache {
    const Graph* graph = nullptr;
    int k = -1;
    std::unordered_map<int, std::optional<VertexSubset>> first_by_threshold;
  };
  auto cache = std::make_shared<Cache>();
  return [cache](const Graph& g, int k, int m, Rng& rng) -> ExecutorResult {
    if (cache->graph != &g || cache->k != k) {
      cache->graph = &g;
      cache->k = k;
      cache->first_by_threshold.clear();
    }
    auto it = cache->first_by_threshold.find(m);
    if (it == cache->first_by_threshold.end()) {
      it = cache->first_by_threshold.emplace(m, first_marked(g, k, m)).first;
    }
    return black_box_call(g, k, rng, it->second);
  };
}

double brute_force_expected_cost(std::uint64_t search_space, double p_target) {
  if (search_space < 1) throw std::invalid_argument("brute_force_expected_cost: need N >= 1");
  return p_target * static_cast<double>(search_space);
}

SaResult simulated_annealing_run(const Graph& g, int k, const SaParams& params, Rng& rng) {
  const int n = g.vertex_count();
  if (k < 1 || k > n) throw std::invalid_argument("simulated_annealing_run: need 1 <= k <= n");
  const int steps = params.steps > 0 ? params.steps : 30 * n;
  const int tenure = params.tenure >= 0 ? params.tenure : k;
  if (!(params.alpha > 0.0 && params.alpha < 1.0)) {
    throw std::invalid_argument("simulated_annealing_run: alpha must lie in (0, 1)");
  }

  SaResult result;
  result.trace.reserve(static_cast<std::size_t>(steps));

  VertexSubset current = random_k_subset(rng, n, k);
  int current_edges = edge_count(g, current);  // call 1
  result.best_subset = current;
  result.best_edges = current_edges;
  result.trace.push_back({1, current_edges, current_edges, params.t0, true});

  std::vector<std::int64_t> tabu_until(static_cast<std::size_t>(n), -1);
  std::vector<int> in_pool, out_pool;

  for (int move = 1; move < steps; ++move) {
    const double temperature = params.t0 * std::pow(params.alpha, move - 1);
    if (k == n) {
      // No out-vertex to swap in; the run degenerates to re-evaluation.
      result.trace.push_back({move + 1, current_edges, result.best_edges, temperature, false});
      continue;
    }
    in_pool.clear();
    out_pool.clear();
    for (int v = 0; v < n; ++v) {
      const bool tabu = tabu_until[static_cast<std::size_t>(v)] >= move;
      if ((current >> v) & 1ull) {
        if (!tabu) in_pool.push_back(v);
      } else if (!tabu) {
        out_pool.push_back(v);
      }
    }
    // Fallback when the tenure locked out a whole side.
    if (in_pool.empty()) {
      for (int v = 0; v < n; ++v) {
        if ((current >> v) & 1ull) in_pool.push_back(v);
      }
    }
    if (out_pool.empty()) {
      for (int v = 0; v < n; ++v) {
        if (!((current >> v) & 1ull)) out_pool.push_back(v);
      }
    }
    const int out_v = in_pool[uniform_below(rng, in_pool.size())];
    const int in_v = out_pool[uniform_below(rng, out_pool.size())];
    const VertexSubset proposed = (current & ~(1ull << out_v)) | (1ull << in_v);
    const int proposed_edges = edge_count(g, proposed);  // one oracle call
    const int delta = proposed_edges - current_edges;
    bool accept = delta >= 0;
    if (!accept && temperature > 0.0) {
      accept = uniform01(rng) < std::exp(static_cast<double>(delta) / temperature);
    }
    if (accept) {
      current = proposed;
      current_edges = proposed_edges;
      tabu_until[static_cast<std::size_t>(out_v)] = move + tenure;
      tabu_until[static_cast<std::size_t>(in_v)] = move + tenure;
      if (proposed_edges > result.best_edges) {
        result.best_edges = proposed_edges;
        result.best_subset = proposed;
      }
    }
    result.trace.push_back({move + 1, current_edges, result.best_edges, temperature, accept});
  }
  return result;
}

double sa_required_runs(double s) {
  if (!(s > 0.0)) throw std::invalid_argument("sa_required_runs: need s > 0");
  if (s >= 1.0) return 1.0;
  return std::max(1.0, std::log(1.0 - 0.95) / std::log(1.0 - s));
}

void write_sa_trace_csv_header(std::ostream& out) {
  out << "run_id,call_idx,current_edges,best_so_far,temperature,accepted\n";
}

void write_sa_trace_csv(std::ostream& out, const SaResult& result, int run_id) {
  for (const auto& s : result.trace) {
    out << run_id << ',' << s.call_index << ',' << s.current_edges << ',' << s.best_edges << ',';
    detail::write_double(out, s.temperature);
    out << ',' << (s.accepted ? 1 : 0) << '\n';
  }
}

}  // namespace dks
