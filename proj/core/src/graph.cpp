#include "dks/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace dks {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 1) throw std::invalid_argument("Graph: need at least one vertex");
  if (n > 64) throw capacity_error("Graph: at most 64 vertices supported");
  Graph g;
  g.n_ = n;
  for (auto& [i, j] : edges) {
    if (i == j) throw std::invalid_argument("Graph: self-loop");
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= n) throw std::invalid_argument("Graph: endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("Graph: duplicate edge");
  }
  g.edges_ = std::move(edges);
  g.adj_.assign(static_cast<std::size_t>(n), 0);
  for (const auto& [i, j] : g.edges_) {
    g.adj_[static_cast<std::size_t>(i)] |= 1ull << j;
    g.adj_[static_cast<std::size_t>(j)] |= 1ull << i;
  }
  return g;
}

bool Graph::has_edge(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) return false;
  return (adj_[static_cast<std::size_t>(i)] >> j) & 1ull;
}

int edge_count(const Graph& g, VertexSubset s) {
  const int n = g.vertex_count();
  if (n < 64 && (s >> n) != 0) {
    throw std::invalid_argument("edge_count: subset bit beyond vertex range");
  }
  int twice = 0;
  std::uint64_t rest = s;
  while (rest) {
    const int v = std::countr_zero(rest);
    rest &= rest - 1;
    twice += std::popcount(g.neighbors(v) & s);
  }
  return twice / 2;
}

int initial_threshold(const Graph& g, int k) {
  const int n = g.vertex_count();
  if (k < 1 || k > n) throw std::invalid_argument("initial_threshold: need 1 <= k <= n");
  if (k < 2 || g.edge_count_total() == 0) return 0;
  // floor(|E| * C(k,2) / C(n,2)), exact in 64-bit for n <= 64.
  const std::uint64_t num =
      static_cast<std::uint64_t>(g.edge_count_total()) * static_cast<std::uint64_t>(k) *
      static_cast<std::uint64_t>(k - 1);
  const std::uint64_t den = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1);
  return static_cast<int>(num / den);
}

Graph erdos_renyi(int n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("erdos_renyi: p must lie in [0, 1]");
  if (n < 1) throw std::invalid_argument("erdos_renyi: need at least one vertex");
  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (uniform01(rng) < p) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

namespace {

// Returns how many k-subsets attain the maximum, and the maximum itself.
std::pair<int, std::uint64_t> argmax_multiplicity(const Graph& g, int k) {
  int best = -1;
  std::uint64_t ties = 0;
  for_each_k_subset(g.vertex_count(), k, [&](VertexSubset s) {
    const int e = edge_count(g, s);
    if (e > best) {
      best = e;
      ties = 1;
    } else if (e == best) {
      ++ties;
    }
  });
  return {best, ties};
}

}  // namespace

Graph erdos_renyi_unique_densest(int n, double p, int k, std::uint64_t seed, int max_attempts) {
  if (k < 1 || k > n) throw std::invalid_argument("erdos_renyi_unique_densest: need 1 <= k <= n");
  Rng rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Graph g = erdos_renyi(n, p, rng());
    if (argmax_multiplicity(g, k).second == 1) return g;
  }
  throw generation_error("erdos_renyi_unique_densest: no unique-optimum graph within " +
                         std::to_string(max_attempts) + " attempts");
}

BruteForceResult brute_force_densest(const Graph& g, int k) {
  const int n = g.vertex_count();
  if (k < 0 || k > n) throw std::invalid_argument("brute_force_densest: need 0 <= k <= n");
  BruteForceResult r;
  r.calls = binomial(n, k);
  int best = -1;
  for_each_k_subset(n, k, [&](VertexSubset s) {
    const int e = edge_count(g, s);
    if (e > best) {  // strict: keeps the smallest mask among ties
      best = e;
      r.best = s;
    }
  });
  r.best_edges = best < 0 ? 0 : best;
  return r;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count_total() << '\n';
  for (const auto& [i, j] : g.edges()) {
    out << i << ' ' << j << '\n';
  }
}

Graph read_edge_list(std::istream& in) {
  int n = 0, m = 0;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list: bad header");
  if (m < 0) throw std::invalid_argument("edge list: negative edge count");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) {
    int i = 0, j = 0;
    if (!(in >> i >> j)) throw std::invalid_argument("edge list: truncated");
    if (i >= j) throw std::invalid_argument("edge list: edges must satisfy i < j");
    edges.emplace_back(i, j);
  }
  return Graph::from_edges(n, std::move(edges));
}

void save_graph(const std::string& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_edge_list(out, g);
  if (!out) throw std::runtime_error("write failed: " + path);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  return read_edge_list(in);
}

}  // namespace dks
