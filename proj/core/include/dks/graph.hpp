#pragma once

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "dks/common.hpp"
#include "dks/rng.hpp"

namespace dks {

/// A vertex subset as a bitmask: bit i set means vertex i is in the subset.
/// Subsets are ordered by the numeric value of the mask, i.e. the
/// lexicographically smallest bitstring has vertex 0 in the least
/// significant bit. This is the tie-break order used throughout.
using VertexSubset = std::uint64_t;

inline int subset_size(VertexSubset s) { return std::popcount(s); }

/// Undirected simple graph on vertices {0, ..., n-1}. Immutable after
/// construction; safe to share across threads. Capacity is n <= 64 so that
/// subsets fit in a single machine word.
class Graph {
 public:
  /// Validates and normalizes: endpoints in range, i != j, no duplicates.
  /// Edges are stored with i < j, sorted lexicographically.
  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count_total() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::uint64_t neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool has_edge(int i, int j) const;

 private:
  Graph() = default;
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::uint64_t> adj_;
};

/// Number of edges of the subgraph induced by s. This is the objective
/// function; one classical evaluation of it is the unit of oracle-call
/// accounting.
int edge_count(const Graph& g, VertexSubset s);

/// Starting threshold floor(|E| / C(n,2) * C(k,2)): the expected edge count
/// of a uniformly random k-subset, rounded down.
int initial_threshold(const Graph& g, int k);

/// G(n, p): each pair included independently with probability p.
Graph erdos_renyi(int n, double p, std::uint64_t seed);

/// Rejection-samples G(n, p) until exactly one k-subset attains the maximum
/// induced edge count. Throws generation_error after max_attempts.
Graph erdos_renyi_unique_densest(int n, double p, int k, std::uint64_t seed,
                                 int max_attempts = 10000);

struct BruteForceResult {
  VertexSubset best = 0;
  int best_edges = 0;
  std::uint64_t calls = 0;  // always C(n, k)
};

/// Exhaustive scan over all C(n,k) subsets in increasing mask order; ties
/// resolved toward the smallest mask.
BruteForceResult brute_force_densest(const Graph& g, int k);

/// Visits all weight-k masks over n bits in increasing numeric order.
template <typename F>
void for_each_k_subset(int n, int k, F&& f) {
  if (k < 0 || k > n || n > 64) return;
  if (k == 0) {
    f(VertexSubset{0});
    return;
  }
  if (k == 64) {
    f(~0ull);
    return;
  }
  const std::uint64_t limit = (n == 64) ? ~0ull : (1ull << n) - 1;
  std::uint64_t v = (1ull << k) - 1;
  while (v <= limit) {
    f(v);
    // Gosper's hack: next higher integer with the same popcount.
    const std::uint64_t c = v & (~v + 1);
    const std::uint64_t r = v + c;
    if (r < v) break;  // carried past bit 63
    v = (((v ^ r) >> 2) / c) | r;
  }
}

// --- Edge-list text format -------------------------------------------------
// Line 1: "n m"; then m lines "i j" with 0 <= i < j < n, space separated,
// newline terminated, edges sorted lexicographically. Bit-exact.

void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list(std::istream& in);
void save_graph(const std::string& path, const Graph& g);
Graph load_graph(const std::string& path);

}  // namespace dks
