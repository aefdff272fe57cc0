#include "dks/qubo.hpp"

#include <bit>
#include <stdexcept>

namespace dks {

namespace {

std::size_t pair_index(int n, int i, int j) {
  // Row-major upper triangle, i < j.
  return static_cast<std::size_t>(i) * n - static_cast<std::size_t>(i) * (i + 1) / 2 +
         static_cast<std::size_t>(j - i - 1);
}

}  // namespace

double QuboModel::quad(int i, int j) const {
  if (i >= j || i < 0 || j >= n) throw std::invalid_argument("QuboModel::quad: need 0 <= i < j < n");
  return quadratic[pair_index(n, i, j)];
}

QuboModel qubo_build(const Graph& g, int k, double lambda) {
  const int n = g.vertex_count();
  if (k < 1 || k > n) throw std::invalid_argument("qubo_build: need 1 <= k <= n");
  const double bound = static_cast<double>(k) * (k - 1) / 2.0;
  if (lambda <= 0.0) lambda = bound + 1.0;
  if (!(lambda > bound)) {
    throw std::invalid_argument("qubo_build: lambda must exceed k(k-1)/2");
  }
  QuboModel q;
  q.n = n;
  q.k = k;
  q.lambda = lambda;
  q.offset = lambda * k * k;
  q.linear.assign(static_cast<std::size_t>(n), lambda * (1.0 - 2.0 * k));
  q.quadratic.assign(static_cast<std::size_t>(n) * (n - 1) / 2, 2.0 * lambda);
  for (const auto& [i, j] : g.edges()) {
    q.quadratic[pair_index(n, i, j)] -= 1.0;  // A_ij = 1
  }
  return q;
}

double qubo_energy(const QuboModel& q, VertexSubset x) {
  if (q.n < 64 && (x >> q.n) != 0) {
    throw std::invalid_argument("qubo_energy: assignment bit beyond variable range");
  }
  double e = q.offset;
  for (int i = 0; i < q.n; ++i) {
    if (!((x >> i) & 1ull)) continue;
    e += q.linear[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < q.n; ++j) {
      if ((x >> j) & 1ull) e += q.quadratic[pair_index(q.n, i, j)];
    }
  }
  return e;
}

}  // namespace dks
