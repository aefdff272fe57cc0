#pragma once

#include <cstdint>
#include <vector>

#include "dks/graph.hpp"

namespace dks {

/// Quadratic unconstrained binary model for the size-k densest-subgraph
/// objective: minimizing energy(x) = -edges(x) + lambda * (|x| - k)^2.
/// The constant lambda*k^2 is kept in `offset` so the minimum over feasible
/// subsets equals minus the optimal edge count.
struct QuboModel {
  int n = 0;
  int k = 0;
  double lambda = 0.0;
  double offset = 0.0;                 // lambda * k^2
  std::vector<double> linear;          // Q_ii = lambda * (1 - 2k)
  std::vector<double> quadratic;       // Q_ij = 2*lambda - A_ij, packed i < j
  double quad(int i, int j) const;     // requires i < j
};

/// Builds the model. Requires lambda > k(k-1)/2 (strict); pass lambda <= 0
/// to use the default k(k-1)/2 + 1, the smallest integer above the bound.
QuboModel qubo_build(const Graph& g, int k, double lambda = 0.0);

/// Evaluates the model on an n-bit assignment (not restricted to weight k).
double qubo_energy(const QuboModel& q, VertexSubset x);

}  // namespace dks
