#pragma once

#include <span>
#include <utility>
#include <vector>

#include "dks/rng.hpp"

namespace dks {

/// Linear-interpolation quantile of a sample (q in [0, 1]).
double quantile(std::vector<double> values, double q);

/// Median: midpoint of the two central order statistics for even sizes.
double median(std::vector<double> values);

struct BootstrapResult {
  double mean = 0.0;
  double lo = 0.0;
  double hi = 0.0;
};

/// Two-level bootstrap respecting runs nested in graphs. Per replicate:
/// resample each graph's runs with replacement and take the median, then
/// resample graphs with replacement and average those medians. Reports the
/// mean of the replicate statistics and the central `ci` percentile
/// interval.
BootstrapResult hierarchical_bootstrap(const std::vector<std::vector<double>>& per_graph_runs,
                                       int n_boot, double ci, Rng& rng);

struct FitResult {
  double a = 0.0;
  double b = 0.0;
  double residual_rms = 0.0;  // RMS of log-space residuals
  int points = 0;
};

/// Ordinary least squares on (log x, log y): y = a * x^b.
FitResult power_law_fit(std::span<const std::pair<double, double>> points);

}  // namespace dks
