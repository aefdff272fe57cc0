#include "dks/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dks {

double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw std::invalid_argument("quantile: empty sample");
  if (q < 0.0 || q > 1.0) throw std::invalid_argument("quantile: q must lie in [0, 1]");
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return values[lo] * (1.0 - frac) + values[hi] * frac;
}

double median(std::vector<double> values) { return quantile(std::move(values), 0.5); }

namespace {

double resampled_median(const std::vector<double>& runs, Rng& rng, std::vector<double>& scratch) {
  scratch.clear();
  for (std::size_t i = 0; i < runs.size(); ++i) {
    scratch.push_back(runs[uniform_below(rng, runs.size())]);
  }
  std::sort(scratch.begin(), scratch.end());
  const std::size_t n = scratch.size();
  if (n % 2 == 1) return scratch[n / 2];
  return 0.5 * (scratch[n / 2 - 1] + scratch[n / 2]);
}

}  // namespace

BootstrapResult hierarchical_bootstrap(const std::vector<std::vector<double>>& per_graph_runs,
                                       int n_boot, double ci, Rng& rng) {
  if (per_graph_runs.empty()) throw std::invalid_argument("hierarchical_bootstrap: no graphs");
  for (const auto& runs : per_graph_runs) {
    if (runs.empty()) throw std::invalid_argument("hierarchical_bootstrap: graph with no runs");
  }
  if (n_boot < 1) throw std::invalid_argument("hierarchical_bootstrap: need n_boot >= 1");
  if (!(ci > 0.0 && ci < 1.0)) throw std::invalid_argument("hierarchical_bootstrap: bad ci");

  const std::size_t graphs = per_graph_runs.size();
  std::vector<double> medians(graphs);
  std::vector<double> replicates(static_cast<std::size_t>(n_boot));
  std::vector<double> scratch;
  for (int b = 0; b < n_boot; ++b) {
    for (std::size_t gi = 0; gi < graphs; ++gi) {
      medians[gi] = resampled_median(per_graph_runs[gi], rng, scratch);
    }
    double sum = 0.0;
    for (std::size_t gi = 0; gi < graphs; ++gi) {
      sum += medians[uniform_below(rng, graphs)];
    }
    replicates[static_cast<std::size_t>(b)] = sum / static_cast<double>(graphs);
  }
  BootstrapResult r;
  double sum = 0.0;
  for (double v : replicates) sum += v;
  r.mean = sum / static_cast<double>(n_boot);
  const double tail = (1.0 - ci) / 2.0;
  r.lo = quantile(replicates, tail);
  r.hi = quantile(std::move(replicates), 1.0 - tail);
  return r;
}

FitResult power_law_fit(std::span<const std::pair<double, double>> points) {
  if (points.size() < 2) throw std::invalid_argument("power_law_fit: need at least two points");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const auto& [x, y] : points) {
    if (!(x > 0.0) || !(y > 0.0)) {
      throw std::invalid_argument("power_law_fit: points must be positive");
    }
    const double lx = std::log(x);
    const double ly = std::log(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double n = static_cast<double>(points.size());
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("power_law_fit: degenerate abscissae");
  FitResult f;
  f.b = (n * sxy - sx * sy) / denom;
  const double intercept = (sy - f.b * sx) / n;
  f.a = std::exp(intercept);
  double ss = 0.0;
  for (const auto& [x, y] : points) {
    const double r = std::log(y) - (intercept + f.b * std::log(x));
    ss += r * r;
  }
  f.residual_rms = std::sqrt(ss / n);
  f.points = static_cast<int>(points.size());
  return f;
}

}  // namespace dks
