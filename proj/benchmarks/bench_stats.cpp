#include <benchmark/benchmark.h>

#include "dks/rng.hpp"
#include "dks/stats.hpp"

using namespace dks;

namespace {

std::vector<std::vector<double>> synthetic_costs(int graphs, int runs) {
  Rng rng(99);
  std::vector<std::vector<double>> data(graphs);
  for (auto& g : data) {
    for (int r = 0; r < runs; ++r) {
      g.push_back(100.0 + static_cast<double>(uniform_below(rng, 200)));
    }
  }
  return data;
}

void BM_HierarchicalBootstrap(benchmark::State& state) {
  const auto data = synthetic_costs(20, 20);
  Rng rng(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hierarchical_bootstrap(data, static_cast<int>(state.range(0)), 0.99, rng));
  }
}
BENCHMARK(BM_HierarchicalBootstrap)->Arg(200)->Arg(2000);

void BM_PowerLawFit(benchmark::State& state) {
  std::vector<std::pair<double, double>> pts;
  for (double x = 10; x < 1e6; x *= 1.5) pts.emplace_back(x, 3.0 * std::sqrt(x));
  for (auto _ : state) {
    benchmark::DoNotOptimize(power_law_fit(pts));
  }
}
BENCHMARK(BM_PowerLawFit);

}  // namespace
