#pragma once

#include <cstdint>
#include <limits>
#include <random>

#include "dks/common.hpp"

namespace dks {

/// Engine used everywhere. mt19937_64 output is pinned by the standard, so
/// results are reproducible across platforms as long as we avoid
/// std::uniform_*_distribution (whose algorithms are implementation-defined).
using Rng = std::mt19937_64;

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Derives an independent stream seed from a master seed and up to three
/// stream coordinates (e.g. point index, graph index, run index).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0,
                                 std::uint64_t c = 0) {
  std::uint64_t s = splitmix64(master ^ 0xD1B54A32D192ED03ull);
  s = splitmix64(s ^ a);
  s = splitmix64(s ^ b);
  s = splitmix64(s ^ c);
  return s;
}

/// Uniform integer in [0, n). Rejection-sampled, no modulo bias.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_below: n must be positive");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % n;
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline bool bernoulli(Rng& rng, double p) { return uniform01(rng) < p; }

/// Uniform k-subset of {0, ..., n-1} as a bitmask (Floyd's algorithm).
inline std::uint64_t random_k_subset(Rng& rng, int n, int k) {
  if (k < 0 || n < 0 || k > n || n > 64) {
    throw std::invalid_argument("random_k_subset: need 0 <= k <= n <= 64");
  }
  std::uint64_t mask = 0;
  for (int j = n - k; j < n; ++j) {
    const int t = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(j) + 1));
    const std::uint64_t bit = 1ull << t;
    if (mask & bit) {
      mask |= 1ull << j;
    } else {
      mask |= bit;
    }
  }
  return mask;
}

}  // namespace dks
