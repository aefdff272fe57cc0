#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dks {

/// Raised when a request exceeds a hard capacity bound (simulator width,
/// enumeration budget, binomial overflow). Maps to CLI exit code 2.
class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when rejection sampling exhausts its attempt budget.
class generation_error : public std::runtime_error {
 public:
  explicit generation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Binomial coefficient C(n, k). Throws capacity_error if the result does
/// not fit comfortably in 63 bits.
inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > (static_cast<unsigned __int128>(1) << 62)) {
      throw capacity_error("binomial(" + std::to_string(n) + "," + std::to_string(k) + ") overflows");
    }
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace dks
