#pragma once

#include <charconv>
#include <ostream>
#include <string_view>

namespace dks::detail {

// Shortest round-trippable decimal form; keeps rerun output byte-identical.
inline void write_double(std::ostream& out, double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  out << std::string_view(buf, static_cast<std::size_t>(res.ptr - buf));
}

}  // namespace dks::detail
