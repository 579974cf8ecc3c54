#pragma once

// Internal numeric formatting. Shortest round-trip via std::to_chars keeps
// emitted files byte-stable across runs and platforms.

#include <charconv>
#include <string>

namespace trackmc::detail {

inline std::string format_double(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, p);
}

}  // namespace trackmc::detail
