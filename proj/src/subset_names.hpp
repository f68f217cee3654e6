#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace ilat::detail {

/// Boundaries between adjacent positions are named a, b, c, ... in order;
/// a mask spells as "{a,c}" ("{}" when empty).
inline std::string subset_spelling(std::uint32_t mask, std::size_t n) {
  std::string out = "{";
  bool first = true;
  for (std::size_t b = 0; b + 1 < n; ++b) {
    if (mask & (std::uint32_t{1} << b)) {
      if (!first) out += ",";
      out += static_cast<char>('a' + b);
      first = false;
    }
  }
  out += "}";
  return out;
}

/// Classic single-letter names of the eight four-item nodes, indexed by
/// boundary mask: {} O, {a} A, {b} B, {a,b} D, {c} C, {a,c} E, {b,c} F,
/// {a,b,c} U.
inline constexpr char kFourItemLetters[9] = "OABDCEFU";

}  // namespace ilat::detail
