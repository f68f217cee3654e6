#pragma once

#include <string>

namespace ilat::detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

inline std::string dot_quote(const std::string& s) { return "\"" + dot_escape(s) + "\""; }

}  // namespace ilat::detail
