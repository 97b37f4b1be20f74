#pragma once

#include <string>

#include "descalg/checked.hpp"

namespace descalg::detail {

template <typename Terms, typename Format>
std::string render_terms(const Terms& terms, Format format) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms) {
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const Coeff mag = c < 0 ? -c : c;
    out += std::to_string(mag) + "*" + format(key);
    first = false;
  }
  return out;
}

}  // namespace descalg::detail
