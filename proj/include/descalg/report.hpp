#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace descalg {

struct Counterexample {
  std::string left;
  std::string right;
  std::string detail;
};

/// Outcome of one verification check at one rank.
struct CheckReport {
  std::string check;
  int n = 0;
  bool pass = true;
  std::vector<Counterexample> counterexamples;
  /// Informational findings; never affect `pass`.
  nlohmann::ordered_json findings = nlohmann::ordered_json::array();
  std::size_t cases = 0;
  double elapsed_ms = 0.0;

  void fail(Counterexample c) {
    pass = false;
    counterexamples.push_back(std::move(c));
  }
  nlohmann::ordered_json to_json() const;
};

using IdealReport = CheckReport;
using QuotientReport = CheckReport;

}  // namespace descalg
