#include "descalg/report.hpp"

namespace descalg {

nlohmann::ordered_json CheckReport::to_json() const {
  nlohmann::ordered_json ces = nlohmann::ordered_json::array();
  for (const auto& c : counterexamples)
    ces.push_back({{"left", c.left}, {"right", c.right}, {"detail", c.detail}});
  nlohmann::ordered_json j = {{"check", check}, {"n", n}, {"pass", pass}, {"counterexamples", ces}};
  j["cases"] = cases;
  if (!findings.empty()) j["findings"] = findings;
  j["elapsed_ms"] = elapsed_ms;
  return j;
}

}  // namespace descalg
