#include "ph/report.hpp"

#include <nlohmann/json.hpp>

namespace ph {

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["identity"] = identity;
  j["passed"] = passed;
  j["max_deviation"] = max_deviation;
  j["witnesses"] = nlohmann::json::array();
  for (const auto& w : witnesses)
    j["witnesses"].push_back({{"what", w.what}, {"expected", w.expected}, {"actual", w.actual}});
  return j;
}

}  // namespace ph
