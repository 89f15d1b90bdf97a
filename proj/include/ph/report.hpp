#ifndef PH_REPORT_HPP
#define PH_REPORT_HPP

#include <nlohmann/json_fwd.hpp>

#include <string>
#include <vector>

namespace ph {

// One observed comparison inside an identity check.  `what` names the slot
// (usually a frequency or a sample point); expected/actual are rendered
// exactly so big integers survive.
struct Witness {
  std::string what;
  std::string expected;
  std::string actual;
};

// Per-identity pass/fail with witnesses.
struct VerificationReport {
  std::string identity;
  bool passed = true;
  double max_deviation = 0.0;
  std::vector<Witness> witnesses;

  void fail(std::string what, std::string expected, std::string actual) {
    passed = false;
    witnesses.push_back({std::move(what), std::move(expected), std::move(actual)});
  }

  void note(std::string what, std::string expected, std::string actual) {
    witnesses.push_back({std::move(what), std::move(expected), std::move(actual)});
  }

  nlohmann::json to_json() const;
};

}  // namespace ph

#endif  // PH_REPORT_HPP
