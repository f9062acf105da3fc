#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace zerograph {

// Structured pass/fail result of one check. A report passes exactly when
// it has no witnesses; informational payloads go to `details`.
struct VerificationReport {
  std::string check;
  std::string scope;
  std::vector<nlohmann::json> witnesses;
  nlohmann::json details = nlohmann::json::object();
  std::vector<std::string> notes;
  double elapsed_ms = 0.0;

  bool pass() const { return witnesses.empty(); }
  // timings are excluded by default so identical runs emit identical bytes
  nlohmann::json to_json(bool include_timing = false) const;
};

nlohmann::json reports_to_json(const std::vector<VerificationReport>& reports,
                               bool include_timing = false);

}  // namespace zerograph
