#include "zerograph/report.hpp"

namespace zerograph {

nlohmann::json VerificationReport::to_json(bool include_timing) const {
  nlohmann::json j;
  j["check"] = check;
  j["scope"] = scope;
  j["status"] = pass() ? "pass" : "fail";
  j["witnesses"] = witnesses;
  if (!details.empty()) j["details"] = details;
  if (!notes.empty()) j["notes"] = notes;
  if (include_timing) j["elapsed_ms"] = elapsed_ms;
  return j;
}

nlohmann::json reports_to_json(const std::vector<VerificationReport>& reports,
                               bool include_timing) {
  nlohmann::json j;
  bool all = true;
  j["reports"] = nlohmann::json::array();
  for (const auto& r : reports) {
    j["reports"].push_back(r.to_json(include_timing));
    all = all && r.pass();
  }
  j["status"] = all ? "pass" : "fail";
  return j;
}

}  // namespace zerograph
