#pragma once

#include <filesystem>
#include <vector>

#include "zerograph/graphs.hpp"
#include "zerograph/theorems.hpp"

namespace zerograph {

// Battery over the bundled example tables: full validation, the duality
// battery, coprime-noncontainment, the per-group component/completeness
// expectations, and the subgraph expectations (which fail by design on
// PSL(2,11)). `optional_too` additionally requires the opt-in fixtures
// (m12.json, smallgroup_324_160.json), which are not bundled and need
// external generation.
std::vector<VerificationReport> fixture_battery(const std::filesystem::path& dir,
                                                bool optional_too = false);

}  // namespace zerograph
