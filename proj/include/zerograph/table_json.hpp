#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "zerograph/char_table.hpp"

namespace zerograph {

inline constexpr int kTableFormatVersion = 1;

nlohmann::json value_to_json(const ExactValue& v);
ExactValue value_from_json(const nlohmann::json& j);

nlohmann::json table_to_json(const CharTable& t);
CharTable table_from_json(const nlohmann::json& j);

// Parses and fully validates; throws std::invalid_argument (naming the
// first violated invariant) or std::runtime_error on I/O problems.
CharTable ingest(const std::filesystem::path& path);

void write_table(const CharTable& t, const std::filesystem::path& path);

// Round-trips a computed S_n/A_n table through the generic model.
SnTable sn_from_char_table(const CharTable& t);
AnTable an_from_char_table(const CharTable& t);

}  // namespace zerograph
