#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "zerograph/table_json.hpp"

namespace zerograph {

// Disk cache for computed tables. Keys are (kind, n, format version);
// a format mismatch is a miss, a damaged file a corrupt signal --
// callers recompute in both cases.
struct CacheKey {
  std::string kind;  // "sn" or "an"
  int n;
  int version = kTableFormatVersion;

  std::string filename() const;
};

enum class CacheStatus { Hit, Miss, Corrupt };

struct CacheResult {
  CacheStatus status;
  std::optional<CharTable> table;
};

CacheResult cache_load(const std::filesystem::path& dir, const CacheKey& key);

// Atomic: writes a temp file in dir, then renames.
void cache_store(const std::filesystem::path& dir, const CacheKey& key, const CharTable& t);

}  // namespace zerograph
