#include "zerograph/cache.hpp"

#include <fstream>
#include <random>

namespace zerograph {

std::string CacheKey::filename() const {
  return kind + "_" + std::to_string(n) + "_v" + std::to_string(version) + ".json";
}

CacheResult cache_load(const std::filesystem::path& dir, const CacheKey& key) {
  std::filesystem::path path = dir / key.filename();
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return {CacheStatus::Miss, std::nullopt};
  try {
    CharTable t = ingest(path);
    return {CacheStatus::Hit, std::move(t)};
  } catch (const std::exception&) {
    return {CacheStatus::Corrupt, std::nullopt};
  }
}

void cache_store(const std::filesystem::path& dir, const CacheKey& key, const CharTable& t) {
  std::filesystem::create_directories(dir);
  std::filesystem::path final_path = dir / key.filename();
  // unique temp name so concurrent writers never collide
  static std::mt19937_64 rng(std::random_device{}());
  std::filesystem::path tmp = dir / (key.filename() + ".tmp" + std::to_string(rng()));
  write_table(t, tmp);
  std::filesystem::rename(tmp, final_path);
}

}  // namespace zerograph
