#include "zerograph/table_source.hpp"

namespace zerograph {

TableSource::TableSource(std::string cache_dir, bool no_cache, int threads, int max_n)
    : cache_dir_(std::move(cache_dir)), no_cache_(no_cache), threads_(threads), max_n_(max_n) {}

const SnTable& TableSource::sn(int n) {
  auto it = sn_.find(n);
  if (it != sn_.end()) return it->second;
  if (!no_cache_ && !cache_dir_.empty()) {
    CacheResult res = cache_load(cache_dir_, CacheKey{"sn", n});
    if (res.status == CacheStatus::Hit) {
      try {
        return sn_.emplace(n, sn_from_char_table(*res.table)).first->second;
      } catch (const std::exception&) {
        // treat as corrupt: fall through and recompute
      }
    }
  }
  SnTable t = char_table_sn(n, threads_, max_n_);
  if (!no_cache_ && !cache_dir_.empty()) cache_store(cache_dir_, CacheKey{"sn", n}, to_char_table(t));
  return sn_.emplace(n, std::move(t)).first->second;
}

const AnTable& TableSource::an(int n) {
  auto it = an_.find(n);
  if (it != an_.end()) return it->second;
  if (!no_cache_ && !cache_dir_.empty()) {
    CacheResult res = cache_load(cache_dir_, CacheKey{"an", n});
    if (res.status == CacheStatus::Hit) {
      try {
        return an_.emplace(n, an_from_char_table(*res.table)).first->second;
      } catch (const std::exception&) {
      }
    }
  }
  AnTable t = char_table_an(sn(n));
  if (!no_cache_ && !cache_dir_.empty()) cache_store(cache_dir_, CacheKey{"an", n}, to_char_table(t));
  return an_.emplace(n, std::move(t)).first->second;
}

}  // namespace zerograph
