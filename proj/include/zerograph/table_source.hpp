#pragma once

#include <map>
#include <string>

#include "zerograph/cache.hpp"

namespace zerograph {

// Hands out S_n/A_n tables, memoizing in memory and optionally through
// the disk cache (cache_dir empty = no disk cache).
class TableSource {
 public:
  explicit TableSource(std::string cache_dir = "", bool no_cache = false, int threads = 0,
                       int max_n = kDefaultMaxN);

  const SnTable& sn(int n);
  const AnTable& an(int n);
  int max_n() const { return max_n_; }
  int threads() const { return threads_; }

 private:
  std::string cache_dir_;
  bool no_cache_;
  int threads_;
  int max_n_;
  std::map<int, SnTable> sn_;
  std::map<int, AnTable> an_;
};

}  // namespace zerograph
