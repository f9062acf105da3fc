#include "zerograph/symchar.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <span>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace zerograph {

ClassData class_data(const Partition& mu) {
  ClassData cd;
  // centralizer order: prod over part sizes i of i^{m_i} * m_i!
  Int z = 1;
  std::map<int, int> mult;
  for (int part : mu.parts()) ++mult[part];
  for (auto [i, m] : mult) {
    for (int k = 0; k < m; ++k) z *= i;
    z *= factorial(m);
  }
  cd.size = factorial(mu.n()) / z;
  cd.sign = ((mu.n() - mu.rows()) % 2 == 0) ? 1 : -1;
  cd.in_an = cd.sign == 1;
  bool all_odd_distinct = true;
  for (int part : mu.parts())
    if (part % 2 == 0) all_odd_distinct = false;
  for (auto [i, m] : mult)
    if (m > 1) all_odd_distinct = false;
  cd.splits_in_an = cd.in_an && all_odd_distinct && mu.n() > 0;
  return cd;
}

namespace {

// Memo for the MN recursion, keyed by (remaining shape, remaining cycle
// suffix). Sharded so that table cells can be evaluated concurrently;
// values are pure functions of the key, so racing inserts are benign.
class MnMemo {
 public:
  std::optional<Int> find(const std::vector<int>& key) const {
    Shard& s = shard(key);
    std::lock_guard<std::mutex> lock(s.mu);
    auto it = s.map.find(key);
    if (it == s.map.end()) return std::nullopt;
    return it->second;
  }
  void insert(const std::vector<int>& key, const Int& value) {
    Shard& s = shard(key);
    std::lock_guard<std::mutex> lock(s.mu);
    s.map.emplace(key, value);
  }

 private:
  struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
      std::size_t h = 1469598103934665603ull;
      for (int x : v) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b9;
        h *= 1099511628211ull;
      }
      return h;
    }
  };
  struct Shard {
    mutable std::mutex mu;
    std::unordered_map<std::vector<int>, Int, VecHash> map;
  };
  static constexpr int kShards = 64;
  mutable Shard shards_[kShards];

  Shard& shard(const std::vector<int>& key) const {
    return shards_[VecHash{}(key) % kShards];
  }
};

std::vector<int> memo_key(const Partition& la, std::span<const int> mu) {
  std::vector<int> key;
  key.reserve(la.rows() + mu.size() + 1);
  key.insert(key.end(), la.parts().begin(), la.parts().end());
  key.push_back(-1);
  key.insert(key.end(), mu.begin(), mu.end());
  return key;
}

Int mn_recurse(const Partition& la, std::span<const int> mu, MnMemo& memo) {
  if (mu.empty()) return 1;  // la is empty here (sizes agree by induction)
  std::vector<int> key = memo_key(la, mu);
  if (auto hit = memo.find(key)) return *hit;
  int r = mu.front();
  Int total = 0;
  for (const auto& rem : rim_hook_removals(la, r)) {
    Int sub = mn_recurse(rem.result, mu.subspan(1), memo);
    if (rem.height % 2)
      total -= sub;
    else
      total += sub;
  }
  memo.insert(key, total);
  return total;
}

}  // namespace

Int mn_value(const Partition& la, const Partition& mu) {
  if (la.n() != mu.n())
    throw std::invalid_argument("mn_value: la and mu must partition the same n");
  MnMemo memo;
  return mn_recurse(la, std::span<const int>(mu.parts()), memo);
}

int SnTable::row_index(const Partition& la) const {
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i] == la) return static_cast<int>(i);
  throw std::invalid_argument("SnTable: unknown row " + la.to_string());
}

int SnTable::col_index(const Partition& mu) const {
  for (std::size_t i = 0; i < cols.size(); ++i)
    if (cols[i] == mu) return static_cast<int>(i);
  throw std::invalid_argument("SnTable: unknown column " + mu.to_string());
}

SnTable char_table_sn(int n, int threads, int max_n) {
  if (n < 1) throw std::invalid_argument("char_table_sn: n >= 1 required");
  if (n > max_n)
    throw ResourceLimitError("char_table_sn: n = " + std::to_string(n) +
                             " exceeds the configured maximum " + std::to_string(max_n));
  SnTable t;
  t.n = n;
  t.rows = all_partitions(n);
  t.cols = t.rows;
  std::reverse(t.cols.begin(), t.cols.end());
  for (const Partition& mu : t.cols) {
    ClassData cd = class_data(mu);
    t.class_sizes.push_back(cd.size);
    t.class_signs.push_back(cd.sign);
  }
  for (const Partition& la : t.rows) t.degrees.push_back(hook_degree(la));

  std::size_t nrows = t.rows.size(), ncols = t.cols.size();
  t.values.assign(nrows, std::vector<Int>(ncols));

  MnMemo memo;
  auto fill_col = [&](std::size_t c) {
    std::span<const int> mu(t.cols[c].parts());
    for (std::size_t r = 0; r < nrows; ++r)
      t.values[r][c] = mn_recurse(t.rows[r], mu, memo);
  };

  unsigned hw = std::thread::hardware_concurrency();
  std::size_t workers = threads > 0 ? static_cast<std::size_t>(threads) : (hw ? hw : 1);
  workers = std::min(workers, ncols);
  if (workers <= 1) {
    for (std::size_t c = 0; c < ncols; ++c) fill_col(c);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t c = next.fetch_add(1);
          if (c >= ncols) return;
          fill_col(c);
        }
      });
    for (auto& th : pool) th.join();
  }

  // self-test: identity column must reproduce the hook-formula degrees
  for (std::size_t r = 0; r < nrows; ++r)
    if (t.values[r][0] != t.degrees[r])
      throw std::logic_error("char_table_sn: identity column disagrees with hook formula");
  return t;
}

}  // namespace zerograph
