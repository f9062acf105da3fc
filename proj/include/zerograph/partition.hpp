#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zerograph/numeric.hpp"

namespace zerograph {

// Integer partition: weakly decreasing positive parts. The empty partition
// is the unique partition of 0. Parts are stored without trailing zeros.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // Sorts descending and drops zeros before validating.
  static Partition from_unsorted(std::vector<int> parts);

  // Parses labels of the form "(6,2)" or "()".
  static Partition parse(const std::string& label);

  int n() const { return n_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }
  // 1-based row access; 0 beyond the last row.
  int part(int i) const {
    return (i >= 1 && i <= rows()) ? parts_[i - 1] : 0;
  }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

  std::string to_string() const;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// True if a precedes b in reverse-lexicographic order (both partitions of
// the same n). This is the fixed ordering used everywhere for rows,
// columns and reports.
bool rev_lex_before(const Partition& a, const Partition& b);

struct PartitionHash {
  std::size_t operator()(const Partition& p) const;
};

// All partitions of n in reverse-lexicographic order; count is p(n).
std::vector<Partition> all_partitions(int n);

Partition conjugate(const Partition& la);

struct HookData {
  std::vector<std::vector<int>> hooks;  // hooks[i][j], 0-based cells
  Int degree;                           // n! / prod hooks
};
HookData hook_data(const Partition& la);
Int hook_degree(const Partition& la);

struct RimHookRemoval {
  Partition result;
  int height;  // leg length of the removed rim hook
  int row;     // 1-based corner cell of the hook
  int col;
};

// All ways to remove an r-rim-hook from la, via the beta-set encoding.
// Empty when no hook of length r exists. r >= 1 required.
std::vector<RimHookRemoval> rim_hook_removals(const Partition& la, int r);

// Remove r-rim-hooks until none remain (order independent). r >= 2.
Partition r_core(const Partition& la, int r);

struct DiagonalHooks {
  bool self_conjugate;
  Partition hooks;  // h_11 > h_22 > ... as a partition
};
DiagonalHooks diagonal_hooks(const Partition& la);

// First-column hook lengths H(la): la_i + rows - i, strictly decreasing.
std::vector<int> first_column_hooks(const Partition& la);

}  // namespace zerograph
