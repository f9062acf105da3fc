#pragma once

#include <optional>
#include <vector>

#include "zerograph/partition.hpp"
#include "zerograph/permutation.hpp"

namespace zerograph {

inline constexpr int kDefaultMaxN = 14;

// Conjugacy-class data for the cycle type mu of S_n.
struct ClassData {
  Int size;            // n! / centralizer order
  int sign;            // +1 or -1
  bool in_an;          // sign == +1
  bool splits_in_an;   // all parts odd and pairwise distinct
};
ClassData class_data(const Partition& mu);

// chi^la at the class of cycle type mu, by the Murnaghan-Nakayama
// recursion (memoized internally). la and mu must partition the same n.
Int mn_value(const Partition& la, const Partition& mu);

// Full exact character table of S_n. Rows are all partitions of n in
// reverse-lexicographic order; columns are the cycle types in the
// reverse order, so the identity class (1^n) comes first.
struct SnTable {
  int n = 0;
  std::vector<Partition> rows;
  std::vector<Partition> cols;
  std::vector<Int> class_sizes;  // per column
  std::vector<int> class_signs;  // per column
  std::vector<Int> degrees;      // per row
  std::vector<std::vector<Int>> values;

  int row_index(const Partition& la) const;
  int col_index(const Partition& mu) const;
};

// threads = 0 means all available cores; results are identical for any
// thread count.
SnTable char_table_sn(int n, int threads = 0, int max_n = kDefaultMaxN);

// Independent small-n oracle: solves p_mu = sum_la chi^la(mu) s_la over
// exact rationals from semistandard-tableau expansions. Shares no code
// with the Murnaghan-Nakayama path. n <= 6.
SnTable oracle_table(int n);

}  // namespace zerograph
