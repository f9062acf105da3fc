#pragma once

#include <string>
#include <vector>

#include "zerograph/exact_value.hpp"
#include "zerograph/symchar.hpp"

namespace zerograph {

enum class AnCharKind { NonSplit, SplitPlus, SplitMinus };
enum class AnClassKind { Whole, SplitA, SplitB };

// Irreducible character of A_n. NonSplit rows carry the earlier (in the
// fixed reverse-lexicographic order) of {la, la'}; Split rows carry a
// self-conjugate la.
struct AnCharacter {
  AnCharKind kind;
  Partition lambda;
  std::string label() const;
};

struct AnClass {
  AnClassKind kind;
  Partition mu;
  std::string label() const;
};

struct AnTable {
  int n = 0;
  std::vector<AnCharacter> rows;
  std::vector<AnClass> cols;
  std::vector<Int> class_sizes;  // per column
  std::vector<Int> degrees;      // per row
  std::vector<std::vector<ExactValue>> values;

  int col_index(AnClassKind kind, const Partition& mu) const;
};

// Even S_n classes in the fixed column order; all-odd-distinct cycle
// types are replaced in place by a SplitA/SplitB pair.
std::vector<AnClass> an_classes(int n);

AnTable char_table_an(const SnTable& sn);
AnTable char_table_an(int n, int threads = 0, int max_n = kDefaultMaxN);

}  // namespace zerograph
