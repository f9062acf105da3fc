#pragma once

#include <vector>

#include "zerograph/char_table.hpp"
#include "zerograph/permutation.hpp"

namespace zerograph {

// Characters whose kernel {K : chi(K) = chi(1)} is the identity class alone.
std::vector<std::size_t> faithful_characters(const CharTable& t);

// Squared bi-invariant distance 2(chi(1) - Re chi(a b^{-1})) induced by
// row `chi` of an S_n table. All authoritative computation stays on the
// exact square; roots appear only in display paths.
Int metric_sq_distance(const SnTable& t, int chi, const Permutation& a, const Permutation& b);

// Partition of the classes by exact equality of chi(1) - Re chi(K).
struct MetricPartition {
  std::vector<int> block_of;                  // per class, ids in first-seen order
  std::vector<std::vector<int>> blocks;       // class indices per block
  std::vector<ExactValue> block_values;       // chi(1) - Re chi(K) per block
};
MetricPartition metric_partition(const CharTable& t, std::size_t chi);

inline bool same_partition(const MetricPartition& a, const MetricPartition& b) {
  return a.block_of == b.block_of;
}

// Faithful irreducible rows of S_n induce pairwise distinct partitions;
// details record a separating class pair per character pair. n >= 3.
VerificationReport verify_theorem_6_1(const SnTable& t);

// Decides sqrt(x) <= sqrt(y) + sqrt(z) for non-negative rationals.
// Equality is settled algebraically first; strict comparisons run dyadic
// interval arithmetic starting at `start_bits` of precision, doubling
// until the intervals separate.
bool sqrt_leq_sqrt_plus_sqrt(const Rat& x, const Rat& y, const Rat& z,
                             unsigned start_bits = 100);

}  // namespace zerograph
