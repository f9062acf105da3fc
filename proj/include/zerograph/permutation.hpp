#pragma once

#include <vector>

#include "zerograph/partition.hpp"

namespace zerograph {

// Permutation of {1..n}; stored 0-based internally.
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int n);
  // one-line notation, images of 1..n
  static Permutation from_one_line(const std::vector<int>& images_one_based);
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles_one_based);

  int degree() const { return static_cast<int>(img_.size()); }
  // image of point x in 1..n
  int apply(int x) const { return img_[x - 1] + 1; }

  // (a * b)(x) = a(b(x))
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  Permutation inverse() const;

  Partition cycle_type() const;

  bool operator==(const Permutation& o) const { return img_ == o.img_; }

 private:
  std::vector<int> img_;
};

}  // namespace zerograph
