#include "zerograph/permutation.hpp"

#include <algorithm>
#include <stdexcept>

namespace zerograph {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.img_.resize(n);
  for (int i = 0; i < n; ++i) p.img_[i] = i;
  return p;
}

Permutation Permutation::from_one_line(const std::vector<int>& images) {
  int n = static_cast<int>(images.size());
  std::vector<bool> seen(n, false);
  Permutation p;
  p.img_.resize(n);
  for (int i = 0; i < n; ++i) {
    int v = images[i];
    if (v < 1 || v > n || seen[v - 1])
      throw std::invalid_argument("Permutation: images are not a bijection on 1..n");
    seen[v - 1] = true;
    p.img_[i] = v - 1;
  }
  return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation p = identity(n);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
      if (from < 1 || from > n) throw std::invalid_argument("Permutation: cycle entry out of range");
      if (p.img_[from - 1] != from - 1)
        throw std::invalid_argument("Permutation: cycles are not disjoint");
      p.img_[from - 1] = to - 1;
    }
  }
  // from_one_line revalidates bijectivity
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = p.img_[i] + 1;
  return from_one_line(images);
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("Permutation: degree mismatch");
  Permutation p;
  p.img_.resize(a.degree());
  for (int i = 0; i < a.degree(); ++i) p.img_[i] = a.img_[b.img_[i]];
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.img_.resize(degree());
  for (int i = 0; i < degree(); ++i) p.img_[img_[i]] = i;
  return p;
}

Partition Permutation::cycle_type() const {
  std::vector<bool> seen(degree(), false);
  std::vector<int> lens;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = img_[j];
      ++len;
    }
    lens.push_back(len);
  }
  return Partition::from_unsorted(std::move(lens));
}

}  // namespace zerograph
