#include "zerograph/numeric.hpp"

namespace zerograph {

Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

std::pair<Int, Int> squarefree_decompose(const Int& x) {
  if (x == 0) return {0, 0};
  Int rest = abs(x);
  Int s = 1, f = 1;
  for (Int p = 2; p * p <= rest; ++p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) s *= p;
    if (e % 2) f *= p;
  }
  f *= rest;
  if (x < 0) f = -f;
  return {s, f};
}

Int smallest_prime_factor(const Int& x) {
  if (x < 2) throw std::invalid_argument("smallest_prime_factor: x < 2");
  for (Int p = 2; p * p <= x; ++p)
    if (x % p == 0) return p;
  return x;
}

}  // namespace zerograph
