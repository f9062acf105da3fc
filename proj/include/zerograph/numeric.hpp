#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <utility>

namespace zerograph {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int factorial(int n);

// Writes |x| = s^2 * f with f squarefree; returns {s, f * sign(x)}.
// squarefree_decompose(0) = {0, 0}.
std::pair<Int, Int> squarefree_decompose(const Int& x);

// Smallest prime factor of x >= 2, by trial division.
Int smallest_prime_factor(const Int& x);

inline Int isqrt(const Int& x) { return boost::multiprecision::sqrt(x); }

// Raised when a computation exceeds a configured size limit.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace zerograph
