#pragma once

#include <string>
#include <vector>

#include "zerograph/numeric.hpp"

namespace zerograph {

// Coefficients of an integer polynomial, lowest degree first, trimmed.
using IntPoly = std::vector<Int>;

// Phi_m via the division recurrence x^m - 1 = prod_{d | m} Phi_d.
IntPoly cyclotomic_polynomial(int m);

// Element of Q(zeta_m), stored as rational coefficients of
// 1, zeta, ..., zeta^{m-1} and kept reduced modulo Phi_m (so only the
// first deg Phi_m entries can be nonzero).
class CycloValue {
 public:
  // Reduces mod Phi_m; coeffs may have any length <= m.
  CycloValue(int m, std::vector<Rat> coeffs);

  int m() const { return m_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;  // true when only the constant term survives
  Rat constant_term() const { return c_.empty() ? Rat(0) : c_[0]; }

  CycloValue conj() const;  // zeta^k -> zeta^{m-k}

  // Re-embeds into Q(zeta_mm) for m | mm.
  CycloValue promoted(int mm) const;

  friend CycloValue operator+(const CycloValue& a, const CycloValue& b);
  friend CycloValue operator-(const CycloValue& a, const CycloValue& b);
  friend CycloValue operator*(const CycloValue& a, const CycloValue& b);
  CycloValue operator-() const;
  CycloValue scaled(const Rat& r) const;

  bool operator==(const CycloValue& o) const;

  std::string str() const;  // e.g. "-1+z6" with z6 a primitive 6th root

 private:
  int m_;
  std::vector<Rat> c_;  // size m_, canonical

  void reduce();
};

}  // namespace zerograph
