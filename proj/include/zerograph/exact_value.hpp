#pragma once

#include <string>
#include <variant>
#include <vector>

#include "zerograph/cyclo.hpp"
#include "zerograph/numeric.hpp"

namespace zerograph {

// a + b*sqrt(d) with b != 0 and d squarefree, d not in {0, 1}. Only built
// through ExactValue::quad, which canonicalizes.
struct QuadValue {
  Rat a;
  Rat b;
  long long d;

  bool operator==(const QuadValue& o) const = default;
};

// Exact character value: integer, rational, quadratic irrational or
// cyclotomic. Arithmetic keeps the smallest representation (an integral
// rational collapses to Int, a rational quadratic to Rat, ...).
// Mixing a genuine quadratic with a genuine cyclotomic is rejected.
class ExactValue {
 public:
  enum class Kind { Integer, Rational, Quadratic, Cyclotomic };

  ExactValue() : v_(Int(0)) {}
  ExactValue(int v) : v_(Int(v)) {}
  ExactValue(long long v) : v_(Int(v)) {}
  ExactValue(Int v) : v_(std::move(v)) {}
  ExactValue(const Rat& v) { *this = rational(v); }

  static ExactValue rational(const Rat& r);
  static ExactValue quad(const Rat& a, const Rat& b, const Int& d);
  static ExactValue cyclo(int m, std::vector<Rat> coeffs);
  static ExactValue zeta_power(int m, int k);

  Kind kind() const { return static_cast<Kind>(v_.index()); }
  bool is_zero() const;
  bool is_rational() const { return v_.index() <= 1; }
  Rat as_rational() const;  // throws unless Integer/Rational
  bool is_integer() const { return v_.index() == 0; }
  const Int& as_integer() const;
  const QuadValue& quad_value() const { return std::get<QuadValue>(v_); }
  const CycloValue& cyclo_value() const { return std::get<CycloValue>(v_); }

  ExactValue conj() const;       // complex conjugate
  ExactValue real_part() const;  // (v + conj v) / 2

  friend ExactValue operator+(const ExactValue& x, const ExactValue& y);
  friend ExactValue operator-(const ExactValue& x, const ExactValue& y);
  friend ExactValue operator*(const ExactValue& x, const ExactValue& y);
  ExactValue operator-() const;

  // Semantic equality (Int 2 == Rat 2/1; values in different cyclotomic
  // fields compare through the compositum).
  bool operator==(const ExactValue& o) const;
  bool operator!=(const ExactValue& o) const { return !(*this == o); }

  std::string str() const;

 private:
  std::variant<Int, Rat, QuadValue, CycloValue> v_;
};

ExactValue operator*(const Int& x, const ExactValue& y);

}  // namespace zerograph
