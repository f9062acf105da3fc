#include "zerograph/exact_value.hpp"

#include <stdexcept>

namespace zerograph {

namespace {

Rat rat_of(const ExactValue& v) { return v.as_rational(); }

[[noreturn]] void mixed_fields() {
  throw std::domain_error("mixed quadratic/cyclotomic arithmetic is not supported");
}

}  // namespace

ExactValue ExactValue::rational(const Rat& r) {
  ExactValue v;
  if (denominator(r) == 1)
    v.v_ = numerator(r);
  else
    v.v_ = r;
  return v;
}

ExactValue ExactValue::quad(const Rat& a, const Rat& b, const Int& d) {
  if (b == 0 || d == 0) return rational(a);
  auto [s, f] = squarefree_decompose(d);
  Rat bb = b * Rat(s);
  if (f == 1) return rational(a + bb);
  ExactValue v;
  v.v_ = QuadValue{a, bb, f.convert_to<long long>()};
  return v;
}

ExactValue ExactValue::cyclo(int m, std::vector<Rat> coeffs) {
  CycloValue c(m, std::move(coeffs));
  if (c.is_rational()) return rational(c.constant_term());
  ExactValue v;
  v.v_ = std::move(c);
  return v;
}

ExactValue ExactValue::zeta_power(int m, int k) {
  if (m < 1) throw std::invalid_argument("zeta_power: m >= 1 required");
  k %= m;
  if (k < 0) k += m;
  std::vector<Rat> c(k + 1, Rat(0));
  c[k] = 1;
  return cyclo(m, std::move(c));
}

bool ExactValue::is_zero() const {
  // canonical forms collapse zero to Int(0)
  return is_integer() && as_integer() == 0;
}

Rat ExactValue::as_rational() const {
  switch (kind()) {
    case Kind::Integer: return Rat(std::get<Int>(v_));
    case Kind::Rational: return std::get<Rat>(v_);
    default: throw std::domain_error("as_rational: value is irrational");
  }
}

const Int& ExactValue::as_integer() const { return std::get<Int>(v_); }

ExactValue ExactValue::conj() const {
  switch (kind()) {
    case Kind::Integer:
    case Kind::Rational: return *this;
    case Kind::Quadratic: {
      const QuadValue& q = quad_value();
      if (q.d > 0) return *this;  // real
      return quad(q.a, -q.b, Int(q.d));
    }
    case Kind::Cyclotomic: {
      CycloValue c = cyclo_value().conj();
      if (c.is_rational()) return rational(c.constant_term());
      ExactValue v;
      v.v_ = std::move(c);
      return v;
    }
  }
  throw std::logic_error("unreachable");
}

ExactValue ExactValue::real_part() const {
  switch (kind()) {
    case Kind::Integer:
    case Kind::Rational: return *this;
    case Kind::Quadratic: {
      const QuadValue& q = quad_value();
      if (q.d > 0) return *this;
      return rational(q.a);
    }
    case Kind::Cyclotomic: {
      ExactValue half = ExactValue::rational(Rat(1, 2));
      return half * (*this + conj());
    }
  }
  throw std::logic_error("unreachable");
}

ExactValue operator+(const ExactValue& x, const ExactValue& y) {
  using K = ExactValue::Kind;
  K kx = x.kind(), ky = y.kind();
  if (kx == K::Quadratic && ky == K::Cyclotomic) mixed_fields();
  if (kx == K::Cyclotomic && ky == K::Quadratic) mixed_fields();
  if (kx == K::Quadratic || ky == K::Quadratic) {
    if (kx == K::Quadratic && ky == K::Quadratic) {
      const QuadValue& a = x.quad_value();
      const QuadValue& b = y.quad_value();
      if (a.d != b.d) mixed_fields();
      return ExactValue::quad(a.a + b.a, a.b + b.b, Int(a.d));
    }
    const QuadValue& q = (kx == K::Quadratic) ? x.quad_value() : y.quad_value();
    Rat r = (kx == K::Quadratic) ? rat_of(y) : rat_of(x);
    return ExactValue::quad(q.a + r, q.b, Int(q.d));
  }
  if (kx == K::Cyclotomic || ky == K::Cyclotomic) {
    if (kx == K::Cyclotomic && ky == K::Cyclotomic) {
      CycloValue c = x.cyclo_value() + y.cyclo_value();
      return ExactValue::cyclo(c.m(), c.coeffs());
    }
    const CycloValue& c = (kx == K::Cyclotomic) ? x.cyclo_value() : y.cyclo_value();
    Rat r = (kx == K::Cyclotomic) ? rat_of(y) : rat_of(x);
    std::vector<Rat> nc = c.coeffs();
    nc[0] += r;
    return ExactValue::cyclo(c.m(), std::move(nc));
  }
  if (kx == K::Integer && ky == K::Integer) return ExactValue(Int(x.as_integer() + y.as_integer()));
  return ExactValue::rational(rat_of(x) + rat_of(y));
}

ExactValue ExactValue::operator-() const {
  switch (kind()) {
    case Kind::Integer: return ExactValue(Int(-std::get<Int>(v_)));
    case Kind::Rational: return rational(-std::get<Rat>(v_));
    case Kind::Quadratic: {
      const QuadValue& q = quad_value();
      return quad(-q.a, -q.b, Int(q.d));
    }
    case Kind::Cyclotomic: {
      CycloValue c = -cyclo_value();
      return cyclo(c.m(), c.coeffs());
    }
  }
  throw std::logic_error("unreachable");
}

ExactValue operator-(const ExactValue& x, const ExactValue& y) { return x + (-y); }

ExactValue operator*(const ExactValue& x, const ExactValue& y) {
  using K = ExactValue::Kind;
  K kx = x.kind(), ky = y.kind();
  if ((kx == K::Quadratic && ky == K::Cyclotomic) ||
      (kx == K::Cyclotomic && ky == K::Quadratic))
    mixed_fields();
  if (kx == K::Quadratic && ky == K::Quadratic) {
    const QuadValue& a = x.quad_value();
    const QuadValue& b = y.quad_value();
    if (a.d != b.d) mixed_fields();
    Rat d(a.d);
    return ExactValue::quad(a.a * b.a + a.b * b.b * d, a.a * b.b + a.b * b.a, Int(a.d));
  }
  if (kx == K::Quadratic || ky == K::Quadratic) {
    const QuadValue& q = (kx == K::Quadratic) ? x.quad_value() : y.quad_value();
    Rat r = (kx == K::Quadratic) ? rat_of(y) : rat_of(x);
    return ExactValue::quad(q.a * r, q.b * r, Int(q.d));
  }
  if (kx == K::Cyclotomic && ky == K::Cyclotomic) {
    CycloValue c = x.cyclo_value() * y.cyclo_value();
    return ExactValue::cyclo(c.m(), c.coeffs());
  }
  if (kx == K::Cyclotomic || ky == K::Cyclotomic) {
    const CycloValue& c = (kx == K::Cyclotomic) ? x.cyclo_value() : y.cyclo_value();
    Rat r = (kx == K::Cyclotomic) ? rat_of(y) : rat_of(x);
    if (r == 0) return ExactValue(0);
    CycloValue sc = c.scaled(r);
    return ExactValue::cyclo(sc.m(), sc.coeffs());
  }
  if (kx == K::Integer && ky == K::Integer) return ExactValue(Int(x.as_integer() * y.as_integer()));
  return ExactValue::rational(rat_of(x) * rat_of(y));
}

ExactValue operator*(const Int& x, const ExactValue& y) { return ExactValue(x) * y; }

bool ExactValue::operator==(const ExactValue& o) const {
  using K = Kind;
  K a = kind(), b = o.kind();
  // canonical forms make most comparisons structural
  if (a == b) {
    switch (a) {
      case K::Integer: return as_integer() == o.as_integer();
      case K::Rational: return std::get<Rat>(v_) == std::get<Rat>(o.v_);
      case K::Quadratic: return quad_value() == o.quad_value();
      case K::Cyclotomic: return cyclo_value() == o.cyclo_value();
    }
  }
  // different canonical kinds: only Cyclotomic values of different m can
  // still collide semantically, and those share the Cyclotomic kind.
  // A genuine quadratic is never rational, a genuine cyclotomic never
  // collapses, so cross-kind values differ -- except the unsupported
  // Quadratic/Cyclotomic comparison, which must not silently be "false".
  if ((a == K::Quadratic && b == K::Cyclotomic) || (a == K::Cyclotomic && b == K::Quadratic))
    mixed_fields();
  if (is_rational() && o.is_rational()) return as_rational() == o.as_rational();
  return false;
}

std::string ExactValue::str() const {
  switch (kind()) {
    case Kind::Integer: return std::get<Int>(v_).str();
    case Kind::Rational: return std::get<Rat>(v_).str();
    case Kind::Quadratic: {
      const QuadValue& q = quad_value();
      std::string root = "sqrt(" + std::to_string(q.d) + ")";
      std::string bterm;
      if (q.b == 1)
        bterm = root;
      else if (q.b == -1)
        bterm = "-" + root;
      else
        bterm = q.b.str() + "*" + root;
      if (q.a == 0) return bterm;
      std::string out = q.a.str();
      if (bterm[0] != '-') out += "+";
      return out + bterm;
    }
    case Kind::Cyclotomic: return cyclo_value().str();
  }
  throw std::logic_error("unreachable");
}

}  // namespace zerograph
