#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mpfr.h>

#include <random>
#include <vector>

#include "zerograph/exact_value.hpp"

using namespace zerograph;

namespace {

std::vector<long> poly_as_longs(const IntPoly& p) {
  std::vector<long> out;
  for (const Int& c : p) out.push_back(c.convert_to<long>());
  return out;
}

// |sum c_k zeta_m^k| < 2^-100, evaluated at 256-bit precision.
bool numerically_tiny(int m, const std::vector<long>& coeffs) {
  const mpfr_prec_t prec = 256;
  mpfr_t pi, ang, c, s, re, im, t, thr;
  mpfr_inits2(prec, pi, ang, c, s, re, im, t, thr, (mpfr_ptr) nullptr);
  mpfr_const_pi(pi, MPFR_RNDN);
  mpfr_set_zero(re, 1);
  mpfr_set_zero(im, 1);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    mpfr_mul_si(ang, pi, 2 * static_cast<long>(k), MPFR_RNDN);
    mpfr_div_si(ang, ang, m, MPFR_RNDN);
    mpfr_cos(c, ang, MPFR_RNDN);
    mpfr_sin(s, ang, MPFR_RNDN);
    mpfr_mul_si(c, c, coeffs[k], MPFR_RNDN);
    mpfr_mul_si(s, s, coeffs[k], MPFR_RNDN);
    mpfr_add(re, re, c, MPFR_RNDN);
    mpfr_add(im, im, s, MPFR_RNDN);
  }
  mpfr_sqr(re, re, MPFR_RNDN);
  mpfr_sqr(im, im, MPFR_RNDN);
  mpfr_add(t, re, im, MPFR_RNDN);
  mpfr_set_ui_2exp(thr, 1, -200, MPFR_RNDN);  // (2^-100)^2
  bool tiny = mpfr_cmp(t, thr) < 0;
  mpfr_clears(pi, ang, c, s, re, im, t, thr, (mpfr_ptr) nullptr);
  return tiny;
}

ExactValue random_value(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<int> small(-6, 6);
  std::uniform_int_distribution<int> denom(1, 4);
  switch (kind(rng)) {
    case 0: return ExactValue(small(rng));
    case 1: return ExactValue::rational(Rat(small(rng), denom(rng)));
    case 2: return ExactValue::quad(Rat(small(rng), denom(rng)), Rat(small(rng), denom(rng)), Int(5));
    default: {
      std::vector<Rat> c(5);
      for (auto& x : c) x = Rat(small(rng), denom(rng));
      return ExactValue::cyclo(7, std::move(c));
    }
  }
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(poly_as_longs(cyclotomic_polynomial(1)) == std::vector<long>{-1, 1});
  CHECK(poly_as_longs(cyclotomic_polynomial(6)) == std::vector<long>{1, -1, 1});
  CHECK(poly_as_longs(cyclotomic_polynomial(8)) == std::vector<long>{1, 0, 0, 0, 1});
  CHECK(poly_as_longs(cyclotomic_polynomial(12)) == std::vector<long>{1, 0, -1, 0, 1});
  CHECK_THROWS_AS(cyclotomic_polynomial(0), std::invalid_argument);
}

TEST_CASE("reduction to canonical form") {
  // 1 + zeta_3 + zeta_3^2 = 0
  CHECK(ExactValue::cyclo(3, {Rat(1), Rat(1), Rat(1)}).is_zero());
  // zeta_4^2 = -1 collapses to an integer
  ExactValue i2 = ExactValue::zeta_power(4, 2);
  CHECK(i2.is_integer());
  CHECK(i2.as_integer() == -1);
  // zeta_5 + zeta_5^4 satisfies x^2 + x - 1
  ExactValue v = ExactValue::zeta_power(5, 1) + ExactValue::zeta_power(5, 4);
  CHECK_FALSE(v.is_zero());
  CHECK((v * v + v - ExactValue(1)).is_zero());
}

TEST_CASE("reduce is idempotent") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int m : {1, 2, 3, 4, 6, 8, 9, 12, 15}) {
    for (int rep = 0; rep < 50; ++rep) {
      std::vector<Rat> c(m);
      for (auto& x : c) x = coef(rng);
      CycloValue once(m, c);
      CycloValue twice(m, once.coeffs());
      CHECK(once == twice);
    }
  }
}

TEST_CASE("conjugation and real part") {
  ExactValue five(5);
  CHECK(five.conj() == five);
  CHECK(five.real_part() == five);

  ExactValue root = ExactValue::quad(Rat(0), Rat(1), Int(-11));
  CHECK(root.conj() == ExactValue::quad(Rat(0), Rat(-1), Int(-11)));
  CHECK(root.real_part().is_zero());

  ExactValue z = ExactValue::zeta_power(5, 1);
  CHECK(z.conj() == ExactValue::zeta_power(5, 4));
  ExactValue re = z.real_part();
  ExactValue half = ExactValue::rational(Rat(1, 2));
  CHECK(re == half * (ExactValue::zeta_power(5, 1) + ExactValue::zeta_power(5, 4)));

  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 200; ++rep) {
    ExactValue v = random_value(rng);
    CHECK(v.conj().conj() == v);
    ExactValue rp = v.real_part();
    CHECK(rp.conj() == rp);
    CHECK(rp.real_part() == rp);
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 150; ++rep) {
    ExactValue a = random_value(rng), b = random_value(rng), c = random_value(rng);
    // keep the fields compatible: quadratics only meet rationals/quadratics
    auto quadish = [](const ExactValue& v) { return v.kind() == ExactValue::Kind::Quadratic; };
    auto cycish = [](const ExactValue& v) { return v.kind() == ExactValue::Kind::Cyclotomic; };
    if ((quadish(a) || quadish(b) || quadish(c)) && (cycish(a) || cycish(b) || cycish(c)))
      continue;
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("promotion and equality semantics") {
  CHECK(ExactValue(2) == ExactValue::rational(Rat(2)));
  CHECK(ExactValue::rational(Rat(4, 2)) == ExactValue(2));
  CHECK(ExactValue::quad(Rat(3), Rat(1), Int(4)) == ExactValue(5));   // sqrt(4) = 2
  CHECK(ExactValue::quad(Rat(0), Rat(1), Int(12)) ==
        ExactValue::quad(Rat(0), Rat(2), Int(3)));
  CHECK(ExactValue::quad(Rat(0), Rat(1), Int(0)).is_zero());
  // zeta_6^2 and zeta_3 agree semantically across fields
  CHECK(ExactValue::zeta_power(6, 2) == ExactValue::zeta_power(3, 1));
  CHECK(ExactValue::zeta_power(6, 3) == ExactValue(-1));
  // genuine quadratic/cyclotomic mixing is rejected
  ExactValue q = ExactValue::quad(Rat(0), Rat(1), Int(5));
  ExactValue z = ExactValue::zeta_power(5, 1);
  CHECK_THROWS_AS((void)(q + z), std::domain_error);
  CHECK_THROWS_AS((void)(q * z), std::domain_error);
}

TEST_CASE("zero test agrees with 256-bit numeric evaluation") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> mdist(1, 20);
  std::uniform_int_distribution<int> coef(-9, 9);
  std::uniform_int_distribution<int> mode(0, 1);
  int zeros_seen = 0;
  for (int rep = 0; rep < 1000; ++rep) {
    int m = mdist(rng);
    std::vector<long> coeffs(m, 0);
    IntPoly phi = cyclotomic_polynomial(m);
    int phi_deg = static_cast<int>(phi.size()) - 1;
    if (mode(rng) == 0 && m - phi_deg >= 1) {
      // multiple of Phi_m: an exact zero
      std::vector<long> q(m - phi_deg);
      for (auto& x : q) x = coef(rng);
      for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < phi.size(); ++j)
          coeffs[i + j] += q[i] * phi[j].convert_to<long>();
    } else {
      for (auto& x : coeffs) x = coef(rng);
    }
    std::vector<Rat> rc(coeffs.begin(), coeffs.end());
    bool exact_zero = ExactValue::cyclo(m, rc).is_zero();
    if (exact_zero) ++zeros_seen;
    CHECK(exact_zero == numerically_tiny(m, coeffs));
  }
  CHECK(zeros_seen > 100);  // the generator really produced zero cases
}
