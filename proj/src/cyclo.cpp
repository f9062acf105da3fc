#include "zerograph/cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace zerograph {

namespace {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials; b monic. Throws if not exact.
IntPoly divide_exact(IntPoly a, const IntPoly& b) {
  if (b.empty() || b.back() != 1) throw std::logic_error("divide_exact: divisor not monic");
  IntPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Int(0));
  while (a.size() >= b.size()) {
    Int c = a.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
    if (!a.empty() && a.size() >= b.size() && a.back() == 0) trim(a);
  }
  if (!a.empty()) throw std::logic_error("divide_exact: nonzero remainder");
  trim(q);
  return q;
}

std::map<int, IntPoly> g_phi_cache;
std::mutex g_phi_mutex;

}  // namespace

IntPoly cyclotomic_polynomial(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m >= 1 required");
  {
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    auto it = g_phi_cache.find(m);
    if (it != g_phi_cache.end()) return it->second;
  }
  // x^m - 1
  IntPoly p(m + 1, Int(0));
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) p = divide_exact(std::move(p), cyclotomic_polynomial(d));
  }
  std::lock_guard<std::mutex> lock(g_phi_mutex);
  g_phi_cache.emplace(m, p);
  return p;
}

CycloValue::CycloValue(int m, std::vector<Rat> coeffs) : m_(m), c_(std::move(coeffs)) {
  if (m < 1) throw std::invalid_argument("CycloValue: m >= 1 required");
  if (c_.size() > static_cast<std::size_t>(m))
    throw std::invalid_argument("CycloValue: more than m coefficients");
  c_.resize(m_, Rat(0));
  reduce();
}

void CycloValue::reduce() {
  IntPoly phi = cyclotomic_polynomial(m_);
  std::size_t deg = phi.size() - 1;
  // polynomial remainder mod the monic Phi_m, over Q
  for (std::size_t i = c_.size(); i-- > deg;) {
    Rat c = c_[i];
    if (c == 0) continue;
    c_[i] = 0;
    for (std::size_t k = 0; k < deg; ++k) c_[i - deg + k] -= c * Rat(phi[k]);
  }
}

bool CycloValue::is_zero() const {
  for (const Rat& c : c_)
    if (c != 0) return false;
  return true;
}

bool CycloValue::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

CycloValue CycloValue::conj() const {
  std::vector<Rat> nc(m_, Rat(0));
  for (int k = 0; k < m_; ++k) {
    if (c_[k] == 0) continue;
    nc[(m_ - k) % m_] += c_[k];
  }
  return CycloValue(m_, std::move(nc));
}

CycloValue CycloValue::promoted(int mm) const {
  if (mm % m_ != 0) throw std::invalid_argument("CycloValue::promoted: m must divide mm");
  if (mm == m_) return *this;
  int f = mm / m_;
  std::vector<Rat> nc(mm, Rat(0));
  for (int k = 0; k < m_; ++k) nc[k * f] += c_[k];
  return CycloValue(mm, std::move(nc));
}

CycloValue operator+(const CycloValue& a, const CycloValue& b) {
  int mm = std::lcm(a.m_, b.m_);
  CycloValue pa = a.promoted(mm), pb = b.promoted(mm);
  for (int k = 0; k < mm; ++k) pa.c_[k] += pb.c_[k];
  return CycloValue(mm, std::move(pa.c_));
}

CycloValue operator-(const CycloValue& a, const CycloValue& b) { return a + (-b); }

CycloValue operator*(const CycloValue& a, const CycloValue& b) {
  int mm = std::lcm(a.m_, b.m_);
  CycloValue pa = a.promoted(mm), pb = b.promoted(mm);
  // convolution mod x^mm - 1, then the ctor reduces mod Phi_mm
  std::vector<Rat> prod(mm, Rat(0));
  for (int i = 0; i < mm; ++i) {
    if (pa.c_[i] == 0) continue;
    for (int j = 0; j < mm; ++j) {
      if (pb.c_[j] == 0) continue;
      prod[(i + j) % mm] += pa.c_[i] * pb.c_[j];
    }
  }
  return CycloValue(mm, std::move(prod));
}

CycloValue CycloValue::operator-() const {
  std::vector<Rat> nc = c_;
  for (Rat& c : nc) c = -c;
  return CycloValue(m_, std::move(nc));
}

CycloValue CycloValue::scaled(const Rat& r) const {
  std::vector<Rat> nc = c_;
  for (Rat& c : nc) c *= r;
  return CycloValue(m_, std::move(nc));
}

bool CycloValue::operator==(const CycloValue& o) const {
  if (m_ == o.m_) return c_ == o.c_;
  return (*this - o).is_zero();
}

std::string CycloValue::str() const {
  std::string out;
  for (int k = 0; k < m_; ++k) {
    if (c_[k] == 0) continue;
    std::string coef = c_[k].str();
    if (k == 0) {
      out += coef;
      continue;
    }
    std::string term = "z" + std::to_string(m_) + (k > 1 ? "^" + std::to_string(k) : "");
    if (coef == "1")
      term = term;
    else if (coef == "-1")
      term = "-" + term;
    else
      term = coef + "*" + term;
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  if (out.empty()) out = "0";
  return out;
}

}  // namespace zerograph
