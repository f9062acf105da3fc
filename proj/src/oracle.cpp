#include <algorithm>
#include <stdexcept>
#include <vector>

#include "zerograph/symchar.hpp"

// Small-n oracle for the S_n character table, independent of the
// Murnaghan-Nakayama path: expand Schur functions in monomials by
// enumerating semistandard tableaux, expand power-sum products in
// monomials by direct assignment counting, and solve the transition
// system p_mu = sum_la chi^la(mu) s_la over exact rationals.

namespace zerograph {

namespace {

// Kostka number K_{la,nu}: semistandard tableaux of shape la, content nu.
long kostka(const Partition& la, const Partition& nu) {
  int values = nu.rows();
  std::vector<int> remaining = nu.parts();
  std::vector<std::vector<int>> tableau(la.rows());
  for (int i = 0; i < la.rows(); ++i) tableau[i].assign(la.parts()[i], 0);

  long count = 0;
  auto fill = [&](auto&& self, int i, int j) -> void {
    if (i == la.rows()) {
      ++count;
      return;
    }
    int ni = i, nj = j + 1;
    if (nj == la.parts()[i]) {
      ni = i + 1;
      nj = 0;
    }
    int lo = 1;
    if (j > 0) lo = std::max(lo, tableau[i][j - 1]);       // rows weakly increase
    if (i > 0) lo = std::max(lo, tableau[i - 1][j] + 1);   // columns strictly increase
    for (int v = lo; v <= values; ++v) {
      if (remaining[v - 1] == 0) continue;
      --remaining[v - 1];
      tableau[i][j] = v;
      self(self, ni, nj);
      ++remaining[v - 1];
    }
  };
  fill(fill, 0, 0);
  return count;
}

// Coefficient of the monomial x_1^{nu_1} ... x_l^{nu_l} in
// p_mu = prod_i (x_1^{mu_i} + x_2^{mu_i} + ...): the number of ways to
// assign the (ordered) parts of mu to boxes so each box i sums to nu_i.
Int powersum_monomial_coeff(const Partition& mu, const Partition& nu) {
  std::vector<int> cap = nu.parts();
  const std::vector<int>& parts = mu.parts();
  Int count = 0;
  auto assign = [&](auto&& self, std::size_t idx) -> void {
    if (idx == parts.size()) {
      for (int c : cap)
        if (c != 0) return;
      ++count;
      return;
    }
    for (std::size_t box = 0; box < cap.size(); ++box) {
      if (cap[box] < parts[idx]) continue;
      cap[box] -= parts[idx];
      self(self, idx + 1);
      cap[box] += parts[idx];
    }
  };
  assign(assign, 0);
  return count;
}

// Solves M x = b by Gaussian elimination over exact rationals.
std::vector<Rat> solve(std::vector<std::vector<Rat>> m, std::vector<Rat> b) {
  std::size_t d = b.size();
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (piv < d && m[piv][col] == 0) ++piv;
    if (piv == d) throw std::logic_error("oracle: singular transition matrix");
    std::swap(m[piv], m[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < d; ++c) m[r][c] -= f * m[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rat> x(d);
  for (std::size_t i = 0; i < d; ++i) x[i] = b[i] / m[i][i];
  return x;
}

}  // namespace

SnTable oracle_table(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("oracle_table: 1 <= n <= 6 required");
  SnTable t;
  t.n = n;
  t.rows = all_partitions(n);
  t.cols = t.rows;
  std::reverse(t.cols.begin(), t.cols.end());
  for (const Partition& mu : t.cols) {
    ClassData cd = class_data(mu);
    t.class_sizes.push_back(cd.size);
    t.class_signs.push_back(cd.sign);
  }

  std::size_t d = t.rows.size();
  // M[nu][la] = K_{la,nu}, one matrix reused for every class column
  std::vector<std::vector<Rat>> kostka_t(d, std::vector<Rat>(d));
  for (std::size_t nu = 0; nu < d; ++nu)
    for (std::size_t la = 0; la < d; ++la)
      kostka_t[nu][la] = kostka(t.rows[la], t.rows[nu]);

  t.values.assign(d, std::vector<Int>(t.cols.size()));
  for (std::size_t c = 0; c < t.cols.size(); ++c) {
    std::vector<Rat> b(d);
    for (std::size_t nu = 0; nu < d; ++nu)
      b[nu] = Rat(powersum_monomial_coeff(t.cols[c], t.rows[nu]));
    std::vector<Rat> x = solve(kostka_t, b);
    for (std::size_t r = 0; r < d; ++r) {
      if (denominator(x[r]) != 1)
        throw std::logic_error("oracle: non-integral character value");
      t.values[r][c] = numerator(x[r]);
    }
  }
  for (std::size_t r = 0; r < d; ++r) t.degrees.push_back(t.values[r][0]);
  return t;
}

}  // namespace zerograph
