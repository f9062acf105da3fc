#include "zerograph/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace zerograph {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i - 1] < parts_[i])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.rbegin(), parts.rend());
  return Partition(std::move(parts));
}

Partition Partition::parse(const std::string& label) {
  if (label.size() < 2 || label.front() != '(' || label.back() != ')')
    throw std::invalid_argument("Partition::parse: expected \"(a,b,...)\": " + label);
  std::vector<int> parts;
  std::string body = label.substr(1, label.size() - 2);
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) parts.push_back(std::stoi(tok));
  }
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  s += ')';
  return s;
}

bool rev_lex_before(const Partition& a, const Partition& b) {
  return a.parts() > b.parts();  // lexicographically larger comes first
}

std::size_t PartitionHash::operator()(const Partition& p) const {
  std::size_t h = 1469598103934665603ull;
  for (int x : p.parts()) {
    h ^= static_cast<std::size_t>(x);
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

void gen_partitions(int n, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(prefix));
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    prefix.push_back(k);
    gen_partitions(n - k, k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> all_partitions(int n) {
  if (n < 0) throw std::invalid_argument("all_partitions: n < 0");
  std::vector<Partition> out;
  std::vector<int> prefix;
  gen_partitions(n, n > 0 ? n : 1, prefix, out);
  return out;
}

Partition conjugate(const Partition& la) {
  std::vector<int> conj;
  if (!la.empty()) {
    conj.resize(la.parts()[0]);
    for (int j = 0; j < la.parts()[0]; ++j) {
      int cnt = 0;
      for (int part : la.parts())
        if (part > j) ++cnt;
      conj[j] = cnt;
    }
  }
  return Partition(std::move(conj));
}

HookData hook_data(const Partition& la) {
  HookData hd;
  Partition conj = conjugate(la);
  Int prod = 1;
  hd.hooks.resize(la.rows());
  for (int i = 1; i <= la.rows(); ++i) {
    hd.hooks[i - 1].resize(la.part(i));
    for (int j = 1; j <= la.part(i); ++j) {
      int h = (la.part(i) - j) + (conj.part(j) - i) + 1;
      hd.hooks[i - 1][j - 1] = h;
      prod *= h;
    }
  }
  hd.degree = factorial(la.n()) / prod;
  return hd;
}

Int hook_degree(const Partition& la) { return hook_data(la).degree; }

std::vector<int> first_column_hooks(const Partition& la) {
  std::vector<int> beta(la.rows());
  int l = la.rows();
  for (int i = 1; i <= l; ++i) beta[i - 1] = la.part(i) + l - i;
  return beta;
}

namespace {

Partition partition_from_beta(std::vector<int> beta) {
  std::sort(beta.rbegin(), beta.rend());
  int l = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < l; ++i) {
    int part = beta[i] - (l - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

}  // namespace

std::vector<RimHookRemoval> rim_hook_removals(const Partition& la, int r) {
  if (r < 1) throw std::invalid_argument("rim_hook_removals: r must be >= 1");
  std::vector<int> beta = first_column_hooks(la);
  std::vector<RimHookRemoval> out;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    int b = beta[i];
    int x = b - r;
    if (x < 0) continue;
    if (std::find(beta.begin(), beta.end(), x) != beta.end()) continue;
    RimHookRemoval rem;
    int height = 0;
    for (int other : beta)
      if (other > x && other < b) ++height;
    rem.height = height;
    rem.row = static_cast<int>(i) + 1;
    // Hooks in row i are b - y over y in [0, b) \ beta, decreasing with
    // the column; the column index counts valid y <= x.
    int col = 0;
    for (int y = 0; y <= x; ++y)
      if (std::find(beta.begin(), beta.end(), y) == beta.end()) ++col;
    rem.col = col;
    std::vector<int> nb = beta;
    nb[i] = x;
    rem.result = partition_from_beta(std::move(nb));
    out.push_back(std::move(rem));
  }
  return out;
}

Partition r_core(const Partition& la, int r) {
  if (r < 2) throw std::invalid_argument("r_core: r must be >= 2");
  Partition cur = la;
  for (;;) {
    auto rems = rim_hook_removals(cur, r);
    if (rems.empty()) return cur;
    cur = rems.front().result;
  }
}

DiagonalHooks diagonal_hooks(const Partition& la) {
  DiagonalHooks dh;
  Partition conj = conjugate(la);
  dh.self_conjugate = (la == conj);
  std::vector<int> hooks;
  for (int i = 1; i <= la.rows() && la.part(i) >= i; ++i)
    hooks.push_back(la.part(i) + conj.part(i) - 2 * i + 1);
  dh.hooks = Partition(std::move(hooks));
  if (dh.self_conjugate) {
    int sum = 0;
    for (std::size_t i = 0; i < dh.hooks.parts().size(); ++i) {
      int h = dh.hooks.parts()[i];
      if (h % 2 == 0) throw std::logic_error("diagonal_hooks: even diagonal hook on self-conjugate shape");
      if (i > 0 && dh.hooks.parts()[i - 1] <= h)
        throw std::logic_error("diagonal_hooks: diagonal hooks not strictly decreasing");
      sum += h;
    }
    if (sum != la.n()) throw std::logic_error("diagonal_hooks: diagonal hooks do not sum to n");
  }
  return dh;
}

}  // namespace zerograph
