#include "zerograph/metrics.hpp"

#include <stdexcept>

namespace zerograph {

std::vector<std::size_t> faithful_characters(const CharTable& t) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.characters.size(); ++i) {
    const CharacterRow& ch = t.characters[i];
    ExactValue degree{ch.degree};
    bool faithful = true;
    for (std::size_t c = 1; c < t.classes.size(); ++c)
      if (ch.values[c] == degree) faithful = false;
    if (faithful) out.push_back(i);
  }
  return out;
}

Int metric_sq_distance(const SnTable& t, int chi, const Permutation& a, const Permutation& b) {
  if (a.degree() != t.n || b.degree() != t.n)
    throw std::invalid_argument("metric_sq_distance: permutation degree mismatch");
  Partition type = (a * b.inverse()).cycle_type();
  Int value = t.values[chi][t.col_index(type)];
  return 2 * (t.degrees[chi] - value);
}

MetricPartition metric_partition(const CharTable& t, std::size_t chi) {
  MetricPartition p;
  ExactValue degree{t.characters[chi].degree};
  p.block_of.assign(t.classes.size(), -1);
  for (std::size_t c = 0; c < t.classes.size(); ++c) {
    ExactValue key = degree - t.characters[chi].values[c].real_part();
    int block = -1;
    for (std::size_t b = 0; b < p.block_values.size(); ++b)
      if (p.block_values[b] == key) block = static_cast<int>(b);
    if (block < 0) {
      block = static_cast<int>(p.block_values.size());
      p.block_values.push_back(key);
      p.blocks.emplace_back();
    }
    p.block_of[c] = block;
    p.blocks[block].push_back(static_cast<int>(c));
  }
  return p;
}

VerificationReport verify_theorem_6_1(const SnTable& t) {
  if (t.n < 3) throw std::invalid_argument("verify_theorem_6_1: requires n >= 3");
  VerificationReport rep;
  rep.check = "metrics-pequiv";
  rep.scope = "sn:" + std::to_string(t.n);

  CharTable ct = to_char_table(t);
  std::vector<std::size_t> faithful = faithful_characters(ct);
  rep.details["faithful"] = nlohmann::json::array();
  for (std::size_t i : faithful) rep.details["faithful"].push_back(ct.characters[i].label);

  std::vector<MetricPartition> parts;
  for (std::size_t i : faithful) parts.push_back(metric_partition(ct, i));

  rep.details["separators"] = nlohmann::json::array();
  for (std::size_t a = 0; a < faithful.size(); ++a) {
    for (std::size_t b = a + 1; b < faithful.size(); ++b) {
      if (same_partition(parts[a], parts[b])) {
        rep.witnesses.push_back({{"kind", "p-equivalent-pair"},
                                 {"chi", ct.characters[faithful[a]].label},
                                 {"psi", ct.characters[faithful[b]].label}});
        continue;
      }
      // first class pair separated by one partition and not the other
      for (std::size_t k = 0; k < ct.classes.size(); ++k) {
        bool found = false;
        for (std::size_t l = k + 1; l < ct.classes.size(); ++l) {
          bool same_a = parts[a].block_of[k] == parts[a].block_of[l];
          bool same_b = parts[b].block_of[k] == parts[b].block_of[l];
          if (same_a != same_b) {
            rep.details["separators"].push_back(
                {{"chi", ct.characters[faithful[a]].label},
                 {"psi", ct.characters[faithful[b]].label},
                 {"classes", {ct.classes[k].label, ct.classes[l].label}},
                 {"chi_values",
                  {t.values[faithful[a]][k].str(), t.values[faithful[a]][l].str()}},
                 {"psi_values",
                  {t.values[faithful[b]][k].str(), t.values[faithful[b]][l].str()}}});
            found = true;
            break;
          }
        }
        if (found) break;
      }
    }
  }
  return rep;
}

namespace {

// floor(sqrt(num/den * 4^bits)) via integer square root
Int sqrt_floor_scaled(const Rat& x, unsigned bits) {
  Int num = numerator(x), den = denominator(x);
  Int scaled = (num << (2 * bits)) * den;  // (num/den)*4^bits = num*den*4^bits / den^2
  return isqrt(scaled) / den;
}

}  // namespace

bool sqrt_leq_sqrt_plus_sqrt(const Rat& x, const Rat& y, const Rat& z, unsigned start_bits) {
  if (x < 0 || y < 0 || z < 0) throw std::invalid_argument("sqrt comparison: negative input");
  // algebraic tie check: sqrt(x) = sqrt(y) + sqrt(z) iff
  // x - y - z = 2 sqrt(yz), i.e. x >= y + z and (x - y - z)^2 = 4yz
  Rat lhs = x - y - z;
  if (lhs <= 0) return true;  // sqrt(x)^2 <= y + z <= (sqrt y + sqrt z)^2
  if (lhs * lhs == 4 * y * z) return true;
  // strict comparison: dyadic intervals, widened until they separate
  for (unsigned bits = start_bits;; bits *= 2) {
    Int sx = sqrt_floor_scaled(x, bits);
    Int sy = sqrt_floor_scaled(y, bits);
    Int sz = sqrt_floor_scaled(z, bits);
    // sqrt(v) lies in [s/2^bits, (s+1)/2^bits]
    if (sx + 1 <= sy + sz) return true;       // upper(x) <= lower(y) + lower(z)
    if (sx > sy + sz + 2) return false;       // lower(x) > upper(y) + upper(z)
    if (bits > 100000)
      throw std::logic_error("sqrt comparison failed to separate");  // unreachable: ties handled above
  }
}

}  // namespace zerograph
