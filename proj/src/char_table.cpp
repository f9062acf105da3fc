#include "zerograph/char_table.hpp"

#include <numeric>

namespace zerograph {

namespace {

long cycle_type_order(const Partition& mu) {
  long l = 1;
  for (int part : mu.parts()) l = std::lcm(l, static_cast<long>(part));
  return l;
}

}  // namespace

bool CharTable::operator==(const CharTable& o) const {
  if (name != o.name || order != o.order) return false;
  if (classes.size() != o.classes.size() || characters.size() != o.characters.size())
    return false;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].label != o.classes[i].label || classes[i].size != o.classes[i].size ||
        classes[i].element_order != o.classes[i].element_order)
      return false;
  }
  for (std::size_t i = 0; i < characters.size(); ++i) {
    if (characters[i].label != o.characters[i].label ||
        characters[i].degree != o.characters[i].degree ||
        characters[i].values != o.characters[i].values)
      return false;
  }
  return true;
}

CharTable to_char_table(const SnTable& t) {
  CharTable ct;
  ct.name = "S" + std::to_string(t.n);
  ct.source = "computed";
  ct.order = factorial(t.n);
  for (std::size_t c = 0; c < t.cols.size(); ++c)
    ct.classes.push_back({t.cols[c].to_string(), t.class_sizes[c], cycle_type_order(t.cols[c])});
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    CharacterRow row;
    row.label = t.rows[r].to_string();
    row.degree = t.degrees[r];
    for (std::size_t c = 0; c < t.cols.size(); ++c) row.values.emplace_back(t.values[r][c]);
    ct.characters.push_back(std::move(row));
  }
  return ct;
}

CharTable to_char_table(const AnTable& t) {
  CharTable ct;
  ct.name = "A" + std::to_string(t.n);
  ct.source = "computed";
  ct.order = factorial(t.n) / 2;
  for (std::size_t c = 0; c < t.cols.size(); ++c)
    ct.classes.push_back({t.cols[c].label(), t.class_sizes[c], cycle_type_order(t.cols[c].mu)});
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    CharacterRow row;
    row.label = t.rows[r].label();
    row.degree = t.degrees[r];
    row.values = t.values[r];
    ct.characters.push_back(std::move(row));
  }
  return ct;
}

namespace {

void run_validation(const CharTable& t, VerificationReport& rep, bool with_columns) {
  auto witness = [&](const std::string& kind, nlohmann::json extra = {}) {
    nlohmann::json w;
    w["invariant"] = kind;
    if (!extra.empty()) w.update(extra);
    rep.witnesses.push_back(std::move(w));
  };

  if (t.order < 1) witness("order-positive");
  if (t.classes.empty()) {
    witness("classes-nonempty");
    return;
  }
  for (const auto& ch : t.characters)
    if (ch.values.size() != t.classes.size()) {
      witness("row-length", {{"character", ch.label}});
      return;
    }

  Int size_sum = 0;
  for (const auto& cl : t.classes) size_sum += cl.size;
  if (size_sum != t.order)
    witness("class-sizes-sum-to-order", {{"sum", size_sum.str()}, {"order", t.order.str()}});

  if (t.classes[0].size != 1 || t.classes[0].element_order != 1)
    witness("identity-class-first", {{"label", t.classes[0].label}});
  for (std::size_t i = 1; i < t.classes.size(); ++i)
    if (t.classes[i].size == 1 && t.classes[i].element_order == 1)
      witness("identity-class-unique", {{"label", t.classes[i].label}});

  Int degree_sq_sum = 0;
  for (const auto& ch : t.characters) {
    if (ch.degree < 1) witness("degree-positive", {{"character", ch.label}});
    degree_sq_sum += ch.degree * ch.degree;
    if (!(ch.values[0] == ExactValue(ch.degree)))
      witness("identity-value-equals-degree",
              {{"character", ch.label}, {"value", ch.values[0].str()}});
  }
  if (degree_sq_sum != t.order)
    witness("degree-squares-sum-to-order",
            {{"sum", degree_sq_sum.str()}, {"order", t.order.str()}});

  // row orthogonality: sum_K |K| chi(K) conj(psi(K)) = order * delta
  for (std::size_t i = 0; i < t.characters.size(); ++i) {
    for (std::size_t j = i; j < t.characters.size(); ++j) {
      ExactValue sum(0);
      bool bad_arith = false;
      try {
        for (std::size_t c = 0; c < t.classes.size(); ++c)
          sum = sum + t.classes[c].size *
                          (t.characters[i].values[c] * t.characters[j].values[c].conj());
      } catch (const std::domain_error&) {
        bad_arith = true;
      }
      ExactValue expect = (i == j) ? ExactValue(t.order) : ExactValue(0);
      if (bad_arith || !(sum == expect))
        witness("row-orthogonality",
                {{"chi", t.characters[i].label},
                 {"psi", t.characters[j].label},
                 {"value", bad_arith ? "mixed-field sum" : sum.str()}});
    }
  }

  if (!with_columns) return;
  // column orthogonality: sum_chi chi(K) conj(chi(L)) = delta * |C(g_K)|
  for (std::size_t c = 0; c < t.classes.size(); ++c) {
    for (std::size_t e = c; e < t.classes.size(); ++e) {
      ExactValue sum(0);
      bool bad_arith = false;
      try {
        for (const auto& ch : t.characters) sum = sum + ch.values[c] * ch.values[e].conj();
      } catch (const std::domain_error&) {
        bad_arith = true;
      }
      ExactValue expect(0);
      if (c == e) expect = ExactValue::rational(Rat(t.order, t.classes[c].size));
      if (bad_arith || !(sum == expect))
        witness("column-orthogonality",
                {{"K", t.classes[c].label},
                 {"L", t.classes[e].label},
                 {"value", bad_arith ? "mixed-field sum" : sum.str()}});
    }
  }
}

}  // namespace

VerificationReport validate(const CharTable& t) {
  VerificationReport rep;
  rep.check = "validate";
  rep.scope = t.name;
  run_validation(t, rep, /*with_columns=*/true);
  return rep;
}

void validate_or_throw(const CharTable& t) {
  VerificationReport rep;
  run_validation(t, rep, /*with_columns=*/false);
  if (!rep.witnesses.empty())
    throw std::invalid_argument("invalid character table \"" + t.name +
                                "\": " + rep.witnesses.front().dump());
}

}  // namespace zerograph
