#include "zerograph/table_json.hpp"

#include <fstream>

namespace zerograph {

namespace {

constexpr long long kJsonIntMax = 9223372036854775807LL;

nlohmann::json int_to_json(const Int& v) {
  if (v >= -kJsonIntMax && v <= kJsonIntMax) return v.convert_to<long long>();
  return v.str();  // decimal string beyond int64
}

Int int_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected integer or decimal string: " + j.dump());
}

nlohmann::json rat_to_json(const Rat& r) {
  return nlohmann::json::array({int_to_json(numerator(r)), int_to_json(denominator(r))});
}

Rat rat_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("expected [numerator, denominator]: " + j.dump());
  Int num = int_from_json(j[0]), den = int_from_json(j[1]);
  if (den <= 0) throw std::invalid_argument("rational denominator must be positive");
  return Rat(num, den);
}

}  // namespace

nlohmann::json value_to_json(const ExactValue& v) {
  switch (v.kind()) {
    case ExactValue::Kind::Integer:
      return int_to_json(v.as_integer());
    case ExactValue::Kind::Rational:
      return nlohmann::json{{"rat", rat_to_json(v.as_rational())}};
    case ExactValue::Kind::Quadratic: {
      const QuadValue& q = v.quad_value();
      return nlohmann::json{
          {"quad", {{"a", rat_to_json(q.a)}, {"b", rat_to_json(q.b)}, {"d", q.d}}}};
    }
    case ExactValue::Kind::Cyclotomic: {
      const CycloValue& c = v.cyclo_value();
      nlohmann::json coeffs = nlohmann::json::array();
      std::size_t last = 0;
      for (std::size_t k = 0; k < c.coeffs().size(); ++k)
        if (c.coeffs()[k] != 0) last = k;
      for (std::size_t k = 0; k <= last; ++k) coeffs.push_back(rat_to_json(c.coeffs()[k]));
      return nlohmann::json{{"cyclo", {{"m", c.m()}, {"coeffs", coeffs}}}};
    }
  }
  throw std::logic_error("unreachable");
}

ExactValue value_from_json(const nlohmann::json& j) {
  if (j.is_number_integer() || j.is_string()) return ExactValue(int_from_json(j));
  if (!j.is_object()) throw std::invalid_argument("unsupported value encoding: " + j.dump());
  if (j.contains("rat")) return ExactValue::rational(rat_from_json(j.at("rat")));
  if (j.contains("quad")) {
    const auto& q = j.at("quad");
    return ExactValue::quad(rat_from_json(q.at("a")), rat_from_json(q.at("b")),
                            Int(q.at("d").get<long long>()));
  }
  if (j.contains("cyclo")) {
    const auto& c = j.at("cyclo");
    int m = c.at("m").get<int>();
    std::vector<Rat> coeffs;
    for (const auto& e : c.at("coeffs")) coeffs.push_back(rat_from_json(e));
    return ExactValue::cyclo(m, std::move(coeffs));
  }
  throw std::invalid_argument("unsupported value encoding: " + j.dump());
}

nlohmann::json table_to_json(const CharTable& t) {
  nlohmann::json j;
  j["format"] = "chartable/" + std::to_string(kTableFormatVersion);
  j["name"] = t.name;
  if (!t.source.empty()) j["source"] = t.source;
  j["order"] = int_to_json(t.order);
  j["classes"] = nlohmann::json::array();
  for (const auto& cl : t.classes)
    j["classes"].push_back({{"label", cl.label},
                            {"size", int_to_json(cl.size)},
                            {"element_order", cl.element_order}});
  j["characters"] = nlohmann::json::array();
  for (const auto& ch : t.characters) {
    nlohmann::json values = nlohmann::json::array();
    for (const auto& v : ch.values) values.push_back(value_to_json(v));
    j["characters"].push_back({{"label", ch.label},
                               {"degree", int_to_json(ch.degree)},
                               {"values", std::move(values)}});
  }
  return j;
}

CharTable table_from_json(const nlohmann::json& j) {
  CharTable t;
  if (j.contains("format") &&
      j.at("format").get<std::string>() != "chartable/" + std::to_string(kTableFormatVersion))
    throw std::invalid_argument("unsupported table format: " + j.at("format").dump());
  t.name = j.at("name").get<std::string>();
  if (j.contains("source")) t.source = j.at("source").get<std::string>();
  t.order = int_from_json(j.at("order"));
  for (const auto& cl : j.at("classes"))
    t.classes.push_back({cl.at("label").get<std::string>(), int_from_json(cl.at("size")),
                         cl.at("element_order").get<long>()});
  for (const auto& ch : j.at("characters")) {
    CharacterRow row;
    row.label = ch.at("label").get<std::string>();
    row.degree = int_from_json(ch.at("degree"));
    for (const auto& v : ch.at("values")) row.values.push_back(value_from_json(v));
    t.characters.push_back(std::move(row));
  }
  return t;
}

CharTable ingest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("parse error in " + path.string() + ": " + e.what());
  }
  CharTable t = table_from_json(j);
  validate_or_throw(t);
  return t;
}

void write_table(const CharTable& t, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << table_to_json(t).dump(1) << "\n";
}

SnTable sn_from_char_table(const CharTable& t) {
  if (t.name.size() < 2 || t.name[0] != 'S')
    throw std::invalid_argument("sn_from_char_table: not an S_n table: " + t.name);
  SnTable s;
  s.n = std::stoi(t.name.substr(1));
  for (const auto& cl : t.classes) {
    s.cols.push_back(Partition::parse(cl.label));
    s.class_sizes.push_back(cl.size);
    s.class_signs.push_back(class_data(s.cols.back()).sign);
  }
  for (const auto& ch : t.characters) {
    s.rows.push_back(Partition::parse(ch.label));
    s.degrees.push_back(ch.degree);
    std::vector<Int> row;
    for (const auto& v : ch.values) {
      if (!v.is_integer())
        throw std::invalid_argument("sn_from_char_table: non-integer value");
      row.push_back(v.as_integer());
    }
    s.values.push_back(std::move(row));
  }
  return s;
}

AnTable an_from_char_table(const CharTable& t) {
  if (t.name.size() < 2 || t.name[0] != 'A')
    throw std::invalid_argument("an_from_char_table: not an A_n table: " + t.name);
  AnTable a;
  a.n = std::stoi(t.name.substr(1));
  auto split_label = [](const std::string& label, AnClassKind& kind) {
    std::string body = label;
    kind = AnClassKind::Whole;
    if (!body.empty() && (body.back() == '+' || body.back() == '-')) {
      kind = body.back() == '+' ? AnClassKind::SplitA : AnClassKind::SplitB;
      body.pop_back();
    }
    return body;
  };
  for (const auto& cl : t.classes) {
    AnClassKind kind;
    std::string body = split_label(cl.label, kind);
    a.cols.push_back({kind, Partition::parse(body)});
    a.class_sizes.push_back(cl.size);
  }
  for (const auto& ch : t.characters) {
    AnCharKind kind = AnCharKind::NonSplit;
    std::string body = ch.label;
    if (!body.empty() && (body.back() == '+' || body.back() == '-')) {
      kind = body.back() == '+' ? AnCharKind::SplitPlus : AnCharKind::SplitMinus;
      body.pop_back();
    }
    a.rows.push_back({kind, Partition::parse(body)});
    a.degrees.push_back(ch.degree);
    a.values.push_back(ch.values);
  }
  return a;
}

}  // namespace zerograph
