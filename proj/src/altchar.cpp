#include "zerograph/altchar.hpp"

#include <stdexcept>

namespace zerograph {

std::string AnCharacter::label() const {
  switch (kind) {
    case AnCharKind::NonSplit: return lambda.to_string();
    case AnCharKind::SplitPlus: return lambda.to_string() + "+";
    case AnCharKind::SplitMinus: return lambda.to_string() + "-";
  }
  throw std::logic_error("unreachable");
}

std::string AnClass::label() const {
  switch (kind) {
    case AnClassKind::Whole: return mu.to_string();
    case AnClassKind::SplitA: return mu.to_string() + "+";
    case AnClassKind::SplitB: return mu.to_string() + "-";
  }
  throw std::logic_error("unreachable");
}

int AnTable::col_index(AnClassKind kind, const Partition& mu) const {
  for (std::size_t i = 0; i < cols.size(); ++i)
    if (cols[i].kind == kind && cols[i].mu == mu) return static_cast<int>(i);
  throw std::invalid_argument("AnTable: unknown class " + mu.to_string());
}

std::vector<AnClass> an_classes(int n) {
  if (n < 2) throw std::invalid_argument("an_classes: n >= 2 required");
  std::vector<Partition> types = all_partitions(n);
  std::reverse(types.begin(), types.end());  // identity first, as in SnTable
  std::vector<AnClass> out;
  for (const Partition& mu : types) {
    ClassData cd = class_data(mu);
    if (!cd.in_an) continue;
    if (cd.splits_in_an) {
      out.push_back({AnClassKind::SplitA, mu});
      out.push_back({AnClassKind::SplitB, mu});
    } else {
      out.push_back({AnClassKind::Whole, mu});
    }
  }
  return out;
}

AnTable char_table_an(const SnTable& sn) {
  int n = sn.n;
  if (n < 2) throw std::invalid_argument("char_table_an: n >= 2 required");
  AnTable t;
  t.n = n;
  t.cols = an_classes(n);
  for (const AnClass& cl : t.cols) {
    ClassData cd = class_data(cl.mu);
    if (cl.kind == AnClassKind::Whole) {
      t.class_sizes.push_back(cd.size);
    } else {
      if (cd.size % 2 != 0) throw std::logic_error("char_table_an: odd size for split class");
      t.class_sizes.push_back(cd.size / 2);
    }
  }

  for (const Partition& la : sn.rows) {
    Partition conj = conjugate(la);
    if (la == conj) {
      t.rows.push_back({AnCharKind::SplitPlus, la});
      t.rows.push_back({AnCharKind::SplitMinus, la});
    } else if (rev_lex_before(la, conj)) {
      t.rows.push_back({AnCharKind::NonSplit, la});
    }
  }

  t.values.assign(t.rows.size(), std::vector<ExactValue>(t.cols.size()));
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const AnCharacter& ch = t.rows[r];
    int sn_row = sn.row_index(ch.lambda);
    if (ch.kind == AnCharKind::NonSplit) {
      t.degrees.push_back(sn.degrees[sn_row]);
      for (std::size_t c = 0; c < t.cols.size(); ++c)
        t.values[r][c] = ExactValue(sn.values[sn_row][sn.col_index(t.cols[c].mu)]);
      continue;
    }

    // split row: degree chi(1)/2; away from the diagonal-hook class the
    // value is chi(mu)/2, at that class (eps +- sqrt(eps * prod mu_i))/2
    // with eps = (-1)^{(n - r)/2}, r the number of diagonal hooks
    if (sn.degrees[sn_row] % 2 != 0)
      throw std::logic_error("char_table_an: split character of odd degree");
    t.degrees.push_back(sn.degrees[sn_row] / 2);

    DiagonalHooks dh = diagonal_hooks(ch.lambda);
    if (!dh.self_conjugate) throw std::logic_error("char_table_an: split row not self-conjugate");
    int hooks = dh.hooks.rows();
    int eps = ((n - hooks) / 2) % 2 == 0 ? 1 : -1;
    Int prod = 1;
    for (int h : dh.hooks.parts()) prod *= h;

    for (std::size_t c = 0; c < t.cols.size(); ++c) {
      const AnClass& cl = t.cols[c];
      if (cl.kind != AnClassKind::Whole && cl.mu == dh.hooks) {
        bool plus_row = ch.kind == AnCharKind::SplitPlus;
        bool a_col = cl.kind == AnClassKind::SplitA;
        Rat b = (plus_row == a_col) ? Rat(1, 2) : Rat(-1, 2);
        t.values[r][c] = ExactValue::quad(Rat(eps, 2), b, Int(eps) * prod);
      } else {
        Int v = sn.values[sn_row][sn.col_index(cl.mu)];
        if (v % 2 != 0)
          throw std::logic_error("char_table_an: odd restricted value on a non-exceptional class");
        t.values[r][c] = ExactValue(Int(v / 2));
      }
    }
  }
  return t;
}

AnTable char_table_an(int n, int threads, int max_n) {
  return char_table_an(char_table_sn(n, threads, max_n));
}

}  // namespace zerograph
