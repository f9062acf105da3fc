#pragma once

#include <string>
#include <vector>

#include "zerograph/altchar.hpp"
#include "zerograph/exact_value.hpp"
#include "zerograph/report.hpp"
#include "zerograph/symchar.hpp"

namespace zerograph {

struct ClassInfo {
  std::string label;
  Int size;
  long element_order;
};

struct CharacterRow {
  std::string label;
  Int degree;
  std::vector<ExactValue> values;  // one per class
};

// Generic character table of a finite group. Invariants (checked by
// validate / validate_or_throw):
//   - class sizes sum to the order; the identity class is first and is
//     the only class of size 1 with element order 1
//   - each character's value at the identity equals its positive degree
//   - exact row orthogonality, and sum of squared degrees = order
struct CharTable {
  std::string name;
  std::string source;
  Int order;
  std::vector<ClassInfo> classes;
  std::vector<CharacterRow> characters;

  bool operator==(const CharTable& o) const;
};

CharTable to_char_table(const SnTable& t);
CharTable to_char_table(const AnTable& t);

// Runs the full invariant battery, including column orthogonality.
VerificationReport validate(const CharTable& t);

// Throws std::invalid_argument naming the first violated invariant.
void validate_or_throw(const CharTable& t);

}  // namespace zerograph
