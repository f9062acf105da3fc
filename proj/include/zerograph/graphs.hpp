#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zerograph/char_table.hpp"

namespace zerograph {

enum class GraphKind { GammaV, DeltaV, GammaDivisor };

// Common-zero graph (GammaV, vertices = non-linear characters, edge when
// two characters share a zero class), its vanishing-class dual (DeltaV)
// and the common-divisor graph (GammaDivisor, edge when degrees are not
// coprime). Every edge stores a witness: a common zero class, a character
// vanishing on both classes, or a common prime divisor.
struct ZeroGraph {
  GraphKind kind;
  std::vector<std::string> labels;          // vertex labels
  std::vector<std::string> meta;            // degree (characters) or size (classes)
  std::vector<int> source_index;            // character/class index in the table
  std::vector<std::vector<char>> adj;
  std::map<std::pair<int, int>, std::string> witnesses;  // i < j

  std::size_t vertex_count() const { return labels.size(); }
  bool edge(int i, int j) const { return adj[i][j] != 0; }
  bool complete() const;
};

// Class indices where the character's exact value is zero.
std::vector<std::size_t> vanishing_set(const CharTable& t, std::size_t chi);

ZeroGraph build_graph(const CharTable& t, GraphKind kind);

struct Component {
  std::vector<int> vertices;  // ascending
  int diameter;               // 0 for singletons
};
std::vector<Component> components_and_diameters(const ZeroGraph& g);

// Re-checks every stored edge witness against the table.
bool witnesses_certify(const ZeroGraph& g, const CharTable& t);

// Lemma-style duality battery: f/h maps between components of DeltaV and
// GammaV are mutually inverse bijections, component counts agree, and
// matched components' diameters differ by at most one.
VerificationReport duality_check(const CharTable& t);

// Is every common-divisor edge also a common-zero edge?  Witnesses are
// character pairs with non-coprime degrees and disjoint vanishing sets.
VerificationReport subgraph_check(const CharTable& t);

std::string export_dot(const ZeroGraph& g, const std::string& graph_name);

}  // namespace zerograph
