#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "zerograph/graphs.hpp"
#include "zerograph/table_json.hpp"

using namespace zerograph;
namespace fs = std::filesystem;

namespace {

fs::path fixture(const std::string& name) { return fs::path(ZG_FIXTURE_DIR) / name; }

CharTable c2_table() {
  CharTable t;
  t.name = "C2";
  t.order = 2;
  t.classes = {{"1a", 1, 1}, {"2a", 1, 2}};
  t.characters = {{"X.1", 1, {ExactValue(1), ExactValue(1)}},
                  {"X.2", 1, {ExactValue(1), ExactValue(-1)}}};
  return t;
}

}  // namespace

TEST_CASE("vanishing sets") {
  CharTable s8 = to_char_table(char_table_sn(8));
  SnTable sn8 = char_table_sn(8);
  int chi = sn8.row_index(Partition({6, 2}));
  auto van = vanishing_set(s8, chi);
  int c5111 = sn8.col_index(Partition({5, 1, 1, 1}));
  CHECK(std::find(van.begin(), van.end(), c5111) != van.end());

  // trivial character never vanishes
  CharTable s5 = to_char_table(char_table_sn(5));
  SnTable sn5 = char_table_sn(5);
  CHECK(vanishing_set(s5, sn5.row_index(Partition({5}))).empty());

  // chi^{(4,1)} = fix - 1 vanishes exactly on the fix = 1 classes
  auto van41 = vanishing_set(s5, sn5.row_index(Partition({4, 1})));
  std::vector<std::size_t> expect = {
      static_cast<std::size_t>(sn5.col_index(Partition({2, 2, 1}))),
      static_cast<std::size_t>(sn5.col_index(Partition({4, 1})))};
  std::sort(expect.begin(), expect.end());
  CHECK(van41 == expect);
}

TEST_CASE("gamma_v component counts on small groups") {
  AnTable a5 = char_table_an(5);
  ZeroGraph g = build_graph(to_char_table(a5), GraphKind::GammaV);
  CHECK(g.vertex_count() == 4);
  CHECK(components_and_diameters(g).size() == 3);

  ZeroGraph g6 = build_graph(to_char_table(char_table_an(6)), GraphKind::GammaV);
  CHECK(components_and_diameters(g6).size() == 2);

  ZeroGraph sl23 = build_graph(ingest(fixture("sl2_3.json")), GraphKind::GammaV);
  CHECK(components_and_diameters(sl23).size() == 2);  // disconnected

  CHECK(build_graph(ingest(fixture("d8.json")), GraphKind::GammaV).complete());
  CHECK(build_graph(ingest(fixture("q8.json")), GraphKind::GammaV).complete());

  ZeroGraph s4 = build_graph(to_char_table(char_table_sn(4)), GraphKind::GammaV);
  CHECK(components_and_diameters(s4).size() == 2);
}

TEST_CASE("components and diameters") {
  ZeroGraph s9 = build_graph(to_char_table(char_table_sn(9)), GraphKind::GammaV);
  auto comps = components_and_diameters(s9);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].diameter == 2);

  // empty graph on an abelian table
  ZeroGraph empty = build_graph(c2_table(), GraphKind::GammaV);
  CHECK(empty.vertex_count() == 0);
  CHECK(components_and_diameters(empty).empty());
}

TEST_CASE("edge witnesses certify") {
  for (const char* name : {"sl2_3.json", "gl2_3.json", "psl2_11.json", "d16.json"}) {
    CharTable t = ingest(fixture(name));
    for (GraphKind kind : {GraphKind::GammaV, GraphKind::DeltaV, GraphKind::GammaDivisor}) {
      ZeroGraph g = build_graph(t, kind);
      CHECK(witnesses_certify(g, t));
    }
  }
  CharTable s8 = to_char_table(char_table_sn(8));
  for (GraphKind kind : {GraphKind::GammaV, GraphKind::DeltaV, GraphKind::GammaDivisor})
    CHECK(witnesses_certify(build_graph(s8, kind), s8));
}

TEST_CASE("duality") {
  VerificationReport rep = duality_check(to_char_table(char_table_sn(8)));
  CHECK(rep.pass());
  CHECK(rep.details["gamma_v_components"] == 1);
  CHECK(rep.details["delta_v_components"] == 1);

  rep = duality_check(ingest(fixture("sl2_3.json")));
  CHECK(rep.pass());
  CHECK(rep.details["gamma_v_components"] == 2);
  CHECK(rep.details["delta_v_components"] == 2);

  CharTable d16 = ingest(fixture("d16.json"));
  rep = duality_check(d16);
  CHECK(rep.pass());
  CHECK(build_graph(d16, GraphKind::GammaV).complete());
  CHECK_FALSE(build_graph(d16, GraphKind::DeltaV).complete());

  // abelian: both graphs empty, trivially dual
  CHECK(duality_check(c2_table()).pass());
}

TEST_CASE("subgraph check") {
  CHECK(subgraph_check(to_char_table(char_table_sn(10))).pass());
  CHECK(subgraph_check(to_char_table(char_table_an(9))).pass());

  VerificationReport rep = subgraph_check(ingest(fixture("psl2_11.json")));
  CHECK_FALSE(rep.pass());
  REQUIRE(!rep.witnesses.empty());
  // the witness pair has non-coprime degrees and disjoint vanishing sets
  bool found_10_12 = false;
  for (const auto& w : rep.witnesses) {
    std::string chi = w["chi"], psi = w["psi"];
    if ((chi == "X.4" || chi == "X.5") && (psi == "X.7" || psi == "X.8")) found_10_12 = true;
  }
  CHECK(found_10_12);
}

TEST_CASE("dot export") {
  ZeroGraph a5 = build_graph(to_char_table(char_table_an(5)), GraphKind::GammaV);
  std::string dot = export_dot(a5, "A5");
  CHECK(dot.find("cluster_0") != std::string::npos);
  CHECK(dot.find("cluster_2") != std::string::npos);
  CHECK(dot.find("cluster_3") == std::string::npos);
  CHECK(dot == export_dot(a5, "A5"));  // deterministic

  std::string empty_dot = export_dot(build_graph(c2_table(), GraphKind::GammaV), "C2");
  CHECK(empty_dot.find("graph") == 0);
  CHECK(empty_dot.find("--") == std::string::npos);

  // non-edges of Gamma_v(S8) are exactly the four exceptional pairs
  ZeroGraph s8 = build_graph(to_char_table(char_table_sn(8)), GraphKind::GammaV);
  int non_edges = 0;
  for (std::size_t i = 0; i < s8.vertex_count(); ++i)
    for (std::size_t j = i + 1; j < s8.vertex_count(); ++j)
      if (!s8.adj[i][j]) ++non_edges;
  CHECK(non_edges == 4);
}
