#include "zerograph/fixtures.hpp"

#include "zerograph/table_json.hpp"

namespace zerograph {

namespace {

struct Expectation {
  const char* file;
  int gamma_v_components;  // -1: no exact count asserted
  int component_bound;     // 2 for solvable, 3 for simple groups
  bool gamma_v_complete;
  bool delta_v_complete_required;  // d16 must FAIL this
  bool subgraph_holds;
};

constexpr Expectation kBundled[] = {
    {"sl2_3.json", 2, 2, false, false, true},
    {"s4.json", 2, 2, false, false, true},
    {"gl2_3.json", 2, 2, false, false, true},
    {"d8.json", 1, 2, true, false, true},
    {"q8.json", 1, 2, true, false, true},
    {"d16.json", 1, 2, true, false, true},
    {"psl2_5.json", 3, 3, false, false, true},
    {"psl2_7.json", -1, 3, false, false, true},
    {"psl2_11.json", 3, 3, false, false, false},
};

}  // namespace

std::vector<VerificationReport> fixture_battery(const std::filesystem::path& dir,
                                                bool optional_too) {
  std::vector<VerificationReport> out;
  for (const Expectation& exp : kBundled) {
    VerificationReport rep;
    rep.check = "fixture";
    rep.scope = exp.file;
    CharTable t;
    try {
      t = ingest(dir / exp.file);
    } catch (const std::exception& e) {
      rep.witnesses.push_back({{"kind", "ingest-failed"}, {"error", e.what()}});
      out.push_back(std::move(rep));
      continue;
    }

    VerificationReport val = validate(t);
    for (const auto& w : val.witnesses) rep.witnesses.push_back(w);

    ZeroGraph gv = build_graph(t, GraphKind::GammaV);
    auto comps = components_and_diameters(gv);
    rep.details["gamma_v_components"] = comps.size();
    if (exp.gamma_v_components >= 0 &&
        comps.size() != static_cast<std::size_t>(exp.gamma_v_components))
      rep.witnesses.push_back({{"kind", "component-count"},
                               {"expected", exp.gamma_v_components},
                               {"got", comps.size()}});
    if (comps.size() > static_cast<std::size_t>(exp.component_bound))
      rep.witnesses.push_back({{"kind", "component-bound-exceeded"},
                               {"bound", exp.component_bound},
                               {"got", comps.size()}});
    if (exp.gamma_v_complete != gv.complete())
      rep.witnesses.push_back(
          {{"kind", "gamma-v-completeness"}, {"expected", exp.gamma_v_complete}});

    if (std::string(exp.file) == "d16.json") {
      ZeroGraph dv = build_graph(t, GraphKind::DeltaV);
      if (dv.complete())
        rep.witnesses.push_back({{"kind", "delta-v-unexpectedly-complete"}});
    }

    VerificationReport dual = duality_check(t);
    for (const auto& w : dual.witnesses) rep.witnesses.push_back(w);

    VerificationReport sub = subgraph_check(t);
    if (sub.pass() != exp.subgraph_holds) {
      if (exp.subgraph_holds)
        for (const auto& w : sub.witnesses) rep.witnesses.push_back(w);
      else
        rep.witnesses.push_back({{"kind", "subgraph-unexpectedly-holds"}});
    }
    if (!sub.pass()) rep.details["subgraph_witnesses"] = sub.witnesses;

    VerificationReport cop = verify_coprime_noncontainment(t);
    for (const auto& w : cop.witnesses) rep.witnesses.push_back(w);

    out.push_back(std::move(rep));
  }

  // PSL(2,11): the divisor graph must NOT be a subgraph of the zero graph
  {
    VerificationReport rep;
    rep.check = "fixture-psl2-11-subgraph-failure";
    rep.scope = "psl2_11.json";
    try {
      VerificationReport sub = subgraph_check(ingest(dir / "psl2_11.json"));
      if (sub.pass())
        rep.witnesses.push_back({{"kind", "expected-a-witness-pair"}});
      else
        rep.details["witnesses"] = sub.witnesses;
    } catch (const std::exception& e) {
      rep.witnesses.push_back({{"kind", "ingest-failed"}, {"error", e.what()}});
    }
    out.push_back(std::move(rep));
  }

  if (optional_too) {
    for (const char* name : {"m12.json", "smallgroup_324_160.json"}) {
      VerificationReport rep;
      rep.check = "fixture-optional";
      rep.scope = name;
      try {
        CharTable t = ingest(dir / name);
        VerificationReport val = validate(t);
        for (const auto& w : val.witnesses) rep.witnesses.push_back(w);
        VerificationReport dual = duality_check(t);
        for (const auto& w : dual.witnesses) rep.witnesses.push_back(w);
        // both known optional groups are subgraph counterexamples
        VerificationReport sub = subgraph_check(t);
        if (sub.pass()) rep.witnesses.push_back({{"kind", "expected-a-witness-pair"}});
        VerificationReport cop = verify_coprime_noncontainment(t);
        for (const auto& w : cop.witnesses) rep.witnesses.push_back(w);
      } catch (const std::exception& e) {
        rep.witnesses.push_back({{"kind", "ingest-failed"}, {"error", e.what()}});
      }
      out.push_back(std::move(rep));
    }
  }
  return out;
}

}  // namespace zerograph
