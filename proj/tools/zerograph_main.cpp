#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "zerograph/fixtures.hpp"
#include "zerograph/metrics.hpp"
#include "zerograph/table_json.hpp"
#include "zerograph/theorems.hpp"

using namespace zerograph;

namespace {

struct Options {
  int threads = 0;
  std::string cache_dir;
  bool no_cache = false;
  bool timings = false;
  std::string fixtures_dir = "fixtures";
  int table_limit = kDefaultMaxN;
};

void write_text(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void write_json(const nlohmann::json& j, const std::string& path) {
  write_text(j.dump(1) + "\n", path);
}

// group specifier: sn:N, an:N or file:PATH
CharTable load_group(const std::string& spec, TableSource& src) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw CLI::ValidationError("--group", "expected sn:N, an:N or file:PATH");
  std::string kind = spec.substr(0, colon), rest = spec.substr(colon + 1);
  if (kind == "sn") return to_char_table(src.sn(std::stoi(rest)));
  if (kind == "an") return to_char_table(src.an(std::stoi(rest)));
  if (kind == "file") return ingest(rest);
  throw CLI::ValidationError("--group", "unknown group kind \"" + kind + "\"");
}

std::vector<int> check_range(int n_flag, int lo, int hi, int max_n_flag) {
  std::vector<int> out;
  if (n_flag > 0) {
    out.push_back(n_flag);
    return out;
  }
  if (max_n_flag > 0) hi = std::min(hi, max_n_flag);
  for (int n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

int emit_reports(const std::vector<VerificationReport>& reports, const Options& opt,
                 const std::string& json_path) {
  bool all_pass = true;
  for (const auto& r : reports) {
    all_pass = all_pass && r.pass();
    std::cout << (r.pass() ? "PASS " : "FAIL ") << r.check << " [" << r.scope << "]";
    if (!r.pass()) std::cout << " witnesses=" << r.witnesses.size();
    std::cout << "\n";
  }
  if (!json_path.empty()) write_json(reports_to_json(reports, opt.timings), json_path);
  return all_pass ? 0 : 1;
}

std::vector<VerificationReport> run_check(const std::string& name, Options& opt, int n_flag,
                                          int max_n_flag, const std::string& group) {
  TableSource src(opt.cache_dir, opt.no_cache, opt.threads, opt.table_limit);
  std::vector<VerificationReport> reports;
  auto over = [&](int lo, int hi, auto&& fn) {
    for (int n : check_range(n_flag, lo, hi, max_n_flag)) reports.push_back(fn(n));
  };

  if (name == "thm-a") {
    over(8, 13, [&](int n) { return verify_theorem_a(src, n); });
  } else if (name == "nk") {
    if (n_flag > 0) {
      reports.push_back(verify_nk_lists(src, n_flag));
    } else {
      for (int n : {10, 11, 12, 13})
        if (max_n_flag <= 0 || n <= max_n_flag) reports.push_back(verify_nk_lists(src, n));
    }
  } else if (name == "connectivity") {
    over(7, 12, [&](int n) { return verify_connectivity(src, n); });
  } else if (name == "lemma-3-5") {
    over(7, 12, [&](int n) { return verify_lemma_3_5(src, n); });
  } else if (name == "van-rigidity") {
    over(2, 12, [&](int n) { return verify_van_rigidity(src, n); });
  } else if (name == "metrics") {
    over(3, 10, [&](int n) { return verify_theorem_6_1(src.sn(n)); });
  } else if (name == "min-degree") {
    over(9, 12, [&](int n) { return verify_min_degree(src, n); });
  } else if (name == "coprime") {
    if (!group.empty()) {
      reports.push_back(verify_coprime_noncontainment(load_group(group, src)));
    } else {
      over(8, 12, [&](int n) { return verify_coprime_noncontainment(to_char_table(src.sn(n))); });
      over(8, 12, [&](int n) { return verify_coprime_noncontainment(to_char_table(src.an(n))); });
    }
  } else if (name == "fixtures") {
    for (auto& r : fixture_battery(opt.fixtures_dir)) reports.push_back(std::move(r));
  } else if (name == "all") {
    over(8, 13, [&](int n) { return verify_theorem_a(src, n); });
    over(5, 13, [&](int n) { return verify_mod2_congruence(src, n); });
    for (int n : {10, 11, 12, 13})
      if (max_n_flag <= 0 || n <= max_n_flag) reports.push_back(verify_nk_lists(src, n));
    over(7, 12, [&](int n) { return verify_connectivity(src, n); });
    over(7, 12, [&](int n) { return verify_lemma_3_5(src, n); });
    over(2, 12, [&](int n) { return verify_van_rigidity(src, n); });
    over(2, 12, [&](int n) { return verify_signature_pairs(src, n); });
    over(4, 10, [&](int n) { return check_lemma_3_1(src.sn(n), src.an(n)); });
    over(3, 10, [&](int n) { return verify_theorem_6_1(src.sn(n)); });
    over(9, 12, [&](int n) { return verify_min_degree(src, n); });
    over(8, 12, [&](int n) { return verify_coprime_noncontainment(to_char_table(src.sn(n))); });
    over(8, 12, [&](int n) { return verify_coprime_noncontainment(to_char_table(src.an(n))); });
    if (std::filesystem::exists(opt.fixtures_dir))
      for (auto& r : fixture_battery(opt.fixtures_dir)) reports.push_back(std::move(r));
  } else {
    throw CLI::ValidationError("check", "unknown check \"" + name + "\"");
  }
  return reports;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact character tables, common-zero graphs and their verification harness"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("ZEROGRAPH_CACHE_DIR")) opt.cache_dir = env;
  app.add_option("--threads", opt.threads, "worker thread cap (0 = all cores)");
  app.add_option("--cache-dir", opt.cache_dir, "table cache directory");
  app.add_flag("--no-cache", opt.no_cache, "bypass the table cache");
  app.add_flag("--timings", opt.timings, "include timings in JSON reports");
  app.add_option("--table-limit", opt.table_limit, "largest n for computed tables");

  // table {sn|an} --n N [--out FILE]
  auto* table_cmd = app.add_subcommand("table", "compute and serialize a character table");
  std::string table_kind;
  int table_n = 0;
  std::string table_out;
  table_cmd->add_option("kind", table_kind, "sn or an")->required();
  table_cmd->add_option("--n", table_n, "degree of the symmetric group")->required();
  table_cmd->add_option("--out", table_out, "output path (default stdout)");

  // ingest PATH [--json FILE]
  auto* ingest_cmd = app.add_subcommand("ingest", "validate an external table");
  std::string ingest_path, ingest_json;
  ingest_cmd->add_option("path", ingest_path, "table JSON file")->required();
  ingest_cmd->add_option("--json", ingest_json, "write the validation report here");

  // graph {gamma-v|delta-v|gamma} --group SPEC [--dot FILE] [--json FILE]
  auto* graph_cmd = app.add_subcommand("graph", "build a zero/divisor graph");
  std::string graph_kind, graph_group, graph_dot, graph_json;
  graph_cmd->add_option("kind", graph_kind, "gamma-v, delta-v or gamma")->required();
  graph_cmd->add_option("--group", graph_group, "sn:N, an:N or file:PATH")->required();
  graph_cmd->add_option("--dot", graph_dot, "write DOT here");
  graph_cmd->add_option("--json", graph_json, "write components/witnesses JSON here");

  // verify CHECK [--n N] [--max-n N] [--group SPEC] [--json FILE]
  auto* verify_cmd = app.add_subcommand("verify", "run a verification check");
  std::string verify_check, verify_group, verify_json;
  int verify_n = 0, verify_max_n = 0;
  verify_cmd
      ->add_option("check", verify_check,
                   "thm-a|nk|connectivity|lemma-3-5|van-rigidity|metrics|coprime|min-degree|"
                   "fixtures|all")
      ->required();
  verify_cmd->add_option("--n", verify_n, "run a single n");
  verify_cmd->add_option("--max-n", verify_max_n, "clamp the default n-range");
  verify_cmd->add_option("--group", verify_group, "group for table-level checks");
  verify_cmd->add_option("--fixtures", opt.fixtures_dir, "fixtures directory");
  verify_cmd->add_option("--json", verify_json, "write the report bundle here");

  // metrics pequiv --group SPEC [--csv FILE] [--json FILE]
  auto* metrics_cmd = app.add_subcommand("metrics", "character-induced metrics");
  auto* pequiv_cmd = metrics_cmd->add_subcommand("pequiv", "partition-equivalence analysis");
  std::string metrics_group, metrics_csv, metrics_json;
  pequiv_cmd->add_option("--group", metrics_group, "sn:N, an:N or file:PATH")->required();
  pequiv_cmd->add_option("--csv", metrics_csv, "dump class/block/value rows here");
  pequiv_cmd->add_option("--json", metrics_json, "write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints usage/help
    return e.get_name() == "CallForHelp" ? 0 : 2;
  }

  try {
    TableSource src(opt.cache_dir, opt.no_cache, opt.threads, opt.table_limit);

    if (*table_cmd) {
      CharTable t;
      if (table_kind == "sn")
        t = to_char_table(src.sn(table_n));
      else if (table_kind == "an")
        t = to_char_table(src.an(table_n));
      else
        throw CLI::ValidationError("kind", "expected sn or an");
      write_json(table_to_json(t), table_out);
      return 0;
    }

    if (*ingest_cmd) {
      CharTable t = ingest(ingest_path);
      VerificationReport rep = validate(t);
      emit_reports({rep}, opt, ingest_json);
      return rep.pass() ? 0 : 1;
    }

    if (*graph_cmd) {
      GraphKind kind;
      if (graph_kind == "gamma-v")
        kind = GraphKind::GammaV;
      else if (graph_kind == "delta-v")
        kind = GraphKind::DeltaV;
      else if (graph_kind == "gamma")
        kind = GraphKind::GammaDivisor;
      else
        throw CLI::ValidationError("kind", "expected gamma-v, delta-v or gamma");
      CharTable t = load_group(graph_group, src);
      ZeroGraph g = build_graph(t, kind);
      auto comps = components_and_diameters(g);
      if (!graph_dot.empty()) write_text(export_dot(g, t.name), graph_dot);
      nlohmann::json j;
      j["group"] = t.name;
      j["kind"] = graph_kind;
      j["vertices"] = g.labels;
      j["components"] = nlohmann::json::array();
      for (const auto& c : comps) {
        nlohmann::json cj;
        cj["diameter"] = c.diameter;
        cj["vertices"] = nlohmann::json::array();
        for (int v : c.vertices) cj["vertices"].push_back(g.labels[v]);
        j["components"].push_back(std::move(cj));
      }
      j["edges"] = nlohmann::json::array();
      for (const auto& [edge, witness] : g.witnesses)
        j["edges"].push_back(
            {{"a", g.labels[edge.first]}, {"b", g.labels[edge.second]}, {"witness", witness}});
      if (!graph_json.empty())
        write_json(j, graph_json);
      else if (graph_dot.empty())
        write_json(j, "");
      return 0;
    }

    if (*verify_cmd) {
      auto reports = run_check(verify_check, opt, verify_n, verify_max_n, verify_group);
      return emit_reports(reports, opt, verify_json);
    }

    if (*pequiv_cmd) {
      CharTable t = load_group(metrics_group, src);
      std::string csv = "character,class,block,value\n";
      for (std::size_t chi : faithful_characters(t)) {
        MetricPartition p = metric_partition(t, chi);
        for (std::size_t c = 0; c < t.classes.size(); ++c)
          csv += t.characters[chi].label + "," + t.classes[c].label + "," +
                 std::to_string(p.block_of[c]) + "," +
                 p.block_values[p.block_of[c]].str() + "\n";
      }
      if (!metrics_csv.empty()) write_text(csv, metrics_csv);
      if (t.name.size() > 1 && t.name[0] == 'S') {
        VerificationReport rep = verify_theorem_6_1(src.sn(std::stoi(t.name.substr(1))));
        emit_reports({rep}, opt, metrics_json);
        return rep.pass() ? 0 : 1;
      }
      if (metrics_csv.empty()) write_text(csv, "");
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
