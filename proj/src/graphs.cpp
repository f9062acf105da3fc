#include "zerograph/graphs.hpp"

#include <algorithm>
#include <deque>

namespace zerograph {

bool ZeroGraph::complete() const {
  for (std::size_t i = 0; i < vertex_count(); ++i)
    for (std::size_t j = i + 1; j < vertex_count(); ++j)
      if (!adj[i][j]) return false;
  return true;
}

std::vector<std::size_t> vanishing_set(const CharTable& t, std::size_t chi) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < t.classes.size(); ++c)
    if (t.characters[chi].values[c].is_zero()) out.push_back(c);
  return out;
}

namespace {

std::vector<std::vector<bool>> vanishing_matrix(const CharTable& t) {
  std::vector<std::vector<bool>> van(t.characters.size(),
                                     std::vector<bool>(t.classes.size(), false));
  for (std::size_t i = 0; i < t.characters.size(); ++i)
    for (std::size_t c = 0; c < t.classes.size(); ++c)
      van[i][c] = t.characters[i].values[c].is_zero();
  return van;
}

std::vector<int> nonlinear_characters(const CharTable& t) {
  std::vector<int> out;
  for (std::size_t i = 0; i < t.characters.size(); ++i)
    if (t.characters[i].degree > 1) out.push_back(static_cast<int>(i));
  return out;
}

}  // namespace

ZeroGraph build_graph(const CharTable& t, GraphKind kind) {
  ZeroGraph g;
  g.kind = kind;
  auto van = vanishing_matrix(t);

  if (kind == GraphKind::GammaV || kind == GraphKind::GammaDivisor) {
    g.source_index = nonlinear_characters(t);
    for (int i : g.source_index) {
      g.labels.push_back(t.characters[i].label);
      g.meta.push_back("deg=" + t.characters[i].degree.str());
    }
    std::size_t k = g.source_index.size();
    g.adj.assign(k, std::vector<char>(k, 0));
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        int i = g.source_index[a], j = g.source_index[b];
        if (kind == GraphKind::GammaV) {
          for (std::size_t c = 0; c < t.classes.size(); ++c) {
            if (van[i][c] && van[j][c]) {
              g.adj[a][b] = g.adj[b][a] = 1;
              g.witnesses[{static_cast<int>(a), static_cast<int>(b)}] = t.classes[c].label;
              break;
            }
          }
        } else {
          Int common = gcd(t.characters[i].degree, t.characters[j].degree);
          if (common > 1) {
            g.adj[a][b] = g.adj[b][a] = 1;
            g.witnesses[{static_cast<int>(a), static_cast<int>(b)}] =
                smallest_prime_factor(common).str();
          }
        }
      }
    }
    return g;
  }

  // DeltaV: vertices are the vanishing classes
  for (std::size_t c = 0; c < t.classes.size(); ++c) {
    bool vanishing = false;
    for (std::size_t i = 0; i < t.characters.size(); ++i)
      if (van[i][c]) vanishing = true;
    if (vanishing) {
      g.source_index.push_back(static_cast<int>(c));
      g.labels.push_back(t.classes[c].label);
      g.meta.push_back("size=" + t.classes[c].size.str());
    }
  }
  std::size_t k = g.source_index.size();
  g.adj.assign(k, std::vector<char>(k, 0));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      for (std::size_t i = 0; i < t.characters.size(); ++i) {
        if (van[i][g.source_index[a]] && van[i][g.source_index[b]]) {
          g.adj[a][b] = g.adj[b][a] = 1;
          g.witnesses[{static_cast<int>(a), static_cast<int>(b)}] = t.characters[i].label;
          break;
        }
      }
    }
  }
  return g;
}

std::vector<Component> components_and_diameters(const ZeroGraph& g) {
  std::size_t n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = ncomp;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t w = 0; w < n; ++w)
        if (g.adj[v][w] && comp[w] < 0) {
          comp[w] = ncomp;
          queue.push_back(w);
        }
    }
    ++ncomp;
  }

  std::vector<Component> out(ncomp);
  for (std::size_t v = 0; v < n; ++v) out[comp[v]].vertices.push_back(static_cast<int>(v));

  // exact diameter per component: BFS from every vertex
  for (Component& c : out) {
    int diam = 0;
    for (int start : c.vertices) {
      std::vector<int> dist(n, -1);
      dist[start] = 0;
      std::deque<int> queue{start};
      while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (std::size_t w = 0; w < n; ++w)
          if (g.adj[v][w] && dist[w] < 0) {
            dist[w] = dist[v] + 1;
            queue.push_back(static_cast<int>(w));
          }
      }
      for (int v : c.vertices) diam = std::max(diam, dist[v]);
    }
    c.diameter = diam;
  }
  return out;
}

bool witnesses_certify(const ZeroGraph& g, const CharTable& t) {
  auto class_index = [&](const std::string& label) -> int {
    for (std::size_t c = 0; c < t.classes.size(); ++c)
      if (t.classes[c].label == label) return static_cast<int>(c);
    return -1;
  };
  auto char_index = [&](const std::string& label) -> int {
    for (std::size_t i = 0; i < t.characters.size(); ++i)
      if (t.characters[i].label == label) return static_cast<int>(i);
    return -1;
  };
  for (const auto& [edge, witness] : g.witnesses) {
    int i = g.source_index[edge.first], j = g.source_index[edge.second];
    switch (g.kind) {
      case GraphKind::GammaV: {
        int c = class_index(witness);
        if (c < 0 || !t.characters[i].values[c].is_zero() ||
            !t.characters[j].values[c].is_zero())
          return false;
        break;
      }
      case GraphKind::DeltaV: {
        int ch = char_index(witness);
        if (ch < 0 || !t.characters[ch].values[i].is_zero() ||
            !t.characters[ch].values[j].is_zero())
          return false;
        break;
      }
      case GraphKind::GammaDivisor: {
        Int p(witness);
        if (p < 2 || t.characters[i].degree % p != 0 || t.characters[j].degree % p != 0)
          return false;
        break;
      }
    }
  }
  return true;
}

namespace {

nlohmann::json component_json(const ZeroGraph& g, const Component& c) {
  nlohmann::json j;
  j["diameter"] = c.diameter;
  j["vertices"] = nlohmann::json::array();
  for (int v : c.vertices) j["vertices"].push_back(g.labels[v]);
  return j;
}

}  // namespace

VerificationReport duality_check(const CharTable& t) {
  VerificationReport rep;
  rep.check = "duality";
  rep.scope = t.name;

  ZeroGraph gv = build_graph(t, GraphKind::GammaV);
  ZeroGraph dv = build_graph(t, GraphKind::DeltaV);
  auto gv_comp = components_and_diameters(gv);
  auto dv_comp = components_and_diameters(dv);

  rep.details["gamma_v_components"] = gv_comp.size();
  rep.details["delta_v_components"] = dv_comp.size();
  if (gv_comp.size() != dv_comp.size())
    rep.witnesses.push_back({{"kind", "component-count-mismatch"},
                             {"gamma_v", gv_comp.size()},
                             {"delta_v", dv_comp.size()}});

  // component id per vertex, on each side
  auto comp_of = [](const std::vector<Component>& comps, std::size_t n) {
    std::vector<int> of(n, -1);
    for (std::size_t k = 0; k < comps.size(); ++k)
      for (int v : comps[k].vertices) of[v] = static_cast<int>(k);
    return of;
  };
  std::vector<int> gv_of = comp_of(gv_comp, gv.vertex_count());
  std::vector<int> dv_of = comp_of(dv_comp, dv.vertex_count());

  auto van = [&](std::size_t chi, std::size_t cls) {
    return t.characters[chi].values[cls].is_zero();
  };

  // f: DeltaV component -> set of characters vanishing at one of its classes
  std::vector<int> f(dv_comp.size(), -1);
  for (std::size_t k = 0; k < dv_comp.size(); ++k) {
    std::vector<int> image;  // GammaV vertex ids
    for (std::size_t a = 0; a < gv.vertex_count(); ++a)
      for (int v : dv_comp[k].vertices)
        if (van(gv.source_index[a], dv.source_index[v])) {
          image.push_back(static_cast<int>(a));
          break;
        }
    if (image.empty()) {
      rep.witnesses.push_back({{"kind", "f-image-empty"}, {"delta_component", k}});
      continue;
    }
    int target = gv_of[image[0]];
    bool is_component = std::all_of(image.begin(), image.end(),
                                    [&](int a) { return gv_of[a] == target; }) &&
                        image.size() == gv_comp[target].vertices.size();
    if (!is_component)
      rep.witnesses.push_back({{"kind", "f-image-not-a-component"}, {"delta_component", k}});
    else
      f[k] = target;
  }

  // h: GammaV component -> set of classes where one of its characters vanishes
  std::vector<int> h(gv_comp.size(), -1);
  for (std::size_t k = 0; k < gv_comp.size(); ++k) {
    std::vector<int> image;  // DeltaV vertex ids
    for (std::size_t b = 0; b < dv.vertex_count(); ++b)
      for (int v : gv_comp[k].vertices)
        if (van(gv.source_index[v], dv.source_index[b])) {
          image.push_back(static_cast<int>(b));
          break;
        }
    if (image.empty()) {
      rep.witnesses.push_back({{"kind", "h-image-empty"}, {"gamma_component", k}});
      continue;
    }
    int target = dv_of[image[0]];
    bool is_component = std::all_of(image.begin(), image.end(),
                                    [&](int b) { return dv_of[b] == target; }) &&
                        image.size() == dv_comp[target].vertices.size();
    if (!is_component)
      rep.witnesses.push_back({{"kind", "h-image-not-a-component"}, {"gamma_component", k}});
    else
      h[k] = target;
  }

  // mutually inverse bijections; matched diameters differ by at most one
  for (std::size_t k = 0; k < dv_comp.size(); ++k) {
    if (f[k] < 0) continue;
    if (h[f[k]] != static_cast<int>(k))
      rep.witnesses.push_back({{"kind", "f-h-not-inverse"}, {"delta_component", k}});
    int gap = dv_comp[k].diameter - gv_comp[f[k]].diameter;
    if (gap < -1 || gap > 1)
      rep.witnesses.push_back({{"kind", "diameter-gap"},
                               {"delta_component", k},
                               {"delta_diameter", dv_comp[k].diameter},
                               {"gamma_diameter", gv_comp[f[k]].diameter}});
  }
  for (std::size_t k = 0; k < gv_comp.size(); ++k)
    if (h[k] >= 0 && f[h[k]] != static_cast<int>(k))
      rep.witnesses.push_back({{"kind", "h-f-not-inverse"}, {"gamma_component", k}});

  rep.details["gamma_v"] = nlohmann::json::array();
  for (const auto& c : gv_comp) rep.details["gamma_v"].push_back(component_json(gv, c));
  rep.details["delta_v"] = nlohmann::json::array();
  for (const auto& c : dv_comp) rep.details["delta_v"].push_back(component_json(dv, c));
  return rep;
}

VerificationReport subgraph_check(const CharTable& t) {
  VerificationReport rep;
  rep.check = "subgraph";
  rep.scope = t.name;
  ZeroGraph gv = build_graph(t, GraphKind::GammaV);
  ZeroGraph gd = build_graph(t, GraphKind::GammaDivisor);
  for (std::size_t i = 0; i < gd.vertex_count(); ++i)
    for (std::size_t j = i + 1; j < gd.vertex_count(); ++j)
      if (gd.adj[i][j] && !gv.adj[i][j])
        rep.witnesses.push_back(
            {{"kind", "divisor-edge-without-common-zero"},
             {"chi", gd.labels[i]},
             {"psi", gd.labels[j]},
             {"common_prime", gd.witnesses.at({static_cast<int>(i), static_cast<int>(j)})}});
  rep.details["divisor_edges"] = gd.witnesses.size();
  rep.details["zero_edges"] = gv.witnesses.size();
  return rep;
}

std::string export_dot(const ZeroGraph& g, const std::string& graph_name) {
  std::string kind;
  switch (g.kind) {
    case GraphKind::GammaV: kind = "gamma_v"; break;
    case GraphKind::DeltaV: kind = "delta_v"; break;
    case GraphKind::GammaDivisor: kind = "gamma"; break;
  }
  std::string out = "graph \"" + kind + "_" + graph_name + "\" {\n";
  auto comps = components_and_diameters(g);
  for (std::size_t k = 0; k < comps.size(); ++k) {
    out += "  subgraph cluster_" + std::to_string(k) + " {\n";
    out += "    label=\"component " + std::to_string(k) + " (diameter " +
           std::to_string(comps[k].diameter) + ")\";\n";
    for (int v : comps[k].vertices)
      out += "    v" + std::to_string(v) + " [label=\"" + g.labels[v] + " " + g.meta[v] +
             "\"];\n";
    out += "  }\n";
  }
  for (const auto& [edge, witness] : g.witnesses)
    out += "  v" + std::to_string(edge.first) + " -- v" + std::to_string(edge.second) +
           " [tooltip=\"" + witness + "\"];\n";
  out += "}\n";
  return out;
}

}  // namespace zerograph
