#include "cubicpm/surgery.hpp"

#include <algorithm>
#include <set>

namespace cubicpm {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_vertex(const Multigraph& g, Vertex v) {
  if (v < 0 || v >= g.vertex_count()) {
    throw GraphError(ErrorKind::VertexIdOutOfRange, "vertex " + std::to_string(v));
  }
}

std::vector<std::optional<EdgeId>> identity_origin(int m) {
  std::vector<std::optional<EdgeId>> out(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) out[static_cast<std::size_t>(i)] = i;
  return out;
}

SurgeryResult do_contract(const Multigraph& g, const ContractStep& step) {
  if (step.part.empty()) throw GraphError(ErrorKind::DisconnectedPart, "empty part");
  const int n = g.vertex_count();
  std::vector<char> in_part(static_cast<std::size_t>(n), 0);
  for (Vertex v : step.part) {
    require_vertex(g, v);
    in_part[static_cast<std::size_t>(v)] = 1;
  }
  // Connectivity of the part.
  const Vertex target = *std::min_element(step.part.begin(), step.part.end());
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{target};
  seen[static_cast<std::size_t>(target)] = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(v)) {
      Vertex w = g.edge(e).other(v);
      if (in_part[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  for (Vertex v : step.part) {
    if (!seen[static_cast<std::size_t>(v)]) {
      throw GraphError(ErrorKind::DisconnectedPart, "vertex " + std::to_string(v) +
                                                        " is not connected to the rest of the part");
    }
  }

  std::vector<Vertex> map(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (in_part[static_cast<std::size_t>(v)] && v != target) continue;
    map[static_cast<std::size_t>(v)] = next++;
  }
  for (Vertex v : step.part) map[static_cast<std::size_t>(v)] = map[static_cast<std::size_t>(target)];

  std::vector<Edge> edges;
  SurgeryTrace trace;
  trace.steps.push_back(step);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (in_part[static_cast<std::size_t>(ed.a)] && in_part[static_cast<std::size_t>(ed.b)]) continue;
    edges.push_back({map[static_cast<std::size_t>(ed.a)], map[static_cast<std::size_t>(ed.b)]});
    trace.edge_origin.push_back(e);
  }
  std::map<Vertex, std::string> labels;
  for (const auto& [v, text] : g.labels()) {
    if (!in_part[static_cast<std::size_t>(v)]) labels[map[static_cast<std::size_t>(v)]] = text;
  }
  return {Multigraph::from_edges(next, std::move(edges), std::move(labels)), std::move(trace)};
}

SurgeryResult do_glue(const Multigraph& g, const GlueStep& step) {
  require_vertex(g, step.u);
  require_vertex(step.h, step.v);
  if (g.degree(step.u) != 3 || step.h.degree(step.v) != 3) {
    throw GraphError(ErrorKind::DegreeMismatch, "gluing requires degree-3 vertices");
  }
  const auto& h_inc = step.h.incident(step.v);
  std::set<EdgeId> used;
  for (EdgeId f : step.pairing) {
    if (std::find(h_inc.begin(), h_inc.end(), f) == h_inc.end() || !used.insert(f).second) {
      throw GraphError(ErrorKind::EdgeIdOutOfRange, "pairing is not a bijection onto the edges at v");
    }
  }

  const int gn = g.vertex_count();
  std::vector<Vertex> hmap(static_cast<std::size_t>(step.h.vertex_count()), -1);
  int next = gn;
  bool first = true;
  for (Vertex w = 0; w < step.h.vertex_count(); ++w) {
    if (w == step.v) continue;
    hmap[static_cast<std::size_t>(w)] = first ? step.u : next++;
    first = false;
  }

  std::vector<Edge> edges = g.edges();
  SurgeryTrace trace;
  trace.steps.push_back(step);
  trace.edge_origin = identity_origin(g.edge_count());
  const auto& g_inc = g.incident(step.u);
  for (std::size_t i = 0; i < 3; ++i) {
    Edge& e = edges[static_cast<std::size_t>(g_inc[i])];
    Vertex hw = step.h.edge(step.pairing[i]).other(step.v);
    if (e.a == step.u) {
      e.a = hmap[static_cast<std::size_t>(hw)];
    } else {
      e.b = hmap[static_cast<std::size_t>(hw)];
    }
  }
  for (const Edge& f : step.h.edges()) {
    if (f.touches(step.v)) continue;
    edges.push_back({hmap[static_cast<std::size_t>(f.a)], hmap[static_cast<std::size_t>(f.b)]});
    trace.edge_origin.push_back(std::nullopt);
  }
  return {Multigraph::from_edges(next, std::move(edges), g.labels()), std::move(trace)};
}

SurgeryResult do_triangle(const Multigraph& g, const TriangleStep& step) {
  require_vertex(g, step.v);
  if (g.degree(step.v) != 3) throw GraphError(ErrorKind::DegreeMismatch, "triangle replacement needs degree 3");
  const Multigraph k4 = complete4();
  const auto& inc = k4.incident(0);
  auto res = do_glue(g, GlueStep{step.v, k4, 0, {inc[0], inc[1], inc[2]}});
  res.trace.steps = {step};
  return res;
}

SurgeryResult do_split_off(const Multigraph& g, const SplitOffStep& step) {
  const auto& p = step.path;
  for (Vertex v : p) require_vertex(g, v);
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (p[i] == p[j]) throw GraphError(ErrorKind::NotAPath, "repeated vertex in path");
    }
  }
  auto find_edge = [&](Vertex x, Vertex y) -> EdgeId {
    for (EdgeId e : g.incident(x)) {
      if (g.edge(e).other(x) == y) return e;
    }
    throw GraphError(ErrorKind::NotAPath, std::to_string(x) + " and " + std::to_string(y) + " are not adjacent");
  };
  const EdgeId e12 = find_edge(p[0], p[1]);
  const EdgeId e23 = find_edge(p[1], p[2]);
  const EdgeId e34 = find_edge(p[2], p[3]);
  if (g.degree(p[1]) != 3 || g.degree(p[2]) != 3) {
    throw GraphError(ErrorKind::DegreeMismatch, "path interior must have degree 3");
  }
  auto third = [&](Vertex x, EdgeId s, EdgeId t) -> EdgeId {
    for (EdgeId e : g.incident(x)) {
      if (e != s && e != t) return e;
    }
    throw GraphError(ErrorKind::DegreeMismatch, "no third edge");
  };
  const EdgeId t2 = third(p[1], e12, e23);
  const EdgeId t3 = third(p[2], e23, e34);
  const Vertex v1p = g.edge(t2).other(p[1]);
  const Vertex v4p = g.edge(t3).other(p[2]);
  auto on_path = [&](Vertex x) { return std::find(p.begin(), p.end(), x) != p.end(); };
  if (on_path(v1p) || on_path(v4p) || v1p == v4p) {
    throw GraphError(ErrorKind::NeighborClash, "third neighbours " + std::to_string(v1p) + "," +
                                                   std::to_string(v4p) + " clash with the path");
  }

  const int n = g.vertex_count();
  std::vector<Vertex> map(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (v == p[1] || v == p[2]) continue;
    map[static_cast<std::size_t>(v)] = next++;
  }
  std::vector<Edge> edges;
  SurgeryTrace trace;
  trace.steps.push_back(step);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.touches(p[1]) || ed.touches(p[2])) continue;
    edges.push_back({map[static_cast<std::size_t>(ed.a)], map[static_cast<std::size_t>(ed.b)]});
    trace.edge_origin.push_back(e);
  }
  edges.push_back({map[static_cast<std::size_t>(p[0])], map[static_cast<std::size_t>(p[3])]});
  edges.push_back({map[static_cast<std::size_t>(v1p)], map[static_cast<std::size_t>(v4p)]});
  trace.edge_origin.push_back(std::nullopt);
  trace.edge_origin.push_back(std::nullopt);
  std::map<Vertex, std::string> labels;
  for (const auto& [v, text] : g.labels()) {
    if (map[static_cast<std::size_t>(v)] >= 0) labels[map[static_cast<std::size_t>(v)]] = text;
  }
  return {Multigraph::from_edges(next, std::move(edges), std::move(labels)), std::move(trace)};
}

}  // namespace

SurgeryResult apply(const Multigraph& g, const SurgeryStep& step) {
  return std::visit(Overloaded{
                        [&](const ContractStep& s) { return do_contract(g, s); },
                        [&](const TriangleStep& s) { return do_triangle(g, s); },
                        [&](const GlueStep& s) { return do_glue(g, s); },
                        [&](const SplitOffStep& s) { return do_split_off(g, s); },
                    },
                    step);
}

SurgeryTrace compose(const SurgeryTrace& first, const SurgeryTrace& second) {
  SurgeryTrace out;
  out.steps = first.steps;
  out.steps.insert(out.steps.end(), second.steps.begin(), second.steps.end());
  out.edge_origin.reserve(second.edge_origin.size());
  for (const auto& o : second.edge_origin) {
    out.edge_origin.push_back(o ? first.edge_origin.at(static_cast<std::size_t>(*o)) : std::nullopt);
  }
  return out;
}

Multigraph replay(const Multigraph& source, const SurgeryTrace& trace) {
  Multigraph g = source;
  for (const auto& step : trace.steps) g = cubicpm::apply(g, step).graph;
  return g;
}

SurgeryResult contract(const Multigraph& g, std::span<const Vertex> part) {
  return do_contract(g, ContractStep{{part.begin(), part.end()}});
}

Multigraph glue(const Multigraph& g, Vertex u, const Multigraph& h, Vertex v,
                const std::array<EdgeId, 3>& pairing) {
  return do_glue(g, GlueStep{u, h, v, pairing}).graph;
}

Multigraph replace_vertex_with_triangle(const Multigraph& g, Vertex v) {
  return do_triangle(g, TriangleStep{v}).graph;
}

Multigraph split_off(const Multigraph& g, const std::array<Vertex, 4>& path) {
  return do_split_off(g, SplitOffStep{path}).graph;
}

std::optional<std::array<Vertex, 2>> split_off_partners(const Multigraph& g,
                                                        const std::array<Vertex, 4>& path) {
  try {
    const Multigraph h = split_off(g, path);
    const Edge& last = h.edges().back();
    // Map back: the last edge joins v1' and v4' in compacted ids.
    std::vector<Vertex> inverse;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (v != path[1] && v != path[2]) inverse.push_back(v);
    }
    return std::array<Vertex, 2>{inverse[static_cast<std::size_t>(last.a)],
                                 inverse[static_cast<std::size_t>(last.b)]};
  } catch (const GraphError&) {
    return std::nullopt;
  }
}

Multigraph complete4() {
  static const std::vector<std::pair<int, int>> pairs{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  return Multigraph::from_edge_list(4, pairs);
}

Multigraph build_klee(const KleeRecipe& recipe) {
  Multigraph g = complete4();
  for (Vertex v : recipe.steps) g = replace_vertex_with_triangle(g, v);
  return g;
}

Expansion b_expand(const Multigraph& g, const std::map<Vertex, KleeRecipe>& assignment, int b) {
  if (b < 1) throw GraphError(ErrorKind::BadSize, "b must be at least 1");
  Expansion out{g, {{}, identity_origin(g.edge_count())}, {}};
  for (const auto& [u, recipe] : assignment) {
    require_vertex(g, u);
    Multigraph h = build_klee(recipe);
    if (h.vertex_count() > b + 1) {
      throw GraphError(ErrorKind::RecipeTooLarge, "Klee-graph with " + std::to_string(h.vertex_count()) +
                                                      " vertices exceeds b+1 = " + std::to_string(b + 1));
    }
    const auto& inc = h.incident(0);
    const int before = out.graph.vertex_count();
    auto res = do_glue(out.graph, GlueStep{u, h, 0, {inc[0], inc[1], inc[2]}});
    std::vector<Vertex> cluster{u};
    for (Vertex w = before; w < res.graph.vertex_count(); ++w) cluster.push_back(w);
    out.clusters[u] = std::move(cluster);
    out.trace = compose(out.trace, res.trace);
    out.graph = std::move(res.graph);
  }
  return out;
}

Subgraph delete_edges(const Multigraph& g, std::span<const EdgeId> removed) {
  std::vector<char> drop(static_cast<std::size_t>(g.edge_count()), 0);
  for (EdgeId e : removed) {
    if (e < 0 || e >= g.edge_count()) throw GraphError(ErrorKind::EdgeIdOutOfRange, std::to_string(e));
    drop[static_cast<std::size_t>(e)] = 1;
  }
  Subgraph out;
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (drop[static_cast<std::size_t>(e)]) continue;
    edges.push_back(g.edge(e));
    out.edge_origin.push_back(e);
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) out.vertex_origin.push_back(v);
  out.graph = Multigraph::from_edges(g.vertex_count(), std::move(edges), g.labels());
  return out;
}

Subgraph induced_subgraph(const Multigraph& g, VertexMask kept) {
  if (g.vertex_count() > kMaskBits) throw GraphError(ErrorKind::TooLarge, "more than 64 vertices");
  Subgraph out;
  std::vector<Vertex> map(static_cast<std::size_t>(g.vertex_count()), -1);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (kept & bit(v)) {
      map[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.vertex_origin.size());
      out.vertex_origin.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if ((kept & bit(ed.a)) && (kept & bit(ed.b))) {
      edges.push_back({map[static_cast<std::size_t>(ed.a)], map[static_cast<std::size_t>(ed.b)]});
      out.edge_origin.push_back(e);
    }
  }
  std::map<Vertex, std::string> labels;
  for (const auto& [v, text] : g.labels()) {
    if (map[static_cast<std::size_t>(v)] >= 0) labels[map[static_cast<std::size_t>(v)]] = text;
  }
  out.graph = Multigraph::from_edges(static_cast<int>(out.vertex_origin.size()), std::move(edges),
                                     std::move(labels));
  return out;
}

Subgraph delete_vertices(const Multigraph& g, VertexMask removed) {
  return induced_subgraph(g, g.all_vertices_mask() & ~removed);
}

Multigraph relabel(const Multigraph& g, std::span<const Vertex> perm) {
  const int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n) throw GraphError(ErrorKind::VertexIdOutOfRange, "bad permutation size");
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (Vertex v : perm) {
    if (v < 0 || v >= n || hit[static_cast<std::size_t>(v)]) {
      throw GraphError(ErrorKind::VertexIdOutOfRange, "not a permutation");
    }
    hit[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    edges.push_back({perm[static_cast<std::size_t>(e.a)], perm[static_cast<std::size_t>(e.b)]});
  }
  std::map<Vertex, std::string> labels;
  for (const auto& [v, text] : g.labels()) labels[perm[static_cast<std::size_t>(v)]] = text;
  return Multigraph::from_edges(n, std::move(edges), std::move(labels));
}

Multigraph simplify(const Multigraph& g) {
  std::set<std::pair<Vertex, Vertex>> seen;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (seen.insert(std::minmax(e.a, e.b)).second) edges.push_back(e);
  }
  return Multigraph::from_edges(g.vertex_count(), std::move(edges), g.labels());
}

}  // namespace cubicpm
