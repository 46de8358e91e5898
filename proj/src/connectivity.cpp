#include "cubicpm/connectivity.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "cubicpm/surgery.hpp"

namespace cubicpm {
namespace {

void require_small(const Multigraph& g, int cap, const char* what) {
  if (g.vertex_count() > cap) {
    throw GraphError(ErrorKind::TooLarge, std::string(what) + " supports at most " + std::to_string(cap) +
                                              " vertices, got " + std::to_string(g.vertex_count()));
  }
}

// Vertex order for the cut search: breadth-first from 0, restarting in the
// smallest unvisited vertex for further components.
std::vector<Vertex> search_order(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<Vertex> order;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Vertex root = 0; root < n; ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    seen[static_cast<std::size_t>(root)] = 1;
    std::size_t head = order.size();
    order.push_back(root);
    while (head < order.size()) {
      const Vertex v = order[head++];
      for (EdgeId e : g.incident(v)) {
        const Vertex w = g.edge(e).other(v);
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          order.push_back(w);
        }
      }
    }
  }
  return order;
}

}  // namespace

EdgeCut make_cut(const Multigraph& g, VertexMask side_a) {
  EdgeCut cut;
  cut.side_a = side_a;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (((side_a >> ed.a) & 1U) != ((side_a >> ed.b) & 1U)) cut.crossing_edges.push_back(e);
  }
  cut.size = static_cast<int>(cut.crossing_edges.size());
  const VertexMask side_b = g.all_vertices_mask() & ~side_a;
  cut.cyclic = induces_cycle(g, side_a) && induces_cycle(g, side_b);
  return cut;
}

std::vector<EdgeId> bridges(const Multigraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<EdgeId> out;
  int timer = 0;
  // Iterative lowlink keyed by the entering edge id, so parallel edges are
  // never mistaken for bridges.
  struct Frame {
    Vertex v;
    EdgeId via;
    std::size_t next;
  };
  for (Vertex root = 0; root < static_cast<Vertex>(n); ++root) {
    if (disc[static_cast<std::size_t>(root)] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& inc = g.incident(f.v);
      if (f.next < inc.size()) {
        const EdgeId e = inc[f.next++];
        if (e == f.via) continue;
        const Vertex w = g.edge(e).other(f.v);
        const auto wi = static_cast<std::size_t>(w);
        if (disc[wi] < 0) {
          disc[wi] = low[wi] = timer++;
          stack.push_back({w, e, 0});
        } else {
          low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], disc[wi]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        const auto p = static_cast<std::size_t>(stack.back().v);
        const auto c = static_cast<std::size_t>(done.v);
        low[p] = std::min(low[p], low[c]);
        if (low[c] > disc[p]) out.push_back(done.via);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeCut> enumerate_cuts(const Multigraph& g, int max_size, bool cyclic_only) {
  require_small(g, kCutEnumerationCap, "cut enumeration");
  const int n = g.vertex_count();
  std::vector<EdgeCut> out;
  if (n < 2 || max_size < 0) return out;
  const std::vector<Vertex> order = search_order(g);
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  // earlier[i]: neighbours (with multiplicity) placed before order[i].
  std::vector<std::vector<Vertex>> earlier(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Vertex v = order[static_cast<std::size_t>(i)];
    for (EdgeId e : g.incident(v)) {
      const Vertex w = g.edge(e).other(v);
      if (pos[static_cast<std::size_t>(w)] < i) earlier[static_cast<std::size_t>(i)].push_back(w);
    }
  }
  const VertexMask all = g.all_vertices_mask();
  std::function<void(int, VertexMask, int)> descend = [&](int i, VertexMask side_a, int crossing) {
    if (i == n) {
      if (side_a == all) return;
      if (cyclic_only) {
        if (!induces_cycle(g, side_a) || !induces_cycle(g, all & ~side_a)) return;
      }
      out.push_back(make_cut(g, side_a));
      return;
    }
    const Vertex v = order[static_cast<std::size_t>(i)];
    int to_a = 0;
    for (Vertex w : earlier[static_cast<std::size_t>(i)]) to_a += (side_a >> w) & 1U ? 1 : 0;
    const int to_b = static_cast<int>(earlier[static_cast<std::size_t>(i)].size()) - to_a;
    if (crossing + to_b <= max_size) descend(i + 1, side_a | bit(v), crossing + to_b);
    if (crossing + to_a <= max_size) descend(i + 1, side_a, crossing + to_a);
  };
  descend(1, bit(order[0]), 0);
  std::sort(out.begin(), out.end(), [](const EdgeCut& x, const EdgeCut& y) { return x.side_a < y.side_a; });
  return out;
}

CyclicConnectivity cyclic_edge_connectivity(const Multigraph& g) {
  require_small(g, kCutEnumerationCap, "cyclic connectivity");
  for (int k = 0; k <= g.edge_count(); ++k) {
    const auto cuts = enumerate_cuts(g, k, true);
    if (!cuts.empty()) return {k};
  }
  return {};
}

bool is_cyclically_k_edge_connected(const Multigraph& g, int k) {
  return k <= 0 || enumerate_cuts(g, k - 1, true).empty();
}

bool is_k_edge_connected(const Multigraph& g, int k) {
  if (g.vertex_count() == 0) return false;
  return k <= 0 || enumerate_cuts(g, k - 1, false).empty();
}

std::vector<EdgeCut> cyclic_cuts_containing(const Multigraph& g, EdgeId e, int size) {
  if (e < 0 || e >= g.edge_count()) throw GraphError(ErrorKind::EdgeIdOutOfRange, "edge " + std::to_string(e));
  std::vector<EdgeCut> out;
  for (EdgeCut& cut : enumerate_cuts(g, size, true)) {
    if (cut.size == size && std::binary_search(cut.crossing_edges.begin(), cut.crossing_edges.end(), e)) {
      out.push_back(std::move(cut));
    }
  }
  return out;
}

bool observation_cyc_check(const Multigraph& g, const EdgeCut& cut) {
  if (g.min_degree() < 3) throw GraphError(ErrorKind::MinDegreeViolated, "observation needs minimum degree 3");
  const int a = __builtin_popcountll(cut.side_a);
  const int b = g.vertex_count() - a;
  return a >= cut.size - 1 && b >= cut.size - 1;
}

std::vector<EdgeCut> ordered_4cut_chain(const Multigraph& g, EdgeId e) {
  if (!is_cyclically_k_edge_connected(g, 4)) {
    throw GraphError(ErrorKind::NotCyclically4EC, "ordered chain needs a cyclically 4-edge-connected graph");
  }
  const Vertex anchor = g.edge(e).a;
  const VertexMask all = g.all_vertices_mask();
  std::vector<EdgeCut> chain;
  for (EdgeCut cut : cyclic_cuts_containing(g, e, 4)) {
    if (!((cut.side_a >> anchor) & 1U)) cut = make_cut(g, all & ~cut.side_a);
    chain.push_back(std::move(cut));
  }
  std::sort(chain.begin(), chain.end(), [](const EdgeCut& x, const EdgeCut& y) {
    const int px = __builtin_popcountll(x.side_a);
    const int py = __builtin_popcountll(y.side_a);
    return px != py ? px < py : x.side_a < y.side_a;
  });
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if ((chain[i - 1].side_a & ~chain[i].side_a) != 0) {
      throw GraphError(ErrorKind::ChainViolation, "cyclic 4-cuts through edge " + std::to_string(e) +
                                                      " are not nested");
    }
  }
  return chain;
}

CutSurgery cut_surgery_pair(const Multigraph& g, const EdgeCut& cut, const std::array<int, 4>& pairing,
                            CutSide side) {
  if (cut.size != 4 || cut.crossing_edges.size() != 4) {
    throw GraphError(ErrorKind::BadSize, "cut surgery needs a 4-edge-cut");
  }
  {
    auto sorted = pairing;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 4>{0, 1, 2, 3}) throw GraphError(ErrorKind::BadSize, "pairing must permute 0..3");
  }
  const VertexMask kept = side == CutSide::A ? cut.side_a : (g.all_vertices_mask() & ~cut.side_a);
  std::array<Vertex, 4> ends{};
  for (std::size_t i = 0; i < 4; ++i) {
    const Edge& ed = g.edge(cut.crossing_edges[i]);
    ends[i] = ((kept >> ed.a) & 1U) ? ed.a : ed.b;
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (ends[i] == ends[j]) {
        throw GraphError(ErrorKind::SharedEndpoint, "cut edges " + std::to_string(cut.crossing_edges[i]) + " and " +
                                                        std::to_string(cut.crossing_edges[j]) + " share an endpoint");
      }
    }
  }
  Subgraph sub = induced_subgraph(g, kept);
  CutSurgery out;
  out.vertex_origin = sub.vertex_origin;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto it = std::find(sub.vertex_origin.begin(), sub.vertex_origin.end(), ends[i]);
    out.attach[i] = static_cast<Vertex>(it - sub.vertex_origin.begin());
  }
  const auto at = [&](int idx) { return out.attach[static_cast<std::size_t>(idx)]; };
  const int n = sub.graph.vertex_count();
  std::vector<Edge> paired = sub.graph.edges();
  paired.push_back({at(pairing[0]), at(pairing[1])});
  paired.push_back({at(pairing[2]), at(pairing[3])});
  out.paired = Multigraph::from_edges(n, std::move(paired));

  std::vector<Edge> subdivided = sub.graph.edges();
  const Vertex x = n;
  const Vertex y = n + 1;
  for (std::size_t slot = 0; slot < 4; ++slot) {
    const int idx = pairing[slot];
    out.subdivided_spokes[static_cast<std::size_t>(idx)] = static_cast<EdgeId>(subdivided.size());
    subdivided.push_back({at(idx), slot < 2 ? x : y});
  }
  out.distinguished = static_cast<EdgeId>(subdivided.size());
  subdivided.push_back({x, y});
  out.subdivided = Multigraph::from_edges(n + 2, std::move(subdivided));
  return out;
}

namespace {

std::vector<VertexMask> contraction_candidates(const Multigraph& h, bool all_sides) {
  const VertexMask all = h.all_vertices_mask();
  std::set<VertexMask> sides;
  for (const EdgeCut& cut : enumerate_cuts(h, 3, true)) {
    if (cut.size != 3) continue;
    sides.insert(cut.side_a);
    sides.insert(all & ~cut.side_a);
  }
  std::vector<VertexMask> out;
  for (VertexMask s : sides) {
    bool minimal = true;
    if (!all_sides) {
      for (VertexMask t : sides) {
        if (t != s && (t & ~s) == 0) {
          minimal = false;
          break;
        }
      }
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

bool almost_search(const Multigraph& h, int budget, bool all_sides, AlmostResult& result) {
  if (is_cyclically_k_edge_connected(h, 4)) {
    result.reduced = h;
    return true;
  }
  for (VertexMask side : contraction_candidates(h, all_sides)) {
    const int cost = __builtin_popcountll(side) - 1;
    if (cost > budget) continue;
    const auto part = mask_to_vertices(side);
    SurgeryResult next = contract(h, part);
    result.witness.push_back(part);
    if (almost_search(next.graph, budget - cost, all_sides, result)) return true;
    result.witness.pop_back();
  }
  return false;
}

}  // namespace

AlmostResult is_k_almost_cyclically_4ec(const Multigraph& g, int k, bool all_sides) {
  require_small(g, kAlmostCap, "k-almost search");
  if (!g.is_cubic()) throw GraphError(ErrorKind::BadDegrees, "k-almost search needs a cubic graph");
  AlmostResult result;
  result.ok = almost_search(g, k, all_sides, result);
  return result;
}

}  // namespace cubicpm
