#include "cubicpm/multigraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>

namespace cubicpm {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LoopRejected: return "LoopRejected";
    case ErrorKind::VertexIdOutOfRange: return "VertexIdOutOfRange";
    case ErrorKind::EdgeIdOutOfRange: return "EdgeIdOutOfRange";
    case ErrorKind::DisconnectedPart: return "DisconnectedPart";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::NotAPath: return "NotAPath";
    case ErrorKind::NeighborClash: return "NeighborClash";
    case ErrorKind::RecipeTooLarge: return "RecipeTooLarge";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::MinDegreeViolated: return "MinDegreeViolated";
    case ErrorKind::NotCyclically4EC: return "NotCyclically4EC";
    case ErrorKind::ChainViolation: return "ChainViolation";
    case ErrorKind::SharedEndpoint: return "SharedEndpoint";
    case ErrorKind::InconsistentQuery: return "InconsistentQuery";
    case ErrorKind::NotUniquePM: return "NotUniquePM";
    case ErrorKind::NotBipartite: return "NotBipartite";
    case ErrorKind::FlowInfeasible: return "FlowInfeasible";
    case ErrorKind::NotMatchingCovered: return "NotMatchingCovered";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::BadSize: return "BadSize";
    case ErrorKind::UnreachableParity: return "UnreachableParity";
    case ErrorKind::Bridged: return "Bridged";
    case ErrorKind::BadDegrees: return "BadDegrees";
    case ErrorKind::GenerationFailed: return "GenerationFailed";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::InvariantViolated: return "InvariantViolated";
  }
  return "Unknown";
}

Multigraph Multigraph::from_edge_list(int vertex_count, std::span<const std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) edges.push_back({a, b});
  return from_edges(vertex_count, std::move(edges));
}

Multigraph Multigraph::from_edges(int vertex_count, std::vector<Edge> edges,
                                  std::map<Vertex, std::string> labels) {
  if (vertex_count < 0) {
    throw GraphError(ErrorKind::VertexIdOutOfRange, "negative vertex count");
  }
  Multigraph g;
  g.vertex_count_ = vertex_count;
  g.incidence_.assign(static_cast<std::size_t>(vertex_count), {});
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.a < 0 || e.b < 0 || e.a >= vertex_count || e.b >= vertex_count) {
      throw GraphError(ErrorKind::VertexIdOutOfRange,
                       "edge " + std::to_string(i) + " (" + std::to_string(e.a) + "," +
                           std::to_string(e.b) + ") with " + std::to_string(vertex_count) +
                           " vertices");
    }
    if (e.a == e.b) {
      throw GraphError(ErrorKind::LoopRejected, "edge " + std::to_string(i) + " is a loop at " +
                                                    std::to_string(e.a));
    }
    g.incidence_[static_cast<std::size_t>(e.a)].push_back(static_cast<EdgeId>(i));
    g.incidence_[static_cast<std::size_t>(e.b)].push_back(static_cast<EdgeId>(i));
  }
  g.edges_ = std::move(edges);
  for (const auto& [v, text] : labels) {
    if (v < 0 || v >= vertex_count) throw GraphError(ErrorKind::VertexIdOutOfRange, "label vertex");
  }
  g.labels_ = std::move(labels);
  return g;
}

std::vector<Vertex> Multigraph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (EdgeId e : incident(v)) out.push_back(edges_[static_cast<std::size_t>(e)].other(v));
  return out;
}

int Multigraph::multiplicity(Vertex u, Vertex v) const {
  int count = 0;
  for (EdgeId e : incident(u)) {
    if (edges_[static_cast<std::size_t>(e)].other(u) == v) ++count;
  }
  return count;
}

bool Multigraph::is_cubic() const {
  for (Vertex v = 0; v < vertex_count_; ++v) {
    if (degree(v) != 3) return false;
  }
  return true;
}

bool Multigraph::is_simple() const {
  for (Vertex v = 0; v < vertex_count_; ++v) {
    auto nb = neighbors(v);
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) return false;
  }
  return true;
}

bool Multigraph::is_connected() const {
  if (vertex_count_ == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(vertex_count_), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (EdgeId e : incident(v)) {
      Vertex w = edges_[static_cast<std::size_t>(e)].other(v);
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == vertex_count_;
}

int Multigraph::min_degree() const {
  int best = vertex_count_ == 0 ? 0 : degree(0);
  for (Vertex v = 1; v < vertex_count_; ++v) best = std::min(best, degree(v));
  return best;
}

int Multigraph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < vertex_count_; ++v) best = std::max(best, degree(v));
  return best;
}

std::optional<std::string> Multigraph::label(Vertex v) const {
  auto it = labels_.find(v);
  if (it == labels_.end()) return std::nullopt;
  return it->second;
}

VertexMask Multigraph::all_vertices_mask() const {
  if (vertex_count_ > kMaskBits) {
    throw GraphError(ErrorKind::TooLarge, "more than 64 vertices");
  }
  return vertex_count_ == kMaskBits ? ~VertexMask{0} : bit(vertex_count_) - 1;
}

DegreeExcess degree_excess(const Multigraph& g) {
  DegreeExcess out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3) ++out.multiset[g.degree(v)];
  }
  return out;
}

std::vector<Vertex> mask_to_vertices(VertexMask mask) {
  std::vector<Vertex> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

VertexMask vertices_to_mask(std::span<const Vertex> vertices) {
  VertexMask m = 0;
  for (Vertex v : vertices) {
    if (v < 0 || v >= kMaskBits) throw GraphError(ErrorKind::VertexIdOutOfRange, "mask vertex");
    m |= bit(v);
  }
  return m;
}

std::optional<std::vector<int>> bipartition(const Multigraph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.vertex_count()), -1);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (color[static_cast<std::size_t>(s)] != -1) continue;
    color[static_cast<std::size_t>(s)] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (EdgeId e : g.incident(v)) {
        Vertex w = g.edge(e).other(v);
        auto& cw = color[static_cast<std::size_t>(w)];
        if (cw == -1) {
          cw = 1 - color[static_cast<std::size_t>(v)];
          q.push(w);
        } else if (cw == color[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

std::vector<VertexMask> components_of(const Multigraph& g, VertexMask mask) {
  std::vector<VertexMask> out;
  VertexMask left = mask;
  while (left) {
    Vertex s = std::countr_zero(left);
    VertexMask comp = bit(s);
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(v)) {
        Vertex w = g.edge(e).other(v);
        if ((mask & bit(w)) && !(comp & bit(w))) {
          comp |= bit(w);
          stack.push_back(w);
        }
      }
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

int internal_edge_count(const Multigraph& g, VertexMask mask) {
  int count = 0;
  for (const Edge& e : g.edges()) {
    if ((mask & bit(e.a)) && (mask & bit(e.b))) ++count;
  }
  return count;
}

bool induces_cycle(const Multigraph& g, VertexMask mask) {
  // A forest has exactly |V| - c edges.
  const int vertices = std::popcount(mask);
  const int comps = static_cast<int>(components_of(g, mask).size());
  return internal_edge_count(g, mask) > vertices - comps;
}

}  // namespace cubicpm
