#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cubicpm/error.hpp"

namespace cubicpm {

using Vertex = int;
using EdgeId = int;

/// Bitmask over vertex ids. Every exponential routine in the library works on
/// graphs small enough for one machine word.
using VertexMask = std::uint64_t;
inline constexpr int kMaskBits = 64;

inline VertexMask bit(int i) { return VertexMask{1} << i; }

struct Edge {
  Vertex a;
  Vertex b;

  Vertex other(Vertex v) const { return v == a ? b : a; }
  bool touches(Vertex v) const { return a == v || b == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable loopless multigraph. Edge ids are positions in `edges()` and are
/// stable; parallel edges are distinct ids.
class Multigraph {
 public:
  Multigraph() = default;

  /// Throws LoopRejected / VertexIdOutOfRange.
  static Multigraph from_edge_list(int vertex_count, std::span<const std::pair<int, int>> pairs);
  static Multigraph from_edges(int vertex_count, std::vector<Edge> edges,
                               std::map<Vertex, std::string> labels = {});

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }

  /// Incident edge ids of v in increasing id order.
  const std::vector<EdgeId>& incident(Vertex v) const { return incidence_.at(static_cast<std::size_t>(v)); }
  int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }

  /// Neighbours of v with repetition for parallel edges, in incident-edge order.
  std::vector<Vertex> neighbors(Vertex v) const;
  /// Number of edges joining u and v.
  int multiplicity(Vertex u, Vertex v) const;

  bool is_cubic() const;
  bool is_simple() const;
  bool is_connected() const;
  int min_degree() const;
  int max_degree() const;

  const std::map<Vertex, std::string>& labels() const { return labels_; }
  std::optional<std::string> label(Vertex v) const;

  /// Endpoints of an edge set as a vertex mask (requires vertex_count <= 64).
  VertexMask all_vertices_mask() const;

  friend bool operator==(const Multigraph& x, const Multigraph& y) {
    return x.vertex_count_ == y.vertex_count_ && x.edges_ == y.edges_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::map<Vertex, std::string> labels_;
};

/// Multiset of degrees different from three: degree -> number of vertices.
struct DegreeExcess {
  std::map<int, int> multiset;

  bool cubic() const { return multiset.empty(); }
  friend bool operator==(const DegreeExcess&, const DegreeExcess&) = default;
};

DegreeExcess degree_excess(const Multigraph& g);

/// Sorted vertex list of a mask.
std::vector<Vertex> mask_to_vertices(VertexMask mask);
VertexMask vertices_to_mask(std::span<const Vertex> vertices);

/// Proper 2-colouring (0/1 per vertex) if the graph is bipartite.
std::optional<std::vector<int>> bipartition(const Multigraph& g);
inline bool is_bipartite(const Multigraph& g) { return bipartition(g).has_value(); }

/// Connected components of the subgraph induced by `mask`, as masks.
std::vector<VertexMask> components_of(const Multigraph& g, VertexMask mask);

/// Edge ids with both endpoints inside `mask`.
int internal_edge_count(const Multigraph& g, VertexMask mask);

/// True iff the subgraph induced by `mask` contains a cycle (a pair of
/// parallel edges counts as a 2-cycle).
bool induces_cycle(const Multigraph& g, VertexMask mask);

}  // namespace cubicpm
