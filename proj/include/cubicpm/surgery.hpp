#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "cubicpm/multigraph.hpp"

namespace cubicpm {

// Vertex and edge numbering conventions shared by all surgeries:
//  * surviving edges keep their relative order, new edges are appended;
//  * contract() maps the part onto its smallest id, other vertices compact;
//  * replace_vertex_with_triangle() and glue() keep every vertex id of the
//    host graph (the expanded vertex becomes one corner of the inserted
//    piece) and append the remaining new vertices.
// With these rules contract() exactly undoes a triangle replacement or a
// glue, labels included.

struct ContractStep {
  std::vector<Vertex> part;
};

struct TriangleStep {
  Vertex v;
};

/// Glue `h` through vertex `v` into the host vertex `u`.
/// pairing[i] is the h-edge (incident with v) fused with the i-th incident
/// edge of u (incident edges in increasing id order).
struct GlueStep {
  Vertex u;
  Multigraph h;
  Vertex v;
  std::array<EdgeId, 3> pairing;
};

struct SplitOffStep {
  std::array<Vertex, 4> path;
};

using SurgeryStep = std::variant<ContractStep, TriangleStep, GlueStep, SplitOffStep>;

struct SurgeryTrace {
  std::vector<SurgeryStep> steps;
  /// For every edge of the derived graph, the source edge it descends from
  /// (nullopt for edges created by a surgery).
  std::vector<std::optional<EdgeId>> edge_origin;
};

struct SurgeryResult {
  Multigraph graph;
  SurgeryTrace trace;
};

/// Applies one step. Throws the step's documented errors.
SurgeryResult apply(const Multigraph& g, const SurgeryStep& step);

/// Replays a trace from its source graph.
Multigraph replay(const Multigraph& source, const SurgeryTrace& trace);

/// Trace of `first` followed by `second`.
SurgeryTrace compose(const SurgeryTrace& first, const SurgeryTrace& second);

/// Contracts a connected vertex set to a single vertex, dropping the edges
/// inside it and keeping parallel edges. Throws DisconnectedPart.
SurgeryResult contract(const Multigraph& g, std::span<const Vertex> part);

/// Gluing through u and v; `pairing` as in GlueStep. Throws DegreeMismatch.
Multigraph glue(const Multigraph& g, Vertex u, const Multigraph& h, Vertex v,
                const std::array<EdgeId, 3>& pairing);

Multigraph replace_vertex_with_triangle(const Multigraph& g, Vertex v);

/// Removes v2, v3 of the path v1 v2 v3 v4 and adds v1v4 and v1'v4' (in that
/// order, as the last two edges). Throws NotAPath, NeighborClash,
/// DegreeMismatch.
Multigraph split_off(const Multigraph& g, const std::array<Vertex, 4>& path);

/// The third neighbours (v1', v4') of a split-off path, or nullopt if the
/// path is not valid.
std::optional<std::array<Vertex, 2>> split_off_partners(const Multigraph& g,
                                                        const std::array<Vertex, 4>& path);

/// Sequence of vertex choices for iterated triangle replacement from K4.
struct KleeRecipe {
  std::vector<Vertex> steps;
  friend bool operator==(const KleeRecipe&, const KleeRecipe&) = default;
};

Multigraph complete4();
Multigraph build_klee(const KleeRecipe& recipe);

struct Expansion {
  Multigraph graph;
  SurgeryTrace trace;
  /// Vertex sets of the derived graph replacing each expanded vertex.
  std::map<Vertex, std::vector<Vertex>> clusters;
};

/// Glues the Klee-graph of each recipe (through its vertex 0, identity
/// pairing) into the assigned vertex. Throws RecipeTooLarge if a Klee-graph
/// has more than b + 1 vertices.
Expansion b_expand(const Multigraph& g, const std::map<Vertex, KleeRecipe>& assignment, int b);

/// Subgraph together with the ids its vertices and edges had in the parent.
struct Subgraph {
  Multigraph graph;
  std::vector<Vertex> vertex_origin;
  std::vector<EdgeId> edge_origin;
};

Subgraph delete_edges(const Multigraph& g, std::span<const EdgeId> removed);
Subgraph delete_vertices(const Multigraph& g, VertexMask removed);
Subgraph induced_subgraph(const Multigraph& g, VertexMask kept);

/// Vertex v becomes perm[v]; edge order is kept.
Multigraph relabel(const Multigraph& g, std::span<const Vertex> perm);

/// Drops repeated parallel edges (keeps the first of each class).
Multigraph simplify(const Multigraph& g);

}  // namespace cubicpm
