#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cubicpm/multigraph.hpp"

namespace cubicpm {

/// Largest order accepted by the subset-enumeration routines below.
inline constexpr int kCutEnumerationCap = 24;
inline constexpr int kAlmostCap = 20;

struct EdgeCut {
  VertexMask side_a = 0;
  std::vector<EdgeId> crossing_edges;  // increasing ids
  int size = 0;
  bool cyclic = false;

  std::vector<Vertex> side_a_vertices() const { return mask_to_vertices(side_a); }
  friend bool operator==(const EdgeCut&, const EdgeCut&) = default;
};

/// The cut E(side_a, V - side_a), with its cyclic flag.
EdgeCut make_cut(const Multigraph& g, VertexMask side_a);

/// Edges whose removal disconnects their component, in increasing id order.
std::vector<EdgeId> bridges(const Multigraph& g);

/// Every bipartition {A, B} (A holds vertex 0, B nonempty) with at most
/// max_size crossing edges, ordered by side_a mask. Cuts with zero crossing
/// edges are reported for disconnected graphs. Throws TooLarge above
/// kCutEnumerationCap vertices.
std::vector<EdgeCut> enumerate_cuts(const Multigraph& g, int max_size, bool cyclic_only);

/// Minimum size of a cyclic edge-cut; nullopt stands for Unbounded (no
/// cyclic edge-cut at all).
struct CyclicConnectivity {
  std::optional<int> value;
  bool unbounded() const { return !value.has_value(); }
  /// True iff no cyclic cut has fewer than k edges.
  bool at_least(int k) const { return unbounded() || *value >= k; }
  friend bool operator==(const CyclicConnectivity&, const CyclicConnectivity&) = default;
};

CyclicConnectivity cyclic_edge_connectivity(const Multigraph& g);

/// No cyclic cut with fewer than k edges.
bool is_cyclically_k_edge_connected(const Multigraph& g, int k);
/// Connected with no edge cut of fewer than k edges.
bool is_k_edge_connected(const Multigraph& g, int k);

/// Cyclic cuts of exactly `size` edges that contain edge e.
std::vector<EdgeCut> cyclic_cuts_containing(const Multigraph& g, EdgeId e, int size);

/// Whether the cut meets the hypothesis |A| >= k-1 and |B| >= k-1 of the
/// minimum-degree-three observation (k = cut size). Throws MinDegreeViolated.
bool observation_cyc_check(const Multigraph& g, const EdgeCut& cut);

/// All cyclic 4-cuts through e, with side_a holding edge(e).a, ordered as an
/// inclusion chain. Throws NotCyclically4EC or ChainViolation.
std::vector<EdgeCut> ordered_4cut_chain(const Multigraph& g, EdgeId e);

enum class CutSide { A, B };

/// Result of cutting along a 4-edge-cut and closing the chosen side.
/// Cut edges are numbered 0..3 by increasing id; attach[i] is the end of
/// cut edge i on the chosen side, expressed in the new graphs' ids.
struct CutSurgery {
  Multigraph paired;      // side plus edges attach[i]attach[j], attach[k]attach[l]
  Multigraph subdivided;  // side plus x ~ attach[i], attach[j]; y ~ attach[k], attach[l]; x ~ y
  std::vector<Vertex> vertex_origin;
  std::array<Vertex, 4> attach{};
  std::array<EdgeId, 4> subdivided_spokes{};  // edge attach[i] - (x or y), per cut edge
  EdgeId distinguished = -1;                  // the edge x y
};

/// pairing = {i, j, k, l} pairs cut edges i with j and k with l.
/// Throws SharedEndpoint, BadSize.
CutSurgery cut_surgery_pair(const Multigraph& g, const EdgeCut& cut, const std::array<int, 4>& pairing,
                            CutSide side);

struct AlmostResult {
  bool ok = false;
  /// Contracted sides, each in the vertex ids of the graph current at that
  /// step (contractions are applied one after another).
  std::vector<std::vector<Vertex>> witness;
  std::optional<Multigraph> reduced;
};

/// Searches for contractions of cyclic 3-cut sides losing at most k vertices
/// that leave a cyclically 4-edge-connected cubic graph. Only
/// inclusion-minimal sides are tried unless `all_sides` is set.
/// Throws TooLarge above kAlmostCap vertices.
AlmostResult is_k_almost_cyclically_4ec(const Multigraph& g, int k, bool all_sides = false);

}  // namespace cubicpm
