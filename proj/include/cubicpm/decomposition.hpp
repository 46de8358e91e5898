#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cubicpm/connectivity.hpp"
#include "cubicpm/multigraph.hpp"

namespace cubicpm {

inline constexpr int kDecompositionCap = 16;

struct TightCut {
  EdgeCut cut;
  bool nontrivial = false;
};

/// Every nontrivial tight cut (odd sides of at least three vertices), side_a
/// holding vertex 0, ordered by side_a mask. Throws NotMatchingCovered,
/// TooLarge.
std::vector<TightCut> tight_cuts(const Multigraph& g);

bool is_bicritical(const Multigraph& g);
/// Evaluated on the underlying simple graph.
bool is_three_vertex_connected(const Multigraph& g);
bool is_brick(const Multigraph& g);
bool is_brace(const Multigraph& g);

enum class LeafKind { Brick, Brace };
std::string_view to_string(LeafKind kind);

/// Which nontrivial tight cut splits a node: the side_a whose sorted vertex
/// sequence is lexicographically smallest, or largest.
enum class CutOrder { LexSmallest, LexLargest };

struct DecompositionNode {
  Multigraph graph;
  std::optional<LeafKind> kind;  // set on leaves
  std::optional<TightCut> cut;   // set on internal nodes
  /// children[0] = G/A (side_a contracted), children[1] = G/B.
  std::vector<DecompositionNode> children;

  bool is_leaf() const { return children.empty(); }
};

/// Throws NotMatchingCovered, TooLarge.
DecompositionNode decompose(const Multigraph& g, CutOrder order = CutOrder::LexSmallest);

struct Leaf {
  LeafKind kind;
  Multigraph graph;
};
std::vector<Leaf> leaves(const DecompositionNode& root);

/// True iff both lists hold the same leaves up to edge multiplicity and
/// isomorphism.
bool same_leaf_multiset(const std::vector<Leaf>& x, const std::vector<Leaf>& y);

int brick_count(const DecompositionNode& root);
int brick_count(const Multigraph& g);
/// m - n + 1 - b(G).
int elp_bound(const Multigraph& g);

}  // namespace cubicpm
