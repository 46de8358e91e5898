#include "cubicpm/decomposition.hpp"

#include <algorithm>

#include "cubicpm/isomorphism.hpp"
#include "cubicpm/matchings.hpp"
#include "cubicpm/surgery.hpp"

namespace cubicpm {
namespace {

void require_decomposable(const Multigraph& g) {
  if (g.vertex_count() > kDecompositionCap) {
    throw GraphError(ErrorKind::TooLarge, "decomposition supports at most " + std::to_string(kDecompositionCap) +
                                              " vertices, got " + std::to_string(g.vertex_count()));
  }
  if (!is_matching_covered(g)) throw GraphError(ErrorKind::NotMatchingCovered, "graph is not matching-covered");
}

std::vector<TightCut> tight_cuts_unchecked(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<TightCut> out;
  if (n < 6) return out;
  std::vector<std::vector<std::pair<Vertex, Vertex>>> pms;
  for (const Matching& m : enumerate_matchings(g)) {
    std::vector<std::pair<Vertex, Vertex>> ends;
    for (EdgeId e : m.edge_ids) ends.emplace_back(g.edge(e).a, g.edge(e).b);
    pms.push_back(std::move(ends));
  }
  const VertexMask rest = (VertexMask{1} << (n - 1)) - 1;
  for (VertexMask sub = 0;; sub = (sub - rest) & rest) {
    const VertexMask s = (sub << 1) | 1U;
    const int size = __builtin_popcountll(s);
    if (size % 2 == 1 && size >= 3 && n - size >= 3) {
      bool tight = true;
      for (const auto& pm : pms) {
        int crossing = 0;
        for (const auto& [a, b] : pm) crossing += static_cast<int>(((s >> a) ^ (s >> b)) & 1U);
        if (crossing != 1) {
          tight = false;
          break;
        }
      }
      if (tight) out.push_back({make_cut(g, s), true});
    }
    if (sub == rest) break;
  }
  return out;
}

DecompositionNode decompose_checked(const Multigraph& g, CutOrder order) {
  require_decomposable(g);
  DecompositionNode node;
  node.graph = g;
  auto cuts = tight_cuts_unchecked(g);
  if (cuts.empty()) {
    node.kind = is_bipartite(g) ? LeafKind::Brace : LeafKind::Brick;
    return node;
  }
  auto lex_less = [](const TightCut& x, const TightCut& y) {
    return x.cut.side_a_vertices() < y.cut.side_a_vertices();
  };
  const TightCut chosen = order == CutOrder::LexSmallest ? *std::min_element(cuts.begin(), cuts.end(), lex_less)
                                                         : *std::max_element(cuts.begin(), cuts.end(), lex_less);
  const auto side_a = chosen.cut.side_a_vertices();
  const auto side_b = mask_to_vertices(g.all_vertices_mask() & ~chosen.cut.side_a);
  node.cut = chosen;
  node.children.push_back(decompose_checked(contract(g, side_a).graph, order));
  node.children.push_back(decompose_checked(contract(g, side_b).graph, order));
  return node;
}

}  // namespace

std::string_view to_string(LeafKind kind) { return kind == LeafKind::Brick ? "brick" : "brace"; }

std::vector<TightCut> tight_cuts(const Multigraph& g) {
  require_decomposable(g);
  return tight_cuts_unchecked(g);
}

bool is_bicritical(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n < 2) return false;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!has_perfect_matching(g, {{}, {}, {u, v}})) return false;
    }
  }
  return true;
}

bool is_three_vertex_connected(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n < 4) return false;
  const Multigraph s = simplify(g);
  const VertexMask all = s.all_vertices_mask();
  if (components_of(s, all).size() != 1) return false;
  for (Vertex x = 0; x < n; ++x) {
    if (components_of(s, all & ~bit(x)).size() != 1) return false;
    for (Vertex y = x + 1; y < n; ++y) {
      if (components_of(s, all & ~bit(x) & ~bit(y)).size() != 1) return false;
    }
  }
  return true;
}

bool is_brick(const Multigraph& g) { return is_three_vertex_connected(g) && is_bicritical(g); }

bool is_brace(const Multigraph& g) {
  if (!is_bipartite(g) || g.vertex_count() > kDecompositionCap || !is_matching_covered(g)) return false;
  return tight_cuts_unchecked(g).empty();
}

DecompositionNode decompose(const Multigraph& g, CutOrder order) { return decompose_checked(g, order); }

std::vector<Leaf> leaves(const DecompositionNode& root) {
  std::vector<Leaf> out;
  std::vector<const DecompositionNode*> stack{&root};
  while (!stack.empty()) {
    const DecompositionNode* node = stack.back();
    stack.pop_back();
    if (node->is_leaf()) {
      out.push_back({*node->kind, node->graph});
      continue;
    }
    for (auto it = node->children.rbegin(); it != node->children.rend(); ++it) stack.push_back(&*it);
  }
  return out;
}

bool same_leaf_multiset(const std::vector<Leaf>& x, const std::vector<Leaf>& y) {
  if (x.size() != y.size()) return false;
  std::vector<char> used(y.size(), 0);
  for (const Leaf& a : x) {
    const Multigraph sa = simplify(a.graph);
    bool matched = false;
    for (std::size_t j = 0; j < y.size() && !matched; ++j) {
      if (used[j] || y[j].kind != a.kind) continue;
      if (find_isomorphism(sa, simplify(y[j].graph))) {
        used[j] = 1;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

int brick_count(const DecompositionNode& root) {
  int b = 0;
  for (const Leaf& leaf : leaves(root)) b += leaf.kind == LeafKind::Brick ? 1 : 0;
  return b;
}

int brick_count(const Multigraph& g) { return brick_count(decompose(g)); }

int elp_bound(const Multigraph& g) { return g.edge_count() - g.vertex_count() + 1 - brick_count(g); }

}  // namespace cubicpm
