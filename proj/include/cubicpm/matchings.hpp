#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cubicpm/multigraph.hpp"
#include "cubicpm/rational.hpp"

namespace cubicpm {

inline constexpr int kCountCap = 64;
inline constexpr int kEnumerateCap = 20;
inline constexpr int kPolytopeCap = 20;

/// Matchings covering exactly V minus `missed`, containing every required
/// edge and no forbidden one.
struct CountQuery {
  std::vector<EdgeId> required;
  std::vector<EdgeId> forbidden;
  std::vector<Vertex> missed;
};

struct Matching {
  std::vector<EdgeId> edge_ids;  // increasing
  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching&, const Matching&) = default;
};

using WeightVector = std::vector<Rational>;

/// Exact count; parallel edges count separately. Throws InconsistentQuery,
/// TooLarge (above kCountCap vertices), Overflow.
std::uint64_t count_matchings(const Multigraph& g, const CountQuery& q = {});

/// Some matching satisfying the query, if any.
std::optional<Matching> find_matching(const Multigraph& g, const CountQuery& q = {});
inline bool has_perfect_matching(const Multigraph& g, const CountQuery& q = {}) {
  return find_matching(g, q).has_value();
}

/// All matchings satisfying the query, sorted lexicographically. Throws
/// TooLarge above kEnumerateCap vertices.
std::vector<Matching> enumerate_matchings(const Multigraph& g, const CountQuery& q = {});

/// Number of perfect matchings containing each edge.
std::vector<std::uint64_t> edge_containment_counts(const Multigraph& g);

bool is_matching_covered(const Multigraph& g);
bool is_double_covered(const Multigraph& g);

/// A bridge inside the unique perfect matching (smallest id). Throws
/// NotUniquePM.
EdgeId kotzig_bridge(const Multigraph& g);

struct SpecialPairResult {
  /// Structure test: G - {e, f} has a 2-colouring with both ends of e in
  /// one class and both ends of f in the other.
  bool structure = false;
  std::optional<std::vector<int>> coloring;
  /// Brute force: no perfect matching avoids e and contains f.
  bool no_such_pm = false;
};

/// Structure side of the pair test only (no connectivity precondition).
std::optional<std::vector<int>> special_pair_coloring(const Multigraph& g, EdgeId e, EdgeId f);

/// Both sides of the pair test. Throws InconsistentQuery (e == f),
/// NotCyclically4EC, and InvariantViolated if the two sides disagree.
SpecialPairResult special_pair(const Multigraph& g, EdgeId e, EdgeId f);

/// Membership in the perfect matching polytope. The odd-set family is
/// skipped for bipartite graphs unless `check_odd_sets_always`. Throws BadSize
/// for a vector of the wrong length, TooLarge above kPolytopeCap vertices
/// when odd sets are enumerated.
bool polytope_membership(const Multigraph& g, const WeightVector& w, bool check_odd_sets_always = false);

/// Fractional perfect matching of a bipartite graph from an integral flow of
/// value four (u, u2 in one class, v, v2 in the other). Entries lie in
/// {1/6, 1/3, 1/2, 2/3}. Throws NotBipartite, FlowInfeasible.
WeightVector fractional_pm_via_flow(const Multigraph& h, Vertex u, Vertex u2, Vertex v, Vertex v2);

/// Uniform vector with every entry equal to `value`.
WeightVector uniform_weights(const Multigraph& g, Rational value);
/// Characteristic vector of a matching.
WeightVector characteristic_vector(const Multigraph& g, const Matching& m);

}  // namespace cubicpm
