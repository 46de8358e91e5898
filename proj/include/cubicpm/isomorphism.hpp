#pragma once

#include <optional>
#include <vector>

#include "cubicpm/multigraph.hpp"

namespace cubicpm {

/// Largest order for which isomorphism is decided by search; above it only
/// labeled equality is used.
inline constexpr int kIsomorphismCap = 14;

/// A vertex bijection phi with mult_g(x, y) == mult_h(phi(x), phi(y)), found
/// by colour-refined backtracking. Edge multiplicities are respected.
std::optional<std::vector<Vertex>> find_isomorphism(const Multigraph& g, const Multigraph& h);

/// Search-based test up to kIsomorphismCap vertices, labeled edge-multiset
/// equality beyond.
bool are_isomorphic(const Multigraph& g, const Multigraph& h);

}  // namespace cubicpm
