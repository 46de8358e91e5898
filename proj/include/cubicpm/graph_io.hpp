#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "cubicpm/multigraph.hpp"

namespace cubicpm {

// Native edge-list text format:
//   n m
//   u v      (m lines, 0-based, edge ids follow line order)
// Blank lines and lines starting with '#' are ignored.

Multigraph parse_edge_list(std::string_view text);
Multigraph read_edge_list(std::istream& in);
/// Writes edges in id order; never sorts.
std::string write_edge_list(const Multigraph& g);

/// graph6 import. Only simple graphs can be expressed; an optional
/// ">>graph6<<" header is accepted. Edge ids follow the bit order of the
/// upper triangle (column by column).
Multigraph parse_graph6(std::string_view line);
/// Throws InvariantViolated for multigraphs.
std::string write_graph6(const Multigraph& g);

}  // namespace cubicpm
