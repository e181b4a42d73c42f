#pragma once

#include <istream>
#include <ostream>
#include <string>

#include "barricade/graph.hpp"

namespace barricade {

/**
 * Reads a whitespace-separated edge list: one `u v [w]` record per line, `#`
 * comment lines and blank lines ignored, missing weights default to 1.
 *
 * The node count is 1 + the largest id seen. A SNAP-style header comment such
 * as `# Nodes: 30 Edges: 320` raises that to at least 30, which keeps trailing
 * isolated nodes across a write/read round trip.
 *
 * Throws ParseError (with line number) on malformed records and
 * ValidationError on non-positive weights, duplicates and self loops.
 */
Graph load_edge_list(std::istream& in, double default_barricade);

/// Overwrites barricades from `u b` lines; unlisted nodes keep their values.
Graph load_barricades(const Graph& graph, std::istream& in);

/// Writes the header comment and one `u v w` line per edge in (u, v) order.
void write_edge_list(const Graph& graph, std::ostream& out);
/// Writes one `u b` line per live node.
void write_barricades(const Graph& graph, std::ostream& out);

/// Shortest decimal text that parses back to exactly `x`.
std::string format_double(double x);

}  // namespace barricade
