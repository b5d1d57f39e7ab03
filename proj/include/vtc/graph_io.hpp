#pragma once

#include <iosfwd>
#include <string>

#include "vtc/digraph.hpp"

namespace vtc {

// Edge-list text format:
//   n m
//   u v        (m lines, arc u -> v, 0-indexed)
// Lines starting with '#' are comments. Output is LF-terminated, arcs sorted.

Digraph read_edge_list(std::istream& in);
Digraph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Digraph& d);
std::string to_edge_list(const Digraph& d);

/// Graphviz export. With `collapse_digons`, each digon becomes one `dir=both` edge.
std::string to_dot(const Digraph& d, bool collapse_digons = false);

}  // namespace vtc
