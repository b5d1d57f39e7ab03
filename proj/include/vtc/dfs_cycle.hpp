#pragma once

#include <optional>
#include <vector>

#include "vtc/digraph.hpp"
#include "vtc/expansion.hpp"

namespace vtc {

struct ExtensionStep {
  Vertex vertex;
  /// Descendants of `vertex` in the digraph with the earlier path removed.
  std::size_t descendants;
};

struct CycleSearchResult {
  DirectedCycle cycle;
  /// alpha * n / 3 when the caller supplied alpha.
  std::optional<Ratio> guarantee;
  std::vector<ExtensionStep> trace;
  DirectedPath path;             // v_1 ... v_t at termination
  std::vector<Vertex> selected;  // out-neighbours of v_t whose descendants form U
  VertexSet descendant_set;      // U, with n/3 <= |U| <= 2n/3
  Vertex closing_vertex = 0;     // out-neighbour of U on the path closest to v_1
};

/// Long cycle by path extension: starting at vertex 0, repeatedly step to the
/// lowest fresh out-neighbour that keeps at least 2n/3 descendants outside
/// the path. At the end, out-neighbours of the last vertex are grouped into a
/// descendant set U of size in [n/3, 2n/3] (a single neighbour if one fits,
/// otherwise the ascending-id prefix whose union first reaches n/3). Every
/// out-neighbour of U lies on the path; the cycle runs from the earliest
/// such path vertex to the end of the path, then through U back to it.
///
/// Throws InvalidInput if d is not strongly connected or n < 2, and
/// VerificationError if a size/containment assertion or the alpha*n/3
/// guarantee fails.
CycleSearchResult dfs_long_cycle(const Digraph& d, std::optional<Ratio> alpha = std::nullopt);

struct LongPathResult {
  DirectedPath path;
  std::size_t diameter = 0;
  std::size_t cycle_length = 0;
  bool from_diameter = false;  // true: a diameter-realising shortest path won
  std::size_t floor_bound = 0; // floor(sqrt(n) / 3)
};

/// floor(sqrt(n) / 3), computed exactly.
std::size_t sqrt_third_floor(std::size_t n);

/// Longer of a diameter-realising shortest path and the dfs_long_cycle cycle
/// opened into a path. With `certified_transitive`, the cycle search uses
/// alpha = 1/(3d) and the floor(sqrt(n)/3) bound is asserted.
LongPathResult long_path(const Digraph& d, bool certified_transitive);

}  // namespace vtc
