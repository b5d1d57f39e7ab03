#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vtc/cayley.hpp"
#include "vtc/cycle_enum.hpp"
#include "vtc/dfs_cycle.hpp"
#include "vtc/exact.hpp"

namespace vtc {

/// Constant in the asserted floor |C| >= c * n^(1/3), checked as 729 |C|^3 >= n.
inline constexpr std::int64_t kPipelineConstantDenominator = 9;

struct PipelineOptions {
  EnumerationLimits limits{std::nullopt, kDefaultMaxCycles};
  SearchBudget budget{};
  unsigned threads = 1;
};

struct PipelineReport {
  std::size_t n = 0;
  std::size_t diameter = 0;
  bool small_diameter = false;  // d^3 <= n^2
  bool partial = false;         // cycle enumeration truncated; small-diameter result only
  std::optional<CycleSearchResult> dfs;
  // Large-diameter branch.
  std::size_t cycle_count = 0;
  bool cycle_graph_complete = false;
  std::optional<std::size_t> cycle_graph_diameter;
  bool nearly_transitive = false;
  std::string induced_method;  // "symmetry", "exhaustive" or "none"
  std::optional<std::vector<Vertex>> induced_cycle;
  std::optional<DirectedCycle> stitched;
  std::optional<DirectedCycle> incidental;  // longest enumerated cycle
  DirectedCycle cycle;
  std::vector<std::string> trace;
  bool floor_holds = false;
};

/// Long directed cycle in a vertex-transitive digraph certified by `fam`
/// (a transitive family of automorphisms). Small diameter (d^3 <= n^2): the
/// path-extension search with alpha = 1/(3d). Otherwise: cycle graph, lifted
/// symmetries, a long induced cycle, and stitching; the result is the longer
/// of the stitched cycle and the longest enumerated cycle.
/// Throws InvalidInput when `fam` does not certify transitivity, and
/// VerificationError when the returned cycle misses 729 |C|^3 >= n.
PipelineReport omega_n13_pipeline(const Digraph& d, const AutomorphismFamily& fam,
                                  PipelineOptions options = {});

}  // namespace vtc
