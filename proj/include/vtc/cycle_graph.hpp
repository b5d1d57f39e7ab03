#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "vtc/cayley.hpp"
#include "vtc/cycle_enum.hpp"
#include "vtc/digraph.hpp"
#include "vtc/exact.hpp"
#include "vtc/expansion.hpp"

namespace vtc {

/// Intersection graph of directed cycles: one vertex per cycle, an edge when
/// two cycles share a host vertex.
struct CycleGraph {
  std::vector<DirectedCycle> cycles;
  Graph graph;
  /// membership[v]: indices of the cycles through host vertex v, ascending.
  std::vector<std::vector<Vertex>> membership;
  std::size_t host_vertices = 0;
  bool truncated = false;
  std::size_t max_length = 0;
  std::size_t max_count = 0;

  bool complete() const { return !truncated && max_length >= host_vertices; }
  std::size_t size() const { return cycles.size(); }
};

/// Adjacency comes from the membership index; 100 random pairs (seeded) are
/// re-checked by direct set intersection and a mismatch throws
/// VerificationError.
CycleGraph build_cycle_graph(const CycleEnumeration& cycles);

/// Header `cycles k truncated {0|1}`, one line per cycle, then `i j` per edge.
void write_cycle_graph(std::ostream& out, const CycleGraph& cg);

struct CycleGraphDiameterReport {
  Verdict verdict = Verdict::unknown;  // unknown when the enumeration is truncated
  bool connected = false;
  std::size_t cycle_count = 0;
  std::size_t cycle_graph_diameter = 0;
  std::size_t directed_diameter = 0;
  std::size_t circumference = 0;
  Ratio bound{0};  // d / l - 1
  bool asserted = false;
  bool holds = false;
};

/// diam(C(D)) >= d/l - 1. The inequality is asserted (VerificationError on
/// failure) only when `transitive_host` is set.
CycleGraphDiameterReport cycle_graph_diameter_check(const Digraph& d, bool transitive_host,
                                                    EnumerationLimits limits = {},
                                                    unsigned threads = 1);

/// Turns an induced cycle C_1 ... C_l (l >= 4) of the cycle graph into a
/// directed cycle of the host of length >= l. v_1 and v_2 are found by
/// walking C_1 from its first C_l vertex, keeping the latest C_l vertex seen
/// until the first C_2 vertex. Each later C_i is followed to its first
/// C_{i+1} vertex; the walk closes along C_l.
/// Throws InvalidInput if `seq` is not an induced cycle of length >= 4 and
/// VerificationError if the result is invalid or shorter than l.
DirectedCycle stitch_directed_cycle(const Digraph& d, const CycleGraph& cg,
                                    const std::vector<Vertex>& seq);

/// Each host automorphism acting on cycle indices. Requires a complete cycle
/// graph; an image missing from the list or a non-automorphic lift throws
/// VerificationError.
AutomorphismFamily lift_automorphisms(const Digraph& d, const AutomorphismFamily& fam,
                                      const CycleGraph& cg);

/// For every ordered pair (v, u) some member maps v into {u} + N(u).
/// Relative to `fam`: a false answer only says this family does not witness it.
bool is_nearly_transitive(const Graph& g, const AutomorphismFamily& fam);

}  // namespace vtc
