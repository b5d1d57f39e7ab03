#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "vtc/digraph.hpp"

namespace vtc {

enum class Verdict { yes, no, unknown };

std::string_view to_string(Verdict v);

/// Node-expansion budget for exponential searches. Counting expansions
/// rather than wall-clock time keeps outcomes reproducible.
struct SearchBudget {
  std::uint64_t max_expansions = 200'000'000;
};

struct HamiltonResult {
  Verdict verdict = Verdict::unknown;  // yes: cycle present; no: proven absent
  std::optional<DirectedCycle> cycle;
  std::uint64_t expansions = 0;
  bool used_dp = false;
};

/// Bitmask DP anchored at vertex 0 for n <= 24 (2^23 states at most);
/// budgeted backtracking for larger n (up to 64).
HamiltonResult brute_hamiltonian(const Digraph& d, SearchBudget budget = {});

struct LongestCycleResult {
  std::optional<DirectedCycle> best;  // first optimum in root/DFS order
  bool exact = false;                 // false: budget ran out, best is a lower bound
  std::uint64_t expansions = 0;
  std::size_t circumference() const { return best ? best->length() : 0; }
};

LongestCycleResult brute_longest_cycle(const Digraph& d, SearchBudget budget = {});

struct LongestPathResult {
  DirectedPath best;
  bool exact = false;
  std::uint64_t expansions = 0;
};

LongestPathResult brute_longest_path(const Digraph& d, SearchBudget budget = {});

/// Induced (chordless) cycle of an undirected graph, as a vertex sequence.
using InducedCycle = std::vector<Vertex>;

struct InducedCycleSearch {
  std::vector<InducedCycle> cycles;
  bool complete = false;
  std::uint64_t expansions = 0;
};

/// Every induced cycle of length >= min_length (each listed once, smallest
/// vertex first, second vertex smaller than the last).
InducedCycleSearch enumerate_induced_cycles(const Graph& g, std::size_t min_length,
                                            SearchBudget budget = {});

struct LongestInducedCycleResult {
  std::optional<InducedCycle> best;
  bool exact = false;
  std::uint64_t expansions = 0;
};

LongestInducedCycleResult brute_longest_induced_cycle(const Graph& g, SearchBudget budget = {});

bool is_induced_cycle(const Graph& g, const InducedCycle& c);
bool is_induced_path(const Graph& g, const std::vector<Vertex>& p);

/// Largest number of pairwise vertex-disjoint cycles among `cycles`.
std::size_t max_disjoint_cycles(const std::vector<DirectedCycle>& cycles, std::size_t vertex_count);

struct IntersectionResult {
  Verdict verdict = Verdict::unknown;  // yes: every two longest cycles meet
  std::size_t circumference = 0;
  std::size_t longest_cycle_count = 0;
  std::optional<std::pair<DirectedCycle, DirectedCycle>> disjoint_pair;
};

/// Experimental check of whether all longest directed cycles pairwise meet.
IntersectionResult longest_cycles_pairwise_intersect(const Digraph& d, SearchBudget budget = {});

}  // namespace vtc
