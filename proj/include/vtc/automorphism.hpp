#pragma once

#include <optional>

#include "vtc/cayley.hpp"
#include "vtc/digraph.hpp"
#include "vtc/exact.hpp"

namespace vtc {

struct TransitivityResult {
  Verdict verdict = Verdict::unknown;
  /// Automorphisms found along the way; with verdict yes they witness transitivity.
  AutomorphismFamily found;
  std::uint64_t nodes = 0;
};

/// Decides vertex transitivity by searching, for each vertex v outside the
/// current orbit of 0, an automorphism with 0 -> v. The search individualises
/// vertices and refines colourings by out/in-neighbour colour multisets;
/// it is exhaustive, so a failed search is a proof. `budget` caps search nodes.
TransitivityResult is_vertex_transitive(const Digraph& d,
                                        SearchBudget budget = SearchBudget{1'000'000});

/// Automorphism mapping `from` to `to`, if one exists within the budget.
/// Verdict no means none exists.
std::pair<Verdict, std::optional<Permutation>> find_automorphism(const Digraph& d, Vertex from,
                                                                 Vertex to, SearchBudget budget);

/// Family with a member u -> v for every ordered pair: automorphisms
/// f_v (0 -> v) found by search, combined as f_v f_u^-1. Verdict no when
/// some vertex is not in the orbit of 0.
std::pair<Verdict, AutomorphismFamily> transitive_family(
    const Digraph& d, SearchBudget budget = SearchBudget{1'000'000});

}  // namespace vtc
