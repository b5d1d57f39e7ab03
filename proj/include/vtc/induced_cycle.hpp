#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vtc/cayley.hpp"
#include "vtc/exact.hpp"

namespace vtc {

/// State of the geodesic construction when it stopped. Paths are vertex
/// lists; side_path is L' or R' oriented from w' outward, and tail is the
/// part of it from c onwards (L'').
struct GeodesicDecomposition {
  std::vector<Vertex> S;
  Vertex v = 0, u = 0, m = 0;
  std::vector<Vertex> L, R;
  std::vector<Vertex> P, Q;
  Vertex w = 0, x = 0, y = 0;
  std::size_t phi = 0;  // index into the family
  std::vector<Vertex> S_image, L_image, R_image;
  Vertex v_image = 0, u_image = 0, w_image = 0;
  std::size_t a_reach = 0;  // farthest contact of L' with Q + N(Q), measured from w'
  std::size_t b_reach = 0;  // same for R'
  bool used_left = true;
  std::vector<Vertex> side_path, tail;
  Vertex c = 0, z = 0;
  std::optional<Vertex> s, t;
};

struct InducedCycleReport {
  std::optional<InducedCycle> cycle;
  std::size_t diameter = 0;
  std::size_t floor = 0;          // d - 17
  bool by_construction = false;   // false: the exhaustive fallback produced the cycle
  std::string failed_step;        // empty when the construction succeeded
  std::size_t path_extensions = 0;
  GeodesicDecomposition decomposition;
};

/// Long induced cycle in a connected graph of diameter >= 20 whose symmetry
/// is witnessed by `fam` (near transitivity). A geodesic S between a
/// diameter pair is split at its midpoint m; an induced path P ending in a
/// geodesic tail Q of ceil((d-5)/2) vertices is grown from S. An automorphism
/// moving m next to the end w of P gives S' = L' + R'; the side touching
/// Q + N(Q) only within distance 3 of w' is followed from its farthest contact
/// c. Either a contact (s, t) between the rest of P and that side closes an
/// induced cycle through Q', or P is replaced by a strictly longer path and
/// the step repeats. If a step breaks down, the exhaustive search runs
/// instead (graphs up to 64 vertices) and `failed_step` names the step.
///
/// Throws InvalidInput when G is disconnected, has diameter < 20, or `fam`
/// is not a family of automorphisms witnessing near transitivity.
InducedCycleReport induced_cycle_via_symmetry(const Graph& g, const AutomorphismFamily& fam,
                                              SearchBudget fallback_budget = {});

}  // namespace vtc
