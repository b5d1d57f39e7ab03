#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "vtc/cayley.hpp"
#include "vtc/digraph.hpp"
#include "vtc/exact.hpp"

namespace vtc {

Digraph directed_cycle(std::size_t n);
Digraph directed_path(std::size_t n);
Digraph complete_bidirected(std::size_t n);

/// Z_n1 x Z_n2 with generators (1,0) and (0,1).
CayleySpec cycle_product_spec(std::size_t n1, std::size_t n2);

/// C_n1 □ C_n2 with vertex (a, b) at index a * n2 + b. Requires n1, n2 >= 2.
Digraph directed_cycle_product(std::size_t n1, std::size_t n2);

/// Same digraph as directed_cycle_product, computed on demand. Used for
/// instances too large to materialise (e.g. 880 x 8736).
class CycleProductView {
 public:
  CycleProductView(std::uint64_t n1, std::uint64_t n2);

  std::uint64_t vertex_count() const { return n1_ * n2_; }
  std::uint64_t arc_count() const { return 2 * n1_ * n2_; }
  std::array<std::uint64_t, 2> out(std::uint64_t v) const;

 private:
  std::uint64_t n1_, n2_;
};

struct GadgetCheck {
  std::string property;
  Verdict verdict = Verdict::unknown;
  std::string detail;
};

struct GadgetReport {
  std::vector<GadgetCheck> checks;
  bool failed() const;
};

// Gadget chain on k blocks. Vertices come in pairs X_i = {2i, 2i+1},
// i = 0..k. Block i is the directed 4-cycle
//   2i -> 2i+2 -> 2i+1 -> 2i+3 -> 2i
// between X_i and X_{i+1}; both end pairs are closed by a digon. The result
// is 2-regular and strongly 2-connected, its longest directed cycles have
// length 4, and blocks 0, 2, 4, ... are pairwise vertex-disjoint.

/// Builds and post-verifies; throws VerificationError if a property fails.
Digraph figure1_chain(std::size_t k, SearchBudget budget = {});
GadgetReport verify_figure1_chain(const Digraph& d, std::size_t k, SearchBudget budget = {});

/// The same blocks closed into a ring of 4n+2 pairs (8n+4 vertices), i.e.
/// Cay(Z_{4n+2} x Z_2, {(1,0), (-1,1)}).
CayleySpec toroidal_gadget_spec(std::size_t n);

/// Builds and post-verifies (vertex count, regularity, transitivity
/// certificate, and non-Hamiltonicity by exact DP for n <= 2).
Digraph toroidal_gadget(std::size_t n, SearchBudget budget = {});
GadgetReport verify_toroidal_gadget(const Digraph& d, std::size_t n, SearchBudget budget = {});

}  // namespace vtc
