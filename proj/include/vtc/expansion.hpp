#pragma once

#include <cstdint>
#include <optional>

#include <boost/rational.hpp>

#include "vtc/digraph.hpp"

namespace vtc {

using Ratio = boost::rational<std::int64_t>;

inline constexpr std::size_t kMaxExactExpansionVertices = 20;

struct ExpansionReport {
  /// Exact mode: min over 1 <= |U| <= floor(2n/3) of min(|N+(U)|, |N-(U)|) / |U|.
  /// Sampled mode: the smallest ratio seen, which only refutes larger alphas.
  Ratio alpha_lower{0};
  std::optional<VertexSet> witness_set;
  bool exact = false;
  std::uint64_t subsets_examined = 0;
};

/// Exhaustive subset scan; 2 <= n <= 20. The witness is the lexicographically
/// smallest minimiser (as a sorted vertex list). Deterministic for any
/// thread count.
ExpansionReport expansion_exact(const Digraph& d, unsigned threads = 1);

/// Random subsets of every admissible size, seeded. For hosts too large to scan.
ExpansionReport expansion_sampled(const Digraph& d, std::size_t samples, std::uint64_t seed);

/// alpha_lower >= 1 / (3 * directed diameter). The host must be strongly
/// connected with at most 20 vertices.
bool expansion_check_transitive_bound(const Digraph& d, unsigned threads = 1);

/// Same test against an already computed report.
bool satisfies_transitive_bound(const ExpansionReport& report, std::size_t diameter);

}  // namespace vtc
