#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "vtc/digraph.hpp"

namespace vtc {

inline constexpr std::size_t kDefaultMaxCycles = 1'000'000;
inline constexpr std::size_t kUnboundedEnumerationLimit = 20;

struct EnumerationLimits {
  std::optional<std::size_t> max_length;  // default: vertex count
  std::optional<std::size_t> max_count;   // default: kDefaultMaxCycles
};

struct CycleEnumeration {
  std::vector<DirectedCycle> cycles;
  bool truncated = false;  // more than max_count cycles exist within max_length
  std::size_t max_length = 0;
  std::size_t max_count = 0;
  std::size_t vertex_count = 0;

  /// Every directed cycle of the host is listed.
  bool complete() const { return !truncated && max_length >= vertex_count; }
};

/// Johnson's simple-cycle enumeration, roots in ascending order. Every cycle
/// is emitted once, rotated so its smallest vertex comes first.
/// For hosts above kUnboundedEnumerationLimit vertices an explicit
/// max_count is required. Roots are processed in parallel batches when
/// threads > 1; the output is identical for every thread count.
CycleEnumeration enumerate_directed_cycles(const Digraph& d, EnumerationLimits limits = {},
                                           unsigned threads = 1);

}  // namespace vtc
