#include "vtc/expansion.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "vtc/error.hpp"
#include "vtc/parallel.hpp"

namespace vtc {

namespace {

using Mask = std::uint32_t;

struct Candidate {
  std::int64_t boundary = 0;  // min(|N+|, |N-|)
  std::int64_t size = 0;      // |U|; 0 means "none yet"
  Mask set = 0;
};

// Sorted-member-list lexicographic order on bitmasks.
bool lex_less(Mask a, Mask b) {
  if (a == b) return false;
  // Members below the lowest differing bit p agree. The set holding p is
  // smaller unless the other set has nothing at or above p (a proper prefix).
  const int p = std::countr_zero(a ^ b);
  if ((a >> p) & 1u) return (b >> p) != 0;
  return (a >> p) == 0;
}

bool better(const Candidate& x, const Candidate& y) {
  if (y.size == 0) return x.size != 0;
  if (x.size == 0) return false;
  const std::int64_t lhs = x.boundary * y.size, rhs = y.boundary * x.size;
  if (lhs != rhs) return lhs < rhs;
  return lex_less(x.set, y.set);
}

VertexSet to_set(Mask m) {
  std::vector<Vertex> members;
  for (Vertex v = 0; m; ++v, m >>= 1) {
    if (m & 1u) members.push_back(v);
  }
  return VertexSet(std::move(members));
}

}  // namespace

ExpansionReport expansion_exact(const Digraph& d, unsigned threads) {
  const std::size_t n = d.vertex_count();
  if (n < 2 || n > kMaxExactExpansionVertices) {
    throw InvalidInput("exact expansion needs 2 <= n <= " +
                       std::to_string(kMaxExactExpansionVertices) + ", got n = " +
                       std::to_string(n));
  }
  std::vector<Mask> out(n, 0), in(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : d.out(v)) out[v] |= 1u << w;
    for (Vertex w : d.in(v)) in[v] |= 1u << w;
  }
  const int max_size = static_cast<int>(2 * n / 3);
  const Mask total = 1u << n;
  const std::size_t chunks = 64;
  const Mask chunk = (total + chunks - 1) / chunks;

  auto partial = parallel_map(chunks, threads, [&](std::size_t c) {
    Candidate best;
    std::uint64_t examined = 0;
    const Mask begin = std::max<Mask>(1, static_cast<Mask>(c) * chunk);
    const Mask end = std::min<Mask>(total, static_cast<Mask>(c + 1) * chunk);
    for (Mask u = begin; u < end; ++u) {
      const int size = std::popcount(u);
      if (size > max_size) continue;
      ++examined;
      Mask nout = 0, nin = 0;
      for (Mask rest = u; rest; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        nout |= out[v];
        nin |= in[v];
      }
      const Candidate cand{std::min(std::popcount(nout & ~u), std::popcount(nin & ~u)), size, u};
      if (better(cand, best)) best = cand;
    }
    return std::make_pair(best, examined);
  });

  Candidate best;
  ExpansionReport report;
  for (const auto& [cand, examined] : partial) {
    if (better(cand, best)) best = cand;
    report.subsets_examined += examined;
  }
  report.alpha_lower = Ratio(best.boundary, best.size);
  report.witness_set = to_set(best.set);
  report.exact = true;
  return report;
}

ExpansionReport expansion_sampled(const Digraph& d, std::size_t samples, std::uint64_t seed) {
  const std::size_t n = d.vertex_count();
  if (n < 2) throw InvalidInput("expansion needs at least 2 vertices");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  const std::size_t max_size = 2 * n / 3;
  ExpansionReport report;
  std::optional<std::pair<Ratio, VertexSet>> best;
  for (std::size_t i = 0; i < samples; ++i) {
    std::shuffle(order.begin(), order.end(), rng);
    const std::size_t size = 1 + i % max_size;
    VertexSet u(std::vector<Vertex>(order.begin(), order.begin() + static_cast<long>(size)));
    const auto boundary = std::min(out_neighborhood(d, u).size(), in_neighborhood(d, u).size());
    Ratio r(static_cast<std::int64_t>(boundary), static_cast<std::int64_t>(size));
    if (!best || r < best->first) best = std::make_pair(r, std::move(u));
    ++report.subsets_examined;
  }
  if (best) {
    report.alpha_lower = best->first;
    report.witness_set = std::move(best->second);
  }
  report.exact = false;
  return report;
}

bool satisfies_transitive_bound(const ExpansionReport& report, std::size_t diameter) {
  if (diameter == 0) return true;
  return report.alpha_lower * Ratio(3 * static_cast<std::int64_t>(diameter)) >= Ratio(1);
}

bool expansion_check_transitive_bound(const Digraph& d, unsigned threads) {
  const auto diam = directed_diameter(d);
  if (!diam) throw InvalidInput("expansion bound needs a strongly connected digraph");
  return satisfies_transitive_bound(expansion_exact(d, threads), *diam);
}

}  // namespace vtc
