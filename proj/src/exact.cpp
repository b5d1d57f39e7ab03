#include "vtc/exact.hpp"

#include <algorithm>
#include <bit>

#include "vtc/cycle_enum.hpp"
#include "vtc/error.hpp"

namespace vtc {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    case Verdict::unknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(Vertex v) { return Mask{1} << v; }

void require_small(std::size_t n, const char* what) {
  if (n > 64) {
    throw InvalidInput(std::string(what) + " supports at most 64 vertices, got " +
                       std::to_string(n));
  }
}

std::vector<Mask> out_masks(const Digraph& d) {
  std::vector<Mask> m(d.vertex_count(), 0);
  for (Vertex v = 0; v < d.vertex_count(); ++v)
    for (Vertex w : d.out(v)) m[v] |= bit(w);
  return m;
}

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> m(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (Vertex w : g.neighbors(v)) m[v] |= bit(w);
  return m;
}

Mask all_vertices(std::size_t n) { return n == 64 ? ~Mask{0} : bit(static_cast<Vertex>(n)) - 1; }

// Vertices strictly greater than v.
Mask above(std::size_t n, Vertex v) { return all_vertices(n) & ~((bit(v) << 1) - 1); }

struct BudgetExhausted {};

class Counter {
 public:
  explicit Counter(SearchBudget b) : limit_(b.max_expansions) {}
  void tick() {
    if (++count_ > limit_) throw BudgetExhausted{};
  }
  std::uint64_t count() const { return count_; }

 private:
  std::uint64_t limit_;
  std::uint64_t count_ = 0;
};

HamiltonResult hamiltonian_dp(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  const auto out = out_masks(d);
  // State bit i stands for vertex i + 1; vertex 0 anchors every path.
  const std::size_t k = n - 1;
  std::vector<std::uint32_t> ends(std::size_t{1} << k, 0);
  for (Vertex w : d.out(0)) ends[std::size_t{1} << (w - 1)] |= 1u << (w - 1);
  HamiltonResult result;
  result.used_dp = true;
  const std::size_t full = (std::size_t{1} << k) - 1;
  for (std::size_t mask = 1; mask < full; ++mask) {
    std::uint32_t e = ends[mask];
    while (e) {
      const int i = std::countr_zero(e);
      e &= e - 1;
      ++result.expansions;
      std::uint32_t next = static_cast<std::uint32_t>((out[i + 1] >> 1) & ~mask);
      while (next) {
        const int j = std::countr_zero(next);
        next &= next - 1;
        ends[mask | (std::size_t{1} << j)] |= 1u << j;
      }
    }
  }
  std::uint32_t closing = 0;
  for (Vertex v : d.in(0)) closing |= 1u << (v - 1);
  const std::uint32_t last_options = ends[full] & closing;
  if (!last_options) {
    result.verdict = Verdict::no;
    return result;
  }
  std::vector<Vertex> reversed;
  Vertex cur = static_cast<Vertex>(std::countr_zero(last_options) + 1);
  std::size_t mask = full;
  while (true) {
    reversed.push_back(cur);
    const std::size_t prev = mask ^ (std::size_t{1} << (cur - 1));
    if (prev == 0) break;
    std::uint32_t cand = ends[prev];
    Vertex chosen = 0;
    while (cand) {
      const Vertex u = static_cast<Vertex>(std::countr_zero(cand) + 1);
      cand &= cand - 1;
      if (d.has_arc(u, cur)) {
        chosen = u;
        break;
      }
    }
    if (chosen == 0) throw VerificationError("Hamiltonian DP reconstruction failed");
    cur = chosen;
    mask = prev;
  }
  DirectedCycle c;
  c.vertices.push_back(0);
  c.vertices.insert(c.vertices.end(), reversed.rbegin(), reversed.rend());
  if (!is_valid_cycle(d, c) || c.length() != n) {
    throw VerificationError("Hamiltonian DP produced an invalid cycle");
  }
  result.cycle = std::move(c);
  result.verdict = Verdict::yes;
  return result;
}

HamiltonResult hamiltonian_backtrack(const Digraph& d, SearchBudget budget) {
  const std::size_t n = d.vertex_count();
  const auto out = out_masks(d);
  Mask closing = 0;
  for (Vertex v : d.in(0)) closing |= bit(v);
  Counter counter(budget);
  std::vector<Vertex> path{0};
  HamiltonResult result;
  auto dfs = [&](auto&& self, Vertex v, Mask used) -> bool {
    counter.tick();
    if (path.size() == n) return (closing & bit(v)) != 0;
    Mask next = out[v] & ~used;
    while (next) {
      const Vertex w = static_cast<Vertex>(std::countr_zero(next));
      next &= next - 1;
      path.push_back(w);
      if (self(self, w, used | bit(w))) return true;
      path.pop_back();
    }
    return false;
  };
  try {
    if (dfs(dfs, 0, bit(0))) {
      result.verdict = Verdict::yes;
      result.cycle = DirectedCycle{path};
    } else {
      result.verdict = Verdict::no;
    }
  } catch (const BudgetExhausted&) {
    result.verdict = Verdict::unknown;
  }
  result.expansions = counter.count();
  return result;
}

}  // namespace

HamiltonResult brute_hamiltonian(const Digraph& d, SearchBudget budget) {
  const std::size_t n = d.vertex_count();
  require_small(n, "brute_hamiltonian");
  if (n < 2) return HamiltonResult{Verdict::no, std::nullopt, 0, false};
  if (n <= 24) return hamiltonian_dp(d);
  return hamiltonian_backtrack(d, budget);
}

LongestCycleResult brute_longest_cycle(const Digraph& d, SearchBudget budget) {
  const std::size_t n = d.vertex_count();
  require_small(n, "brute_longest_cycle");
  const auto out = out_masks(d);
  Counter counter(budget);
  LongestCycleResult result;
  std::vector<Vertex> path;
  std::size_t best_len = 0;
  try {
    for (Vertex root = 0; root < n; ++root) {
      if (best_len >= n - root) break;
      const Mask higher = above(n, root);
      path.assign(1, root);
      auto dfs = [&](auto&& self, Vertex v, Mask free) -> void {
        counter.tick();
        if (path.size() + static_cast<std::size_t>(std::popcount(free)) <= best_len) return;
        if ((out[v] & bit(root)) && path.size() >= 2 && path.size() > best_len) {
          best_len = path.size();
          result.best = DirectedCycle{path};
          if (best_len == n) throw BudgetExhausted{};  // cannot be beaten
        }
        Mask next = out[v] & free;
        while (next) {
          const Vertex w = static_cast<Vertex>(std::countr_zero(next));
          next &= next - 1;
          path.push_back(w);
          self(self, w, free & ~bit(w));
          path.pop_back();
        }
      };
      dfs(dfs, root, higher);
    }
    result.exact = true;
  } catch (const BudgetExhausted&) {
    result.exact = best_len == n;
  }
  result.expansions = counter.count();
  return result;
}

LongestPathResult brute_longest_path(const Digraph& d, SearchBudget budget) {
  const std::size_t n = d.vertex_count();
  require_small(n, "brute_longest_path");
  const auto out = out_masks(d);
  Counter counter(budget);
  LongestPathResult result;
  if (n == 0) {
    result.exact = true;
    return result;
  }
  result.best.vertices = {0};
  std::vector<Vertex> path;
  try {
    for (Vertex start = 0; start < n; ++start) {
      path.assign(1, start);
      auto dfs = [&](auto&& self, Vertex v, Mask free) -> void {
        counter.tick();
        if (path.size() > result.best.vertices.size()) {
          result.best.vertices = path;
          if (path.size() == n) throw BudgetExhausted{};
        }
        if (path.size() + static_cast<std::size_t>(std::popcount(free)) <=
            result.best.vertices.size()) {
          return;
        }
        Mask next = out[v] & free;
        while (next) {
          const Vertex w = static_cast<Vertex>(std::countr_zero(next));
          next &= next - 1;
          path.push_back(w);
          self(self, w, free & ~bit(w));
          path.pop_back();
        }
      };
      dfs(dfs, start, all_vertices(n) & ~bit(start));
    }
    result.exact = true;
  } catch (const BudgetExhausted&) {
    result.exact = result.best.vertices.size() == n;
  }
  result.expansions = counter.count();
  return result;
}

namespace {

// Shared DFS over induced cycles rooted at their smallest vertex. `visit`
// receives each cycle once; `bound` returns the current length to beat for
// pruning (0 disables pruning).
template <class Visit, class Bound>
void induced_cycle_search(const Graph& g, Counter& counter, Visit visit, Bound bound) {
  const std::size_t n = g.vertex_count();
  const auto adj = adjacency_masks(g);
  std::vector<Vertex> path;
  for (Vertex root = 0; root < n; ++root) {
    const Mask higher = above(n, root);
    path.assign(1, root);
    // `forbidden` = path vertices plus neighbours of interior path vertices;
    // new vertices must avoid it to keep the path induced.
    auto dfs = [&](auto&& self, Vertex v, Mask forbidden) -> void {
      counter.tick();
      const std::size_t best = bound();
      const Mask reachable = higher & ~forbidden;
      if (best > 0 && path.size() + static_cast<std::size_t>(std::popcount(reachable)) <= best) {
        return;
      }
      Mask next = adj[v] & reachable;
      while (next) {
        const Vertex w = static_cast<Vertex>(std::countr_zero(next));
        next &= next - 1;
        if (path.size() >= 2 && (adj[w] & bit(root))) {
          // w closes the cycle; any extension through w would have a chord to root.
          if (path[1] < w) {
            path.push_back(w);
            visit(path);
            path.pop_back();
          }
          continue;
        }
        path.push_back(w);
        self(self, w, forbidden | bit(w) | (v == root ? 0 : adj[v]));
        path.pop_back();
      }
    };
    dfs(dfs, root, bit(root));
  }
}

}  // namespace

InducedCycleSearch enumerate_induced_cycles(const Graph& g, std::size_t min_length,
                                            SearchBudget budget) {
  require_small(g.vertex_count(), "enumerate_induced_cycles");
  Counter counter(budget);
  InducedCycleSearch result;
  try {
    induced_cycle_search(
        g, counter,
        [&](const std::vector<Vertex>& c) {
          if (c.size() >= min_length) result.cycles.push_back(c);
        },
        [] { return std::size_t{0}; });
    result.complete = true;
  } catch (const BudgetExhausted&) {
    result.complete = false;
  }
  result.expansions = counter.count();
  return result;
}

LongestInducedCycleResult brute_longest_induced_cycle(const Graph& g, SearchBudget budget) {
  require_small(g.vertex_count(), "brute_longest_induced_cycle");
  Counter counter(budget);
  LongestInducedCycleResult result;
  std::size_t best = 0;
  try {
    induced_cycle_search(
        g, counter,
        [&](const std::vector<Vertex>& c) {
          if (c.size() > best) {
            best = c.size();
            result.best = c;
          }
        },
        [&] { return best; });
    result.exact = true;
  } catch (const BudgetExhausted&) {
    result.exact = false;
  }
  result.expansions = counter.count();
  return result;
}

bool is_induced_path(const Graph& g, const std::vector<Vertex>& p) {
  std::vector<bool> seen(g.vertex_count(), false);
  for (Vertex v : p) {
    if (v >= g.vertex_count() || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (g.has_edge(p[i], p[j]) != (j == i + 1)) return false;
    }
  }
  return true;
}

bool is_induced_cycle(const Graph& g, const InducedCycle& c) {
  const std::size_t k = c.size();
  if (k < 3) return false;
  std::vector<bool> seen(g.vertex_count(), false);
  for (Vertex v : c) {
    if (v >= g.vertex_count() || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (g.has_edge(c[i], c[j]) != consecutive) return false;
    }
  }
  return true;
}

std::size_t max_disjoint_cycles(const std::vector<DirectedCycle>& cycles,
                                std::size_t vertex_count) {
  require_small(vertex_count, "max_disjoint_cycles");
  std::vector<Mask> masks;
  for (const auto& c : cycles) {
    Mask m = 0;
    for (Vertex v : c.vertices) m |= bit(v);
    masks.push_back(m);
  }
  std::size_t best = 0;
  auto search = [&](auto&& self, std::size_t i, Mask used, std::size_t count) -> void {
    best = std::max(best, count);
    if (i == masks.size()) return;
    if (count + static_cast<std::size_t>(std::popcount(~used & all_vertices(vertex_count))) / 2 <=
        best) {
      return;  // every further cycle needs at least two fresh vertices
    }
    if (!(masks[i] & used)) self(self, i + 1, used | masks[i], count + 1);
    self(self, i + 1, used, count);
  };
  search(search, 0, 0, 0);
  return best;
}

IntersectionResult longest_cycles_pairwise_intersect(const Digraph& d, SearchBudget budget) {
  IntersectionResult result;
  const auto enumeration =
      enumerate_directed_cycles(d, {std::nullopt, static_cast<std::size_t>(std::min<std::uint64_t>(
                                                      budget.max_expansions, kDefaultMaxCycles))});
  if (!enumeration.complete()) return result;
  for (const auto& c : enumeration.cycles) {
    result.circumference = std::max(result.circumference, c.length());
  }
  std::vector<const DirectedCycle*> longest;
  for (const auto& c : enumeration.cycles) {
    if (c.length() == result.circumference) longest.push_back(&c);
  }
  result.longest_cycle_count = longest.size();
  result.verdict = Verdict::yes;
  for (std::size_t i = 0; i < longest.size(); ++i) {
    std::vector<bool> on(d.vertex_count(), false);
    for (Vertex v : longest[i]->vertices) on[v] = true;
    for (std::size_t j = i + 1; j < longest.size(); ++j) {
      const auto& other = longest[j]->vertices;
      if (std::none_of(other.begin(), other.end(), [&](Vertex v) { return on[v]; })) {
        result.verdict = Verdict::no;
        result.disjoint_pair = std::make_pair(*longest[i], *longest[j]);
        return result;
      }
    }
  }
  return result;
}

}  // namespace vtc
