#pragma once

// Slow, independent reimplementations used to cross-check the library.
// Nothing here calls into vtc beyond reading adjacency.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "vtc/digraph.hpp"

namespace oracle {

using vtc::Vertex;

// Adjacency matrix copy, so the oracles never use the library's queries.
inline std::vector<std::vector<bool>> matrix(const vtc::Digraph& d) {
  const std::size_t n = d.vertex_count();
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : d.arcs()) m[u][v] = true;
  return m;
}

// Every directed cycle, smallest vertex first, found by plain DFS.
inline std::vector<std::vector<Vertex>> all_cycles(const vtc::Digraph& d) {
  const auto m = matrix(d);
  const std::size_t n = m.size();
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path;
  std::vector<bool> used(n, false);
  std::function<void(Vertex, Vertex)> go = [&](Vertex root, Vertex v) {
    for (Vertex w = 0; w < n; ++w) {
      if (!m[v][w]) continue;
      if (w == root) out.push_back(path);
      if (w > root && !used[w]) {
        used[w] = true;
        path.push_back(w);
        go(root, w);
        path.pop_back();
        used[w] = false;
      }
    }
  };
  for (Vertex r = 0; r < n; ++r) {
    path = {r};
    used.assign(n, false);
    used[r] = true;
    go(r, r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t circumference(const vtc::Digraph& d) {
  std::size_t best = 0;
  for (const auto& c : all_cycles(d)) best = std::max(best, c.size());
  return best;
}

// min over 1 <= |U| <= floor(2n/3) of min(|N+(U)|, |N-(U)|) / |U|, as (num, den).
inline std::pair<std::int64_t, std::int64_t> expansion(const vtc::Digraph& d) {
  const auto m = matrix(d);
  const std::size_t n = m.size();
  std::pair<std::int64_t, std::int64_t> best{1, 0};
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::int64_t size = __builtin_popcount(mask);
    if (3 * size > 2 * static_cast<std::int64_t>(n)) continue;
    std::int64_t outs = 0, ins = 0;
    for (Vertex x = 0; x < n; ++x) {
      if (mask >> x & 1u) continue;
      bool o = false, i = false;
      for (Vertex u = 0; u < n; ++u) {
        if (!(mask >> u & 1u)) continue;
        o = o || m[u][x];
        i = i || m[x][u];
      }
      outs += o;
      ins += i;
    }
    const std::int64_t b = std::min(outs, ins);
    if (best.second == 0 || b * best.second < best.first * size) best = {b, size};
  }
  return best;
}

inline std::uint64_t euclid(std::uint64_t a, std::uint64_t b) {
  while (b) {
    const std::uint64_t r = a % b;
    a = b;
    b = r;
  }
  return a;
}

inline bool trial_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

// Undirected graph as adjacency matrix: all induced cycles (vertex sets) of
// length >= min_len, by checking every subset that is 2-regular and connected.
inline std::set<std::vector<Vertex>> induced_cycle_sets(const std::vector<std::vector<bool>>& adj,
                                                        std::size_t min_len) {
  const std::size_t n = adj.size();
  std::set<std::vector<Vertex>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < n; ++v) {
      if (mask >> v & 1u) members.push_back(v);
    }
    if (members.size() < std::max<std::size_t>(3, min_len)) continue;
    bool two_regular = true;
    for (Vertex v : members) {
      int deg = 0;
      for (Vertex w : members) deg += adj[v][w];
      two_regular = two_regular && deg == 2;
    }
    if (!two_regular) continue;
    // connected?
    std::vector<Vertex> stack{members[0]};
    std::uint32_t seen = 1u << members[0];
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : members) {
        if (adj[v][w] && !(seen >> w & 1u)) {
          seen |= 1u << w;
          stack.push_back(w);
        }
      }
    }
    if (seen == mask) out.insert(members);
  }
  return out;
}

}  // namespace oracle
