#include "vtc/dfs_cycle.hpp"

#include <algorithm>

#include "vtc/error.hpp"

namespace vtc {

namespace {

// Thresholds compared as 3|X| against n and 2n, never in floating point.
bool at_least_two_thirds(std::size_t x, std::size_t n) { return 3 * x >= 2 * n; }
bool at_least_one_third(std::size_t x, std::size_t n) { return 3 * x >= n; }
bool at_most_two_thirds(std::size_t x, std::size_t n) { return 3 * x <= 2 * n; }

}  // namespace

CycleSearchResult dfs_long_cycle(const Digraph& d, std::optional<Ratio> alpha) {
  const std::size_t n = d.vertex_count();
  if (n < 2) throw InvalidInput("dfs_long_cycle needs at least 2 vertices");
  if (!is_strongly_connected(d)) throw InvalidInput("digraph is not strongly connected");

  CycleSearchResult result;
  std::vector<bool> on_path(n, false);
  std::vector<Vertex>& path = result.path.vertices;
  path.push_back(0);
  on_path[0] = true;
  result.trace.push_back({0, n});

  while (true) {
    const Vertex tip = path.back();
    bool extended = false;
    for (Vertex w : d.out(tip)) {
      if (on_path[w]) continue;
      const auto desc = reachable_avoiding(d, w, on_path);
      if (at_least_two_thirds(desc.size(), n)) {
        path.push_back(w);
        on_path[w] = true;
        result.trace.push_back({w, desc.size()});
        extended = true;
        break;
      }
    }
    if (!extended) break;
  }

  // Assemble S and U among the fresh out-neighbours of the last vertex.
  const Vertex tip = path.back();
  std::vector<std::pair<Vertex, std::vector<Vertex>>> singles;
  for (Vertex w : d.out(tip)) {
    if (!on_path[w]) singles.emplace_back(w, reachable_avoiding(d, w, on_path));
  }
  std::vector<bool> in_u(n, false);
  std::size_t u_size = 0;
  auto absorb = [&](const std::vector<Vertex>& desc) {
    for (Vertex x : desc) {
      if (!in_u[x]) {
        in_u[x] = true;
        ++u_size;
      }
    }
  };
  auto single = std::find_if(singles.begin(), singles.end(), [&](const auto& s) {
    return at_least_one_third(s.second.size(), n) && at_most_two_thirds(s.second.size(), n);
  });
  if (single != singles.end()) {
    result.selected.push_back(single->first);
    absorb(single->second);
  } else {
    for (const auto& [w, desc] : singles) {
      if (at_least_one_third(u_size, n)) break;
      result.selected.push_back(w);
      absorb(desc);
    }
  }
  if (!at_least_one_third(u_size, n) || !at_most_two_thirds(u_size, n)) {
    throw VerificationError("descendant set U has size " + std::to_string(u_size) +
                            ", outside [n/3, 2n/3] for n = " + std::to_string(n));
  }

  // Every out-neighbour of U must lie on the path; pick the earliest one.
  std::vector<std::size_t> position(n, n);
  for (std::size_t i = 0; i < path.size(); ++i) position[path[i]] = i;
  std::size_t earliest = n;
  std::vector<Vertex> members;
  for (Vertex x = 0; x < n; ++x) {
    if (!in_u[x]) continue;
    members.push_back(x);
    for (Vertex y : d.out(x)) {
      if (in_u[y]) continue;
      if (!on_path[y]) {
        throw VerificationError("out-neighbour " + std::to_string(y) + " of U is off the path");
      }
      earliest = std::min(earliest, position[y]);
    }
  }
  result.descendant_set = VertexSet(members);
  if (earliest == n) throw VerificationError("U has no out-neighbour on the path");
  const Vertex target = path[earliest];
  result.closing_vertex = target;

  // Shortest route inside U from the selected neighbours of the tip to some
  // vertex with an arc back to `target`.
  std::vector<Vertex> parent(n, static_cast<Vertex>(-1));
  std::vector<bool> seen(n, false);
  std::vector<Vertex> queue;
  for (Vertex s : result.selected) {
    seen[s] = true;
    parent[s] = s;
    queue.push_back(s);
  }
  std::optional<Vertex> exit;
  for (std::size_t i = 0; i < queue.size() && !exit; ++i) {
    const Vertex x = queue[i];
    if (d.has_arc(x, target)) {
      exit = x;
      break;
    }
    for (Vertex y : d.out(x)) {
      if (in_u[y] && !seen[y]) {
        seen[y] = true;
        parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  if (!exit) throw VerificationError("no route through U back to the path");
  std::vector<Vertex> tail;
  for (Vertex x = *exit;; x = parent[x]) {
    tail.push_back(x);
    if (parent[x] == x) break;
  }
  std::reverse(tail.begin(), tail.end());

  result.cycle.vertices.assign(path.begin() + static_cast<long>(earliest), path.end());
  result.cycle.vertices.insert(result.cycle.vertices.end(), tail.begin(), tail.end());
  result.cycle = canonical(std::move(result.cycle));
  if (!is_valid_cycle(d, result.cycle)) throw VerificationError("assembled cycle is invalid");

  if (alpha) {
    result.guarantee = *alpha * Ratio(static_cast<std::int64_t>(n), 3);
    if (Ratio(static_cast<std::int64_t>(result.cycle.length())) < *result.guarantee) {
      throw VerificationError("cycle of length " + std::to_string(result.cycle.length()) +
                              " is below the alpha*n/3 guarantee");
    }
  }
  return result;
}

std::size_t sqrt_third_floor(std::size_t n) {
  std::size_t k = 0;
  while (9 * (k + 1) * (k + 1) <= n) ++k;
  return k;
}

LongPathResult long_path(const Digraph& d, bool certified_transitive) {
  const std::size_t n = d.vertex_count();
  if (n < 2) throw InvalidInput("long_path needs at least 2 vertices");
  const auto ends = diameter_pair(d);
  if (!ends) throw InvalidInput("digraph is not strongly connected");

  LongPathResult result;
  result.floor_bound = sqrt_third_floor(n);
  const DirectedPath geodesic = *shortest_path(d, ends->first, ends->second);
  result.diameter = geodesic.length();

  std::optional<Ratio> alpha;
  if (certified_transitive) alpha = Ratio(1, 3 * static_cast<std::int64_t>(result.diameter));
  const auto search = dfs_long_cycle(d, alpha);
  result.cycle_length = search.cycle.length();

  if (geodesic.length() >= search.cycle.length() - 1) {
    result.path = geodesic;
    result.from_diameter = true;
  } else {
    result.path = DirectedPath{search.cycle.vertices};
  }
  if (!is_valid_path(d, result.path)) throw VerificationError("long_path result is invalid");
  if (certified_transitive && result.path.length() < result.floor_bound) {
    throw VerificationError("path of length " + std::to_string(result.path.length()) +
                            " is below floor(sqrt(n)/3) = " + std::to_string(result.floor_bound));
  }
  return result;
}

}  // namespace vtc
