#include "vtc/digraph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "vtc/error.hpp"

namespace vtc {

namespace {

void sort_unique(std::vector<Vertex>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::string arc_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  sort_unique(members_);
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

Digraph Digraph::build(std::size_t n, std::span<const Arc> arcs) {
  Digraph d;
  d.out_.resize(n);
  d.in_.resize(n);
  for (const auto& [u, v] : arcs) {
    if (u >= n || v >= n) {
      throw InvalidInput("arc " + arc_text(u, v) + " has an endpoint outside 0.." +
                         std::to_string(n));
    }
    if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
    d.out_[u].push_back(v);
    d.in_[v].push_back(u);
  }
  for (std::size_t v = 0; v < n; ++v) {
    sort_unique(d.out_[v]);
    sort_unique(d.in_[v]);
    d.arc_count_ += d.out_[v].size();
  }
  return d;
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  if (u >= out_.size()) return false;
  return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count_);
  for (Vertex u = 0; u < out_.size(); ++u) {
    for (Vertex v : out_[u]) result.emplace_back(u, v);
  }
  return result;
}

Graph Graph::build(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g;
  g.adj_.resize(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InvalidInput("edge " + arc_text(u, v) + " has an endpoint out of range");
    }
    if (u == v) throw InvalidInput("loop at vertex " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& a : g.adj_) {
    sort_unique(a);
    g.edge_count_ += a.size();
  }
  g.edge_count_ /= 2;
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= adj_.size()) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> result;
  for (Vertex u = 0; u < adj_.size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) result.emplace_back(u, v);
    }
  }
  return result;
}

bool is_valid_path(const Digraph& d, const DirectedPath& p) {
  const auto& vs = p.vertices;
  if (vs.empty()) return false;
  std::vector<bool> seen(d.vertex_count(), false);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] >= d.vertex_count() || seen[vs[i]]) return false;
    seen[vs[i]] = true;
    if (i > 0 && !d.has_arc(vs[i - 1], vs[i])) return false;
  }
  return true;
}

bool is_valid_cycle(const Digraph& d, const DirectedCycle& c) {
  if (c.vertices.size() < 2) return false;
  if (!is_valid_path(d, DirectedPath{c.vertices})) return false;
  return d.has_arc(c.vertices.back(), c.vertices.front());
}

DirectedCycle canonical(DirectedCycle c) {
  auto it = std::min_element(c.vertices.begin(), c.vertices.end());
  std::rotate(c.vertices.begin(), it, c.vertices.end());
  return c;
}

Digraph build_digraph(std::size_t n, std::span<const Arc> arcs) {
  return Digraph::build(n, arcs);
}

namespace {

template <class Next>
VertexSet external_neighborhood(const Digraph& d, const VertexSet& u, Next next) {
  std::vector<bool> in_u(d.vertex_count(), false);
  for (Vertex v : u) {
    if (v >= d.vertex_count()) {
      throw InvalidInput("vertex " + std::to_string(v) + " is not in the digraph");
    }
    in_u[v] = true;
  }
  std::vector<Vertex> result;
  for (Vertex v : u) {
    for (Vertex w : next(v)) {
      if (!in_u[w]) result.push_back(w);
    }
  }
  return VertexSet(std::move(result));
}

}  // namespace

VertexSet out_neighborhood(const Digraph& d, const VertexSet& u) {
  return external_neighborhood(d, u, [&](Vertex v) { return d.out(v); });
}

VertexSet in_neighborhood(const Digraph& d, const VertexSet& u) {
  return external_neighborhood(d, u, [&](Vertex v) { return d.in(v); });
}

namespace {

// BFS recording parents; parents follow the lowest-id-first discovery order.
std::vector<Distance> bfs_with_parents(const Digraph& d, Vertex source,
                                       std::vector<Vertex>* parent) {
  const std::size_t n = d.vertex_count();
  if (source >= n) throw InvalidInput("source vertex out of range");
  std::vector<Distance> dist(n);
  if (parent) parent->assign(n, source);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : d.out(v)) {
      if (dist[w]) continue;
      dist[w] = *dist[v] + 1;
      if (parent) (*parent)[w] = v;
      queue.push_back(w);
    }
  }
  return dist;
}

}  // namespace

std::vector<Distance> bfs_distances(const Digraph& d, Vertex source) {
  return bfs_with_parents(d, source, nullptr);
}

std::optional<DirectedPath> shortest_path(const Digraph& d, Vertex source, Vertex target) {
  std::vector<Vertex> parent;
  auto dist = bfs_with_parents(d, source, &parent);
  if (target >= d.vertex_count() || !dist[target]) return std::nullopt;
  DirectedPath p;
  for (Vertex v = target; v != source; v = parent[v]) p.vertices.push_back(v);
  p.vertices.push_back(source);
  std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

std::optional<std::pair<Vertex, Vertex>> diameter_pair(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  if (n == 0) return std::nullopt;
  std::pair<Vertex, Vertex> best{0, 0};
  std::size_t best_dist = 0;
  for (Vertex u = 0; u < n; ++u) {
    auto dist = bfs_distances(d, u);
    for (Vertex v = 0; v < n; ++v) {
      if (!dist[v]) return std::nullopt;
      if (*dist[v] > best_dist) {
        best_dist = *dist[v];
        best = {u, v};
      }
    }
  }
  return best;
}

Distance directed_diameter(const Digraph& d) {
  auto pair = diameter_pair(d);
  if (!pair) return std::nullopt;
  return *bfs_distances(d, pair->first)[pair->second];
}

bool is_strongly_connected(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  if (n == 0) return true;
  std::vector<bool> none(n, false);
  if (reachable_avoiding(d, 0, none).size() != n) return false;
  // Reachability in the reverse direction.
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : d.in(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

bool is_strongly_2_connected(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  if (n < 3 || !is_strongly_connected(d)) return false;
  for (Vertex removed = 0; removed < n; ++removed) {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v) {
      if (v != removed) keep.push_back(v);
    }
    if (!is_strongly_connected(induced_subdigraph(d, VertexSet(std::move(keep))))) {
      return false;
    }
  }
  return true;
}

std::optional<std::size_t> regularity(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  if (n == 0) return std::nullopt;
  const std::size_t r = d.out(0).size();
  for (Vertex v = 0; v < n; ++v) {
    if (d.out(v).size() != r || d.in(v).size() != r) return std::nullopt;
  }
  return r;
}

Digraph cartesian_product(const Digraph& d1, const Digraph& d2) {
  const std::size_t n1 = d1.vertex_count();
  const std::size_t n2 = d2.vertex_count();
  if (n1 == 0 || n2 == 0) throw InvalidInput("cartesian product of an empty digraph");
  auto id = [n2](std::size_t a, std::size_t b) { return static_cast<Vertex>(a * n2 + b); };
  std::vector<Arc> arcs;
  arcs.reserve(n1 * d2.arc_count() + n2 * d1.arc_count());
  for (Vertex a = 0; a < n1; ++a) {
    for (Vertex b = 0; b < n2; ++b) {
      for (Vertex a2 : d1.out(a)) arcs.emplace_back(id(a, b), id(a2, b));
      for (Vertex b2 : d2.out(b)) arcs.emplace_back(id(a, b), id(a, b2));
    }
  }
  return Digraph::build(n1 * n2, arcs);
}

Graph underlying_graph(const Digraph& d) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& [u, v] : d.arcs()) edges.emplace_back(std::min(u, v), std::max(u, v));
  return Graph::build(d.vertex_count(), edges);
}

Digraph induced_subdigraph(const Digraph& d, const VertexSet& keep) {
  std::vector<Vertex> index(d.vertex_count(), static_cast<Vertex>(-1));
  Vertex next = 0;
  for (Vertex v : keep) {
    if (v >= d.vertex_count()) throw InvalidInput("vertex out of range");
    index[v] = next++;
  }
  std::vector<Arc> arcs;
  for (Vertex v : keep) {
    for (Vertex w : d.out(v)) {
      if (index[w] != static_cast<Vertex>(-1)) arcs.emplace_back(index[v], index[w]);
    }
  }
  return Digraph::build(keep.size(), arcs);
}

std::vector<Vertex> reachable_avoiding(const Digraph& d, Vertex source,
                                       const std::vector<bool>& blocked) {
  std::vector<bool> seen(blocked);
  std::vector<Vertex> order{source};
  seen[source] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : d.out(order[i])) {
      if (!seen[w]) {
        seen[w] = true;
        order.push_back(w);
      }
    }
  }
  return order;
}

std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
  const std::size_t n = g.vertex_count();
  if (source >= n) throw InvalidInput("source vertex out of range");
  std::vector<Distance> dist(n);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (!dist[w]) {
        dist[w] = *dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

Distance diameter(const Graph& g) {
  std::size_t best = 0;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (const auto& dv : bfs_distances(g, u)) {
      if (!dv) return std::nullopt;
      best = std::max(best, *dv);
    }
  }
  return best;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::all_of(dist.begin(), dist.end(), [](const Distance& x) { return x.has_value(); });
}

}  // namespace vtc
