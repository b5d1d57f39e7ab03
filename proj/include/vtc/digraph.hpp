#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace vtc {

using Vertex = std::uint32_t;
using Arc = std::pair<Vertex, Vertex>;

/// Directed distance; std::nullopt stands for "unreachable" (infinity).
using Distance = std::optional<std::size_t>;

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> members);

  bool contains(Vertex v) const;
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<Vertex>& members() const { return members_; }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Finite simple digraph. Self-loops are forbidden, digons are allowed.
/// Immutable once built; adjacency lists are sorted ascending.
class Digraph {
 public:
  Digraph() = default;

  /// Builds from an arc list. Duplicate arcs are merged.
  /// Throws InvalidInput on out-of-range endpoints or self-loops.
  static Digraph build(std::size_t n, std::span<const Arc> arcs);

  std::size_t vertex_count() const { return out_.size(); }
  std::size_t arc_count() const { return arc_count_; }

  std::span<const Vertex> out(Vertex v) const { return out_[v]; }
  std::span<const Vertex> in(Vertex v) const { return in_[v]; }

  bool has_arc(Vertex u, Vertex v) const;

  /// All arcs in lexicographic order.
  std::vector<Arc> arcs() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::size_t arc_count_ = 0;
};

/// Simple undirected graph with sorted adjacency.
class Graph {
 public:
  Graph() = default;

  /// Throws InvalidInput on out-of-range endpoints or loops; merges duplicates.
  static Graph build(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

struct DirectedPath {
  std::vector<Vertex> vertices;
  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

struct DirectedCycle {
  std::vector<Vertex> vertices;
  std::size_t length() const { return vertices.size(); }
};

bool is_valid_path(const Digraph& d, const DirectedPath& p);
bool is_valid_cycle(const Digraph& d, const DirectedCycle& c);

/// Rotates so the smallest vertex comes first.
DirectedCycle canonical(DirectedCycle c);

Digraph build_digraph(std::size_t n, std::span<const Arc> arcs);

/// External out-neighbourhood: vertices outside U that are heads of arcs leaving U.
VertexSet out_neighborhood(const Digraph& d, const VertexSet& u);
VertexSet in_neighborhood(const Digraph& d, const VertexSet& u);

std::vector<Distance> bfs_distances(const Digraph& d, Vertex source);

/// Shortest path from source to target (lowest-id parents), if any.
std::optional<DirectedPath> shortest_path(const Digraph& d, Vertex source, Vertex target);

/// std::nullopt iff not strongly connected.
Distance directed_diameter(const Digraph& d);

/// Ordered pair (u, v) realising the directed diameter, lowest ids first.
std::optional<std::pair<Vertex, Vertex>> diameter_pair(const Digraph& d);

bool is_strongly_connected(const Digraph& d);

/// Strongly connected and still strongly connected after deleting any single vertex.
bool is_strongly_2_connected(const Digraph& d);

/// Common out-/in-degree when every vertex has equal out- and in-degree r.
std::optional<std::size_t> regularity(const Digraph& d);

/// Vertex (u1, u2) becomes u1 * |V(D2)| + u2.
Digraph cartesian_product(const Digraph& d1, const Digraph& d2);

Graph underlying_graph(const Digraph& d);

Digraph induced_subdigraph(const Digraph& d, const VertexSet& keep);

/// Vertices reachable from `source` avoiding `blocked` (source itself included).
/// `blocked[source]` must be false.
std::vector<Vertex> reachable_avoiding(const Digraph& d, Vertex source,
                                       const std::vector<bool>& blocked);

std::vector<Distance> bfs_distances(const Graph& g, Vertex source);
Distance diameter(const Graph& g);
bool is_connected(const Graph& g);

}  // namespace vtc
