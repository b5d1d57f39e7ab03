#include <gtest/gtest.h>

#include <sstream>

#include "vtc/constructions.hpp"
#include "vtc/error.hpp"
#include "vtc/graph_io.hpp"

using namespace vtc;

namespace {

Digraph from(std::size_t n, std::vector<Arc> arcs) { return Digraph::build(n, arcs); }

}  // namespace

TEST(Digraph, RejectsSelfLoopsAndOutOfRange) {
  EXPECT_THROW(from(3, {{0, 0}}), InvalidInput);
  EXPECT_THROW(from(3, {{0, 3}}), InvalidInput);
}

TEST(Digraph, MergesDuplicateArcs) {
  const auto d = from(2, {{0, 1}, {0, 1}, {1, 0}});
  EXPECT_EQ(d.arc_count(), 2u);
  EXPECT_TRUE(d.has_arc(0, 1));
  EXPECT_TRUE(d.has_arc(1, 0));
}

TEST(Digraph, PathAndCycleValidation) {
  const auto c = directed_cycle(4);
  EXPECT_TRUE(is_valid_cycle(c, DirectedCycle{{0, 1, 2, 3}}));
  EXPECT_FALSE(is_valid_cycle(c, DirectedCycle{{0, 2, 1, 3}}));
  EXPECT_FALSE(is_valid_cycle(c, DirectedCycle{{0, 1, 2, 3, 0}}));
  EXPECT_TRUE(is_valid_path(c, DirectedPath{{2, 3, 0}}));
  EXPECT_FALSE(is_valid_path(c, DirectedPath{{2, 3, 2}}));
  EXPECT_EQ(canonical(DirectedCycle{{2, 3, 0, 1}}).vertices, (std::vector<Vertex>{0, 1, 2, 3}));
}

TEST(Digraph, DistancesOnDirectedCycle) {
  const auto c = directed_cycle(6);
  const auto dist = bfs_distances(c, 2);
  EXPECT_EQ(*dist[1], 5u);
  EXPECT_EQ(*dist[2], 0u);
  EXPECT_EQ(*directed_diameter(c), 5u);
  EXPECT_EQ(shortest_path(c, 4, 1)->vertices, (std::vector<Vertex>{4, 5, 0, 1}));
}

TEST(Digraph, DirectedPathIsNotStronglyConnected) {
  const auto p = directed_path(4);
  EXPECT_FALSE(is_strongly_connected(p));
  EXPECT_FALSE(directed_diameter(p).has_value());
  EXPECT_FALSE(bfs_distances(p, 3)[0].has_value());
}

TEST(Digraph, StrongTwoConnectivity) {
  EXPECT_FALSE(is_strongly_2_connected(directed_cycle(5)));
  EXPECT_TRUE(is_strongly_2_connected(complete_bidirected(4)));
  EXPECT_TRUE(is_strongly_2_connected(directed_cycle_product(3, 3)));
}

TEST(Digraph, CartesianProductLayout) {
  const auto d = cartesian_product(directed_cycle(2), directed_cycle(3));
  EXPECT_EQ(d.vertex_count(), 6u);
  EXPECT_EQ(d.arc_count(), 12u);
  EXPECT_TRUE(d.has_arc(1 * 3 + 2, 0 * 3 + 2));  // (1,2) -> (0,2)
  EXPECT_TRUE(d.has_arc(1 * 3 + 2, 1 * 3 + 0));  // (1,2) -> (1,0)
  EXPECT_EQ(d, directed_cycle_product(2, 3));
  EXPECT_EQ(regularity(d), 2u);
}

TEST(Digraph, Neighbourhoods) {
  const auto c = directed_cycle(6);
  EXPECT_EQ(out_neighborhood(c, VertexSet({0, 1})).members(), (std::vector<Vertex>{2}));
  EXPECT_EQ(in_neighborhood(c, VertexSet({0, 1})).members(), (std::vector<Vertex>{5}));
}

TEST(Digraph, UnderlyingGraphCollapsesDigons) {
  const auto g = underlying_graph(complete_bidirected(3));
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(*diameter(g), 1u);
  EXPECT_TRUE(is_connected(g));
}

TEST(Digraph, InducedSubdigraphRelabels) {
  const auto d = induced_subdigraph(directed_cycle(5), VertexSet({1, 2, 3}));
  EXPECT_EQ(d.vertex_count(), 3u);
  EXPECT_EQ(d.arcs(), (std::vector<Arc>{{0, 1}, {1, 2}}));
}

TEST(GraphIo, RoundTrip) {
  const auto d = directed_cycle_product(2, 3);
  std::istringstream in("# comment\n" + to_edge_list(d));
  EXPECT_EQ(read_edge_list(in), d);
}

TEST(GraphIo, ReportsLineNumbers) {
  std::istringstream in("3 2\n0 1\n1 x\n");
  try {
    read_edge_list(in);
    FAIL() << "expected InvalidInput";
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(GraphIo, DotCollapsesDigons) {
  const std::string dot = to_dot(complete_bidirected(2), true);
  EXPECT_NE(dot.find("dir=both"), std::string::npos);
}
