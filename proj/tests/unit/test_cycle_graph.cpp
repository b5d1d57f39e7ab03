#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "vtc/automorphism.hpp"
#include "vtc/constructions.hpp"
#include "vtc/cycle_graph.hpp"
#include "vtc/error.hpp"

using namespace vtc;

namespace {

CycleGraph cycle_graph_of(const Digraph& d) { return build_cycle_graph(enumerate_directed_cycles(d)); }

// Two directed triangles {0,1,2} and {3,4,5} joined by nothing.
Digraph two_triangles() {
  const std::vector<Arc> arcs{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
  return Digraph::build(6, arcs);
}

// Ring of four directed triangles; triangle i is s_i -> a_i -> s_{i+1} -> s_i
// with s_i = i and a_i = 4 + i.
Digraph triangle_ring() {
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < 4; ++i) {
    const Vertex s = i, a = 4 + i, t = (i + 1) % 4;
    arcs.insert(arcs.end(), {{s, a}, {a, t}, {t, s}});
  }
  return Digraph::build(8, arcs);
}

bool shares_vertex(const DirectedCycle& a, const DirectedCycle& b) {
  const std::set<Vertex> sa(a.vertices.begin(), a.vertices.end());
  for (Vertex v : b.vertices) {
    if (sa.count(v)) return true;
  }
  return false;
}

}  // namespace

TEST(CycleGraph, SingleCycle) {
  const auto cg = cycle_graph_of(directed_cycle(5));
  EXPECT_EQ(cg.size(), 1u);
  EXPECT_EQ(cg.graph.edge_count(), 0u);
  EXPECT_TRUE(cg.complete());
}

TEST(CycleGraph, DisjointTrianglesAreNotAdjacent) {
  const auto cg = cycle_graph_of(two_triangles());
  EXPECT_EQ(cg.size(), 2u);
  EXPECT_EQ(cg.graph.edge_count(), 0u);
  EXPECT_FALSE(is_connected(cg.graph));
  EXPECT_EQ(cg.membership[4], (std::vector<Vertex>{1}));
}

TEST(CycleGraph, EdgesMatchDirectIntersection) {
  const auto cg = cycle_graph_of(directed_cycle_product(3, 3));
  for (Vertex i = 0; i < cg.size(); ++i) {
    for (Vertex j = i + 1; j < cg.size(); ++j) {
      EXPECT_EQ(cg.graph.has_edge(i, j), shares_vertex(cg.cycles[i], cg.cycles[j]));
    }
  }
}

TEST(CycleGraph, StitchRingOfTriangles) {
  const auto d = triangle_ring();
  const auto cg = cycle_graph_of(d);
  const auto induced = enumerate_induced_cycles(cg.graph, 4);
  ASSERT_TRUE(induced.complete);
  ASSERT_FALSE(induced.cycles.empty());
  for (const auto& seq : induced.cycles) {
    const auto c = stitch_directed_cycle(d, cg, seq);
    EXPECT_TRUE(is_valid_cycle(d, c));
    EXPECT_GE(c.length(), seq.size());
  }
}

TEST(CycleGraph, StitchRejectsShortOrChordedInput) {
  const auto d = triangle_ring();
  const auto cg = cycle_graph_of(d);
  ASSERT_GE(cg.size(), 3u);
  std::vector<Vertex> triangle;
  for (Vertex i = 0; i < cg.size() && triangle.size() < 3; ++i) triangle.push_back(i);
  EXPECT_THROW(stitch_directed_cycle(d, cg, triangle), InvalidInput);
}

TEST(CycleGraph, DiameterCheck) {
  const auto r = cycle_graph_diameter_check(directed_cycle_product(2, 3), true);
  EXPECT_EQ(r.verdict, Verdict::yes);
  EXPECT_EQ(r.cycle_count, 11u);
  EXPECT_EQ(r.cycle_graph_diameter, 2u);
  EXPECT_EQ(r.circumference, 5u);
  EXPECT_TRUE(r.holds);
  const auto capped = cycle_graph_diameter_check(directed_cycle_product(2, 3), true,
                                                 EnumerationLimits{std::nullopt, 3});
  EXPECT_EQ(capped.verdict, Verdict::unknown);
}

TEST(CycleGraph, LiftedTranslationsAreAutomorphisms) {
  const auto spec = cycle_product_spec(2, 3);
  const auto d = cayley_digraph(spec);
  const auto cg = cycle_graph_of(d);
  const auto lifted = lift_automorphisms(d, left_translations(spec), cg);
  EXPECT_EQ(lifted.size(), 6u);
  for (const auto& p : lifted.permutations) EXPECT_TRUE(is_automorphism(cg.graph, p));
  EXPECT_TRUE(is_nearly_transitive(cg.graph, lifted));
}

TEST(CycleGraph, NearTransitivityNeedsWitnesses) {
  const std::vector<std::pair<Vertex, Vertex>> none;
  const auto g = Graph::build(2, none);
  EXPECT_FALSE(is_nearly_transitive(g, AutomorphismFamily{{{0, 1}}}));
  EXPECT_TRUE(is_nearly_transitive(g, AutomorphismFamily{{{0, 1}, {1, 0}}}));
}

TEST(CycleGraph, WriteFormat) {
  std::ostringstream out;
  write_cycle_graph(out, cycle_graph_of(two_triangles()));
  EXPECT_EQ(out.str().rfind("cycles 2 truncated 0\n", 0), 0u) << out.str();
}
