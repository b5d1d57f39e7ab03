#include <gtest/gtest.h>

#include "vtc/error.hpp"
#include "vtc/induced_cycle.hpp"

using namespace vtc;

namespace {

Graph cycle_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::build(n, e);
}

AutomorphismFamily rotations(std::size_t n) {
  AutomorphismFamily fam;
  for (Vertex r = 0; r < n; ++r) {
    Permutation p(n);
    for (Vertex i = 0; i < n; ++i) p[i] = (i + r) % n;
    fam.permutations.push_back(p);
  }
  return fam;
}

// C_k x K_2 with (i, b) at 2i + b.
Graph prism(std::size_t k) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < k; ++i) {
    const Vertex j = (i + 1) % k;
    e.emplace_back(2 * i, 2 * j);
    e.emplace_back(2 * i + 1, 2 * j + 1);
    e.emplace_back(2 * i, 2 * i + 1);
  }
  return Graph::build(2 * k, e);
}

AutomorphismFamily prism_symmetries(std::size_t k) {
  AutomorphismFamily fam;
  for (Vertex r = 0; r < k; ++r) {
    for (Vertex flip = 0; flip < 2; ++flip) {
      Permutation p(2 * k);
      for (Vertex i = 0; i < k; ++i) {
        for (Vertex b = 0; b < 2; ++b) p[2 * i + b] = 2 * ((i + r) % k) + (b ^ flip);
      }
      fam.permutations.push_back(p);
    }
  }
  return fam;
}

}  // namespace

TEST(InducedCycle, LongCycleByConstruction) {
  const auto g = cycle_graph(50);
  const auto r = induced_cycle_via_symmetry(g, rotations(50));
  EXPECT_EQ(r.diameter, 25u);
  EXPECT_EQ(r.floor, 8u);
  EXPECT_TRUE(r.by_construction) << r.failed_step;
  ASSERT_TRUE(r.cycle.has_value());
  EXPECT_EQ(r.cycle->size(), 50u);
  EXPECT_TRUE(is_induced_cycle(g, *r.cycle));
}

TEST(InducedCycle, PrismMeetsFloor) {
  const auto g = prism(40);
  const auto fam = prism_symmetries(40);
  for (const auto& p : fam.permutations) ASSERT_TRUE(is_automorphism(g, p));
  const auto r = induced_cycle_via_symmetry(g, fam);
  EXPECT_EQ(r.diameter, 21u);
  ASSERT_TRUE(r.cycle.has_value()) << r.failed_step;
  EXPECT_TRUE(is_induced_cycle(g, *r.cycle));
  EXPECT_GE(r.cycle->size() + 17, r.diameter);
}

TEST(InducedCycle, RejectsSmallDiameter) {
  EXPECT_THROW(induced_cycle_via_symmetry(cycle_graph(7), rotations(7)), InvalidInput);
}

TEST(InducedCycle, RejectsFamilyWithoutNearTransitivity) {
  AutomorphismFamily identity;
  identity.permutations.push_back(rotations(50).permutations[0]);
  EXPECT_THROW(induced_cycle_via_symmetry(cycle_graph(50), identity), InvalidInput);
}

TEST(InducedCycle, RejectsDisconnected) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i + 1 < 30; ++i) e.emplace_back(i, i + 1);
  const auto g = Graph::build(31, e);
  Permutation id(31);
  for (Vertex i = 0; i < 31; ++i) id[i] = i;
  EXPECT_THROW(induced_cycle_via_symmetry(g, AutomorphismFamily{{id}}), InvalidInput);
}
