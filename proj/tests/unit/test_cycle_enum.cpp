#include <gtest/gtest.h>

#include "oracles.hpp"
#include "vtc/constructions.hpp"
#include "vtc/cycle_enum.hpp"
#include "vtc/error.hpp"

using namespace vtc;

namespace {

std::vector<std::vector<Vertex>> sorted_cycles(const CycleEnumeration& e) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& c : e.cycles) out.push_back(c.vertices);
  std::sort(out.begin(), out.end());
  return out;
}

Digraph digon_chain(std::size_t digons) {
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < digons; ++i) {
    arcs.emplace_back(i, i + 1);
    arcs.emplace_back(i + 1, i);
  }
  return Digraph::build(digons + 1, arcs);
}

}  // namespace

TEST(CycleEnumeration, Examples) {
  EXPECT_EQ(enumerate_directed_cycles(directed_cycle(5)).cycles.size(), 1u);
  EXPECT_EQ(enumerate_directed_cycles(digon_chain(3)).cycles.size(), 3u);
  const auto e = enumerate_directed_cycles(directed_cycle_product(2, 3));
  EXPECT_TRUE(e.complete());
  EXPECT_EQ(e.cycles.size(), 11u);
}

TEST(CycleEnumeration, MatchesNaiveDfs) {
  for (const auto& d : {directed_cycle_product(2, 3), directed_cycle_product(3, 3),
                        directed_cycle_product(2, 5), toroidal_gadget(1), figure1_chain(4),
                        complete_bidirected(5)}) {
    const auto e = enumerate_directed_cycles(d);
    EXPECT_EQ(sorted_cycles(e), oracle::all_cycles(d));
    for (const auto& c : e.cycles) {
      EXPECT_TRUE(is_valid_cycle(d, c));
      EXPECT_EQ(c.vertices.front(), *std::min_element(c.vertices.begin(), c.vertices.end()));
    }
  }
}

TEST(CycleEnumeration, ThreadCountDoesNotChangeOutput) {
  const auto d = directed_cycle_product(3, 4);
  const auto one = enumerate_directed_cycles(d, {}, 1);
  const auto many = enumerate_directed_cycles(d, {}, 8);
  ASSERT_EQ(one.cycles.size(), many.cycles.size());
  for (std::size_t i = 0; i < one.cycles.size(); ++i) {
    EXPECT_EQ(one.cycles[i].vertices, many.cycles[i].vertices);
  }
}

TEST(CycleEnumeration, LengthCap) {
  const auto d = complete_bidirected(5);
  const auto e = enumerate_directed_cycles(d, EnumerationLimits{3, std::nullopt});
  std::size_t expected = 0;
  for (const auto& c : oracle::all_cycles(d)) expected += c.size() <= 3;
  EXPECT_EQ(e.cycles.size(), expected);
  EXPECT_FALSE(e.complete());
  EXPECT_FALSE(e.truncated);
}

TEST(CycleEnumeration, CountCapSetsTruncated) {
  const auto e = enumerate_directed_cycles(complete_bidirected(6), EnumerationLimits{std::nullopt, 10});
  EXPECT_TRUE(e.truncated);
  EXPECT_EQ(e.cycles.size(), 10u);
  EXPECT_FALSE(e.complete());
}

TEST(CycleEnumeration, LargeHostsNeedACountCap) {
  EXPECT_THROW(enumerate_directed_cycles(directed_cycle(25), EnumerationLimits{std::nullopt, std::nullopt}),
               InvalidInput);
  EXPECT_EQ(enumerate_directed_cycles(directed_cycle(25), EnumerationLimits{std::nullopt, 100})
                .cycles.size(),
            1u);
}
