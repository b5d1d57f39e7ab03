#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"
#include "vtc/error.hpp"
#include "vtc/number_gap.hpp"

using namespace vtc;

TEST(NumberGap, PrimesMatchTrialDivision) {
  std::vector<std::uint64_t> expected;
  for (std::uint64_t k = 0; k < 2000; ++k) {
    if (oracle::trial_prime(k)) expected.push_back(k);
  }
  EXPECT_EQ(primes_below(2000), expected);
  for (std::uint64_t k = 0; k < 5000; ++k) EXPECT_EQ(is_prime(k), oracle::trial_prime(k)) << k;
}

TEST(NumberGap, MillerRabinLargeValues) {
  EXPECT_TRUE(is_prime(2305843009213693951ULL));   // 2^61 - 1
  EXPECT_TRUE(is_prime(18446744073709551557ULL));  // largest 64-bit prime
  EXPECT_FALSE(is_prime(3215031751ULL));           // strong pseudoprime to 2, 3, 5, 7
  EXPECT_FALSE(is_prime(4294967297ULL));           // 641 * 6700417
}

TEST(NumberGap, GcdMatchesEuclid) {
  for (std::uint64_t a = 1; a < 60; ++a) {
    for (std::uint64_t b = 1; b < 60; ++b) EXPECT_EQ(vtc::gcd(a, b), oracle::euclid(a, b));
  }
}

TEST(NumberGap, TrotterErdosCondition) {
  const auto r = trotter_erdos_necessary(6, 9);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.d, 3u);
  ASSERT_TRUE(r.split.has_value());
  EXPECT_EQ(r.split->d1, 1u);
  EXPECT_FALSE(trotter_erdos_necessary(2, 3).holds);
  EXPECT_FALSE(trotter_erdos_necessary(880, 8736).holds);
  EXPECT_THROW(trotter_erdos_necessary(1, 5), InvalidInput);
}

TEST(NumberGap, DivisibilityBound) {
  EXPECT_EQ(divisibility_gap_bound(880, 8736), 16u);
  EXPECT_EQ(divisibility_gap_bound(2, 3), 0u);
  EXPECT_EQ(divisibility_gap_bound(6, 9), 0u);
}

TEST(NumberGap, WitnessAt16) {
  const auto w = lemma34_construct(5, 11);
  EXPECT_EQ(w.d, 16u);
  EXPECT_EQ(w.n1, 880);
  EXPECT_EQ(w.n2, 8736);
  EXPECT_EQ(w.n, 7687680);
  EXPECT_TRUE(w.certificate.valid);
  ASSERT_EQ(w.certificate.splits.size(), 15u);
  for (const auto& s : w.certificate.splits) {
    EXPECT_EQ(s.d1 + s.d2, 16u);
    const bool blocked = oracle::euclid(880, s.d1) > 1 || oracle::euclid(8736, s.d2) > 1;
    EXPECT_TRUE(blocked) << s.d1;
  }
  EXPECT_EQ(oracle::euclid(880, 8736), 16u);
  EXPECT_NEAR(w.ln_n, 15.855, 0.001);
  EXPECT_GE(w.ratio, 1.0);
}

TEST(NumberGap, CertificateRejectsBadWitness) {
  const auto c = prime_partitionable_check(16, 880, 8737);
  EXPECT_FALSE(c.valid);
  EXPECT_FALSE(c.reason.empty());
  EXPECT_THROW(prime_partitionable_check(1, 2, 2), InvalidInput);
}

TEST(NumberGap, PartitionSearch) {
  const auto hits = search_prime_partitionable(20);
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(hits[0].d, 16u);
  EXPECT_EQ(hits[0].mask, 20u);
  EXPECT_TRUE(prime_partitionable_check(16, hits[0].certificate.n1, hits[0].certificate.n2).valid);
  EXPECT_THROW(search_prime_partitionable(41), InvalidInput);
}

TEST(NumberGap, MotohashiPairs) {
  const auto pairs = motohashi_pairs(100);
  bool found = false;
  for (const auto& pq : pairs) {
    EXPECT_TRUE(oracle::trial_prime(pq.q));
    EXPECT_EQ(pq.q % pq.p, 1u);
    found = found || (pq.p == 5 && pq.q == 11);
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(motohashi_pairs(100, 1).size(), motohashi_pairs(100, 8).size());
}

TEST(NumberGap, SizeGuardAndReport) {
  EXPECT_TRUE(size_guard(5, 11));
  EXPECT_FALSE(size_guard(2, 3));
  EXPECT_THROW(lemma34_construct(2, 3), InvalidInput);
  const auto rows = theorem11_report(100);
  ASSERT_FALSE(rows.empty());
  EXPECT_EQ(rows.front().p, 5u);
  std::ostringstream out;
  write_theorem11_csv(out, rows);
  EXPECT_EQ(out.str().rfind("p,q,d,n1,n2,n,ln_n,ratio\n5,11,16,880,8736,7687680,", 0), 0u);
}
