#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace vtc {

using BigInt = boost::multiprecision::cpp_int;

/// Primes p < x, ascending.
std::vector<std::uint64_t> primes_below(std::uint64_t x);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// Deterministic Miller-Rabin over all 64-bit inputs.
bool is_prime(std::uint64_t n);

struct SplitCheck {
  std::uint64_t d1 = 0, d2 = 0;
  BigInt g1, g2;  // gcd(n1, d1), gcd(n2, d2)
};

struct TrotterErdosResult {
  bool holds = false;
  std::uint64_t d = 0;  // gcd(n1, n2)
  std::optional<SplitCheck> split;  // smallest d1 with both gcds equal to 1
};

/// gcd(n1, n2) = d >= 2 and some d1 + d2 = d has gcd(n1, d1) = gcd(n2, d2) = 1.
/// Throws InvalidInput unless n1, n2 >= 2.
TrotterErdosResult trotter_erdos_necessary(std::uint64_t n1, std::uint64_t n2);

/// gcd(n1, n2) when the condition above fails and the gcd is at least 2; else 0.
std::uint64_t divisibility_gap_bound(std::uint64_t n1, std::uint64_t n2);

struct WitnessCertificate {
  std::uint64_t d = 0;
  BigInt n1, n2;
  std::vector<SplitCheck> splits;  // d1 = 1 .. d-1
  bool valid = false;
  std::string reason;  // why the certificate is invalid
};

/// Evaluates all d - 1 splits. Throws InvalidInput for d < 2.
WitnessCertificate prime_partitionable_check(std::uint64_t d, const BigInt& n1, const BigInt& n2);

struct PartitionableHit {
  std::uint64_t d = 0;
  std::uint64_t mask = 0;  // bit i set: i-th prime below d goes to n1
  WitnessCertificate certificate;
};

inline constexpr std::uint64_t kMaxPartitionSearch = 40;

/// For each 2 <= d <= d_max, the first bipartition P1 + P2 of the primes
/// below d (binary counter, bit i = i-th prime in P1) for which
/// n_i = d * prod(P_i) is a witness. d_max <= 40.
std::vector<PartitionableHit> search_prime_partitionable(std::uint64_t d_max, unsigned threads = 1);

struct MotohashiPair {
  std::uint64_t p = 0, q = 0;
  bool bound_ok = false;  // q^25 < p^41
};

inline constexpr std::uint64_t kMaxMotohashiPrime = 1'000'000;

/// For every prime p <= p_max, the smallest prime q = 1 (mod p) with
/// q^25 < p^41, when one exists.
std::vector<MotohashiPair> motohashi_pairs(std::uint64_t p_max, unsigned threads = 1);

/// p^2 > p + q.
bool size_guard(std::uint64_t p, std::uint64_t q);

struct WitnessConstruction {
  std::uint64_t p = 0, q = 0, d = 0;
  BigInt n1, n2, n;
  WitnessCertificate certificate;
  double ln_n = 0;
  double ratio = 0;       // d / ln n
  double exp_excess = 0;  // e^d / n
};

/// d = p + q, n1 = d p q, n2 = d * product of the other primes below d.
/// Throws InvalidInput for a pair that is not admissible or fails the size
/// guard, VerificationError when the certificate does not validate.
WitnessConstruction lemma34_construct(std::uint64_t p, std::uint64_t q);

/// One row per admissible pair with p <= p_max. Throws VerificationError if
/// some d / ln n falls below 0.9.
std::vector<WitnessConstruction> theorem11_report(std::uint64_t p_max, unsigned threads = 1);

/// Columns p,q,d,n1,n2,n,ln_n,ratio.
void write_theorem11_csv(std::ostream& out, const std::vector<WitnessConstruction>& rows);

std::string format_fixed(double x, int digits);

}  // namespace vtc
