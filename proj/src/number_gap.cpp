#include "vtc/number_gap.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>

#include "vtc/error.hpp"
#include "vtc/parallel.hpp"

namespace vtc {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  for (; e; e >>= 1) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
  }
  return r;
}

// q^25 < p^41, i.e. q < p^(41/25).
bool below_theta(std::uint64_t p, std::uint64_t q) {
  return boost::multiprecision::pow(BigInt(q), 25) < boost::multiprecision::pow(BigInt(p), 41);
}

}  // namespace

std::vector<std::uint64_t> primes_below(std::uint64_t x) {
  std::vector<std::uint64_t> primes;
  if (x < 3) return primes;
  std::vector<bool> composite(x, false);
  for (std::uint64_t i = 2; i < x; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j < x; j += i) composite[j] = true;
  }
  return primes;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t b : kBases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t odd = n - 1;
  int twos = 0;
  while ((odd & 1) == 0) {
    odd >>= 1;
    ++twos;
  }
  for (std::uint64_t b : kBases) {
    std::uint64_t x = pow_mod(b, odd, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < twos && witness; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) witness = false;
    }
    if (witness) return false;
  }
  return true;
}

TrotterErdosResult trotter_erdos_necessary(std::uint64_t n1, std::uint64_t n2) {
  if (n1 < 2 || n2 < 2) throw InvalidInput("cycle lengths must be at least 2");
  TrotterErdosResult result;
  result.d = gcd(n1, n2);
  if (result.d < 2) return result;
  for (std::uint64_t d1 = 1; d1 < result.d; ++d1) {
    const std::uint64_t d2 = result.d - d1;
    if (gcd(n1, d1) == 1 && gcd(n2, d2) == 1) {
      result.holds = true;
      result.split = SplitCheck{d1, d2, 1, 1};
      break;
    }
  }
  return result;
}

std::uint64_t divisibility_gap_bound(std::uint64_t n1, std::uint64_t n2) {
  const auto te = trotter_erdos_necessary(n1, n2);
  return !te.holds && te.d >= 2 ? te.d : 0;
}

WitnessCertificate prime_partitionable_check(std::uint64_t d, const BigInt& n1, const BigInt& n2) {
  if (d < 2) throw InvalidInput("d must be at least 2");
  WitnessCertificate cert;
  cert.d = d;
  cert.n1 = n1;
  cert.n2 = n2;
  bool every_split = true;
  std::uint64_t first_bad = 0;
  for (std::uint64_t d1 = 1; d1 < d; ++d1) {
    SplitCheck s{d1, d - d1, boost::multiprecision::gcd(n1, BigInt(d1)),
                 boost::multiprecision::gcd(n2, BigInt(d - d1))};
    if (s.g1 < 2 && s.g2 < 2 && every_split) {
      every_split = false;
      first_bad = d1;
    }
    cert.splits.push_back(std::move(s));
  }
  const BigInt g = boost::multiprecision::gcd(n1, n2);
  if (g != d) {
    cert.reason = "gcd(n1, n2) = " + g.str() + " differs from d";
  } else if (!every_split) {
    cert.reason = "split (" + std::to_string(first_bad) + ", " + std::to_string(d - first_bad) +
                  ") is coprime on both sides";
  } else {
    cert.valid = true;
  }
  return cert;
}

std::vector<PartitionableHit> search_prime_partitionable(std::uint64_t d_max, unsigned threads) {
  if (d_max > kMaxPartitionSearch) {
    throw InvalidInput("prime-partitionable search is limited to d <= " +
                       std::to_string(kMaxPartitionSearch));
  }
  if (d_max < 2) return {};
  auto per_d = parallel_map(d_max - 1, threads, [](std::size_t i) -> std::optional<PartitionableHit> {
    const std::uint64_t d = i + 2;
    const auto primes = primes_below(d);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << primes.size()); ++mask) {
      BigInt n1 = d, n2 = d;
      for (std::size_t b = 0; b < primes.size(); ++b) {
        ((mask >> b) & 1 ? n1 : n2) *= primes[b];
      }
      auto cert = prime_partitionable_check(d, n1, n2);
      if (cert.valid) return PartitionableHit{d, mask, std::move(cert)};
    }
    return std::nullopt;
  });
  std::vector<PartitionableHit> hits;
  for (auto& h : per_d) {
    if (h) hits.push_back(std::move(*h));
  }
  return hits;
}

std::vector<MotohashiPair> motohashi_pairs(std::uint64_t p_max, unsigned threads) {
  if (p_max > kMaxMotohashiPrime) {
    throw InvalidInput("motohashi search is limited to p <= " + std::to_string(kMaxMotohashiPrime));
  }
  const auto primes = primes_below(p_max + 1);
  auto found = parallel_map(primes.size(), threads, [&](std::size_t i) -> std::optional<MotohashiPair> {
    const std::uint64_t p = primes[i];
    // Float screen with a margin; the exact comparison decides near the boundary.
    const double limit = 41.0 / 25.0 * std::log(static_cast<double>(p)) + 1e-9;
    for (std::uint64_t q = p + 1;; q += p) {
      if (std::log(static_cast<double>(q)) > limit && !below_theta(p, q)) return std::nullopt;
      if (is_prime(q)) {
        if (!below_theta(p, q)) return std::nullopt;
        return MotohashiPair{p, q, true};
      }
    }
  });
  std::vector<MotohashiPair> pairs;
  for (auto& f : found) {
    if (f) pairs.push_back(*f);
  }
  return pairs;
}

bool size_guard(std::uint64_t p, std::uint64_t q) { return p * p > p + q; }

WitnessConstruction lemma34_construct(std::uint64_t p, std::uint64_t q) {
  if (!is_prime(p) || !is_prime(q)) throw InvalidInput("p and q must be prime");
  if (q % p != 1) throw InvalidInput("q must be 1 mod p");
  if (!below_theta(p, q)) throw InvalidInput("q^25 < p^41 fails");
  if (!size_guard(p, q)) {
    throw InvalidInput("size guard p^2 > p + q fails for (" + std::to_string(p) + ", " +
                       std::to_string(q) + ")");
  }
  WitnessConstruction w;
  w.p = p;
  w.q = q;
  w.d = p + q;
  w.n1 = BigInt(w.d) * p * q;
  w.n2 = w.d;
  long double ln = 2.0L * std::log(static_cast<long double>(w.d)) +
                   std::log(static_cast<long double>(p)) + std::log(static_cast<long double>(q));
  for (std::uint64_t z : primes_below(w.d)) {
    if (z == p || z == q) continue;
    w.n2 *= z;
    ln += std::log(static_cast<long double>(z));
  }
  w.n = w.n1 * w.n2;
  w.certificate = prime_partitionable_check(w.d, w.n1, w.n2);
  if (!w.certificate.valid) {
    throw VerificationError("certificate for d = " + std::to_string(w.d) +
                            " is invalid: " + w.certificate.reason);
  }
  w.ln_n = static_cast<double>(ln);
  w.ratio = static_cast<double>(static_cast<long double>(w.d) / ln);
  w.exp_excess = static_cast<double>(std::exp(static_cast<long double>(w.d) - ln));
  return w;
}

std::vector<WitnessConstruction> theorem11_report(std::uint64_t p_max, unsigned threads) {
  std::vector<MotohashiPair> admissible;
  for (const auto& pair : motohashi_pairs(p_max, threads)) {
    if (pair.bound_ok && size_guard(pair.p, pair.q)) admissible.push_back(pair);
  }
  auto rows = parallel_map(admissible.size(), threads, [&](std::size_t i) {
    return lemma34_construct(admissible[i].p, admissible[i].q);
  });
  for (const auto& row : rows) {
    if (10 * static_cast<long double>(row.d) < 9 * static_cast<long double>(row.ln_n)) {
      throw VerificationError("d / ln n < 0.9 for p = " + std::to_string(row.p));
    }
  }
  return rows;
}

std::string format_fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

void write_theorem11_csv(std::ostream& out, const std::vector<WitnessConstruction>& rows) {
  out << "p,q,d,n1,n2,n,ln_n,ratio\n";
  for (const auto& r : rows) {
    out << r.p << ',' << r.q << ',' << r.d << ',' << r.n1 << ',' << r.n2 << ',' << r.n << ','
        << format_fixed(r.ln_n, 6) << ',' << format_fixed(r.ratio, 6) << '\n';
  }
}

}  // namespace vtc
