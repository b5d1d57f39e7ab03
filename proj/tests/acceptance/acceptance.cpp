// Acceptance run: one PASS/FAIL line per criterion. Library results are
// re-checked against the slow oracles in tests/support wherever that is
// affordable. Every criterion is run three times (threads 1, 1, 8) and the
// serialized reports are compared for criterion 11.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "vtc/automorphism.hpp"
#include "vtc/constructions.hpp"
#include "vtc/cycle_graph.hpp"
#include "vtc/error.hpp"
#include "vtc/report.hpp"

using namespace vtc;

namespace {

// Pinned tolerances.
constexpr double kMinRatioAt16 = 1.0;
constexpr double kLnNominal = 15.86;
constexpr double kLnTolerance = 0.01;

struct Outcome {
  bool pass = true;
  std::string detail;
  Json report = Json::object();

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

struct Criterion {
  int id;
  std::string name;
  double seconds_allowed;
  std::function<Outcome(unsigned)> run;
};

bool cycle_ok(const std::vector<std::vector<bool>>& m, const std::vector<Vertex>& c) {
  if (c.empty()) return false;
  std::vector<bool> seen(m.size(), false);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= m.size() || seen[c[i]]) return false;
    seen[c[i]] = true;
    if (!m[c[i]][c[(i + 1) % c.size()]]) return false;
  }
  return true;
}

bool path_ok(const std::vector<std::vector<bool>>& m, const std::vector<Vertex>& p) {
  std::vector<bool> seen(m.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] >= m.size() || seen[p[i]]) return false;
    seen[p[i]] = true;
    if (i + 1 < p.size() && !m[p[i]][p[i + 1]]) return false;
  }
  return true;
}

// Hamiltonicity condition for C_n1 x C_n2, from scratch.
bool condition_oracle(std::uint64_t n1, std::uint64_t n2) {
  const std::uint64_t d = oracle::euclid(n1, n2);
  if (d < 2) return false;
  for (std::uint64_t d1 = 1; d1 < d; ++d1) {
    if (oracle::euclid(n1, d1) == 1 && oracle::euclid(n2, d - d1) == 1) return true;
  }
  return false;
}

bool splits_all_blocked(std::uint64_t d, std::uint64_t n1, std::uint64_t n2) {
  for (std::uint64_t d1 = 1; d1 < d; ++d1) {
    if (oracle::euclid(n1, d1) == 1 && oracle::euclid(n2, d - d1) == 1) return false;
  }
  return true;
}

std::uint64_t to_u64(const BigInt& x) { return x.convert_to<std::uint64_t>(); }

Outcome c1(unsigned) {
  Outcome o;
  const auto suite = verify_trotter_erdos(24);
  o.report = to_json(suite);
  o.require(suite.passed(), "suite reported a Hamilton cycle without the condition");
  std::size_t cases = 0;
  for (std::uint64_t n1 = 2; 2 * n1 <= 24; ++n1) {
    for (std::uint64_t n2 = 2; n1 * n2 <= 24; ++n2) {
      ++cases;
      const auto d = directed_cycle_product(n1, n2);
      const auto ham = brute_hamiltonian(d);
      o.require(ham.verdict != Verdict::unknown, "undecided Hamiltonicity");
      const bool has = ham.verdict == Verdict::yes;
      if (has) o.require(is_valid_cycle(d, *ham.cycle) && ham.cycle->length() == n1 * n2, "bad Hamilton cycle");
      o.require(!has || condition_oracle(n1, n2), "counterexample " + std::to_string(n1) + "x" + std::to_string(n2));
      o.require(trotter_erdos_necessary(n1, n2).holds == condition_oracle(n1, n2), "condition mismatch");
      if (n1 * n2 <= 12) o.require(has == (oracle::circumference(d) == n1 * n2), "oracle disagrees");
    }
  }
  o.require(suite.rows.size() == cases, "case count");
  o.detail = o.pass ? std::to_string(cases) + " products, 0 counterexamples" : o.detail;
  return o;
}

Outcome c2(unsigned threads) {
  Outcome o;
  const auto suite = verify_divisibility(20, threads);
  o.report = to_json(suite);
  o.require(suite.passed(), "suite failure");
  std::size_t cases = 0, cycles_checked = 0;
  for (std::uint64_t n1 = 2; 2 * n1 <= 20; ++n1) {
    for (std::uint64_t n2 = 2; n1 * n2 <= 20; ++n2) {
      ++cases;
      const auto d = directed_cycle_product(n1, n2);
      const std::uint64_t g = oracle::euclid(n1, n2);
      const auto all = oracle::all_cycles(d);
      const auto lib = enumerate_directed_cycles(d, {}, threads);
      o.require(lib.complete() && lib.cycles.size() == all.size(), "enumeration count mismatch");
      std::size_t circ = 0;
      for (const auto& c : all) {
        o.require(c.size() % g == 0, "length not divisible by gcd");
        circ = std::max(circ, c.size());
        ++cycles_checked;
      }
      if (g >= 2 && !condition_oracle(n1, n2)) o.require(n1 * n2 - circ >= g, "gap below gcd");
    }
  }
  o.require(suite.rows.size() == cases, "case count");
  if (o.pass) {
    o.detail = std::to_string(cases) + " products, " + std::to_string(cycles_checked) + " cycles";
  }
  return o;
}

Outcome c3(unsigned) {
  Outcome o;
  const auto w = lemma34_construct(5, 11);
  o.report = to_json(w);
  o.require(w.d == 16 && w.n1 == 880 && w.n2 == 8736, "wrong (d, n1, n2)");
  o.require(w.certificate.valid && w.certificate.splits.size() == 15, "certificate");
  o.require(splits_all_blocked(16, 880, 8736), "independent split check");
  o.require(oracle::euclid(880, 8736) == 16, "gcd");
  const double ln_n = std::log(880.0) + std::log(8736.0);
  o.require(std::fabs(ln_n - kLnNominal) <= kLnTolerance, "ln n");
  o.require(std::fabs(w.ln_n - ln_n) <= 1e-9, "library ln n");
  o.require(16.0 / ln_n >= kMinRatioAt16 && w.ratio >= kMinRatioAt16, "d / ln n below 1");
  if (o.pass) o.detail = "(16, 880, 8736), ln n = " + format_fixed(ln_n, 4) + ", d/ln n = " + format_fixed(16.0 / ln_n, 4);
  return o;
}

Outcome c4(unsigned threads) {
  Outcome o;
  const auto hits = search_prime_partitionable(20, threads);
  o.report = Json::array();
  for (const auto& h : hits) {
    o.report.push_back({{"d", h.d}, {"mask", h.mask}, {"certificate", to_json(h.certificate)}});
  }
  o.require(!hits.empty() && hits.front().d == 16, "smallest d is not 16");
  if (!hits.empty()) {
    const auto& c = hits.front().certificate;
    o.require(prime_partitionable_check(c.d, c.n1, c.n2).valid, "re-validation");
    o.require(oracle::euclid(to_u64(c.n1), to_u64(c.n2)) == c.d, "gcd");
    o.require(splits_all_blocked(c.d, to_u64(c.n1), to_u64(c.n2)), "independent split check");
    // Nothing below 16: for each d < 16, no bipartition of the primes below d
    // blocks every split.
    for (std::uint64_t d = 2; d < 16; ++d) {
      std::vector<std::uint64_t> primes;
      for (std::uint64_t k = 2; k < d; ++k) {
        if (oracle::trial_prime(k)) primes.push_back(k);
      }
      for (std::uint64_t mask = 0; mask < (1u << primes.size()); ++mask) {
        std::uint64_t n1 = d, n2 = d;
        for (std::size_t i = 0; i < primes.size(); ++i) (mask >> i & 1u ? n1 : n2) *= primes[i];
        o.require(!splits_all_blocked(d, n1, n2), "witness below 16 at d = " + std::to_string(d));
      }
    }
    if (o.pass) o.detail = "d = 16, n1 = " + c.n1.str() + ", n2 = " + c.n2.str();
  }
  return o;
}

Outcome c5(unsigned threads) {
  Outcome o;
  const auto corpus = small_cayley_corpus();
  const auto suite = verify_lemma21(corpus, threads);
  o.report = to_json(suite);
  o.require(corpus.size() >= 10, "corpus too small");
  o.require(suite.passed(), "alpha below 1/(3d)");
  for (const auto& h : corpus) {
    o.require(h.digraph.vertex_count() <= 18, "host too large");
    const auto [num, den] = oracle::expansion(h.digraph);
    const auto lib = expansion_exact(h.digraph, threads).alpha_lower;
    o.require(lib == Ratio(num, den), "expansion disagrees with oracle on " + h.name);
    const auto diam = static_cast<std::int64_t>(*directed_diameter(h.digraph));
    o.require(3 * diam * num >= den, "oracle alpha below bound on " + h.name);
  }
  if (o.pass) o.detail = std::to_string(corpus.size()) + " Cayley digraphs";
  return o;
}

Outcome c6(unsigned threads) {
  Outcome o;
  const auto corpus = small_cayley_corpus();
  const auto suite = verify_dfs_cycle(corpus, threads);
  o.report = to_json(suite);
  o.require(suite.passed(), "suite failure");
  for (const auto& h : corpus) {
    const auto m = oracle::matrix(h.digraph);
    const auto [num, den] = oracle::expansion(h.digraph);
    const auto n = static_cast<std::int64_t>(m.size());
    const std::int64_t floor = (num * n + 3 * den - 1) / (3 * den);
    try {
      const auto r = dfs_long_cycle(h.digraph, Ratio(num, den));
      o.require(cycle_ok(m, r.cycle.vertices), "invalid cycle on " + h.name);
      o.require(static_cast<std::int64_t>(r.cycle.length()) >= floor, "short cycle on " + h.name);
      const auto u = static_cast<std::int64_t>(r.descendant_set.size());
      o.require(3 * u >= n && 3 * u <= 2 * n, "|U| out of range on " + h.name);
      std::vector<bool> on_path(m.size(), false), in_u(m.size(), false);
      for (Vertex v : r.path.vertices) on_path[v] = true;
      for (Vertex v : r.descendant_set) in_u[v] = true;
      for (std::size_t a = 0; a < m.size(); ++a) {
        for (std::size_t b = 0; b < m.size(); ++b) {
          if (in_u[a] && !in_u[b] && m[a][b]) o.require(on_path[b], "N+(U) leaves P on " + h.name);
        }
      }
    } catch (const VerificationError& e) {
      o.require(false, std::string("assertion fired: ") + e.what());
    }
  }
  if (o.pass) o.detail = std::to_string(corpus.size()) + " hosts, no assertion fired";
  return o;
}

Outcome c7(unsigned) {
  Outcome o;
  const auto corpus = small_cayley_corpus();
  const auto suite = verify_long_path(corpus);
  o.report = to_json(suite);
  o.require(suite.passed(), "suite failure");
  for (const auto& h : corpus) {
    const std::size_t n = h.digraph.vertex_count();
    o.require(transitive_family(h.digraph).first == Verdict::yes, "not certified: " + h.name);
    std::size_t floor = 0;
    while (9 * (floor + 1) * (floor + 1) <= n) ++floor;
    const auto r = long_path(h.digraph, true);
    o.require(path_ok(oracle::matrix(h.digraph), r.path.vertices), "invalid path on " + h.name);
    o.require(r.path.length() >= floor, "short path on " + h.name);
  }
  if (o.pass) o.detail = std::to_string(corpus.size()) + " certified hosts";
  return o;
}

Outcome c8(unsigned threads) {
  Outcome o;
  const auto hosts = stitching_hosts();
  const auto suite = verify_lemma27(hosts, {}, threads);
  o.report = to_json(suite);
  o.require(suite.passed(), "suite failure");
  std::size_t stitched = 0;
  for (const auto& h : hosts) {
    o.require(h.digraph.vertex_count() <= 14, "host too large");
    const auto m = oracle::matrix(h.digraph);
    const auto cycles = enumerate_directed_cycles(h.digraph, {}, threads);
    o.require(cycles.cycles.size() == oracle::all_cycles(h.digraph).size(), "cycle count on " + h.name);
    const auto cg = build_cycle_graph(cycles);
    const auto induced = enumerate_induced_cycles(cg.graph, 4);
    o.require(induced.complete, "induced search incomplete on " + h.name);
    for (const auto& seq : induced.cycles) {
      try {
        const auto c = stitch_directed_cycle(h.digraph, cg, seq);
        o.require(cycle_ok(m, c.vertices) && c.length() >= seq.size(), "bad stitch on " + h.name);
        ++stitched;
      } catch (const std::exception& e) {
        o.require(false, h.name + ": " + e.what());
      }
    }
  }
  o.require(stitched > 0, "no induced cycles of length >= 4 found");
  if (o.pass) o.detail = std::to_string(stitched) + " induced cycles on " + std::to_string(hosts.size()) + " hosts";
  return o;
}

std::size_t disjoint_greedy_max(const std::vector<std::vector<Vertex>>& cycles, std::size_t i,
                                std::vector<bool>& used) {
  if (i == cycles.size()) return 0;
  std::size_t best = disjoint_greedy_max(cycles, i + 1, used);
  bool free = true;
  for (Vertex v : cycles[i]) free = free && !used[v];
  if (free) {
    for (Vertex v : cycles[i]) used[v] = true;
    best = std::max(best, 1 + disjoint_greedy_max(cycles, i + 1, used));
    for (Vertex v : cycles[i]) used[v] = false;
  }
  return best;
}

Outcome c9(unsigned) {
  Outcome o;
  const auto suite = verify_figure1(4, 2);
  o.report = to_json(suite);
  o.require(suite.passed(), "suite failure");
  for (std::size_t k = 1; k <= 4; ++k) {
    const auto d = figure1_chain(k);
    const auto m = oracle::matrix(d);
    for (std::size_t v = 0; v < m.size(); ++v) {
      std::size_t outd = 0, ind = 0;
      for (std::size_t w = 0; w < m.size(); ++w) {
        outd += m[v][w];
        ind += m[w][v];
      }
      o.require(outd == 2 && ind == 2, "not 2-regular");
    }
    o.require(is_strongly_2_connected(d), "not strongly 2-connected");
    const auto all = oracle::all_cycles(d);
    std::vector<std::vector<Vertex>> longest;
    for (const auto& c : all) {
      if (c.size() == 4) longest.push_back(c);
    }
    o.require(oracle::circumference(d) == 4, "circumference is not 4 at k = " + std::to_string(k));
    std::vector<bool> used(m.size(), false);
    o.require(disjoint_greedy_max(longest, 0, used) >= k / 2, "too few disjoint longest cycles");
  }
  for (std::size_t n = 1; n <= 2; ++n) {
    const auto d = toroidal_gadget(n);
    const auto ham = brute_hamiltonian(d);
    o.require(ham.verdict == Verdict::no, "toroidal gadget Hamiltonian or undecided");
    o.require(oracle::circumference(d) < d.vertex_count(), "oracle finds a Hamilton cycle");
  }
  if (o.pass) o.detail = "k = 1..4 chains, toroidal n = 1, 2";
  return o;
}

Outcome c10(unsigned threads) {
  Outcome o;
  o.report = Json::array();
  const std::vector<std::pair<std::string, CayleySpec>> hosts = {
      {"toroidal(1)", toroidal_gadget_spec(1)}, {"C3xC3", cycle_product_spec(3, 3)}};
  for (const auto& [name, spec] : hosts) {
    const auto d = cayley_digraph(spec);
    PipelineOptions options;
    options.threads = threads;
    const auto r = omega_n13_pipeline(d, left_translations(spec), options);
    o.report.push_back({{"host", name}, {"report", to_json(r)}});
    // Diameter by BFS over the oracle matrix.
    const auto m = oracle::matrix(d);
    std::uint64_t diam = 0;
    for (std::size_t s = 0; s < m.size(); ++s) {
      std::vector<std::int64_t> dist(m.size(), -1);
      std::vector<std::size_t> queue{s};
      dist[s] = 0;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (std::size_t w = 0; w < m.size(); ++w) {
          if (m[queue[i]][w] && dist[w] < 0) {
            dist[w] = dist[queue[i]] + 1;
            queue.push_back(w);
          }
        }
      }
      for (auto x : dist) diam = std::max<std::uint64_t>(diam, x);
    }
    const std::uint64_t n = m.size();
    o.require(r.diameter == diam, "diameter mismatch on " + name);
    o.require(r.small_diameter == (diam * diam * diam <= n * n), "branch decision on " + name);
    o.require(cycle_ok(m, r.cycle.vertices), "invalid cycle on " + name);
    if (o.pass) {
      o.detail += (o.detail.empty() ? "" : "; ") + name + ": " +
                  (r.small_diameter ? "expansion" : "cycle-graph") + " branch, |C| = " +
                  std::to_string(r.cycle.length());
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Hamilton cycle implies gcd/split condition", 120, c1},
      {2, "cycle lengths divisible by gcd", 120, c2},
      {3, "witness instance (5, 11)", 1, c3},
      {4, "prime-partitionable search", 60, c4},
      {5, "expansion bound", 600, c5},
      {6, "path-extension long cycle", 300, c6},
      {7, "long path", 60, c7},
      {8, "stitching", 300, c8},
      {9, "gadget family", 300, c9},
      {10, "pipeline", 60, c10},
  };

  bool all = true;
  bool deterministic = true;
  std::string nondeterministic;
  for (const auto& c : criteria) {
    Outcome first;
    double seconds = 0;
    std::string dumps[3];
    const unsigned threads[3] = {1, 1, 8};
    for (int run = 0; run < 3; ++run) {
      const auto start = std::chrono::steady_clock::now();
      Outcome o;
      try {
        o = c.run(threads[run]);
      } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("exception: ") + e.what();
      }
      const double elapsed =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      dumps[run] = o.report.dump();
      if (run == 0) {
        first = o;
        seconds = elapsed;
      }
    }
    const bool in_time = seconds <= c.seconds_allowed;
    const bool pass = first.pass && in_time;
    all = all && pass;
    if (dumps[0] != dumps[1] || dumps[0] != dumps[2]) {
      deterministic = false;
      nondeterministic += (nondeterministic.empty() ? "" : ",") + std::to_string(c.id);
    }
    std::printf("criterion %2d: %s  %s (%.2fs of %.0fs)%s%s\n", c.id, pass ? "PASS" : "FAIL",
                c.name.c_str(), seconds, c.seconds_allowed, first.detail.empty() ? "" : ": ",
                first.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("criterion 11: %s  byte-identical reports over two runs and threads 1 vs 8%s%s\n",
              deterministic ? "PASS" : "FAIL", deterministic ? "" : ": differs in ",
              nondeterministic.c_str());
  all = all && deterministic;
  return all ? 0 : 1;
}
