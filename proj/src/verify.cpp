#include "vtc/verify.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

#include "vtc/constructions.hpp"
#include "vtc/cycle_enum.hpp"
#include "vtc/cycle_graph.hpp"
#include "vtc/dfs_cycle.hpp"
#include "vtc/error.hpp"
#include "vtc/expansion.hpp"
#include "vtc/number_gap.hpp"

namespace vtc {

namespace {

std::string str(const Ratio& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

template <class T>
std::string field(const T& value) {
  std::ostringstream out;
  out << value;
  std::string s = out.str();
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return quoted + "\"";
}

template <class... Fields>
std::string row(const Fields&... fields) {
  std::string out;
  ((out += (out.empty() ? "" : ",") + field(fields)), ...);
  return out;
}

std::int64_t ceil_of(const Ratio& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (Ratio(q) < r) ++q;
  return q;
}

CayleySpec cyclic_spec(std::size_t n, std::vector<Element> gens) {
  return CayleySpec{cyclic_group(n), std::move(gens)};
}

CayleySpec dihedral_spec(std::size_t n) {
  return CayleySpec{dihedral_group(n), {1, static_cast<Element>(n)}};
}

// Longest enumerated cycle of a complete enumeration.
std::size_t circumference_of(const CycleEnumeration& e) {
  std::size_t best = 0;
  for (const auto& c : e.cycles) best = std::max(best, c.length());
  return best;
}

}  // namespace

std::vector<CayleyHost> small_cayley_corpus() {
  std::vector<std::pair<std::string, CayleySpec>> specs = {
      {"Z6<1>", cyclic_spec(6, {1})},
      {"Z8<1;3>", cyclic_spec(8, {1, 3})},
      {"Z10<2;5>", cyclic_spec(10, {2, 5})},
      {"Z12<3;4>", cyclic_spec(12, {3, 4})},
      {"Z2xZ3", cycle_product_spec(2, 3)},
      {"Z2xZ4", cycle_product_spec(2, 4)},
      {"Z3xZ3", cycle_product_spec(3, 3)},
      {"Z3xZ5", cycle_product_spec(3, 5)},
      {"Z4xZ4", cycle_product_spec(4, 4)},
      {"Z3xZ6", cycle_product_spec(3, 6)},
      {"D3<r;s>", dihedral_spec(3)},
      {"D4<r;s>", dihedral_spec(4)},
      {"D5<r;s>", dihedral_spec(5)},
      {"D6<r;s>", dihedral_spec(6)},
      {"D7<r;s>", dihedral_spec(7)},
      {"D9<r;s>", dihedral_spec(9)},
      {"toroidal(1)", toroidal_gadget_spec(1)},
  };
  std::vector<CayleyHost> hosts;
  for (auto& [name, spec] : specs) {
    Digraph d = cayley_digraph(spec);
    hosts.push_back({name, std::move(spec), std::move(d)});
  }
  return hosts;
}

std::vector<NamedDigraph> stitching_hosts() {
  std::vector<NamedDigraph> hosts = {
      {"C2xC3", directed_cycle_product(2, 3)}, {"C2xC4", directed_cycle_product(2, 4)},
      {"C3xC3", directed_cycle_product(3, 3)}, {"C2xC5", directed_cycle_product(2, 5)},
      {"toroidal(1)", toroidal_gadget(1)},
  };
  for (std::size_t k = 2; k <= 4; ++k) {
    hosts.push_back({"figure1(" + std::to_string(k) + ")", figure1_chain(k)});
  }
  for (std::size_t n = 3; n <= 7; ++n) {
    hosts.push_back({"D" + std::to_string(n) + "<r;s>", cayley_digraph(dihedral_spec(n))});
  }
  return hosts;
}

void write_suite_csv(std::ostream& out, const SuiteResult& r) {
  out << r.header << '\n';
  for (const auto& line : r.rows) out << line << '\n';
}

SuiteResult verify_trotter_erdos(std::size_t max_order, SearchBudget budget) {
  SuiteResult r{"trotter-erdos", "n1,n2,gcd,condition,hamiltonian,ok", {}, 0};
  for (std::size_t n1 = 2; 2 * n1 <= max_order; ++n1) {
    for (std::size_t n2 = 2; n1 * n2 <= max_order; ++n2) {
      const auto te = trotter_erdos_necessary(n1, n2);
      const auto ham = brute_hamiltonian(directed_cycle_product(n1, n2), budget);
      const bool ok = ham.verdict == Verdict::no || (ham.verdict == Verdict::yes && te.holds);
      if (!ok) ++r.failures;
      r.rows.push_back(row(n1, n2, te.d, te.holds ? 1 : 0, to_string(ham.verdict), ok ? 1 : 0));
    }
  }
  return r;
}

SuiteResult verify_divisibility(std::size_t max_order, unsigned threads) {
  SuiteResult r{"divisibility", "n1,n2,gcd,cycles,all_divisible,circumference,gap,bound,ok", {}, 0};
  for (std::size_t n1 = 2; 2 * n1 <= max_order; ++n1) {
    for (std::size_t n2 = 2; n1 * n2 <= max_order; ++n2) {
      const std::size_t g = std::gcd(n1, n2);
      const auto cycles = enumerate_directed_cycles(directed_cycle_product(n1, n2), {}, threads);
      bool divisible = cycles.complete();
      for (const auto& c : cycles.cycles) divisible = divisible && c.length() % g == 0;
      const std::size_t circ = circumference_of(cycles);
      const std::size_t gap = n1 * n2 - circ;
      const std::uint64_t bound = divisibility_gap_bound(n1, n2);
      const bool ok = divisible && gap >= bound;
      if (!ok) ++r.failures;
      r.rows.push_back(row(n1, n2, g, cycles.cycles.size(), divisible ? 1 : 0, circ, gap, bound,
                           ok ? 1 : 0));
    }
  }
  return r;
}

SuiteResult verify_figure1(std::size_t max_k, std::size_t max_n, SearchBudget budget) {
  SuiteResult r{"figure1", "case,property,verdict,detail", {}, 0};
  auto record = [&](const std::string& name, const GadgetReport& report) {
    for (const auto& c : report.checks) {
      if (c.verdict != Verdict::yes) ++r.failures;
      r.rows.push_back(row(name, c.property, to_string(c.verdict), c.detail));
    }
  };
  for (std::size_t k = 1; k <= max_k; ++k) {
    const std::string name = "figure1(" + std::to_string(k) + ")";
    try {
      const Digraph d = figure1_chain(k, budget);
      record(name, verify_figure1_chain(d, k, budget));
    } catch (const VerificationError& e) {
      ++r.failures;
      r.rows.push_back(row(name, "construction", "no", e.what()));
    }
  }
  for (std::size_t n = 1; n <= max_n; ++n) {
    const std::string name = "toroidal(" + std::to_string(n) + ")";
    try {
      const Digraph d = toroidal_gadget(n, budget);
      record(name, verify_toroidal_gadget(d, n, budget));
    } catch (const VerificationError& e) {
      ++r.failures;
      r.rows.push_back(row(name, "construction", "no", e.what()));
    }
  }
  return r;
}

SuiteResult verify_lemma21(const std::vector<CayleyHost>& corpus, unsigned threads) {
  SuiteResult r{"lemma21", "host,n,diameter,alpha,bound,ok", {}, 0};
  for (const auto& host : corpus) {
    const auto diam = *directed_diameter(host.digraph);
    const auto report = expansion_exact(host.digraph, threads);
    const bool ok = satisfies_transitive_bound(report, diam);
    if (!ok) ++r.failures;
    r.rows.push_back(row(host.name, host.digraph.vertex_count(), diam, str(report.alpha_lower),
                         str(Ratio(1, 3 * static_cast<std::int64_t>(diam))), ok ? 1 : 0));
  }
  return r;
}

SuiteResult verify_dfs_cycle(const std::vector<CayleyHost>& corpus, unsigned threads) {
  SuiteResult r{"dfs-cycle", "host,n,alpha,floor,cycle,U,path,ok", {}, 0};
  for (const auto& host : corpus) {
    const std::size_t n = host.digraph.vertex_count();
    const auto alpha = expansion_exact(host.digraph, threads).alpha_lower;
    const auto floor = ceil_of(alpha * Ratio(static_cast<std::int64_t>(n), 3));
    try {
      const auto res = dfs_long_cycle(host.digraph, alpha);
      const bool ok = static_cast<std::int64_t>(res.cycle.length()) >= floor;
      if (!ok) ++r.failures;
      r.rows.push_back(row(host.name, n, str(alpha), floor, res.cycle.length(),
                           res.descendant_set.size(), res.path.vertices.size(), ok ? 1 : 0));
    } catch (const VerificationError& e) {
      ++r.failures;
      r.rows.push_back(row(host.name, n, str(alpha), floor, e.what(), "", "", 0));
    }
  }
  return r;
}

SuiteResult verify_long_path(const std::vector<CayleyHost>& corpus) {
  SuiteResult r{"long-path", "host,n,diameter,cycle,path,source,floor,ok", {}, 0};
  for (const auto& host : corpus) {
    const std::size_t n = host.digraph.vertex_count();
    try {
      const auto res = long_path(host.digraph, true);
      const bool ok = res.path.length() >= res.floor_bound;
      if (!ok) ++r.failures;
      r.rows.push_back(row(host.name, n, res.diameter, res.cycle_length, res.path.length(),
                           res.from_diameter ? "diameter" : "cycle", res.floor_bound, ok ? 1 : 0));
    } catch (const VerificationError& e) {
      ++r.failures;
      r.rows.push_back(row(host.name, n, "", "", e.what(), "", sqrt_third_floor(n), 0));
    }
  }
  return r;
}

SuiteResult verify_lemma27(const std::vector<NamedDigraph>& hosts, SearchBudget budget,
                           unsigned threads) {
  SuiteResult r{"lemma27", "host,n,cycles,induced,shortest_slack,longest_stitched,ok", {}, 0};
  for (const auto& host : hosts) {
    const auto cycles = enumerate_directed_cycles(host.digraph, {}, threads);
    const CycleGraph cg = build_cycle_graph(cycles);
    const auto induced = enumerate_induced_cycles(cg.graph, 4, budget);
    bool ok = cycles.complete() && induced.complete;
    std::optional<std::int64_t> slack;
    std::size_t longest = 0;
    std::string error;
    for (const auto& seq : induced.cycles) {
      try {
        const auto stitched = stitch_directed_cycle(host.digraph, cg, seq);
        const auto s = static_cast<std::int64_t>(stitched.length()) -
                       static_cast<std::int64_t>(seq.size());
        slack = slack ? std::min(*slack, s) : s;
        longest = std::max(longest, stitched.length());
      } catch (const std::exception& e) {
        ok = false;
        if (error.empty()) error = e.what();
      }
    }
    if (!ok) ++r.failures;
    r.rows.push_back(row(host.name, host.digraph.vertex_count(), cg.size(), induced.cycles.size(),
                         slack ? std::to_string(*slack) : error, longest, ok ? 1 : 0));
  }
  return r;
}

}  // namespace vtc
