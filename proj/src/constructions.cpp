#include "vtc/constructions.hpp"

#include <algorithm>

#include "vtc/cycle_enum.hpp"
#include "vtc/error.hpp"

namespace vtc {

Digraph directed_cycle(std::size_t n) {
  if (n < 2) throw InvalidInput("directed cycle needs n >= 2");
  std::vector<Arc> arcs;
  for (std::size_t v = 0; v < n; ++v) {
    arcs.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % n));
  }
  return Digraph::build(n, arcs);
}

Digraph directed_path(std::size_t n) {
  std::vector<Arc> arcs;
  for (std::size_t v = 0; v + 1 < n; ++v) {
    arcs.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(v + 1));
  }
  return Digraph::build(n, arcs);
}

Digraph complete_bidirected(std::size_t n) {
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v) arcs.emplace_back(u, v);
  return Digraph::build(n, arcs);
}

CayleySpec cycle_product_spec(std::size_t n1, std::size_t n2) {
  if (n1 < 2 || n2 < 2) throw InvalidInput("cycle product needs n1, n2 >= 2");
  CayleySpec spec{direct_product(cyclic_group(n1), cyclic_group(n2)), {}};
  spec.generators = {static_cast<Element>(n2), 1};  // (1,0) and (0,1)
  return spec;
}

Digraph directed_cycle_product(std::size_t n1, std::size_t n2) {
  if (n1 < 2 || n2 < 2) throw InvalidInput("cycle product needs n1, n2 >= 2");
  return cartesian_product(directed_cycle(n1), directed_cycle(n2));
}

CycleProductView::CycleProductView(std::uint64_t n1, std::uint64_t n2) : n1_(n1), n2_(n2) {
  if (n1 < 2 || n2 < 2) throw InvalidInput("cycle product needs n1, n2 >= 2");
}

std::array<std::uint64_t, 2> CycleProductView::out(std::uint64_t v) const {
  const std::uint64_t a = v / n2_, b = v % n2_;
  std::array<std::uint64_t, 2> heads{((a + 1) % n1_) * n2_ + b, a * n2_ + (b + 1) % n2_};
  std::sort(heads.begin(), heads.end());
  return heads;
}

bool GadgetReport::failed() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const GadgetCheck& c) { return c.verdict == Verdict::no; });
}

namespace {

Verdict verdict_of(bool b) { return b ? Verdict::yes : Verdict::no; }

Vertex pair_vertex(std::size_t i, std::size_t side) {
  return static_cast<Vertex>(2 * i + side);
}

DirectedCycle block_cycle(std::size_t i, std::size_t pairs) {
  const std::size_t j = (i + 1) % pairs;
  return DirectedCycle{
      {pair_vertex(i, 0), pair_vertex(j, 0), pair_vertex(i, 1), pair_vertex(j, 1)}};
}

void throw_if_failed(const GadgetReport& report, const std::string& name) {
  for (const auto& c : report.checks) {
    if (c.verdict == Verdict::no) {
      throw VerificationError(name + " failed check '" + c.property + "': " + c.detail);
    }
  }
}

}  // namespace

Digraph figure1_chain(std::size_t k, SearchBudget budget) {
  if (k < 1) throw InvalidInput("figure1 chain needs k >= 1 blocks");
  const std::size_t pairs = k + 1;
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < k; ++i) {
    const auto c = block_cycle(i, pairs).vertices;
    for (std::size_t j = 0; j < 4; ++j) arcs.emplace_back(c[j], c[(j + 1) % 4]);
  }
  for (std::size_t end : {std::size_t{0}, k}) {
    arcs.emplace_back(pair_vertex(end, 0), pair_vertex(end, 1));
    arcs.emplace_back(pair_vertex(end, 1), pair_vertex(end, 0));
  }
  Digraph d = Digraph::build(2 * pairs, arcs);
  throw_if_failed(verify_figure1_chain(d, k, budget), "figure1_chain(" + std::to_string(k) + ")");
  return d;
}

GadgetReport verify_figure1_chain(const Digraph& d, std::size_t k, SearchBudget budget) {
  GadgetReport report;
  const std::size_t n = d.vertex_count();
  report.checks.push_back({"vertex count 2k+2", verdict_of(n == 2 * k + 2), std::to_string(n)});
  const auto r = regularity(d);
  report.checks.push_back(
      {"2-regular", verdict_of(r == 2u), r ? std::to_string(*r) : std::string("irregular")});
  report.checks.push_back({"strongly 2-connected", verdict_of(is_strongly_2_connected(d)), ""});

  // The chain has only O(k) cycles, so full enumeration is cheap.
  const auto cycles = enumerate_directed_cycles(
      d, {std::nullopt, std::min<std::size_t>(budget.max_expansions, kDefaultMaxCycles)});
  if (cycles.complete()) {
    std::size_t longest = 0;
    for (const auto& c : cycles.cycles) longest = std::max(longest, c.length());
    report.checks.push_back({"longest directed cycle is 4", verdict_of(longest == 4),
                             "circumference " + std::to_string(longest) + " over " +
                                 std::to_string(cycles.cycles.size()) + " cycles"});
  } else {
    report.checks.push_back({"longest directed cycle is 4", Verdict::unknown, "enumeration capped"});
  }

  // Constructive witnesses: blocks 0, 2, 4, ... and the spine 0 -> 2 -> ... -> 2k.
  const std::size_t want = k / 2;
  bool packing_ok = true;
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < k && n == 2 * k + 2; i += 2) {
    const auto c = block_cycle(i, k + 1);
    packing_ok = packing_ok && is_valid_cycle(d, c);
    for (Vertex v : c.vertices) {
      packing_ok = packing_ok && !used[v];
      used[v] = true;
    }
  }
  report.checks.push_back({"floor(k/2) vertex-disjoint longest cycles",
                           verdict_of(packing_ok && (k + 1) / 2 >= want),
                           std::to_string((k + 1) / 2) + " disjoint blocks"});

  DirectedPath spine;
  for (std::size_t i = 0; i <= k; ++i) spine.vertices.push_back(pair_vertex(i, 0));
  report.checks.push_back({"directed path of length >= k",
                           verdict_of(n == 2 * k + 2 && is_valid_path(d, spine)),
                           "spine length " + std::to_string(spine.length())});
  return report;
}

CayleySpec toroidal_gadget_spec(std::size_t n) {
  if (n < 1) throw InvalidInput("toroidal gadget needs n >= 1");
  const std::size_t m = 4 * n + 2;
  CayleySpec spec{direct_product(cyclic_group(m), cyclic_group(2)), {}};
  // (1,0) -> 1*2+0, (m-1,1) -> (m-1)*2+1
  spec.generators = {2, static_cast<Element>((m - 1) * 2 + 1)};
  return spec;
}

Digraph toroidal_gadget(std::size_t n, SearchBudget budget) {
  Digraph d = cayley_digraph(toroidal_gadget_spec(n));
  throw_if_failed(verify_toroidal_gadget(d, n, budget),
                  "toroidal_gadget(" + std::to_string(n) + ")");
  return d;
}

GadgetReport verify_toroidal_gadget(const Digraph& d, std::size_t n, SearchBudget budget) {
  GadgetReport report;
  const std::size_t count = d.vertex_count();
  report.checks.push_back(
      {"vertex count 8n+4", verdict_of(count == 8 * n + 4), std::to_string(count)});
  report.checks.push_back({"2-regular", verdict_of(regularity(d) == 2u), ""});

  const auto spec = toroidal_gadget_spec(n);
  const auto fam = left_translations(spec);
  bool all_auto = count == spec.group.order();
  for (const auto& p : fam.permutations) all_auto = all_auto && is_automorphism(d, p);
  report.checks.push_back({"left translations are a transitive automorphism family",
                           verdict_of(all_auto && acts_transitively(fam, count)), ""});

  bool ring_blocks = count == 8 * n + 4;
  for (std::size_t i = 0; i < 4 * n + 2 && ring_blocks; ++i) {
    ring_blocks = is_valid_cycle(d, block_cycle(i, 4 * n + 2));
  }
  report.checks.push_back({"every ring position carries a directed 4-cycle block",
                           verdict_of(ring_blocks), ""});

  if (n <= 2) {
    const auto ham = brute_hamiltonian(d, budget);
    report.checks.push_back({"non-Hamiltonian",
                             ham.verdict == Verdict::unknown ? Verdict::unknown
                                                             : verdict_of(ham.verdict == Verdict::no),
                             "exact DP"});
  }
  return report;
}

}  // namespace vtc
