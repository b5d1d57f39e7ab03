#include "vtc/cycle_graph.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <random>

#include "vtc/error.hpp"

namespace vtc {

namespace {

constexpr std::size_t kSpotChecks = 100;

bool share_vertex(const DirectedCycle& a, const DirectedCycle& b) {
  std::vector<Vertex> x(a.vertices), y(b.vertices);
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  std::vector<Vertex> common;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
  return !common.empty();
}

// Walks `cycle` from the vertex after position `start`, returning the
// position of the first vertex satisfying `hit` (the start itself is last).
template <class Hit>
std::size_t walk_until(const DirectedCycle& cycle, std::size_t start, Hit hit) {
  const std::size_t k = cycle.length();
  for (std::size_t step = 1; step <= k; ++step) {
    const std::size_t pos = (start + step) % k;
    if (hit(cycle.vertices[pos])) return pos;
  }
  return k;
}

std::size_t position_of(const DirectedCycle& cycle, Vertex v) {
  return static_cast<std::size_t>(std::find(cycle.vertices.begin(), cycle.vertices.end(), v) -
                                  cycle.vertices.begin());
}

}  // namespace

CycleGraph build_cycle_graph(const CycleEnumeration& cycles) {
  CycleGraph cg;
  cg.cycles = cycles.cycles;
  cg.host_vertices = cycles.vertex_count;
  cg.truncated = cycles.truncated;
  cg.max_length = cycles.max_length;
  cg.max_count = cycles.max_count;
  cg.membership.assign(cg.host_vertices, {});
  for (std::size_t i = 0; i < cg.cycles.size(); ++i) {
    for (Vertex v : cg.cycles[i].vertices) {
      if (v >= cg.host_vertices) throw InvalidInput("cycle vertex out of range");
      cg.membership[v].push_back(static_cast<Vertex>(i));
    }
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& list : cg.membership) {
    for (std::size_t a = 0; a < list.size(); ++a) {
      for (std::size_t b = a + 1; b < list.size(); ++b) edges.emplace_back(list[a], list[b]);
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  cg.graph = Graph::build(cg.cycles.size(), edges);

  if (cg.cycles.size() >= 2) {
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<std::size_t> pick(0, cg.cycles.size() - 1);
    for (std::size_t k = 0; k < kSpotChecks; ++k) {
      const auto i = pick(rng), j = pick(rng);
      if (i == j) continue;
      const bool expected = share_vertex(cg.cycles[i], cg.cycles[j]);
      if (cg.graph.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)) != expected) {
        throw VerificationError("cycle graph adjacency disagrees with set intersection for " +
                                std::to_string(i) + ", " + std::to_string(j));
      }
    }
  }
  return cg;
}

void write_cycle_graph(std::ostream& out, const CycleGraph& cg) {
  out << "cycles " << cg.cycles.size() << " truncated " << (cg.truncated ? 1 : 0) << '\n';
  for (const auto& c : cg.cycles) {
    for (std::size_t i = 0; i < c.vertices.size(); ++i) out << (i ? " " : "") << c.vertices[i];
    out << '\n';
  }
  for (const auto& [i, j] : cg.graph.edges()) out << i << ' ' << j << '\n';
}

CycleGraphDiameterReport cycle_graph_diameter_check(const Digraph& d, bool transitive_host,
                                                    EnumerationLimits limits, unsigned threads) {
  CycleGraphDiameterReport report;
  const auto diam = directed_diameter(d);
  if (!diam) throw InvalidInput("digraph is not strongly connected");
  report.directed_diameter = *diam;
  const CycleGraph cg = build_cycle_graph(enumerate_directed_cycles(d, limits, threads));
  report.cycle_count = cg.size();
  if (!cg.complete() || cg.cycles.empty()) return report;

  for (const auto& c : cg.cycles) report.circumference = std::max(report.circumference, c.length());
  const auto cg_diam = diameter(cg.graph);
  report.connected = cg_diam.has_value();
  if (!report.connected) {
    report.verdict = Verdict::no;
    return report;
  }
  report.cycle_graph_diameter = *cg_diam;
  report.bound = Ratio(static_cast<std::int64_t>(report.directed_diameter),
                       static_cast<std::int64_t>(report.circumference)) -
                 1;
  report.holds = Ratio(static_cast<std::int64_t>(report.cycle_graph_diameter)) >= report.bound;
  report.verdict = report.holds ? Verdict::yes : Verdict::no;
  report.asserted = transitive_host;
  if (transitive_host && !report.holds) {
    throw VerificationError("cycle graph diameter " + std::to_string(report.cycle_graph_diameter) +
                            " is below d/l - 1");
  }
  return report;
}

DirectedCycle stitch_directed_cycle(const Digraph& d, const CycleGraph& cg,
                                    const std::vector<Vertex>& seq) {
  const std::size_t l = seq.size();
  if (l < 4) throw InvalidInput("stitching needs an induced cycle of length >= 4");
  for (Vertex i : seq) {
    if (i >= cg.size()) throw InvalidInput("cycle index out of range");
  }
  if (!is_induced_cycle(cg.graph, seq)) throw InvalidInput("sequence is not an induced cycle");

  std::vector<std::vector<bool>> member(l, std::vector<bool>(d.vertex_count(), false));
  for (std::size_t i = 0; i < l; ++i) {
    for (Vertex v : cg.cycles[seq[i]].vertices) member[i][v] = true;
  }
  auto in = [&](std::size_t i) { return [&member, i](Vertex v) { return bool(member[i][v]); }; };

  // v_1 and v_2 on C_1: the last C_l vertex before the first C_2 vertex.
  const DirectedCycle& c1 = cg.cycles[seq[0]];
  std::size_t pos = walk_until(c1, c1.length() - 1, in(l - 1));
  std::size_t v1_pos = pos;
  while (!member[1][c1.vertices[pos]]) {
    pos = (pos + 1) % c1.length();
    if (member[l - 1][c1.vertices[pos]]) v1_pos = pos;
  }

  std::vector<Vertex> walk;
  for (std::size_t p = v1_pos; p != pos; p = (p + 1) % c1.length()) walk.push_back(c1.vertices[p]);
  Vertex current = c1.vertices[pos];

  for (std::size_t i = 1; i < l; ++i) {
    const DirectedCycle& ci = cg.cycles[seq[i]];
    const std::size_t start = position_of(ci, current);
    const std::size_t next = i + 1 < l ? i + 1 : 0;
    const std::size_t stop =
        next == 0 ? position_of(ci, c1.vertices[v1_pos]) : walk_until(ci, start, in(next));
    for (std::size_t p = start; p != stop; p = (p + 1) % ci.length()) walk.push_back(ci.vertices[p]);
    current = ci.vertices[stop];
  }

  DirectedCycle result = canonical(DirectedCycle{walk});
  if (!is_valid_cycle(d, result)) throw VerificationError("stitched walk is not a directed cycle");
  if (result.length() < l) {
    throw VerificationError("stitched cycle of length " + std::to_string(result.length()) +
                            " is shorter than " + std::to_string(l));
  }
  return result;
}

AutomorphismFamily lift_automorphisms(const Digraph& d, const AutomorphismFamily& fam,
                                      const CycleGraph& cg) {
  if (!cg.complete()) throw InvalidInput("lifting needs a complete cycle enumeration");
  std::map<std::vector<Vertex>, Vertex> index;
  for (std::size_t i = 0; i < cg.size(); ++i) {
    index.emplace(cg.cycles[i].vertices, static_cast<Vertex>(i));
  }
  AutomorphismFamily lifted;
  for (const auto& phi : fam.permutations) {
    if (!is_automorphism(d, phi)) throw InvalidInput("family member is not a host automorphism");
    Permutation image(cg.size());
    for (std::size_t i = 0; i < cg.size(); ++i) {
      DirectedCycle mapped;
      for (Vertex v : cg.cycles[i].vertices) mapped.vertices.push_back(phi[v]);
      const auto it = index.find(canonical(std::move(mapped)).vertices);
      if (it == index.end()) {
        throw VerificationError("image of cycle " + std::to_string(i) +
                                " is missing from the enumeration");
      }
      image[i] = it->second;
    }
    if (!is_automorphism(cg.graph, image)) {
      throw VerificationError("lifted permutation does not preserve the cycle graph");
    }
    lifted.permutations.push_back(std::move(image));
  }
  return lifted;
}

bool is_nearly_transitive(const Graph& g, const AutomorphismFamily& fam) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> image(n);
  for (Vertex v = 0; v < n; ++v) {
    std::fill(image.begin(), image.end(), false);
    for (const auto& phi : fam.permutations) image[phi[v]] = true;
    for (Vertex u = 0; u < n; ++u) {
      if (image[u]) continue;
      const auto nb = g.neighbors(u);
      if (std::none_of(nb.begin(), nb.end(), [&](Vertex x) { return bool(image[x]); })) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace vtc
