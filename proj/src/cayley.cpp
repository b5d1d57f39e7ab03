#include "vtc/cayley.hpp"

#include <algorithm>
#include <istream>
#include <regex>
#include <sstream>

namespace vtc {

Digraph cayley_digraph(const CayleySpec& spec) {
  const auto& g = spec.group;
  for (Element s : spec.generators) {
    if (s >= g.order()) throw InvalidInput("generator " + std::to_string(s) + " out of range");
    if (s == g.identity()) throw InvalidInput("identity generator would create self-loops");
  }
  if (!g.generates(spec.generators)) throw InvalidInput("generators do not generate the group");

  std::vector<Arc> arcs;
  for (Element x = 0; x < g.order(); ++x) {
    for (Element s : spec.generators) arcs.emplace_back(x, g.mul(x, s));
  }
  Digraph d = Digraph::build(g.order(), arcs);

  std::vector<Element> distinct(spec.generators);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (regularity(d) != distinct.size() || !is_strongly_connected(d)) {
    throw VerificationError("Cayley digraph is not |S|-regular and strongly connected");
  }
  return d;
}

AutomorphismFamily left_translations(const CayleySpec& spec) {
  const auto& g = spec.group;
  AutomorphismFamily fam;
  for (Element h = 0; h < g.order(); ++h) {
    Permutation p(g.order());
    for (Element x = 0; x < g.order(); ++x) p[x] = g.mul(h, x);
    fam.permutations.push_back(std::move(p));
  }
  return fam;
}

namespace {

bool is_bijection(const Permutation& perm) {
  std::vector<bool> hit(perm.size(), false);
  for (Vertex v : perm) {
    if (v >= perm.size() || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

}  // namespace

bool is_automorphism(const Digraph& d, const Permutation& perm) {
  if (perm.size() != d.vertex_count() || !is_bijection(perm)) return false;
  // A bijection mapping arcs into arcs on a finite digraph maps arcs onto arcs.
  for (const auto& [u, v] : d.arcs()) {
    if (!d.has_arc(perm[u], perm[v])) return false;
  }
  return true;
}

bool is_automorphism(const Graph& g, const Permutation& perm) {
  if (perm.size() != g.vertex_count() || !is_bijection(perm)) return false;
  for (const auto& [u, v] : g.edges()) {
    if (!g.has_edge(perm[u], perm[v])) return false;
  }
  return true;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation result(inner.size());
  for (std::size_t v = 0; v < inner.size(); ++v) result[v] = outer[inner[v]];
  return result;
}

Permutation inverse(const Permutation& perm) {
  Permutation result(perm.size());
  for (std::size_t v = 0; v < perm.size(); ++v) result[perm[v]] = static_cast<Vertex>(v);
  return result;
}

bool acts_transitively(const AutomorphismFamily& fam, std::size_t vertex_count) {
  // The family need not be a group, so check every source separately.
  for (Vertex u = 0; u < vertex_count; ++u) {
    std::vector<bool> hit(vertex_count, false);
    std::size_t count = 0;
    for (const auto& p : fam.permutations) {
      if (!hit[p[u]]) {
        hit[p[u]] = true;
        ++count;
      }
    }
    if (count != vertex_count) return false;
  }
  return true;
}

namespace {

std::vector<long long> integers_in(const std::string& text) {
  static const std::regex number("-?[0-9]+");
  std::vector<long long> out;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), number);
       it != std::sregex_iterator(); ++it) {
    out.push_back(std::stoll(it->str()));
  }
  return out;
}

long long positive_mod(long long a, long long n) { return ((a % n) + n) % n; }

}  // namespace

CayleySpec parse_cayley_spec(const std::string& group_line, const std::string& generator_line) {
  std::istringstream head(group_line);
  std::string kind;
  head >> kind;
  auto gens = integers_in(generator_line);
  CayleySpec spec;
  if (kind == "cyclic") {
    long long n = 0;
    if (!(head >> n) || n < 1) throw InvalidInput("cyclic group needs an order >= 1");
    spec.group = cyclic_group(static_cast<std::size_t>(n));
    for (long long s : gens) spec.generators.push_back(static_cast<Element>(positive_mod(s, n)));
  } else if (kind == "product") {
    long long n1 = 0, n2 = 0;
    if (!(head >> n1 >> n2) || n1 < 1 || n2 < 1) {
      throw InvalidInput("product group needs two orders >= 1");
    }
    if (gens.size() % 2 != 0) throw InvalidInput("product generators must be pairs");
    spec.group = direct_product(cyclic_group(static_cast<std::size_t>(n1)),
                                cyclic_group(static_cast<std::size_t>(n2)));
    for (std::size_t i = 0; i < gens.size(); i += 2) {
      spec.generators.push_back(
          static_cast<Element>(positive_mod(gens[i], n1) * n2 + positive_mod(gens[i + 1], n2)));
    }
  } else {
    throw InvalidInput("unknown group kind '" + kind + "' (expected cyclic or product)");
  }
  if (spec.generators.empty()) throw InvalidInput("no generators given");
  return spec;
}

CayleySpec parse_cayley_spec(std::istream& in) {
  std::string group_line, generator_line;
  auto next = [&](std::string& line) {
    while (std::getline(in, line)) {
      auto first = line.find_first_not_of(" \t\r");
      if (first != std::string::npos && line[first] != '#') return true;
    }
    return false;
  };
  if (!next(group_line) || !next(generator_line)) {
    throw InvalidInput("Cayley spec needs a group line and a generator line");
  }
  return parse_cayley_spec(group_line, generator_line);
}

}  // namespace vtc
