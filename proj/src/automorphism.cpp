#include "vtc/automorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace vtc {

namespace {

using Colors = std::vector<std::uint32_t>;

struct OutOfNodes {};

class PairSearch {
 public:
  PairSearch(const Digraph& d, SearchBudget budget) : d_(d), limit_(budget.max_expansions) {}

  std::optional<Permutation> run(Vertex from, Vertex to) {
    const std::size_t n = d_.vertex_count();
    Colors a(n, 0), b(n, 0);
    a[from] = 1;
    b[to] = 1;
    return search(std::move(a), std::move(b));
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  using Signature = std::tuple<std::uint32_t, std::vector<std::uint32_t>, std::vector<std::uint32_t>>;

  Signature signature(const Colors& c, Vertex v) const {
    std::vector<std::uint32_t> outs, ins;
    for (Vertex w : d_.out(v)) outs.push_back(c[w]);
    for (Vertex w : d_.in(v)) ins.push_back(c[w]);
    std::sort(outs.begin(), outs.end());
    std::sort(ins.begin(), ins.end());
    return {c[v], std::move(outs), std::move(ins)};
  }

  static std::size_t distinct(const Colors& c) {
    Colors s(c);
    std::sort(s.begin(), s.end());
    return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
  }

  // Refines both colourings jointly, so equal signatures receive equal colours
  // on both sides. False when the colour histograms diverge.
  bool refine(Colors& a, Colors& b) const {
    const std::size_t n = d_.vertex_count();
    std::size_t classes = distinct(a);
    while (true) {
      std::vector<Signature> sa(n), sb(n);
      for (Vertex v = 0; v < n; ++v) {
        sa[v] = signature(a, v);
        sb[v] = signature(b, v);
      }
      std::map<Signature, std::uint32_t> rank;
      for (const auto& s : sa) rank.emplace(s, 0);
      for (const auto& s : sb) rank.emplace(s, 0);
      std::uint32_t next = 0;
      for (auto& [sig, id] : rank) id = next++;
      for (Vertex v = 0; v < n; ++v) {
        a[v] = rank[sa[v]];
        b[v] = rank[sb[v]];
      }
      Colors ha(a), hb(b);
      std::sort(ha.begin(), ha.end());
      std::sort(hb.begin(), hb.end());
      if (ha != hb) return false;
      const std::size_t now = distinct(a);
      if (now == classes) return true;
      classes = now;
    }
  }

  std::optional<Permutation> search(Colors a, Colors b) {
    if (++nodes_ > limit_) throw OutOfNodes{};
    if (!refine(a, b)) return std::nullopt;
    const std::size_t n = d_.vertex_count();

    // Smallest colour whose class is not a singleton.
    std::vector<std::size_t> size(n + 1, 0);
    for (auto c : a) ++size[c];
    std::optional<std::uint32_t> split;
    for (std::uint32_t c = 0; c < size.size(); ++c) {
      if (size[c] > 1) {
        split = c;
        break;
      }
    }
    if (!split) {
      std::vector<Vertex> by_color(n);
      for (Vertex v = 0; v < n; ++v) by_color[b[v]] = v;
      Permutation p(n);
      for (Vertex v = 0; v < n; ++v) p[v] = by_color[a[v]];
      if (is_automorphism(d_, p)) return p;
      return std::nullopt;
    }
    const auto pivot = static_cast<Vertex>(std::find(a.begin(), a.end(), *split) - a.begin());
    const std::uint32_t fresh = static_cast<std::uint32_t>(n);
    for (Vertex target = 0; target < n; ++target) {
      if (b[target] != *split) continue;
      Colors a2(a), b2(b);
      a2[pivot] = fresh;
      b2[target] = fresh;
      if (auto p = search(std::move(a2), std::move(b2))) return p;
    }
    return std::nullopt;
  }

  const Digraph& d_;
  std::uint64_t limit_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::pair<Verdict, std::optional<Permutation>> find_automorphism(const Digraph& d, Vertex from,
                                                                 Vertex to, SearchBudget budget) {
  PairSearch search(d, budget);
  try {
    auto p = search.run(from, to);
    return {p ? Verdict::yes : Verdict::no, std::move(p)};
  } catch (const OutOfNodes&) {
    return {Verdict::unknown, std::nullopt};
  }
}

TransitivityResult is_vertex_transitive(const Digraph& d, SearchBudget budget) {
  TransitivityResult result;
  const std::size_t n = d.vertex_count();
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Vertex v = 1; v < n; ++v) {
    if (find(v) == find(0)) continue;
    PairSearch search(d, SearchBudget{budget.max_expansions - std::min(budget.max_expansions,
                                                                       result.nodes)});
    std::optional<Permutation> p;
    try {
      p = search.run(0, v);
    } catch (const OutOfNodes&) {
      result.nodes += search.nodes();
      result.verdict = Verdict::unknown;
      return result;
    }
    result.nodes += search.nodes();
    if (!p) {
      result.verdict = Verdict::no;
      return result;
    }
    for (Vertex x = 0; x < n; ++x) parent[find(x)] = find((*p)[x]);
    result.found.permutations.push_back(std::move(*p));
  }
  result.verdict = Verdict::yes;
  return result;
}

std::pair<Verdict, AutomorphismFamily> transitive_family(const Digraph& d, SearchBudget budget) {
  const std::size_t n = d.vertex_count();
  std::vector<Permutation> from_zero;
  std::uint64_t used = 0;
  for (Vertex v = 0; v < n; ++v) {
    PairSearch search(d, SearchBudget{budget.max_expansions - std::min(budget.max_expansions, used)});
    std::optional<Permutation> p;
    try {
      p = search.run(0, v);
    } catch (const OutOfNodes&) {
      return {Verdict::unknown, {}};
    }
    used += search.nodes();
    if (!p) return {Verdict::no, {}};
    from_zero.push_back(std::move(*p));
  }
  std::vector<Permutation> all;
  for (const auto& fu : from_zero) {
    const Permutation back = inverse(fu);
    for (const auto& fv : from_zero) all.push_back(compose(fv, back));
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return {Verdict::yes, AutomorphismFamily{std::move(all)}};
}

}  // namespace vtc
