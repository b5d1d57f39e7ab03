#include "vtc/induced_cycle.hpp"

#include <algorithm>
#include <map>

#include "vtc/cycle_graph.hpp"
#include "vtc/error.hpp"

namespace vtc {

namespace {

constexpr std::size_t kMinDiameter = 20;
constexpr std::size_t kContactReach = 3;

struct StepFailed {
  std::string step;
};

class Distances {
 public:
  explicit Distances(const Graph& g) : g_(g) {}

  std::size_t operator()(Vertex a, Vertex b) {
    auto it = cache_.find(a);
    if (it == cache_.end()) {
      std::vector<std::size_t> row;
      for (const auto& x : bfs_distances(g_, a)) row.push_back(*x);
      it = cache_.emplace(a, std::move(row)).first;
    }
    return it->second[b];
  }

 private:
  const Graph& g_;
  std::map<Vertex, std::vector<std::size_t>> cache_;
};

// BFS tree with lowest-id parents, read back from `target`.
std::vector<Vertex> geodesic(const Graph& g, Vertex source, Vertex target) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> parent(n, static_cast<Vertex>(-1));
  std::vector<Vertex> queue{source};
  parent[source] = source;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Vertex y : g.neighbors(queue[i])) {
      if (parent[y] == static_cast<Vertex>(-1)) {
        parent[y] = queue[i];
        queue.push_back(y);
      }
    }
  }
  std::vector<Vertex> path{target};
  while (path.back() != source) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

bool is_geodesic(Distances& dist, const std::vector<Vertex>& p) {
  return !p.empty() && dist(p.front(), p.back()) + 1 == p.size();
}

std::vector<Vertex> image_of(const Permutation& phi, const std::vector<Vertex>& p) {
  std::vector<Vertex> out;
  for (Vertex v : p) out.push_back(phi[v]);
  return out;
}

class Construction {
 public:
  Construction(const Graph& g, const AutomorphismFamily& fam, std::size_t d)
      : g_(g), fam_(fam), d_(d), dist_(g), q_len_((d - 5 + 1) / 2) {}

  InducedCycle run(GeodesicDecomposition& dec, std::size_t& extensions) {
    const std::size_t n = g_.vertex_count();
    // Diameter pair with lowest ids.
    for (Vertex a = 0; a < n && dec.S.empty(); ++a) {
      for (Vertex b = 0; b < n; ++b) {
        if (dist_(a, b) == d_) {
          dec.S = geodesic(g_, a, b);
          break;
        }
      }
    }
    dec.v = dec.S.front();
    dec.u = dec.S.back();
    const std::size_t mid = d_ / 2;
    dec.m = dec.S[mid];
    dec.L.assign(dec.S.begin(), dec.S.begin() + static_cast<long>(mid) + 1);
    dec.R.assign(dec.S.begin() + static_cast<long>(mid), dec.S.end());
    dec.P = dec.S;

    // Every repair strictly lengthens P, so at most n rounds.
    for (std::size_t round = 0; round <= n; ++round) {
      if (auto cycle = attempt(dec)) return *cycle;
      ++extensions;
    }
    throw StepFailed{"path extension did not terminate"};
  }

 private:
  std::optional<InducedCycle> attempt(GeodesicDecomposition& dec) {
    const std::size_t len = dec.P.size();
    const std::size_t q_start = len - q_len_;
    dec.Q.assign(dec.P.begin() + static_cast<long>(q_start), dec.P.end());
    dec.w = dec.P.back();
    dec.x = dec.P.front();
    dec.y = dec.P[q_start];
    if (!is_geodesic(dist_, dec.Q)) throw StepFailed{"tail Q is not geodesic"};

    // phi with phi(m) in {w} + N(w), lowest family index.
    std::optional<std::size_t> chosen;
    for (std::size_t i = 0; i < fam_.size() && !chosen; ++i) {
      if (dist_(fam_.permutations[i][dec.m], dec.w) <= 1) chosen = i;
    }
    if (!chosen) throw StepFailed{"no automorphism moves m next to w"};
    const Permutation& phi = fam_.permutations[*chosen];
    dec.phi = *chosen;
    dec.S_image = image_of(phi, dec.S);
    dec.L_image = image_of(phi, dec.L);
    dec.R_image = image_of(phi, dec.R);
    dec.v_image = phi[dec.v];
    dec.u_image = phi[dec.u];
    dec.w_image = phi[dec.m];

    const std::size_t n = g_.vertex_count();
    std::vector<bool> near_q(n, false), in_q(n, false);
    std::vector<std::size_t> q_pos(n, 0);
    for (std::size_t i = 0; i < dec.Q.size(); ++i) {
      const Vertex a = dec.Q[i];
      in_q[a] = near_q[a] = true;
      q_pos[a] = i;
      for (Vertex b : g_.neighbors(a)) near_q[b] = true;
    }

    std::vector<Vertex> left(dec.L_image.rbegin(), dec.L_image.rend());
    const std::vector<Vertex>& right = dec.R_image;
    auto reach = [&](const std::vector<Vertex>& side) {
      std::size_t far = 0;
      for (std::size_t i = 0; i < side.size(); ++i) {
        if (near_q[side[i]]) far = i;
      }
      return far;
    };
    dec.a_reach = reach(left);
    dec.b_reach = reach(right);
    if (std::min(dec.a_reach, dec.b_reach) > kContactReach) {
      throw StepFailed{"neither half of S' stays within distance 3 of w' near Q"};
    }
    dec.used_left = dec.a_reach <= kContactReach;
    dec.side_path = dec.used_left ? left : right;
    const std::size_t c_index = dec.used_left ? dec.a_reach : dec.b_reach;
    dec.c = dec.side_path[c_index];
    dec.tail.assign(dec.side_path.begin() + static_cast<long>(c_index), dec.side_path.end());

    // z: vertex of Q within distance one of c, farthest from w.
    std::optional<std::size_t> z_pos;
    auto consider = [&](Vertex a) {
      if (in_q[a] && (!z_pos || q_pos[a] < *z_pos)) z_pos = q_pos[a];
    };
    consider(dec.c);
    for (Vertex b : g_.neighbors(dec.c)) consider(b);
    if (!z_pos) throw StepFailed{"c has no neighbour on Q"};
    dec.z = dec.Q[*z_pos];

    // Q' from y to z followed by L'' (c dropped when c == z).
    std::vector<Vertex> joined(dec.Q.begin(), dec.Q.begin() + static_cast<long>(*z_pos) + 1);
    joined.insert(joined.end(), dec.tail.begin() + (dec.c == dec.z ? 1 : 0), dec.tail.end());
    if (!is_induced_path(g_, joined)) throw StepFailed{"Q' and L'' do not induce a path"};

    // Contacts between P' (x .. y, y excluded) and L''.
    std::vector<std::size_t> tail_pos(n, n);
    for (std::size_t i = 0; i < dec.tail.size(); ++i) tail_pos[dec.tail[i]] = i;
    std::optional<std::pair<std::size_t, std::size_t>> best;  // (P index, L'' index)
    std::size_t best_cost = 0;
    for (std::size_t i = 0; i < q_start; ++i) {
      const Vertex s = dec.P[i];
      auto offer = [&](Vertex t) {
        if (tail_pos[t] == n) return;
        const std::size_t cost = (q_start - i) + tail_pos[t];
        if (!best || cost < best_cost) {
          best = std::make_pair(i, tail_pos[t]);
          best_cost = cost;
        }
      };
      offer(s);
      for (Vertex t : g_.neighbors(s)) offer(t);
    }

    if (!best) {
      // P' + Q' + L'' is a longer induced path with a geodesic tail.
      std::vector<Vertex> longer(dec.P.begin(), dec.P.begin() + static_cast<long>(q_start));
      longer.insert(longer.end(), joined.begin(), joined.end());
      if (longer.size() <= dec.P.size()) throw StepFailed{"replacement path is not longer"};
      if (!is_induced_path(g_, longer)) throw StepFailed{"replacement path is not induced"};
      dec.P = std::move(longer);
      return std::nullopt;
    }

    dec.s = dec.P[best->first];
    dec.t = dec.tail[best->second];
    InducedCycle cycle(dec.P.begin() + static_cast<long>(best->first),
                       dec.P.begin() + static_cast<long>(q_start));
    cycle.insert(cycle.end(), joined.begin(), joined.end() - static_cast<long>(dec.tail.size()) +
                                                  static_cast<long>(best->second) + 1);
    if (*dec.s == *dec.t) cycle.pop_back();
    if (!is_induced_cycle(g_, cycle)) throw StepFailed{"closing cycle is not induced"};
    if (cycle.size() + 17 < d_) throw StepFailed{"closing cycle is shorter than d - 17"};
    return cycle;
  }

  const Graph& g_;
  const AutomorphismFamily& fam_;
  std::size_t d_;
  Distances dist_;
  std::size_t q_len_;
};

}  // namespace

InducedCycleReport induced_cycle_via_symmetry(const Graph& g, const AutomorphismFamily& fam,
                                              SearchBudget fallback_budget) {
  const auto d = diameter(g);
  if (!d) throw InvalidInput("graph is not connected");
  if (*d < kMinDiameter) {
    throw InvalidInput("diameter " + std::to_string(*d) + " is below 20");
  }
  for (const auto& phi : fam.permutations) {
    if (phi.size() != g.vertex_count() || !is_automorphism(g, phi)) {
      throw InvalidInput("family member is not an automorphism");
    }
  }
  if (!is_nearly_transitive(g, fam)) {
    throw InvalidInput("family does not witness near transitivity");
  }

  InducedCycleReport report;
  report.diameter = *d;
  report.floor = *d - 17;
  try {
    Construction construction(g, fam, *d);
    report.cycle = construction.run(report.decomposition, report.path_extensions);
    report.by_construction = true;
  } catch (const StepFailed& failure) {
    report.failed_step = failure.step;
    if (g.vertex_count() <= 64) report.cycle = brute_longest_induced_cycle(g, fallback_budget).best;
  }
  return report;
}

}  // namespace vtc
