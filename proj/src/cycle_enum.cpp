#include "vtc/cycle_enum.hpp"

#include <algorithm>

#include "vtc/error.hpp"
#include "vtc/parallel.hpp"

namespace vtc {

namespace {

// Johnson's circuit search restricted to cycles whose smallest vertex is `root`.
class RootSearch {
 public:
  RootSearch(const Digraph& d, Vertex root, std::size_t max_length, std::size_t cap)
      : d_(d), root_(root), max_length_(max_length), cap_(cap) {
    const std::size_t n = d.vertex_count();
    allowed_ = strong_component_above_root();
    blocked_.assign(n, false);
    blocked_by_.assign(n, {});
  }

  // Returns at most cap_ cycles; overflowed() tells whether more exist.
  std::vector<DirectedCycle> run() {
    circuit(root_);
    return std::move(found_);
  }

  bool overflowed() const { return overflowed_; }

 private:
  std::vector<bool> strong_component_above_root() const {
    const std::size_t n = d_.vertex_count();
    auto sweep = [&](bool forward) {
      std::vector<bool> seen(n, false);
      std::vector<Vertex> stack{root_};
      seen[root_] = true;
      while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : forward ? d_.out(v) : d_.in(v)) {
          if (w > root_ && !seen[w]) {
            seen[w] = true;
            stack.push_back(w);
          }
        }
      }
      return seen;
    };
    auto fwd = sweep(true);
    auto bwd = sweep(false);
    for (std::size_t v = 0; v < n; ++v) fwd[v] = fwd[v] && bwd[v];
    return fwd;
  }

  void unblock(Vertex u) {
    std::vector<Vertex> work{u};
    blocked_[u] = false;
    while (!work.empty()) {
      Vertex x = work.back();
      work.pop_back();
      for (Vertex w : blocked_by_[x]) {
        if (blocked_[w]) {
          blocked_[w] = false;
          work.push_back(w);
        }
      }
      blocked_by_[x].clear();
    }
  }

  bool circuit(Vertex v) {
    bool closed = false;
    path_.push_back(v);
    blocked_[v] = true;
    for (Vertex w : d_.out(v)) {
      if (overflowed_) break;
      if (!allowed_[w]) continue;
      if (w == root_) {
        if (path_.size() >= 2) {
          if (found_.size() == cap_) {
            overflowed_ = true;
            break;
          }
          found_.push_back(DirectedCycle{path_});
        }
        closed = true;
      } else if (!blocked_[w]) {
        // At the length cap we cannot extend; treating the branch as closed
        // only unblocks more eagerly, which never loses cycles.
        if (path_.size() >= max_length_ || circuit(w)) closed = true;
      }
    }
    if (closed) {
      unblock(v);
    } else {
      for (Vertex w : d_.out(v)) {
        if (!allowed_[w]) continue;
        auto& list = blocked_by_[w];
        if (std::find(list.begin(), list.end(), v) == list.end()) list.push_back(v);
      }
    }
    path_.pop_back();
    return closed;
  }

  const Digraph& d_;
  Vertex root_;
  std::size_t max_length_;
  std::size_t cap_;
  std::vector<bool> allowed_;
  std::vector<bool> blocked_;
  std::vector<std::vector<Vertex>> blocked_by_;
  std::vector<Vertex> path_;
  std::vector<DirectedCycle> found_;
  bool overflowed_ = false;
};

struct RootOutcome {
  std::vector<DirectedCycle> cycles;
  bool overflowed = false;
};

}  // namespace

CycleEnumeration enumerate_directed_cycles(const Digraph& d, EnumerationLimits limits,
                                           unsigned threads) {
  const std::size_t n = d.vertex_count();
  if (n > kUnboundedEnumerationLimit && !limits.max_count) {
    throw InvalidInput("cycle enumeration on " + std::to_string(n) +
                       " vertices needs an explicit max_count");
  }
  CycleEnumeration result;
  result.vertex_count = n;
  result.max_length = std::min(limits.max_length.value_or(n), n);
  result.max_count = limits.max_count.value_or(kDefaultMaxCycles);
  if (result.max_length < 2) return result;

  const unsigned batch = std::max(1u, threads);
  for (std::size_t first = 0; first < n && !result.truncated; first += batch) {
    const std::size_t count = std::min<std::size_t>(batch, n - first);
    // Each root may contribute at most the remaining capacity; one overflowing
    // root is enough to know the global cap is exceeded.
    const std::size_t cap = result.max_count - result.cycles.size();
    auto outcomes = parallel_map(count, threads, [&](std::size_t i) {
      RootSearch search(d, static_cast<Vertex>(first + i), result.max_length, cap);
      RootOutcome out;
      out.cycles = search.run();
      out.overflowed = search.overflowed();
      return out;
    });
    for (auto& out : outcomes) {
      for (auto& c : out.cycles) {
        if (result.cycles.size() == result.max_count) {
          result.truncated = true;
          break;
        }
        result.cycles.push_back(std::move(c));
      }
      if (out.overflowed) result.truncated = true;
      if (result.truncated) break;
    }
  }
  return result;
}

}  // namespace vtc
