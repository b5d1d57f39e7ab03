#include "vtc/group.hpp"

#include <algorithm>
#include <random>

namespace vtc {

GroupTable make_trusted_group(std::size_t order, std::vector<Element> table) {
  GroupTable g;
  g.table_ = std::move(table);
  g.inverse_.assign(order, 0);
  g.identity_ = 0;
  for (Element e = 0; e < order; ++e) {
    bool is_identity = true;
    for (Element x = 0; x < order && is_identity; ++x) {
      is_identity = g.table_[e * order + x] == x && g.table_[x * order + e] == x;
    }
    if (is_identity) {
      g.identity_ = e;
      break;
    }
  }
  for (Element a = 0; a < order; ++a) {
    for (Element b = 0; b < order; ++b) {
      if (g.table_[a * order + b] == g.identity_) {
        g.inverse_[a] = b;
        break;
      }
    }
  }
  return g;
}

namespace {

std::string triple_text(Element a, Element b, Element c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

GroupTable group_from_table(const std::vector<std::vector<Element>>& raw) {
  const std::size_t n = raw.size();
  if (n == 0) throw GroupAxiomError("group table is empty", std::nullopt);
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (const auto& row : raw) {
    if (row.size() != n) throw GroupAxiomError("group table is not square", std::nullopt);
    for (Element x : row) {
      if (x >= n) {
        throw GroupAxiomError("table entry " + std::to_string(x) + " is not an element",
                              std::nullopt);
      }
      flat.push_back(x);
    }
  }
  auto mul = [&](Element a, Element b) { return flat[a * n + b]; };

  std::optional<Element> identity;
  for (Element e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) identity = e;
  }
  if (!identity) throw GroupAxiomError("no identity element", std::nullopt);

  for (Element a = 0; a < n; ++a) {
    bool found = false;
    for (Element b = 0; b < n && !found; ++b) {
      found = mul(a, b) == *identity && mul(b, a) == *identity;
    }
    if (!found) {
      throw GroupAxiomError("element " + std::to_string(a) + " has no inverse", std::nullopt);
    }
  }

  auto check = [&](Element a, Element b, Element c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
      throw GroupAxiomError("associativity fails at " + triple_text(a, b, c),
                            std::array<Element, 3>{a, b, c});
    }
  };
  if (n <= 256) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    for (int i = 0; i < 10000; ++i) check(pick(rng), pick(rng), pick(rng));
  }
  return make_trusted_group(n, std::move(flat));
}

std::size_t GroupTable::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

std::vector<std::size_t> GroupTable::order_multiset() const {
  std::vector<std::size_t> orders;
  for (Element a = 0; a < order(); ++a) orders.push_back(element_order(a));
  std::sort(orders.begin(), orders.end());
  return orders;
}

std::vector<Element> GroupTable::closure(std::span<const Element> gens) const {
  std::vector<bool> seen(order(), false);
  std::vector<Element> queue{identity_};
  seen[identity_] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Element s : gens) {
      if (s >= order()) throw InvalidInput("generator " + std::to_string(s) + " out of range");
      Element next = mul(queue[i], s);
      if (!seen[next]) {
        seen[next] = true;
        queue.push_back(next);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

GroupTable cyclic_group(std::size_t n) {
  if (n == 0) throw InvalidInput("cyclic group of order 0");
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Element>((a + b) % n);
  return make_trusted_group(n, std::move(t));
}

GroupTable direct_product(const GroupTable& g1, const GroupTable& g2) {
  const std::size_t n1 = g1.order(), n2 = g2.order(), n = n1 * n2;
  std::vector<Element> t(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      Element a = g1.mul(x / n2, y / n2);
      Element b = g2.mul(x % n2, y % n2);
      t[x * n + y] = static_cast<Element>(a * n2 + b);
    }
  }
  return make_trusted_group(n, std::move(t));
}

GroupTable dihedral_group(std::size_t n) {
  if (n == 0) throw InvalidInput("dihedral group needs n >= 1");
  // Elements s^f r^k encoded as f * n + k; relation r s = s r^-1.
  const std::size_t order = 2 * n;
  std::vector<Element> t(order * order);
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      std::size_t f1 = x / n, k1 = x % n, f2 = y / n, k2 = y % n;
      // s^f1 r^k1 s^f2 r^k2 = s^(f1+f2) r^(k1 * (-1)^f2 + k2)
      std::size_t k = f2 ? (n - k1 + k2) % n : (k1 + k2) % n;
      t[x * order + y] = static_cast<Element>(((f1 + f2) % 2) * n + k);
    }
  }
  return make_trusted_group(order, std::move(t));
}

namespace {

std::vector<Element> greedy_generators(const GroupTable& g) {
  std::vector<Element> gens;
  std::vector<Element> span = g.closure(gens);
  for (Element a = 0; a < g.order() && span.size() < g.order(); ++a) {
    if (!std::binary_search(span.begin(), span.end(), a)) {
      gens.push_back(a);
      span = g.closure(gens);
    }
  }
  return gens;
}

// Extends gens -> images to a full map by walking words; empty on conflict.
std::vector<Element> extend_map(const GroupTable& g, const GroupTable& h,
                                const std::vector<Element>& gens,
                                const std::vector<Element>& images) {
  const Element unset = static_cast<Element>(-1);
  std::vector<Element> map(g.order(), unset);
  map[g.identity()] = h.identity();
  std::vector<Element> queue{g.identity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Element x = g.mul(queue[i], gens[j]);
      Element fx = h.mul(map[queue[i]], images[j]);
      if (map[x] == unset) {
        map[x] = fx;
        queue.push_back(x);
      } else if (map[x] != fx) {
        return {};
      }
    }
  }
  return map;
}

bool is_isomorphism(const GroupTable& g, const GroupTable& h, const std::vector<Element>& map) {
  std::vector<bool> hit(h.order(), false);
  for (Element x : map) {
    if (hit[x]) return false;
    hit[x] = true;
  }
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      if (map[g.mul(a, b)] != h.mul(map[a], map[b])) return false;
  return true;
}

}  // namespace

std::optional<std::vector<Element>> find_isomorphism(const GroupTable& g, const GroupTable& h) {
  if (g.order() != h.order() || g.order_multiset() != h.order_multiset()) return std::nullopt;
  const auto gens = greedy_generators(g);
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const std::size_t want = g.element_order(gens[j]);
    for (Element y = 0; y < h.order(); ++y) {
      if (h.element_order(y) == want) candidates[j].push_back(y);
    }
  }
  std::vector<Element> images(gens.size());
  std::optional<std::vector<Element>> found;
  auto search = [&](auto&& self, std::size_t j) -> bool {
    if (j == gens.size()) {
      auto map = extend_map(g, h, gens, images);
      if (!map.empty() && is_isomorphism(g, h, map)) {
        found = std::move(map);
        return true;
      }
      return false;
    }
    for (Element y : candidates[j]) {
      images[j] = y;
      if (self(self, j + 1)) return true;
    }
    return false;
  };
  search(search, 0);
  return found;
}

}  // namespace vtc
