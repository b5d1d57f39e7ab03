#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vtc/error.hpp"

namespace vtc {

using Element = std::uint32_t;

/// Finite group given by its multiplication table over element ids 0..order-1.
/// Instances always satisfy the group axioms; the only way to make one from
/// untrusted data is group_from_table().
class GroupTable {
 public:
  std::size_t order() const { return inverse_.size(); }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return table_[a * order() + b]; }
  Element inverse(Element a) const { return inverse_[a]; }

  /// Smallest k >= 1 with a^k = e.
  std::size_t element_order(Element a) const;

  /// Element orders sorted ascending.
  std::vector<std::size_t> order_multiset() const;

  /// Subgroup generated by `gens`, as a sorted element list.
  std::vector<Element> closure(std::span<const Element> gens) const;

  bool generates(std::span<const Element> gens) const {
    return closure(gens).size() == order();
  }

 private:
  friend GroupTable group_from_table(const std::vector<std::vector<Element>>&);
  friend GroupTable make_trusted_group(std::size_t, std::vector<Element>);

  std::vector<Element> table_;
  std::vector<Element> inverse_;
  Element identity_ = 0;
};

/// Thrown by group_from_table; `witness` holds the offending triple when the
/// failing axiom has one (associativity: (a*b)*c != a*(b*c)).
class GroupAxiomError : public InvalidInput {
 public:
  GroupAxiomError(const std::string& what, std::optional<std::array<Element, 3>> witness)
      : InvalidInput(what), witness(witness) {}
  std::optional<std::array<Element, 3>> witness;
};

/// Validates a raw table. Associativity is checked exhaustively up to order
/// 256 and on 10^4 seeded random triples above that.
GroupTable group_from_table(const std::vector<std::vector<Element>>& raw);

/// Z_n with element k standing for the residue k.
GroupTable cyclic_group(std::size_t n);

/// G1 x G2; the pair (a, b) gets id a * |G2| + b.
GroupTable direct_product(const GroupTable& g1, const GroupTable& g2);

/// Dihedral group of order 2n: id k < n is the rotation r^k, id n + k is s r^k.
GroupTable dihedral_group(std::size_t n);

/// Isomorphism G -> H as an element map, if one exists. Intended for small
/// groups: matches order multisets, then backtracks over images of a greedy
/// generating set.
std::optional<std::vector<Element>> find_isomorphism(const GroupTable& g, const GroupTable& h);

}  // namespace vtc
