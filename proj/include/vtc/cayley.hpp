#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vtc/digraph.hpp"
#include "vtc/group.hpp"

namespace vtc {

struct CayleySpec {
  GroupTable group;
  std::vector<Element> generators;
};

/// Arc x -> y iff x^-1 y is a generator. Throws InvalidInput if the
/// generators include the identity or do not generate the group.
Digraph cayley_digraph(const CayleySpec& spec);

/// Vertex permutation: perm[v] is the image of v.
using Permutation = std::vector<Vertex>;

struct AutomorphismFamily {
  std::vector<Permutation> permutations;
  std::size_t size() const { return permutations.size(); }
};

/// x -> g x for every group element g, in element order.
AutomorphismFamily left_translations(const CayleySpec& spec);

bool is_automorphism(const Digraph& d, const Permutation& perm);
bool is_automorphism(const Graph& g, const Permutation& perm);

Permutation compose(const Permutation& outer, const Permutation& inner);
Permutation inverse(const Permutation& perm);

/// For every ordered pair (u, v) some member maps u to v.
bool acts_transitively(const AutomorphismFamily& fam, std::size_t vertex_count);

// Text format:
//   cyclic n              |  product n1 n2
//   1 3                   |  (1,0),(0,1)
// Generators for products are coordinate pairs; element id is a * n2 + b.
CayleySpec parse_cayley_spec(std::istream& in);
CayleySpec parse_cayley_spec(const std::string& group_line, const std::string& generator_line);

}  // namespace vtc
