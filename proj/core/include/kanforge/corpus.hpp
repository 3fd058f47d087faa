#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kanforge/groupoid.hpp"

namespace kanforge {

// A finite group as a multiplication table (element 0 is the identity).
struct FiniteGroup {
  std::string name;
  std::vector<std::vector<int>> mul;
  int order() const { return static_cast<int>(mul.size()); }
};

FiniteGroup cyclic_group(int n);
FiniteGroup klein_four();
FiniteGroup dihedral_group(int n);    // order 2n, n >= 2
FiniteGroup dicyclic_group(int n);    // order 4n, n >= 2 (n = 2 is the quaternions)
FiniteGroup alternating_four();
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// All groups of order <= max_order up to isomorphism (max_order <= 12).
std::vector<FiniteGroup> groups_up_to_order(int max_order);

FiniteGroupoid group_as_groupoid(const FiniteGroup& g);

// Transitive groupoid on k objects with vertex group g (pair groupoid times g).
FiniteGroupoid transitive_groupoid(int k, const FiniteGroup& g);

// Every groupoid with at most `max_objects` objects and `max_arrows` arrows,
// up to isomorphism: disjoint unions of transitive pieces over the group
// list above. Names describe the decomposition.
struct NamedGroupoid {
  std::string name;
  FiniteGroupoid gpd;
};
std::vector<NamedGroupoid> exhaustive_groupoid_corpus(int max_objects, int max_arrows);

// Deterministic pseudo-random groupoids within the same bounds.
std::vector<NamedGroupoid> random_groupoid_corpus(int count, int max_objects,
                                                  int max_arrows, std::uint64_t seed);

// Kernel-pair groupoid of a surjection cover -> base (objects = cover points,
// one arrow between points over the same base point).
FiniteGroupoid cech_groupoid(const std::vector<int>& projection, int base_size);

// Abelian group tables for the 2-group family.
std::vector<std::vector<int>> cyclic_table(int n);
std::vector<std::vector<int>> klein_table();

}  // namespace kanforge
