#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kanforge/kan.hpp"
#include "kanforge/simplicial.hpp"

namespace kanforge {

// A finite groupoid with a composition table. comp(a, b) is defined when
// src(a) == tgt(b) and composes like functions: a after b.
struct FiniteGroupoid {
  int num_objects = 0;
  int num_arrows = 0;
  std::vector<int> src, tgt;  // arrows -> objects
  std::vector<int> unit;      // objects -> arrows
  std::vector<int> inv;       // arrows -> arrows
  std::vector<int> comp_table;  // num_arrows^2, -1 where undefined

  int comp(int a, int b) const {
    return comp_table[static_cast<std::size_t>(a) * num_arrows + b];
  }
  void set_comp(int a, int b, int c) {
    comp_table[static_cast<std::size_t>(a) * num_arrows + b] = c;
  }
  bool composable(int a, int b) const { return src[a] == tgt[b]; }

  bool operator==(const FiniteGroupoid&) const = default;
};

// Throws StructuralError on arity problems; reports the first broken axiom
// (unit, associativity, inverse, composability closure) otherwise.
struct GroupoidReport {
  bool ok = true;
  std::string detail;
};
GroupoidReport validate_groupoid(const FiniteGroupoid& G);

FiniteGroupoid opposite_groupoid(const FiniteGroupoid& G);
FiniteGroupoid disjoint_union(const FiniteGroupoid& G, const FiniteGroupoid& H);
FiniteGroupoid product_groupoid(const FiniteGroupoid& G, const FiniteGroupoid& H);

// The groupoid with the given objects and only identity arrows.
FiniteGroupoid unit_groupoid(int num_objects);

// Pair groupoid: one arrow between any two objects.
FiniteGroupoid pair_groupoid(int num_objects);

// Nerve: level n = composable n-strings (g_1, ..., g_n) with
// src(g_i) = tgt(g_{i+1}); arrows are oriented from bigger vertex numbers to
// smaller ones, so d_0 = src and d_1 = tgt on 1-simplices.
TruncatedSimplicialSet nerve_groupoid(const FiniteGroupoid& G, int N);

// Composable strings at each nerve level, in the enumeration order used by
// nerve_groupoid (lexicographic on the arrow tuple).
std::vector<std::vector<std::vector<int>>> nerve_strings(const FiniteGroupoid& G, int N);

// Extracts the groupoid from a 1-groupoid: objects = level 0, arrows =
// level 1, composition and inverse via unique horn fillers. Requires
// classify_n_groupoid(X, min(3, trunc)) to give n <= 1; associativity is
// re-verified. Throws StructuralError when classification fails.
FiniteGroupoid groupoid_from_1groupoid(const TruncatedSimplicialSet& X);

// Isomorphism search (deterministic backtracking). Returns object and arrow
// bijections G -> H, or nullopt.
struct GroupoidIso {
  std::vector<int> object_map;
  std::vector<int> arrow_map;
};
std::optional<GroupoidIso> find_groupoid_iso(const FiniteGroupoid& G,
                                             const FiniteGroupoid& H);

// Validates a candidate iso (bijectivity + structure preservation).
bool is_groupoid_iso(const FiniteGroupoid& G, const FiniteGroupoid& H,
                     const GroupoidIso& iso);

}  // namespace kanforge
