#pragma once

#include <vector>

#include "kanforge/shapes.hpp"
#include "kanforge/simplicial.hpp"

namespace kanforge {

// A strict simplicial map: one total map per level, commuting with faces and
// degeneracies. For maps between truncated sets, levels run to the smaller
// truncation.
struct SimplicialMap {
  std::vector<std::vector<int>> level;

  int apply(int n, int x) const { return level[n][x]; }
  bool operator==(const SimplicialMap&) const = default;
  auto operator<=>(const SimplicialMap&) const = default;
};

SimplicialMap identity_map(const TruncatedSimplicialSet& X);

// g after f (levelwise composition up to the common truncation).
SimplicialMap compose_maps(const SimplicialMap& f, const SimplicialMap& g);

// Checks totality and commutation with all structure maps; throws on arity
// problems, returns false on a non-commuting square.
bool is_simplicial_map(const TruncatedSimplicialSet& S,
                       const TruncatedSimplicialSet& X, const SimplicialMap& f);

// All simplicial maps S -> X, in lexicographic order by nondegenerate simplex
// (dimension first, then index) and target element index. Throws
// DimensionError if S has a nondegenerate simplex above X's truncation.
std::vector<SimplicialMap> hom_set(const TruncatedSimplicialSet& S,
                                   const TruncatedSimplicialSet& X);

std::vector<SimplicialMap> hom_set(const ShapePresentation& S,
                                   const TruncatedSimplicialSet& X);

// The values of f (a map out of the shape S realized as index tables) on the
// nondegenerate simplices of S, flattened in (dim, index) order. Two maps are
// equal iff these keys are equal.
std::vector<int> nondegenerate_key(const TruncatedSimplicialSet& S,
                                   const std::vector<std::vector<int>>& nd,
                                   const SimplicialMap& f);

// Restriction of an m-simplex of X along a subshape T of Delta[m]: the values
// sigma pulls back to on T's nondegenerate simplices, in (dim, index) order.
std::vector<int> restrict_simplex(const TruncatedSimplicialSet& X, int m, int sigma,
                                  const ShapePresentation& T);

}  // namespace kanforge
