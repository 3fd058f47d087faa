#pragma once

#include <string>
#include <vector>

#include "kanforge/simplicial.hpp"

namespace kanforge {

enum class ShapeKind { Simplex, Horn, Boundary, Custom };

std::string to_string(ShapeKind k);

// A finite simplicial set presented by monotone maps [n] -> [m]. Level n
// holds the retained maps in lexicographic order; face and degeneracy are
// induced by composition with coface/codegeneracy maps.
struct ShapePresentation {
  ShapeKind kind = ShapeKind::Simplex;
  int m = 0;
  int j = -1;         // for Horn
  int trunc_dim = 0;  // materialization dimension

  // simplices[n]: sorted list of monotone maps [n] -> [m]
  std::vector<std::vector<std::vector<int>>> simplices;

  int size(int n) const { return static_cast<int>(simplices[n].size()); }
  const std::vector<int>& simplex(int n, int idx) const { return simplices[n][idx]; }

  // Index of a monotone map at level n, or -1 if not retained.
  int index_of(int n, const std::vector<int>& f) const;

  // The same shape as index tables (for hom enumeration and identity checks).
  TruncatedSimplicialSet as_simplicial() const;
};

// Membership rules:
//   Simplex(m): every monotone f
//   Horn(m,j):  drop f with {0..m} minus {j} contained in image(f)
//   Boundary(m): drop f surjective onto {0..m}
// Throws StructuralError if j out of range for Horn.
ShapePresentation shape(ShapeKind kind, int m, int j = -1, int trunc_dim = -1);

// Custom shape from explicit simplex lists (must be closed under the induced
// face and degeneracy maps; validated).
ShapePresentation custom_shape(int m, std::vector<std::vector<std::vector<int>>> simplices);

// Sub-presentation test (every simplex of T retained by S).
bool shape_contains(const ShapePresentation& S, const ShapePresentation& T);

}  // namespace kanforge
