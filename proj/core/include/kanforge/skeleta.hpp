#pragma once

#include <optional>
#include <string>

#include "kanforge/hom.hpp"
#include "kanforge/simplicial.hpp"

namespace kanforge {

// Sk^m: levels <= m kept, higher levels contain only degeneracies of level-m
// elements (materialized up to out_dim, default the truncation of X).
TruncatedSimplicialSet skeleton(const TruncatedSimplicialSet& X, int m,
                                int out_dim = -1);

// Cosk^m: levels <= m kept; level k > m is the simplicial kernel (compatible
// families of k+1 faces), materialized up to out_dim.
TruncatedSimplicialSet coskeleton(const TruncatedSimplicialSet& X, int m,
                                  int out_dim);

// The canonical comparison X -> Cosk^m(X) above level m.
// check_cosk_identity verifies it is a levelwise bijection commuting with the
// structure maps, up to `up_to` (i.e. Cosk^m(X) = X elementwise).
struct CoskIdentityReport {
  bool ok = true;
  int failed_level = -1;
  std::string detail;
};

CoskIdentityReport check_cosk_identity(const TruncatedSimplicialSet& X, int m,
                                       int up_to);

// Adjunction between Sk^n and Cosk^n: constructs the unit/counit bijection
// between hom(Sk^n(Y), X) and hom(Y, Cosk^n(X)) by enumeration and reports
// whether it is a bijection (used as a corpus-level self-test).
struct AdjunctionReport {
  bool ok = true;
  std::size_t lhs_count = 0;
  std::size_t rhs_count = 0;
  std::string detail;
};

AdjunctionReport check_skeleton_adjunction(const TruncatedSimplicialSet& Y,
                                           const TruncatedSimplicialSet& X, int n);

namespace detail {
// Compatible (k+1)-tuples of level-(k-1) elements of Y (d_i x_j = d_{j-1} x_i
// for i < j), lexicographically ordered.
std::vector<std::vector<int>> simplicial_kernel(const TruncatedSimplicialSet& Y, int k);
}  // namespace detail

}  // namespace kanforge
