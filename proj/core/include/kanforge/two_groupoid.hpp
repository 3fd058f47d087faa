#pragma once

#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kanforge/detail/hash.hpp"
#include "kanforge/groupoid.hpp"
#include "kanforge/simplicial.hpp"

namespace kanforge {

// Three layers X2 =>> X1 => X0 with four 3-multiplications. Conventions:
// a 1-cell g runs from d10(g) to d11(g) (so d10 is the source map and d11 the
// target map); 2-cell faces d20, d21, d22; degeneracies s00, s10, s11.
//
// mult[i] sends a glued triple (the faces of a 3-simplex other than face i,
// listed by increasing face index) to face i. Horn gluing follows
// d_i eta_j = d_{j-1} eta_i for i < j.
struct TwoGroupoidData {
  int x0 = 0, x1 = 0, x2 = 0;
  std::vector<int> d10, d11;       // X1 -> X0
  std::vector<int> s00;            // X0 -> X1
  std::vector<int> d20, d21, d22;  // X2 -> X1
  std::vector<int> s10, s11;       // X1 -> X2
  using Triple = std::array<int, 3>;
  std::array<std::unordered_map<Triple, int, detail::ArrHash<3>>, 4> mult;

  int d2(int i, int eta) const {
    return i == 0 ? d20[eta] : (i == 1 ? d21[eta] : d22[eta]);
  }
  int m(int i, int a, int b, int c) const;  // throws if outside the horn space

  bool operator==(const TwoGroupoidData& o) const;
};

// The two layers as a 2-truncated simplicial set (used for identity checks
// and as the base of the nerve).
TruncatedSimplicialSet two_truncation(const TwoGroupoidData& D);

// Lambda(X)_{m,j} for m in {2,3}: glued tuples in lexicographic order.
std::vector<std::vector<int>> lambda_space(const TwoGroupoidData& D, int m, int j);

struct TwoGroupoidViolation {
  std::string axiom;  // "1-kan", "2-kan", "simplicial-identity", "m-domain",
                      // "m-face", "m-compat", "coco", "pentagon", ...
  std::vector<int> witness;
  std::string detail;
};

struct TwoGroupoidReport {
  bool ok = true;
  std::vector<TwoGroupoidViolation> violations;
};

TwoGroupoidReport check_two_groupoid(const TwoGroupoidData& D);

// Nerve: levels 0..2 are the layers, level 3 is the graph of mult[0], higher
// levels are compatible face families. Requires check_two_groupoid ok
// (validated unless the caller has already checked).
TruncatedSimplicialSet nerve_two_groupoid(const TwoGroupoidData& D, int N,
                                          bool validate = true);

// Independent construction of nerve level m from assignments on the simplices
// through vertex j (dimensions <= 2), extended by the 3-multiplications.
// Returns the level-m elements as face tuples over nerve level m-1; used as a
// cross-check against nerve_two_groupoid.
std::vector<std::vector<int>> nerve_level_via_vertex_induction(
    const TwoGroupoidData& D, const TruncatedSimplicialSet& nerve, int m, int j);

// Extract the first three layers plus multiplications from a simplicial set
// classified with n <= 2 (multiplications via unique horn fillers).
TwoGroupoidData truncate_to_two_groupoid(const TruncatedSimplicialSet& X);

// Promotion of a groupoid: X2 = composable pairs, multiplications by
// composition. The brute-force comparison data for several checks.
TwoGroupoidData promote_groupoid(const FiniteGroupoid& G);

// One-object one-arrow 2-group on an abelian group given by its table:
// mult[0](a, b, c) = a - b + c.
TwoGroupoidData abelian_two_group(const std::vector<std::vector<int>>& add_table);

}  // namespace kanforge
