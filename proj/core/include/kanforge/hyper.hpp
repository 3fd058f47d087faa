#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kanforge/hom.hpp"
#include "kanforge/kan.hpp"
#include "kanforge/two_groupoid.hpp"

namespace kanforge {

// The space of commuting squares for fixed T -> S and f : Z -> X: pairs of a
// map T -> Z and a map S -> X agreeing after composition.
struct PBSpace {
  std::vector<SimplicialMap> hom_t_z, hom_s_x;
  std::vector<std::pair<int, int>> elems;  // indices into the two hom lists
};

// Direct enumeration; when crosscheck is set the inductive one-simplex-at-a-
// time construction is run as well and any disagreement throws.
PBSpace pb_space(const ShapePresentation& T, const ShapePresentation& S,
                 const TruncatedSimplicialSet& Z, const TruncatedSimplicialSet& X,
                 const SimplicialMap& f, bool crosscheck = true);

// The inductive path on its own (one added simplex per step, each step a
// fibre product over the boundary data). Returns the element keys
// (u over T's nondegenerate simplices, v's index in hom(S, X)).
std::vector<std::pair<std::vector<int>, int>> pb_space_inductive(
    const ShapePresentation& T, const ShapePresentation& S,
    const TruncatedSimplicialSet& Z, const TruncatedSimplicialSet& X,
    const SimplicialMap& f);

struct HypercoverLevel {
  int k = 0;
  bool require_iso = false;    // k >= n
  bool corroboration = false;  // k > n (implied levels, re-verified)
  bool cover = false, iso = false;
  std::size_t pb_size = 0;
  std::optional<std::pair<int, int>> witness;  // PB element with bad fiber
  int witness_fiber = 0;
};

struct HypercoverCertificate {
  bool ok = false;
  int n = 0;
  int checked_dim = 0;
  std::vector<HypercoverLevel> levels;
  std::string detail;
};

// Def-style check: the relative matching map Z_k -> PB(boundary, Z, simplex, X)
// is a cover for k < n and an isomorphism at k = n; the implied isomorphisms
// at n+1, n+2 are re-verified within the truncations.
HypercoverCertificate check_hypercover(const TruncatedSimplicialSet& Z,
                                       const TruncatedSimplicialSet& X,
                                       const SimplicialMap& f, int n);

HypercoverCertificate compose_hypercovers(const TruncatedSimplicialSet& Z,
                                          const TruncatedSimplicialSet& Y,
                                          const TruncatedSimplicialSet& X,
                                          const SimplicialMap& f,
                                          const SimplicialMap& g, int n);

// Levelwise fibre product of f : Z -> X (strict) with f' : Z' -> X
// (a certified hypercover). The projection opposite the hypercover leg is
// itself certified as a hypercover.
struct FibreProductResult {
  TruncatedSimplicialSet total;
  SimplicialMap to_z, to_zp;
  ClassifyResult classified;
  HypercoverCertificate projection_cert;  // for to_z
};
FibreProductResult fibre_product_ngroupoids(const TruncatedSimplicialSet& Z,
                                            const TruncatedSimplicialSet& X,
                                            const TruncatedSimplicialSet& Zp,
                                            const SimplicialMap& f,
                                            const SimplicialMap& fp, int n,
                                            int classify_dim);

// Extends a strict map defined on levels 0..2 to all levels by matching face
// tuples (both sides must be face-determined above level 2, as nerves are).
SimplicialMap extend_strict_map_by_faces(const TruncatedSimplicialSet& Z,
                                         const TruncatedSimplicialSet& X,
                                         SimplicialMap f);

// Pull-back 2-groupoid along partial level-(0,1) data over a 2-groupoid.
struct PartialLevelData {
  int z0 = 0, z1 = 0;
  std::vector<int> d0, d1;  // Z1 -> Z0
  std::vector<int> s0;      // Z0 -> Z1
  std::vector<int> f0, f1;  // into X0, X1
};

struct PullbackTwoGroupoid {
  TwoGroupoidData data;
  // level-2 elements as (z-face triple, x 2-cell)
  std::vector<std::array<int, 4>> cells;
  SimplicialMap map01;  // the induced strict map on nerves (levels 0..N)
  HypercoverCertificate cert;
};

// Throws StructuralError with a witness description when the covering
// hypotheses (f0 surjective; Z1 covers the boundary pull-back) fail.
PullbackTwoGroupoid pullback_two_groupoid(const PartialLevelData& zp,
                                          const TwoGroupoidData& D, int nerve_dim);

struct OneHypercoverReport {
  HypercoverCertificate cert;
  bool f0_bijective = false;
  bool f1_surjective = false;
  bool remark_agrees = false;  // level-1 cover condition == f1 surjectivity
  bool ok = false;
};
OneHypercoverReport check_1_hypercover(const TruncatedSimplicialSet& Z,
                                       const TruncatedSimplicialSet& X,
                                       const SimplicialMap& f, int n);

struct OneMoritaReport {
  OneHypercoverReport left, right;
  bool ok = false;
};
OneMoritaReport check_1_morita(const TruncatedSimplicialSet& X,
                               const TruncatedSimplicialSet& Y,
                               const TruncatedSimplicialSet& Z,
                               const SimplicialMap& f, const SimplicialMap& g,
                               int n);

}  // namespace kanforge
