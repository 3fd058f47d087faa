#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kanforge/hom.hpp"
#include "kanforge/shapes.hpp"
#include "kanforge/simplicial.hpp"

namespace kanforge {

// Fibers of the restriction map hom(Delta[m],X) -> hom(Lambda[m,j],X).
// horns[i] is the key of the i-th horn map (values over the horn's
// nondegenerate simplices, in (dim, index) order); fillers[i] lists the
// m-simplices restricting to it, in increasing index order.
struct RestrictionFibers {
  int m = 0, j = 0;
  std::vector<std::vector<int>> horns;
  std::vector<std::vector<int>> fillers;
};

RestrictionFibers restriction_fibers(const TruncatedSimplicialSet& X, int m, int j);

struct KanStatus {
  int m = 0, j = 0;
  bool cover = false;  // every horn has a filler
  bool iso = false;    // every horn has exactly one filler
  // witness: a horn with zero (for cover failures) or >= 2 fillers
  std::optional<std::vector<int>> witness_horn;
  int witness_filler_count = 0;
};

KanStatus check_kan(const TruncatedSimplicialSet& X, int m, int j);

struct ClassifyResult {
  bool is_n_groupoid = false;  // all Kan conditions hold up to checked_dim
  int n = -1;                  // smallest n with unique fillers above n
  int checked_dim = 0;
  std::vector<KanStatus> statuses;    // all (m, j) examined
  std::optional<KanStatus> failure;   // first Kan failure, if any
};

// Smallest n such that Kan(m,j) holds for all m <= up_to_dim and Kan!(m,j)
// holds for n < m <= up_to_dim. Never extrapolates beyond up_to_dim.
ClassifyResult classify_n_groupoid(const TruncatedSimplicialSet& X, int up_to_dim);

// Fillers of one horn, given as the values of a map Lambda[m,j] -> X.
std::vector<int> fill_horn(const TruncatedSimplicialSet& X, int m, int j,
                           const SimplicialMap& horn);

// Convenience: the horn map determined by listing the m-simplex faces other
// than face j (values in level m-1, listed by increasing face index). Faces
// must glue; throws StructuralError otherwise.
SimplicialMap horn_from_faces(const TruncatedSimplicialSet& X, int m, int j,
                              const std::vector<int>& faces);

}  // namespace kanforge
