#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kanforge/budget.hpp"

namespace kanforge {

// A finite simplicial set truncated at dimension N. Levels are dense 0-based
// index sets; all structure maps are index arrays.
struct TruncatedSimplicialSet {
  int trunc_dim = 0;
  std::vector<int> level_size;  // trunc_dim + 1 entries

  // face[n][i] : level n -> level n-1, for 1 <= n <= N, 0 <= i <= n.
  // face[0] is empty.
  std::vector<std::vector<std::vector<int>>> face;

  // degen[n][i] : level n -> level n+1, for 0 <= n <= N-1, 0 <= i <= n.
  std::vector<std::vector<std::vector<int>>> degen;

  int levels() const { return trunc_dim + 1; }
  int size(int n) const { return level_size[static_cast<std::size_t>(n)]; }
  int d(int n, int i, int x) const { return face[n][i][x]; }
  int s(int n, int i, int x) const { return degen[n][i][x]; }

  bool operator==(const TruncatedSimplicialSet&) const = default;
};

// Allocates empty identity-free structure of the right arity.
TruncatedSimplicialSet make_simplicial_skeleton(const std::vector<int>& level_sizes);

// Constant simplicial set on a point (all levels singletons).
TruncatedSimplicialSet constant_point(int trunc_dim);

// Constant simplicial set on a finite set (all levels that set, all maps id).
TruncatedSimplicialSet constant_set(int size, int trunc_dim);

// Throws StructuralError if arities or index ranges are wrong.
void validate_structure(const TruncatedSimplicialSet& X);

struct IdentityViolation {
  std::string identity;  // e.g. "d_i d_j = d_{j-1} d_i"
  int level = 0;         // level of the argument element
  int i = 0, j = 0;
  int element = 0;
  int lhs = 0, rhs = 0;
};

struct SimplicialReport {
  bool ok = true;
  std::vector<IdentityViolation> violations;
};

// Checks all five identity families for every composable instance within the
// truncation. Structural problems throw; identity failures are reported.
SimplicialReport check_simplicial_identities(const TruncatedSimplicialSet& X);

// --- simplicial operators -------------------------------------------------
// A monotone map f : [k] -> [m] acts contravariantly: apply_operator(X, f, m, x)
// sends x in level m to level k by the canonical face/degeneracy factorization.
int apply_operator(const TruncatedSimplicialSet& X, const std::vector<int>& f,
                   int m, int x);

// True if x in level n lies in the image of some degeneracy map.
bool is_degenerate(const TruncatedSimplicialSet& X, int n, int x);

// Eilenberg-Zilber data: x = (degeneracy word)* applied to a nondegenerate
// core. `core_dim`/`core` give the nondegenerate part; `collapse` is the
// monotone surjection [n] -> [core_dim] with x = collapse^*(core).
struct EzDecomposition {
  int core_dim = 0;
  int core = 0;
  std::vector<int> collapse;
};

EzDecomposition ez_decompose(const TruncatedSimplicialSet& X, int n, int x);

// Indices of nondegenerate elements per level.
std::vector<std::vector<int>> nondegenerate_elements(const TruncatedSimplicialSet& X);

}  // namespace kanforge
