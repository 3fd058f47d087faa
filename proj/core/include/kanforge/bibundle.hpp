#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kanforge/groupoid.hpp"

namespace kanforge {

// A Hilsum-Skandalis bibundle between finite groupoids: a set with a left
// action of `left` along jl and a commuting right action of `right` along jr.
// Action tables hold -1 where undefined; left k.e needs src(k) == jl(e),
// right e.k needs tgt(k) == jr(e).
struct Bibundle {
  FiniteGroupoid left, right;
  int total = 0;
  std::vector<int> jl, jr;
  std::vector<int> left_act;   // left.num_arrows * total
  std::vector<int> right_act;  // total * right.num_arrows

  int lact(int k, int e) const {
    return left_act[static_cast<std::size_t>(k) * total + e];
  }
  int ract(int e, int k) const {
    return right_act[static_cast<std::size_t>(e) * right.num_arrows + k];
  }
  void set_lact(int k, int e, int v) {
    left_act[static_cast<std::size_t>(k) * total + e] = v;
  }
  void set_ract(int e, int k, int v) {
    right_act[static_cast<std::size_t>(e) * right.num_arrows + k] = v;
  }

  bool operator==(const Bibundle&) const = default;
};

Bibundle make_bibundle(FiniteGroupoid left, FiniteGroupoid right, int total);

struct BibundleReport {
  bool ok = true;
  std::string detail;
};

// Action axioms, moment-map compatibility, commutation.
BibundleReport validate_bibundle(const Bibundle& E);

// jl surjective and the right action free and transitive on each jl-fiber.
bool right_principal(const Bibundle& E);
// jr surjective and the left action free and transitive on each jr-fiber.
bool left_principal(const Bibundle& E);

// Morita (biprincipal) test.
bool check_morita(const Bibundle& E);

// Identity bibundle of G (total = arrows, both actions by composition).
Bibundle identity_bibundle(const FiniteGroupoid& G);

// Swap the sides: a bibundle from E.right to E.left using inverse actions.
Bibundle reverse_bibundle(const Bibundle& E);

// Composition over the shared middle groupoid: orbits of the diagonal action
// on the fibre product, with minimal-index orbit representatives. Requires E
// right-principal and E.right == F.left.
struct ComposedBibundle {
  Bibundle bundle;
  // raw pairs (e, f) sorted lexicographically, and orbit index per raw pair
  std::vector<std::pair<int, int>> raw;
  std::vector<int> orbit_of_raw;
  std::vector<int> rep_of_orbit;  // raw index of the minimal representative
  int orbit_of(int e, int f) const;
};
ComposedBibundle compose_bibundles(const Bibundle& E, const Bibundle& F);

// An isomorphism of bibundles: a bijection commuting with both moment maps
// and both actions.
struct BibundleIso {
  std::vector<int> fwd, bwd;
};

bool is_bibundle_iso(const Bibundle& E, const Bibundle& F, const BibundleIso& iso);

// Deterministic backtracking search; nullopt is definitive at these sizes.
std::optional<BibundleIso> find_bibundle_iso(const Bibundle& E, const Bibundle& F);

}  // namespace kanforge
