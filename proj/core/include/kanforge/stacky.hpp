#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kanforge/bibundle.hpp"
#include "kanforge/two_groupoid.hpp"

namespace kanforge {

// Set-level stacky groupoid data: a groupoid presentation g of the arrow
// stack over the base M, a strict identity chart e, the multiplication
// bibundle em from the fibered product groupoid to g, the associator as an
// orbit table between the two composite bibundles, and the unitors bl, br.
struct StackyGroupoidData {
  FiniteGroupoid g;
  int m_size = 0;
  std::vector<int> s, t;  // g objects -> M (invariant under g arrows)
  std::vector<int> e;     // M -> g objects, section of both s and t
  Bibundle em;            // from the fibered product groupoid to g

  // associator: L orbit -> R orbit (see StackyComposites)
  std::vector<int> assoc;

  // unitors as element tables over em.total, -1 outside their domains:
  // bl on {eta : pr1 jl(eta) in e(M)}, br on {eta : pr2 jl(eta) in e(M)},
  // with values in g arrows
  std::vector<int> bl, br;
};

// A groupoid fibered product with its pair decoding tables.
struct FiberedProductGroupoid {
  FiniteGroupoid gpd;
  std::vector<std::pair<int, int>> objects, arrows;
  std::map<std::pair<int, int>, int> obj_index, arr_index;
};

// objects {(a,b) : fa(a) = fb(b)}, arrows pairwise. fa and fb must be
// invariant under the respective groupoids.
FiberedProductGroupoid fibered_product_groupoid(const FiniteGroupoid& A,
                                                const std::vector<int>& fa,
                                                const FiniteGroupoid& B,
                                                const std::vector<int>& fb);

// The derived data behind the associator: the double and triple product
// groupoids, the two composite bibundles presenting the two ways of
// multiplying three factors, and their orbit structure.
struct StackyComposites {
  FiberedProductGroupoid gg, ggg;
  std::vector<int> jl1, jl2;  // decoded moment components of em

  std::vector<std::pair<int, int>> em_id_elems;  // (em element, g arrow)
  std::vector<std::pair<int, int>> id_em_elems;  // (g arrow, em element)
  std::map<std::pair<int, int>, int> em_id_index, id_em_index;
  Bibundle em_id, id_em;  // from ggg to gg

  ComposedBibundle L, R;  // compose(em_id, em), compose(id_em, em)
  std::vector<std::vector<int>> l_orbit_elems, r_orbit_elems;  // raw per orbit

  int l_orbit(int em3, int gamma, int em1) const;
  int r_orbit(int gamma, int em0, int em2) const;
};

StackyComposites derive_composites(const StackyGroupoidData& S);

struct StackyViolation {
  std::string axiom;  // "structural", "em-bibundle", "moment-compat",
                      // "assoc-iso", "b-iso", "b-on-M", "br", "bl", "bl-br",
                      // "cube", "inverse", "normal-form"
  std::vector<int> witness;
  std::string detail;
};

struct StackyReport {
  bool ok = true;
  std::vector<StackyViolation> violations;
};

StackyReport check_stacky(const StackyGroupoidData& S);

// The geometric quotient replacing the inverse: elements of em whose right
// moment lies on the identity chart, as a bibundle from g to the opposite of
// g.
Bibundle inverse_bibundle(const StackyGroupoidData& S);

bool check_inverse_axiom(const StackyGroupoidData& S);

// The 2-groupoid with X0 = M, X1 = g objects, X2 = em, multiplications read
// off the associator through the composite-bibundle normal forms. Requires
// check_stacky to pass (validated unless the caller has already checked);
// the output is re-verified.
TwoGroupoidData two_groupoid_from_stacky(const StackyGroupoidData& S,
                                         bool validate = true);

// The stacky groupoid of a 2-groupoid: bigon groupoid over X1, em = X2,
// associator from the 3-multiplications, bl the identity and br the bigon
// comparison. Requires check_two_groupoid to pass (validated unless the
// caller has already checked); the output is re-verified unless
// `verify_output` is false.
StackyGroupoidData stacky_from_two_groupoid(const TwoGroupoidData& D,
                                            bool validate = true,
                                            bool verify_output = true);

// The bigon groupoid of a 2-groupoid and the comparison with the other bigon
// space (2-cells with degenerate 0th face).
struct BigonGroupoid {
  FiniteGroupoid gpd;
  std::vector<int> cells;     // arrow index -> X2 element
  std::vector<int> cell_pos;  // X2 element -> arrow index or -1
};
BigonGroupoid bigon_groupoid(const TwoGroupoidData& D);

struct BigonComparison {
  std::vector<int> phi;      // bigons (d2-degenerate) -> d0-degenerate cells
  std::vector<int> phi_inv;  // inverse, indexed by X2, -1 outside
  bool is_groupoid_iso = false;
};
BigonComparison bigon_iso_phi(const TwoGroupoidData& D);

// A strict stacky groupoid from an ordinary finite groupoid: the arrow stack
// is presented by the unit groupoid on the arrow set, em is the graph of
// composition, and all 2-morphism data is trivial.
StackyGroupoidData stacky_from_groupoid(const FiniteGroupoid& K);

// The inverse-graph bibundle of a strict groupoid, for comparison against
// inverse_bibundle(stacky_from_groupoid(K)).
Bibundle strict_inverse_graph(const FiniteGroupoid& K);

// Good chart extraction: a section of the bundle presenting a map M -> stack
// of g, the induced strict chart map e = jr after the least section of jl,
// and the trivializing isomorphism onto g arrows fibered over e.
struct GoodChart {
  std::vector<int> e;  // M -> g objects
  Bibundle trivial;    // the bundle G1 x_{tgt, e} M in standard form
  BibundleIso iso;     // from the input bundle to `trivial`
};
GoodChart extract_good_chart(const FiniteGroupoid& g, int m_size, const Bibundle& ee);

}  // namespace kanforge
