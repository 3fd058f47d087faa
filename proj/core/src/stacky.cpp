#include "kanforge/stacky.hpp"

#include <algorithm>
#include <functional>

namespace kanforge {

FiberedProductGroupoid fibered_product_groupoid(const FiniteGroupoid& A,
                                                const std::vector<int>& fa,
                                                const FiniteGroupoid& B,
                                                const std::vector<int>& fb) {
  FiberedProductGroupoid P;
  for (int a = 0; a < A.num_objects; ++a)
    for (int b = 0; b < B.num_objects; ++b)
      if (fa[static_cast<std::size_t>(a)] == fb[static_cast<std::size_t>(b)]) {
        P.obj_index[{a, b}] = static_cast<int>(P.objects.size());
        P.objects.emplace_back(a, b);
      }
  budget::charge(P.objects.size(), "fibered product objects");
  for (int a = 0; a < A.num_arrows; ++a)
    for (int b = 0; b < B.num_arrows; ++b) {
      if (!P.obj_index.count({A.src[a], B.src[b]})) continue;
      if (!P.obj_index.count({A.tgt[a], B.tgt[b]})) continue;
      P.arr_index[{a, b}] = static_cast<int>(P.arrows.size());
      P.arrows.emplace_back(a, b);
    }
  budget::charge(P.arrows.size(), "fibered product arrows");

  FiniteGroupoid& G = P.gpd;
  G.num_objects = static_cast<int>(P.objects.size());
  G.num_arrows = static_cast<int>(P.arrows.size());
  G.src.resize(G.num_arrows);
  G.tgt.resize(G.num_arrows);
  G.inv.resize(G.num_arrows);
  G.unit.resize(G.num_objects);
  for (int i = 0; i < G.num_arrows; ++i) {
    auto [a, b] = P.arrows[static_cast<std::size_t>(i)];
    G.src[i] = P.obj_index.at({A.src[a], B.src[b]});
    G.tgt[i] = P.obj_index.at({A.tgt[a], B.tgt[b]});
    G.inv[i] = P.arr_index.at({A.inv[a], B.inv[b]});
  }
  for (int i = 0; i < G.num_objects; ++i) {
    auto [a, b] = P.objects[static_cast<std::size_t>(i)];
    G.unit[i] = P.arr_index.at({A.unit[a], B.unit[b]});
  }
  budget::charge(static_cast<std::size_t>(G.num_arrows) * G.num_arrows,
                 "fibered product composition table");
  G.comp_table.assign(static_cast<std::size_t>(G.num_arrows) * G.num_arrows, -1);
  for (int i = 0; i < G.num_arrows; ++i)
    for (int k = 0; k < G.num_arrows; ++k) {
      if (!G.composable(i, k)) continue;
      auto [a1, b1] = P.arrows[static_cast<std::size_t>(i)];
      auto [a2, b2] = P.arrows[static_cast<std::size_t>(k)];
      G.set_comp(i, k, P.arr_index.at({A.comp(a1, a2), B.comp(b1, b2)}));
    }
  return P;
}

int StackyComposites::l_orbit(int em3, int gamma, int em1) const {
  auto it = em_id_index.find({em3, gamma});
  if (it == em_id_index.end()) return -1;
  return L.orbit_of(it->second, em1);
}

int StackyComposites::r_orbit(int gamma, int em0, int em2) const {
  auto it = id_em_index.find({gamma, em0});
  if (it == id_em_index.end()) return -1;
  return R.orbit_of(it->second, em2);
}

StackyComposites derive_composites(const StackyGroupoidData& S) {
  StackyComposites C;
  C.gg = fibered_product_groupoid(S.g, S.s, S.g, S.t);
  std::vector<int> s_pr2(C.gg.objects.size());
  for (std::size_t i = 0; i < C.gg.objects.size(); ++i)
    s_pr2[i] = S.s[static_cast<std::size_t>(C.gg.objects[i].second)];
  C.ggg = fibered_product_groupoid(C.gg.gpd, s_pr2, S.g, S.t);

  C.jl1.resize(S.em.total);
  C.jl2.resize(S.em.total);
  for (int e = 0; e < S.em.total; ++e) {
    auto [p, q] = C.gg.objects[static_cast<std::size_t>(S.em.jl[e])];
    C.jl1[static_cast<std::size_t>(e)] = p;
    C.jl2[static_cast<std::size_t>(e)] = q;
  }

  // (m x id): pairs (eta, gamma) with both moment triples valid
  for (int e = 0; e < S.em.total; ++e)
    for (int gm = 0; gm < S.g.num_arrows; ++gm) {
      if (!C.gg.obj_index.count({S.em.jr[e], S.g.src[gm]})) continue;
      if (!C.ggg.obj_index.count({S.em.jl[e], S.g.tgt[gm]})) continue;
      C.em_id_index[{e, gm}] = static_cast<int>(C.em_id_elems.size());
      C.em_id_elems.emplace_back(e, gm);
    }
  C.em_id = make_bibundle(C.ggg.gpd, C.gg.gpd,
                          static_cast<int>(C.em_id_elems.size()));
  for (std::size_t i = 0; i < C.em_id_elems.size(); ++i) {
    auto [e, gm] = C.em_id_elems[i];
    C.em_id.jl[i] = C.ggg.obj_index.at({S.em.jl[e], S.g.tgt[gm]});
    C.em_id.jr[i] = C.gg.obj_index.at({S.em.jr[e], S.g.src[gm]});
  }
  for (int k = 0; k < C.ggg.gpd.num_arrows; ++k) {
    auto [a12, a3] = C.ggg.arrows[static_cast<std::size_t>(k)];
    for (int i = 0; i < C.em_id.total; ++i) {
      if (C.ggg.gpd.src[k] != C.em_id.jl[i]) continue;
      auto [e, gm] = C.em_id_elems[static_cast<std::size_t>(i)];
      int e2 = S.em.lact(a12, e);
      int gm2 = S.g.comp(a3, gm);
      C.em_id.set_lact(k, i, C.em_id_index.at({e2, gm2}));
    }
  }
  for (int i = 0; i < C.em_id.total; ++i) {
    auto [e, gm] = C.em_id_elems[static_cast<std::size_t>(i)];
    for (int k = 0; k < C.gg.gpd.num_arrows; ++k) {
      if (C.gg.gpd.tgt[k] != C.em_id.jr[i]) continue;
      auto [d1, d2] = C.gg.arrows[static_cast<std::size_t>(k)];
      C.em_id.set_ract(i, k, C.em_id_index.at({S.em.ract(e, d1), S.g.comp(gm, d2)}));
    }
  }

  // (id x m): pairs (gamma, eta)
  for (int gm = 0; gm < S.g.num_arrows; ++gm)
    for (int e = 0; e < S.em.total; ++e) {
      if (!C.gg.obj_index.count({S.g.src[gm], S.em.jr[e]})) continue;
      if (!C.gg.obj_index.count({S.g.tgt[gm], C.jl1[static_cast<std::size_t>(e)]}))
        continue;
      C.id_em_index[{gm, e}] = static_cast<int>(C.id_em_elems.size());
      C.id_em_elems.emplace_back(gm, e);
    }
  C.id_em = make_bibundle(C.ggg.gpd, C.gg.gpd,
                          static_cast<int>(C.id_em_elems.size()));
  for (std::size_t i = 0; i < C.id_em_elems.size(); ++i) {
    auto [gm, e] = C.id_em_elems[i];
    int top = C.gg.obj_index.at({S.g.tgt[gm], C.jl1[static_cast<std::size_t>(e)]});
    C.id_em.jl[i] = C.ggg.obj_index.at({top, C.jl2[static_cast<std::size_t>(e)]});
    C.id_em.jr[i] = C.gg.obj_index.at({S.g.src[gm], S.em.jr[e]});
  }
  for (int k = 0; k < C.ggg.gpd.num_arrows; ++k) {
    auto [a12, a3] = C.ggg.arrows[static_cast<std::size_t>(k)];
    auto [a1, a2] = C.gg.arrows[static_cast<std::size_t>(a12)];
    auto it23 = C.gg.arr_index.find({a2, a3});
    for (int i = 0; i < C.id_em.total; ++i) {
      if (C.ggg.gpd.src[k] != C.id_em.jl[i]) continue;
      if (it23 == C.gg.arr_index.end())
        throw StructuralError("reassociated arrow pair missing");
      auto [gm, e] = C.id_em_elems[static_cast<std::size_t>(i)];
      C.id_em.set_lact(k, i,
                       C.id_em_index.at({S.g.comp(a1, gm), S.em.lact(it23->second, e)}));
    }
  }
  for (int i = 0; i < C.id_em.total; ++i) {
    auto [gm, e] = C.id_em_elems[static_cast<std::size_t>(i)];
    for (int k = 0; k < C.gg.gpd.num_arrows; ++k) {
      if (C.gg.gpd.tgt[k] != C.id_em.jr[i]) continue;
      auto [d1, d2] = C.gg.arrows[static_cast<std::size_t>(k)];
      C.id_em.set_ract(i, k, C.id_em_index.at({S.g.comp(gm, d1), S.em.ract(e, d2)}));
    }
  }

  C.L = compose_bibundles(C.em_id, S.em);
  C.R = compose_bibundles(C.id_em, S.em);
  C.l_orbit_elems.assign(static_cast<std::size_t>(C.L.bundle.total), {});
  for (std::size_t i = 0; i < C.L.raw.size(); ++i)
    C.l_orbit_elems[static_cast<std::size_t>(C.L.orbit_of_raw[i])].push_back(
        static_cast<int>(i));
  C.r_orbit_elems.assign(static_cast<std::size_t>(C.R.bundle.total), {});
  for (std::size_t i = 0; i < C.R.raw.size(); ++i)
    C.r_orbit_elems[static_cast<std::size_t>(C.R.orbit_of_raw[i])].push_back(
        static_cast<int>(i));
  return C;
}

namespace {

bool is_unit_arrow(const FiniteGroupoid& G, int a) {
  return a == G.unit[G.src[a]];
}

// Unique L representative ((em3, unit), em1) with the given em3; returns em1.
int l_rep_by_em3(const StackyComposites& C, const FiniteGroupoid& g, int orbit,
                 int em3) {
  int found = -1;
  for (int ri : C.l_orbit_elems[static_cast<std::size_t>(orbit)]) {
    auto [i1, em1] = C.L.raw[static_cast<std::size_t>(ri)];
    auto [e3, gm] = C.em_id_elems[static_cast<std::size_t>(i1)];
    if (e3 != em3 || !is_unit_arrow(g, gm)) continue;
    if (found >= 0) throw StructuralError("normal form not unique on the left");
    found = em1;
  }
  if (found < 0) throw StructuralError("normal form missing on the left");
  return found;
}

int l_rep_by_em1(const StackyComposites& C, const FiniteGroupoid& g, int orbit,
                 int em1) {
  int found = -1;
  for (int ri : C.l_orbit_elems[static_cast<std::size_t>(orbit)]) {
    auto [i1, e1] = C.L.raw[static_cast<std::size_t>(ri)];
    auto [e3, gm] = C.em_id_elems[static_cast<std::size_t>(i1)];
    if (e1 != em1 || !is_unit_arrow(g, gm)) continue;
    if (found >= 0) throw StructuralError("normal form not unique on the left");
    found = e3;
  }
  if (found < 0) throw StructuralError("normal form missing on the left");
  return found;
}

int r_rep_by_em2(const StackyComposites& C, const FiniteGroupoid& g, int orbit,
                 int em2) {
  int found = -1;
  for (int ri : C.r_orbit_elems[static_cast<std::size_t>(orbit)]) {
    auto [i1, e2] = C.R.raw[static_cast<std::size_t>(ri)];
    auto [gm, e0] = C.id_em_elems[static_cast<std::size_t>(i1)];
    if (e2 != em2 || !is_unit_arrow(g, gm)) continue;
    if (found >= 0) throw StructuralError("normal form not unique on the right");
    found = e0;
  }
  if (found < 0) throw StructuralError("normal form missing on the right");
  return found;
}

int r_rep_by_em0(const StackyComposites& C, const FiniteGroupoid& g, int orbit,
                 int em0) {
  int found = -1;
  for (int ri : C.r_orbit_elems[static_cast<std::size_t>(orbit)]) {
    auto [i1, e2] = C.R.raw[static_cast<std::size_t>(ri)];
    auto [gm, e0] = C.id_em_elems[static_cast<std::size_t>(i1)];
    if (e0 != em0 || !is_unit_arrow(g, gm)) continue;
    if (found >= 0) throw StructuralError("normal form not unique on the right");
    found = e2;
  }
  if (found < 0) throw StructuralError("normal form missing on the right");
  return found;
}

}  // namespace

Bibundle inverse_bibundle(const StackyGroupoidData& S) {
  StackyComposites C = derive_composites(S);
  std::vector<char> on_chart(static_cast<std::size_t>(S.g.num_objects), 0);
  for (int x = 0; x < S.m_size; ++x)
    on_chart[static_cast<std::size_t>(S.e[static_cast<std::size_t>(x)])] = 1;

  std::vector<int> elems;
  std::vector<int> pos(static_cast<std::size_t>(S.em.total), -1);
  for (int e = 0; e < S.em.total; ++e)
    if (on_chart[static_cast<std::size_t>(S.em.jr[e])]) {
      pos[static_cast<std::size_t>(e)] = static_cast<int>(elems.size());
      elems.push_back(e);
    }

  Bibundle inv = make_bibundle(S.g, opposite_groupoid(S.g),
                               static_cast<int>(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    inv.jl[i] = C.jl1[static_cast<std::size_t>(elems[i])];
    inv.jr[i] = C.jl2[static_cast<std::size_t>(elems[i])];
  }
  for (int k = 0; k < S.g.num_arrows; ++k)
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (S.g.src[k] != inv.jl[i]) continue;
      int u = S.g.unit[C.jl2[static_cast<std::size_t>(elems[i])]];
      auto it = C.gg.arr_index.find({k, u});
      if (it == C.gg.arr_index.end()) continue;
      int moved = S.em.lact(it->second, elems[i]);
      if (pos[static_cast<std::size_t>(moved)] < 0)
        throw StructuralError("left action leaves the inverse locus");
      inv.set_lact(k, static_cast<int>(i), pos[static_cast<std::size_t>(moved)]);
    }
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (int k = 0; k < inv.right.num_arrows; ++k) {
      if (inv.right.tgt[k] != inv.jr[i]) continue;
      int u = S.g.unit[C.jl1[static_cast<std::size_t>(elems[i])]];
      auto it = C.gg.arr_index.find({u, k});
      if (it == C.gg.arr_index.end()) continue;
      int moved = S.em.lact(it->second, elems[i]);
      if (pos[static_cast<std::size_t>(moved)] < 0)
        throw StructuralError("second-copy action leaves the inverse locus");
      inv.set_ract(static_cast<int>(i), k, pos[static_cast<std::size_t>(moved)]);
    }
  return inv;
}

bool check_inverse_axiom(const StackyGroupoidData& S) {
  return check_morita(inverse_bibundle(S));
}

namespace {

// Layers and multiplications read off the stacky data, with no verification.
TwoGroupoidData derive_two_groupoid_core(const StackyGroupoidData& S,
                                         const StackyComposites& C) {
  TwoGroupoidData D;
  D.x0 = S.m_size;
  D.x1 = S.g.num_objects;
  D.x2 = S.em.total;
  D.d10 = S.s;
  D.d11 = S.t;
  D.s00 = S.e;
  D.d20 = C.jl2;
  D.d21 = S.em.jr;
  D.d22 = C.jl1;

  std::vector<int> bl_inv(static_cast<std::size_t>(S.g.num_arrows), -1);
  std::vector<int> br_inv(static_cast<std::size_t>(S.g.num_arrows), -1);
  for (int e = 0; e < S.em.total; ++e) {
    if (S.bl[static_cast<std::size_t>(e)] >= 0)
      bl_inv[static_cast<std::size_t>(S.bl[static_cast<std::size_t>(e)])] = e;
    if (S.br[static_cast<std::size_t>(e)] >= 0)
      br_inv[static_cast<std::size_t>(S.br[static_cast<std::size_t>(e)])] = e;
  }
  D.s10.resize(D.x1);
  D.s11.resize(D.x1);
  for (int p = 0; p < D.x1; ++p) {
    D.s10[p] = bl_inv[static_cast<std::size_t>(S.g.unit[p])];
    D.s11[p] = br_inv[static_cast<std::size_t>(S.g.unit[p])];
    if (D.s10[p] < 0 || D.s11[p] < 0)
      throw StructuralError("unitors do not reach the identity arrows");
  }

  std::vector<int> assoc_inv(S.assoc.size(), -1);
  for (std::size_t i = 0; i < S.assoc.size(); ++i)
    assoc_inv[static_cast<std::size_t>(S.assoc[i])] = static_cast<int>(i);

  auto unit_at = [&](int obj) { return S.g.unit[obj]; };
  for (int j = 0; j <= 3; ++j) {
    auto lam = lambda_space(D, 3, j);
    for (const auto& tpl : lam) {
      int value = -1;
      if (j == 0) {
        int lo = C.l_orbit(tpl[2], unit_at(C.jl2[static_cast<std::size_t>(tpl[0])]), tpl[0]);
        if (lo < 0) throw StructuralError("horn escapes the composite bibundle");
        value = r_rep_by_em2(C, S.g, S.assoc[static_cast<std::size_t>(lo)], tpl[1]);
      } else if (j == 1) {
        int ro = C.r_orbit(unit_at(C.jl1[static_cast<std::size_t>(tpl[1])]), tpl[0], tpl[1]);
        if (ro < 0) throw StructuralError("horn escapes the composite bibundle");
        value = l_rep_by_em3(C, S.g, assoc_inv[static_cast<std::size_t>(ro)], tpl[2]);
      } else if (j == 2) {
        int lo = C.l_orbit(tpl[2], unit_at(C.jl2[static_cast<std::size_t>(tpl[1])]), tpl[1]);
        if (lo < 0) throw StructuralError("horn escapes the composite bibundle");
        value = r_rep_by_em0(C, S.g, S.assoc[static_cast<std::size_t>(lo)], tpl[0]);
      } else {
        int ro = C.r_orbit(unit_at(C.jl1[static_cast<std::size_t>(tpl[2])]), tpl[0], tpl[2]);
        if (ro < 0) throw StructuralError("horn escapes the composite bibundle");
        value = l_rep_by_em1(C, S.g, assoc_inv[static_cast<std::size_t>(ro)], tpl[1]);
      }
      D.mult[static_cast<std::size_t>(j)][{tpl[0], tpl[1], tpl[2]}] = value;
    }
  }
  return D;
}

}  // namespace

TwoGroupoidData two_groupoid_from_stacky(const StackyGroupoidData& S, bool validate) {
  if (validate) {
    StackyReport rep = check_stacky(S);
    if (!rep.ok)
      throw StructuralError("two_groupoid_from_stacky: input fails checks (" +
                            rep.violations[0].axiom + ")");
  }
  StackyComposites C = derive_composites(S);
  TwoGroupoidData D = derive_two_groupoid_core(S, C);
  TwoGroupoidReport rep = check_two_groupoid(D);
  if (!rep.ok)
    throw StructuralError(
        "two_groupoid_from_stacky: output fails finite-data checks (" +
        rep.violations[0].axiom + ")");
  return D;
}

StackyReport check_stacky(const StackyGroupoidData& S) {
  StackyReport rep;
  auto violate = [&rep](std::string axiom, std::vector<int> witness,
                        std::string detail) {
    rep.ok = false;
    rep.violations.push_back({std::move(axiom), std::move(witness), std::move(detail)});
  };

  // structural layer
  {
    GroupoidReport g = validate_groupoid(S.g);
    if (!g.ok) {
      violate("structural", {}, "presentation groupoid: " + g.detail);
      return rep;
    }
    if (static_cast<int>(S.s.size()) != S.g.num_objects ||
        static_cast<int>(S.t.size()) != S.g.num_objects ||
        static_cast<int>(S.e.size()) != S.m_size)
      throw StructuralError("stacky data arity mismatch");
    std::vector<char> s_hit(static_cast<std::size_t>(S.m_size), 0);
    std::vector<char> t_hit(static_cast<std::size_t>(S.m_size), 0);
    for (int p = 0; p < S.g.num_objects; ++p) {
      if (S.s[static_cast<std::size_t>(p)] < 0 ||
          S.s[static_cast<std::size_t>(p)] >= S.m_size ||
          S.t[static_cast<std::size_t>(p)] < 0 ||
          S.t[static_cast<std::size_t>(p)] >= S.m_size)
        throw StructuralError("source/target chart out of range");
      s_hit[static_cast<std::size_t>(S.s[static_cast<std::size_t>(p)])] = 1;
      t_hit[static_cast<std::size_t>(S.t[static_cast<std::size_t>(p)])] = 1;
    }
    for (int x = 0; x < S.m_size; ++x) {
      if (!s_hit[static_cast<std::size_t>(x)])
        violate("structural", {x}, "source map not surjective onto the base");
      if (!t_hit[static_cast<std::size_t>(x)])
        violate("structural", {x}, "target map not surjective onto the base");
    }
    for (int a = 0; a < S.g.num_arrows; ++a) {
      if (S.s[static_cast<std::size_t>(S.g.src[a])] !=
          S.s[static_cast<std::size_t>(S.g.tgt[a])])
        violate("structural", {a}, "source map not invariant under the presentation");
      if (S.t[static_cast<std::size_t>(S.g.src[a])] !=
          S.t[static_cast<std::size_t>(S.g.tgt[a])])
        violate("structural", {a}, "target map not invariant under the presentation");
    }
    for (int x = 0; x < S.m_size; ++x) {
      int p = S.e[static_cast<std::size_t>(x)];
      if (p < 0 || p >= S.g.num_objects)
        throw StructuralError("identity chart out of range");
      if (S.s[static_cast<std::size_t>(p)] != x || S.t[static_cast<std::size_t>(p)] != x)
        violate("structural", {x}, "identity chart is not a section of s and t");
    }
    if (!rep.ok) return rep;
  }

  // multiplication bibundle
  FiberedProductGroupoid gg = fibered_product_groupoid(S.g, S.s, S.g, S.t);
  if (!(S.em.left == gg.gpd) || !(S.em.right == S.g)) {
    violate("em-bibundle", {},
            "multiplication bundle is not over the fibered product of the presentation");
    return rep;
  }
  {
    BibundleReport b = validate_bibundle(S.em);
    if (!b.ok) {
      violate("em-bibundle", {}, b.detail);
      return rep;
    }
    if (!right_principal(S.em)) {
      violate("em-bibundle", {}, "right action is not principal");
      return rep;
    }
  }

  StackyComposites C = derive_composites(S);

  // moment-map compatibility
  for (int e = 0; e < S.em.total; ++e) {
    if (S.t[static_cast<std::size_t>(S.em.jr[e])] !=
        S.t[static_cast<std::size_t>(C.jl1[static_cast<std::size_t>(e)])])
      violate("moment-compat", {e}, "target of the product differs from the first factor");
    if (S.s[static_cast<std::size_t>(S.em.jr[e])] !=
        S.s[static_cast<std::size_t>(C.jl2[static_cast<std::size_t>(e)])])
      violate("moment-compat", {e}, "source of the product differs from the second factor");
  }
  if (!rep.ok) return rep;

  // associator
  if (static_cast<int>(S.assoc.size()) != C.L.bundle.total) {
    violate("assoc-iso", {}, "associator table has the wrong domain");
    return rep;
  }
  {
    std::vector<int> bwd(static_cast<std::size_t>(C.R.bundle.total), -1);
    bool bij = C.L.bundle.total == C.R.bundle.total;
    for (std::size_t i = 0; i < S.assoc.size() && bij; ++i) {
      int v = S.assoc[i];
      if (v < 0 || v >= C.R.bundle.total || bwd[static_cast<std::size_t>(v)] >= 0)
        bij = false;
      else
        bwd[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    if (!bij) {
      violate("assoc-iso", {}, "associator is not a bijection of the quotients");
      return rep;
    }
    BibundleIso a{S.assoc, bwd};
    if (!is_bibundle_iso(C.L.bundle, C.R.bundle, a)) {
      violate("assoc-iso", {},
              "associator does not commute with the moments or the actions");
      return rep;
    }
  }

  // unitors as bibundle isomorphisms onto the identity bibundle
  std::vector<char> on_chart(static_cast<std::size_t>(S.g.num_objects), 0);
  for (int x = 0; x < S.m_size; ++x)
    on_chart[static_cast<std::size_t>(S.e[static_cast<std::size_t>(x)])] = 1;
  {
    std::vector<int> bl_seen(static_cast<std::size_t>(S.g.num_arrows), -1);
    std::vector<int> br_seen(static_cast<std::size_t>(S.g.num_arrows), -1);
    for (int e = 0; e < S.em.total; ++e) {
      bool in_l = on_chart[static_cast<std::size_t>(C.jl1[static_cast<std::size_t>(e)])];
      bool in_r = on_chart[static_cast<std::size_t>(C.jl2[static_cast<std::size_t>(e)])];
      if ((S.bl[static_cast<std::size_t>(e)] >= 0) != in_l)
        violate("b-iso", {e}, "left unitor domain mismatch");
      if ((S.br[static_cast<std::size_t>(e)] >= 0) != in_r)
        violate("b-iso", {e}, "right unitor domain mismatch");
      if (in_l && S.bl[static_cast<std::size_t>(e)] >= 0) {
        int v = S.bl[static_cast<std::size_t>(e)];
        if (bl_seen[static_cast<std::size_t>(v)] >= 0)
          violate("b-iso", {e}, "left unitor not injective");
        bl_seen[static_cast<std::size_t>(v)] = e;
        if (S.g.tgt[v] != C.jl2[static_cast<std::size_t>(e)] ||
            S.g.src[v] != S.em.jr[e])
          violate("b-iso", {e}, "left unitor breaks the moment maps");
      }
      if (in_r && S.br[static_cast<std::size_t>(e)] >= 0) {
        int v = S.br[static_cast<std::size_t>(e)];
        if (br_seen[static_cast<std::size_t>(v)] >= 0)
          violate("b-iso", {e}, "right unitor not injective");
        br_seen[static_cast<std::size_t>(v)] = e;
        if (S.g.tgt[v] != C.jl1[static_cast<std::size_t>(e)] ||
            S.g.src[v] != S.em.jr[e])
          violate("b-iso", {e}, "right unitor breaks the moment maps");
      }
    }
    for (int v = 0; v < S.g.num_arrows && rep.ok; ++v) {
      if (bl_seen[static_cast<std::size_t>(v)] < 0)
        violate("b-iso", {v}, "left unitor not surjective onto the arrows");
      if (br_seen[static_cast<std::size_t>(v)] < 0)
        violate("b-iso", {v}, "right unitor not surjective onto the arrows");
    }
    if (!rep.ok) return rep;
    // equivariance
    for (int e = 0; e < S.em.total; ++e) {
      if (S.bl[static_cast<std::size_t>(e)] >= 0) {
        for (int k = 0; k < S.g.num_arrows; ++k) {
          if (S.g.tgt[k] == S.em.jr[e]) {
            int moved = S.em.ract(e, k);
            if (S.bl[static_cast<std::size_t>(moved)] !=
                S.g.comp(S.bl[static_cast<std::size_t>(e)], k))
              violate("b-iso", {e, k}, "left unitor not right-equivariant");
          }
          if (S.g.src[k] == C.jl2[static_cast<std::size_t>(e)]) {
            int u = S.g.unit[C.jl1[static_cast<std::size_t>(e)]];
            auto it = gg.arr_index.find({u, k});
            if (it == gg.arr_index.end()) continue;
            int moved = S.em.lact(it->second, e);
            if (S.bl[static_cast<std::size_t>(moved)] !=
                S.g.comp(k, S.bl[static_cast<std::size_t>(e)]))
              violate("b-iso", {e, k}, "left unitor not left-equivariant");
          }
        }
      }
      if (S.br[static_cast<std::size_t>(e)] >= 0) {
        for (int k = 0; k < S.g.num_arrows; ++k) {
          if (S.g.tgt[k] == S.em.jr[e]) {
            int moved = S.em.ract(e, k);
            if (S.br[static_cast<std::size_t>(moved)] !=
                S.g.comp(S.br[static_cast<std::size_t>(e)], k))
              violate("b-iso", {e, k}, "right unitor not right-equivariant");
          }
          if (S.g.src[k] == C.jl1[static_cast<std::size_t>(e)]) {
            int u = S.g.unit[C.jl2[static_cast<std::size_t>(e)]];
            auto it = gg.arr_index.find({k, u});
            if (it == gg.arr_index.end()) continue;
            int moved = S.em.lact(it->second, e);
            if (S.br[static_cast<std::size_t>(moved)] !=
                S.g.comp(k, S.br[static_cast<std::size_t>(e)]))
              violate("b-iso", {e, k}, "right unitor not left-equivariant");
          }
        }
      }
    }
    if (!rep.ok) return rep;
  }

  // restriction of both unitors to the identity chart agrees
  for (int e = 0; e < S.em.total; ++e)
    if (S.bl[static_cast<std::size_t>(e)] >= 0 && S.br[static_cast<std::size_t>(e)] >= 0 &&
        S.bl[static_cast<std::size_t>(e)] != S.br[static_cast<std::size_t>(e)])
      violate("b-on-M", {e}, "unitors disagree on the identity chart");
  if (!rep.ok) return rep;

  // unit coherences through the associator
  {
    std::vector<int> bl_inv(static_cast<std::size_t>(S.g.num_arrows), -1);
    std::vector<int> br_inv(static_cast<std::size_t>(S.g.num_arrows), -1);
    for (int e = 0; e < S.em.total; ++e) {
      if (S.bl[static_cast<std::size_t>(e)] >= 0)
        bl_inv[static_cast<std::size_t>(S.bl[static_cast<std::size_t>(e)])] = e;
      if (S.br[static_cast<std::size_t>(e)] >= 0)
        br_inv[static_cast<std::size_t>(S.br[static_cast<std::size_t>(e)])] = e;
    }
    auto s10ish = [&](int p) { return bl_inv[static_cast<std::size_t>(S.g.unit[p])]; };
    auto s11ish = [&](int p) { return br_inv[static_cast<std::size_t>(S.g.unit[p])]; };
    auto lorb = [&](int em3, int em1) {
      return C.l_orbit(em3, S.g.unit[C.jl2[static_cast<std::size_t>(em1)]], em1);
    };
    auto rorb = [&](int em0, int em2) {
      return C.r_orbit(S.g.unit[C.jl1[static_cast<std::size_t>(em2)]], em0, em2);
    };
    auto check_eq = [&](const char* axiom, int e, int l3, int l1, int r0, int r2) {
      int lo = lorb(l3, l1);
      int ro = rorb(r0, r2);
      if (lo < 0 || ro < 0 || S.assoc[static_cast<std::size_t>(lo)] != ro)
        violate(axiom, {e}, "associator breaks the unit coherence");
    };
    for (int e = 0; e < S.em.total; ++e) {
      check_eq("bl", e, s10ish(C.jl1[static_cast<std::size_t>(e)]), e, e,
               s10ish(S.em.jr[e]));
      check_eq("br", e, e, s11ish(S.em.jr[e]),
               s11ish(C.jl2[static_cast<std::size_t>(e)]), e);
      check_eq("bl-br", e, s11ish(C.jl1[static_cast<std::size_t>(e)]), e,
               s10ish(C.jl2[static_cast<std::size_t>(e)]), e);
    }
    if (!rep.ok) return rep;
  }

  // the higher coherence of the associator, as associativity of the derived
  // 3-multiplications
  try {
    TwoGroupoidData D = derive_two_groupoid_core(S, C);
    TwoGroupoidReport two = check_two_groupoid(D);
    for (const auto& v : two.violations)
      violate("cube", v.witness, v.axiom + ": " + v.detail);
  } catch (const StructuralError& ex) {
    violate("normal-form", {}, ex.what());
  }
  if (!rep.ok) return rep;

  // the inverse axiom in its quotient-bibundle form
  try {
    if (!check_inverse_axiom(S))
      violate("inverse", {}, "the quotient bundle is not a Morita bibundle");
  } catch (const StructuralError& ex) {
    violate("inverse", {}, ex.what());
  }
  return rep;
}

BigonGroupoid bigon_groupoid(const TwoGroupoidData& D) {
  std::vector<char> unit_edge(static_cast<std::size_t>(D.x1), 0);
  for (int x = 0; x < D.x0; ++x)
    unit_edge[static_cast<std::size_t>(D.s00[static_cast<std::size_t>(x)])] = 1;

  BigonGroupoid B;
  B.cell_pos.assign(static_cast<std::size_t>(D.x2), -1);
  for (int eta = 0; eta < D.x2; ++eta)
    if (unit_edge[static_cast<std::size_t>(D.d22[static_cast<std::size_t>(eta)])]) {
      B.cell_pos[static_cast<std::size_t>(eta)] = static_cast<int>(B.cells.size());
      B.cells.push_back(eta);
    }

  FiniteGroupoid& G = B.gpd;
  G.num_objects = D.x1;
  G.num_arrows = static_cast<int>(B.cells.size());
  G.src.resize(G.num_arrows);
  G.tgt.resize(G.num_arrows);
  G.inv.resize(G.num_arrows);
  G.unit.resize(G.num_objects);
  for (int a = 0; a < G.num_arrows; ++a) {
    int c = B.cells[static_cast<std::size_t>(a)];
    G.src[a] = D.d21[static_cast<std::size_t>(c)];
    G.tgt[a] = D.d20[static_cast<std::size_t>(c)];
  }
  for (int p = 0; p < G.num_objects; ++p) {
    int c = D.s10[static_cast<std::size_t>(p)];
    if (B.cell_pos[static_cast<std::size_t>(c)] < 0)
      throw StructuralError("degenerate 2-cell is not a bigon");
    G.unit[p] = B.cell_pos[static_cast<std::size_t>(c)];
  }
  budget::charge(static_cast<std::size_t>(G.num_arrows) * G.num_arrows,
                 "bigon composition table");
  G.comp_table.assign(static_cast<std::size_t>(G.num_arrows) * G.num_arrows, -1);
  auto base_point = [&D](int cell) {
    return D.d10[static_cast<std::size_t>(D.d22[static_cast<std::size_t>(cell)])];
  };
  for (int a = 0; a < G.num_arrows; ++a)
    for (int b = 0; b < G.num_arrows; ++b) {
      if (!G.composable(a, b)) continue;
      int c0 = B.cells[static_cast<std::size_t>(a)];
      int c2 = B.cells[static_cast<std::size_t>(b)];
      int eta3 = D.s10[static_cast<std::size_t>(
          D.s00[static_cast<std::size_t>(base_point(c2))])];
      int prod = D.m(1, c0, c2, eta3);
      if (B.cell_pos[static_cast<std::size_t>(prod)] < 0)
        throw StructuralError("bigon product is not a bigon");
      G.set_comp(a, b, B.cell_pos[static_cast<std::size_t>(prod)]);
    }
  for (int a = 0; a < G.num_arrows; ++a) {
    int c = B.cells[static_cast<std::size_t>(a)];
    int eta1 = D.s10[static_cast<std::size_t>(D.d21[static_cast<std::size_t>(c)])];
    int eta3 = D.s10[static_cast<std::size_t>(
        D.s00[static_cast<std::size_t>(base_point(c))])];
    int ic = D.m(0, eta1, c, eta3);
    if (B.cell_pos[static_cast<std::size_t>(ic)] < 0)
      throw StructuralError("bigon inverse is not a bigon");
    G.inv[a] = B.cell_pos[static_cast<std::size_t>(ic)];
  }
  GroupoidReport rep = validate_groupoid(G);
  if (!rep.ok) throw StructuralError("bigon groupoid invalid: " + rep.detail);
  return B;
}

BigonComparison bigon_iso_phi(const TwoGroupoidData& D) {
  BigonGroupoid B = bigon_groupoid(D);
  std::vector<char> unit_edge(static_cast<std::size_t>(D.x1), 0);
  for (int x = 0; x < D.x0; ++x)
    unit_edge[static_cast<std::size_t>(D.s00[static_cast<std::size_t>(x)])] = 1;

  // the other bigon space: cells with degenerate 0th face
  std::vector<int> tilde_cells;
  std::vector<int> tilde_pos(static_cast<std::size_t>(D.x2), -1);
  for (int eta = 0; eta < D.x2; ++eta)
    if (unit_edge[static_cast<std::size_t>(D.d20[static_cast<std::size_t>(eta)])]) {
      tilde_pos[static_cast<std::size_t>(eta)] = static_cast<int>(tilde_cells.size());
      tilde_cells.push_back(eta);
    }

  BigonComparison cmp;
  cmp.phi.assign(B.cells.size(), -1);
  cmp.phi_inv.assign(static_cast<std::size_t>(D.x2), -1);
  for (std::size_t a = 0; a < B.cells.size(); ++a) {
    int c = B.cells[a];
    int src = D.d21[static_cast<std::size_t>(c)];
    cmp.phi[a] = D.m(0, D.s11[static_cast<std::size_t>(src)],
                     D.s10[static_cast<std::size_t>(src)], c);
  }
  for (int t : tilde_cells) {
    int src = D.d21[static_cast<std::size_t>(t)];
    int back = D.m(3, t, D.s11[static_cast<std::size_t>(src)],
                   D.s10[static_cast<std::size_t>(src)]);
    cmp.phi_inv[static_cast<std::size_t>(t)] = back;
  }

  // tilde groupoid: src = d21, tgt = d22, unit = s11, product via mult[2]
  FiniteGroupoid T;
  T.num_objects = D.x1;
  T.num_arrows = static_cast<int>(tilde_cells.size());
  T.src.resize(T.num_arrows);
  T.tgt.resize(T.num_arrows);
  T.inv.assign(static_cast<std::size_t>(T.num_arrows), -1);
  T.unit.resize(T.num_objects);
  for (int a = 0; a < T.num_arrows; ++a) {
    int c = tilde_cells[static_cast<std::size_t>(a)];
    T.src[a] = D.d21[static_cast<std::size_t>(c)];
    T.tgt[a] = D.d22[static_cast<std::size_t>(c)];
  }
  for (int p = 0; p < T.num_objects; ++p) {
    int c = D.s11[static_cast<std::size_t>(p)];
    if (tilde_pos[static_cast<std::size_t>(c)] < 0)
      throw StructuralError("degenerate 2-cell is not in the other bigon space");
    T.unit[p] = tilde_pos[static_cast<std::size_t>(c)];
  }
  T.comp_table.assign(static_cast<std::size_t>(T.num_arrows) * T.num_arrows, -1);
  auto tilde_point = [&D](int cell) {
    return D.d10[static_cast<std::size_t>(D.d21[static_cast<std::size_t>(cell)])];
  };
  for (int a = 0; a < T.num_arrows; ++a)
    for (int b = 0; b < T.num_arrows; ++b) {
      if (!T.composable(a, b)) continue;
      int eta3 = tilde_cells[static_cast<std::size_t>(a)];
      int eta1 = tilde_cells[static_cast<std::size_t>(b)];
      int eta0 = D.s10[static_cast<std::size_t>(
          D.s00[static_cast<std::size_t>(tilde_point(eta1))])];
      int prod = D.m(2, eta0, eta1, eta3);
      if (tilde_pos[static_cast<std::size_t>(prod)] < 0)
        throw StructuralError("tilde product leaves the bigon space");
      T.set_comp(a, b, tilde_pos[static_cast<std::size_t>(prod)]);
    }
  for (int a = 0; a < T.num_arrows; ++a) {
    for (int b = 0; b < T.num_arrows; ++b) {
      if (T.comp(a, b) == T.unit[T.tgt[a]] && T.comp(b, a) == T.unit[T.src[a]] &&
          T.src[b] == T.tgt[a] && T.tgt[b] == T.src[a]) {
        T.inv[a] = b;
        break;
      }
    }
    if (T.inv[a] < 0) throw StructuralError("tilde bigon has no inverse");
  }
  GroupoidReport trep = validate_groupoid(T);

  // phi as a groupoid morphism on arrow indices
  cmp.is_groupoid_iso = trep.ok;
  std::vector<int> phi_arrow(B.cells.size(), -1);
  for (std::size_t a = 0; a < B.cells.size(); ++a) {
    int t = tilde_pos[static_cast<std::size_t>(cmp.phi[a])];
    if (t < 0) { cmp.is_groupoid_iso = false; break; }
    phi_arrow[a] = t;
  }
  if (cmp.is_groupoid_iso) {
    for (std::size_t a = 0; a < B.cells.size() && cmp.is_groupoid_iso; ++a) {
      int t = phi_arrow[a];
      int back = cmp.phi_inv[static_cast<std::size_t>(tilde_cells[static_cast<std::size_t>(t)])];
      if (back != B.cells[a]) cmp.is_groupoid_iso = false;
      if (T.src[t] != B.gpd.src[static_cast<int>(a)] ||
          T.tgt[t] != B.gpd.tgt[static_cast<int>(a)])
        cmp.is_groupoid_iso = false;
    }
    for (int a = 0; a < B.gpd.num_arrows && cmp.is_groupoid_iso; ++a)
      for (int b = 0; b < B.gpd.num_arrows && cmp.is_groupoid_iso; ++b) {
        if (!B.gpd.composable(a, b)) continue;
        if (T.comp(phi_arrow[static_cast<std::size_t>(a)],
                   phi_arrow[static_cast<std::size_t>(b)]) !=
            phi_arrow[static_cast<std::size_t>(B.gpd.comp(a, b))])
          cmp.is_groupoid_iso = false;
      }
  }
  return cmp;
}

StackyGroupoidData stacky_from_two_groupoid(const TwoGroupoidData& D, bool validate,
                                            bool verify_output) {
  if (validate) {
    TwoGroupoidReport rep = check_two_groupoid(D);
    if (!rep.ok)
      throw StructuralError("stacky_from_two_groupoid: input fails checks (" +
                            rep.violations[0].axiom + ")");
  }
  BigonGroupoid B = bigon_groupoid(D);

  StackyGroupoidData S;
  S.g = B.gpd;
  S.m_size = D.x0;
  S.s = D.d10;
  S.t = D.d11;
  S.e = D.s00;

  FiberedProductGroupoid gg = fibered_product_groupoid(S.g, S.s, S.g, S.t);
  S.em = make_bibundle(gg.gpd, S.g, D.x2);
  for (int eta = 0; eta < D.x2; ++eta) {
    S.em.jl[eta] = gg.obj_index.at(
        {D.d22[static_cast<std::size_t>(eta)], D.d20[static_cast<std::size_t>(eta)]});
    S.em.jr[eta] = D.d21[static_cast<std::size_t>(eta)];
  }
  // right action: eta . beta = m1(eta, beta, s0 d2 eta)
  for (int eta = 0; eta < D.x2; ++eta)
    for (int b = 0; b < S.g.num_arrows; ++b) {
      if (S.g.tgt[b] != S.em.jr[eta]) continue;
      int eta3 = D.s10[static_cast<std::size_t>(D.d22[static_cast<std::size_t>(eta)])];
      S.em.set_ract(eta, b, D.m(1, eta, B.cells[static_cast<std::size_t>(b)], eta3));
    }
  // left action: (b1, b2) . eta = (b1, 1) . ((1, b2) . eta)
  for (int k = 0; k < gg.gpd.num_arrows; ++k) {
    auto [b1, b2] = gg.arrows[static_cast<std::size_t>(k)];
    for (int eta = 0; eta < D.x2; ++eta) {
      if (gg.gpd.src[k] != S.em.jl[eta]) continue;
      int step2 = D.m(1, B.cells[static_cast<std::size_t>(b2)], eta,
                      D.s11[static_cast<std::size_t>(D.d22[static_cast<std::size_t>(eta)])]);
      int step1 = D.m(0, step2,
                      D.s10[static_cast<std::size_t>(D.d21[static_cast<std::size_t>(step2)])],
                      B.cells[static_cast<std::size_t>(b1)]);
      S.em.set_lact(k, eta, step1);
    }
  }

  StackyComposites C = derive_composites(S);

  // associator orbit table from the 3-multiplications
  std::map<std::pair<int, int>, std::vector<int>> x2_by_d1d2;
  for (int eta = 0; eta < D.x2; ++eta)
    x2_by_d1d2[{D.d21[static_cast<std::size_t>(eta)],
                D.d22[static_cast<std::size_t>(eta)]}]
        .push_back(eta);
  S.assoc.assign(static_cast<std::size_t>(C.L.bundle.total), -1);
  for (int o = 0; o < C.L.bundle.total; ++o) {
    int rep_raw = C.L.rep_of_orbit[static_cast<std::size_t>(o)];
    auto [i1, em1] = C.L.raw[static_cast<std::size_t>(rep_raw)];
    auto [em3, gm] = C.em_id_elems[static_cast<std::size_t>(i1)];
    // normalize the middle arrow to a unit
    int em1n = em1;
    if (!is_unit_arrow(S.g, gm)) {
      int u = S.g.unit[C.jl1[static_cast<std::size_t>(em1)]];
      int k = gg.arr_index.at({u, gm});
      em1n = S.em.lact(k, em1);
    }
    // choose the least 2-cell closing the horn (eta1n, ?, em3)
    auto it = x2_by_d1d2.find({D.d21[static_cast<std::size_t>(em1n)],
                               D.d22[static_cast<std::size_t>(em3)]});
    if (it == x2_by_d1d2.end() || it->second.empty())
      throw StructuralError("no 2-cell closes the associator horn");
    int eta2 = it->second.front();
    int eta0 = D.m(0, em1n, eta2, em3);
    int ro = C.r_orbit(S.g.unit[D.d22[static_cast<std::size_t>(eta2)]], eta0, eta2);
    if (ro < 0) throw StructuralError("associator image escapes the quotient");
    S.assoc[static_cast<std::size_t>(o)] = ro;
  }

  // unitors: bl the identity on bigons, br the bigon comparison
  S.bl.assign(static_cast<std::size_t>(D.x2), -1);
  S.br.assign(static_cast<std::size_t>(D.x2), -1);
  std::vector<char> unit_edge(static_cast<std::size_t>(D.x1), 0);
  for (int x = 0; x < D.x0; ++x)
    unit_edge[static_cast<std::size_t>(D.s00[static_cast<std::size_t>(x)])] = 1;
  for (int eta = 0; eta < D.x2; ++eta) {
    if (B.cell_pos[static_cast<std::size_t>(eta)] >= 0)
      S.bl[static_cast<std::size_t>(eta)] = B.cell_pos[static_cast<std::size_t>(eta)];
    if (unit_edge[static_cast<std::size_t>(D.d20[static_cast<std::size_t>(eta)])]) {
      int src = D.d21[static_cast<std::size_t>(eta)];
      int back = D.m(3, eta, D.s11[static_cast<std::size_t>(src)],
                     D.s10[static_cast<std::size_t>(src)]);
      if (B.cell_pos[static_cast<std::size_t>(back)] < 0)
        throw StructuralError("bigon comparison leaves the bigon space");
      S.br[static_cast<std::size_t>(eta)] = B.cell_pos[static_cast<std::size_t>(back)];
    }
  }

  if (verify_output) {
    StackyReport rep = check_stacky(S);
    if (!rep.ok)
      throw StructuralError("stacky_from_two_groupoid: output fails checks (" +
                            rep.violations[0].axiom + ")");
  }
  return S;
}

StackyGroupoidData stacky_from_groupoid(const FiniteGroupoid& K) {
  StackyGroupoidData S;
  S.g = unit_groupoid(K.num_arrows);
  S.m_size = K.num_objects;
  S.s = K.src;
  S.t = K.tgt;
  S.e = K.unit;

  FiberedProductGroupoid gg = fibered_product_groupoid(S.g, S.s, S.g, S.t);
  // em: graph of composition; total = composable pairs = gg objects
  S.em = make_bibundle(gg.gpd, S.g, gg.gpd.num_objects);
  for (int i = 0; i < S.em.total; ++i) {
    auto [k1, k2] = gg.objects[static_cast<std::size_t>(i)];
    S.em.jl[i] = i;
    S.em.jr[i] = K.comp(k1, k2);
  }
  for (int k = 0; k < gg.gpd.num_arrows; ++k)
    for (int i = 0; i < S.em.total; ++i)
      if (gg.gpd.src[k] == S.em.jl[i]) S.em.set_lact(k, i, gg.gpd.tgt[k]);
  for (int i = 0; i < S.em.total; ++i)
    for (int k = 0; k < S.g.num_arrows; ++k)
      if (S.g.tgt[k] == S.em.jr[i]) S.em.set_ract(i, k, i);

  StackyComposites C = derive_composites(S);
  S.assoc.assign(static_cast<std::size_t>(C.L.bundle.total), -1);
  for (int o = 0; o < C.L.bundle.total; ++o) {
    int rep_raw = C.L.rep_of_orbit[static_cast<std::size_t>(o)];
    auto [i1, em1] = C.L.raw[static_cast<std::size_t>(rep_raw)];
    auto [em3, gm] = C.em_id_elems[static_cast<std::size_t>(i1)];
    // decode: em3 = (k1, k2), gm = unit at k3, em1 = (k1 k2, k3)
    auto [k1, k2] = gg.objects[static_cast<std::size_t>(em3)];
    int k3 = gm;  // unit groupoid: arrows are objects
    auto [k12, k3b] = gg.objects[static_cast<std::size_t>(em1)];
    if (k12 != K.comp(k1, k2) || k3b != k3)
      throw StructuralError("strict associator: unexpected representative");
    int em0 = C.gg.obj_index.at({k2, k3});
    int em2 = C.gg.obj_index.at({k1, K.comp(k2, k3)});
    int ro = C.r_orbit(S.g.unit[k1], em0, em2);
    if (ro < 0) throw StructuralError("strict associator image missing");
    S.assoc[static_cast<std::size_t>(o)] = ro;
  }

  S.bl.assign(static_cast<std::size_t>(S.em.total), -1);
  S.br.assign(static_cast<std::size_t>(S.em.total), -1);
  for (int i = 0; i < S.em.total; ++i) {
    auto [k1, k2] = gg.objects[static_cast<std::size_t>(i)];
    if (k1 == K.unit[K.tgt[k2]]) S.bl[static_cast<std::size_t>(i)] = k2;
    if (k2 == K.unit[K.src[k1]]) S.br[static_cast<std::size_t>(i)] = k1;
  }
  return S;
}

Bibundle strict_inverse_graph(const FiniteGroupoid& K) {
  FiniteGroupoid g = unit_groupoid(K.num_arrows);
  Bibundle E = make_bibundle(g, opposite_groupoid(g), K.num_arrows);
  for (int k = 0; k < K.num_arrows; ++k) {
    E.jl[k] = k;
    E.jr[k] = K.inv[k];
  }
  for (int k = 0; k < K.num_arrows; ++k) {
    E.set_lact(k, k, k);
    E.set_ract(k, K.inv[k], k);
  }
  return E;
}

GoodChart extract_good_chart(const FiniteGroupoid& g, int m_size, const Bibundle& ee) {
  if (!(ee.left == unit_groupoid(m_size)))
    throw StructuralError("identity bundle must live over the trivial base groupoid");
  if (!(ee.right == g)) throw StructuralError("identity bundle right groupoid mismatch");
  BibundleReport rep = validate_bibundle(ee);
  if (!rep.ok) throw StructuralError("identity bundle invalid: " + rep.detail);
  if (!right_principal(ee))
    throw StructuralError("identity bundle is not principal over the base");

  GoodChart out;
  std::vector<int> section(static_cast<std::size_t>(m_size), -1);
  for (int e = 0; e < ee.total; ++e)
    if (section[static_cast<std::size_t>(ee.jl[e])] < 0)
      section[static_cast<std::size_t>(ee.jl[e])] = e;
  out.e.resize(static_cast<std::size_t>(m_size));
  for (int x = 0; x < m_size; ++x)
    out.e[static_cast<std::size_t>(x)] = ee.jr[section[static_cast<std::size_t>(x)]];

  // standard form: pairs (gamma, x) with tgt gamma = e(x)
  std::vector<std::pair<int, int>> pairs;
  std::map<std::pair<int, int>, int> pidx;
  for (int gm = 0; gm < g.num_arrows; ++gm)
    for (int x = 0; x < m_size; ++x)
      if (g.tgt[gm] == out.e[static_cast<std::size_t>(x)]) {
        pidx[{gm, x}] = static_cast<int>(pairs.size());
        pairs.emplace_back(gm, x);
      }
  out.trivial = make_bibundle(ee.left, g, static_cast<int>(pairs.size()));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out.trivial.jl[i] = pairs[i].second;
    out.trivial.jr[i] = g.src[pairs[i].first];
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [gm, x] = pairs[i];
    out.trivial.set_lact(ee.left.unit[x], static_cast<int>(i), static_cast<int>(i));
    for (int d = 0; d < g.num_arrows; ++d)
      if (g.tgt[d] == g.src[gm])
        out.trivial.set_ract(static_cast<int>(i), d, pidx.at({g.comp(gm, d), x}));
  }

  // trivializing iso: e |-> (gamma, jl e) with sigma(jl e) . gamma = e
  out.iso.fwd.assign(static_cast<std::size_t>(ee.total), -1);
  out.iso.bwd.assign(pairs.size(), -1);
  for (int e = 0; e < ee.total; ++e) {
    int x = ee.jl[e];
    int base = section[static_cast<std::size_t>(x)];
    int found = -1;
    for (int gm = 0; gm < g.num_arrows; ++gm) {
      if (g.tgt[gm] != ee.jr[base]) continue;
      if (ee.ract(base, gm) == e) { found = gm; break; }
    }
    if (found < 0) throw StructuralError("section does not reach the fiber");
    out.iso.fwd[static_cast<std::size_t>(e)] = pidx.at({found, x});
    out.iso.bwd[static_cast<std::size_t>(pidx.at({found, x}))] = e;
  }
  if (!is_bibundle_iso(ee, out.trivial, out.iso))
    throw StructuralError("trivialization is not a bibundle isomorphism");
  return out;
}

}  // namespace kanforge
