#include "kanforge/two_groupoid.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "kanforge/kan.hpp"
#include "kanforge/skeleta.hpp"

namespace kanforge {

namespace {

// Horn gluing between tetrahedron faces p < q: d_p(eta_q) = d_{q-1}(eta_p).
bool faces_glue(const TwoGroupoidData& D, int p, int q, int eta_p, int eta_q) {
  return D.d2(p, eta_q) == D.d2(q - 1, eta_p);
}

std::array<int, 4> face_indices_without(int j) {
  std::array<int, 4> out{};
  int c = 0;
  for (int i = 0; i <= 3; ++i)
    if (i != j) out[static_cast<std::size_t>(c++)] = i;
  out[3] = -1;
  return out;
}

}  // namespace

int TwoGroupoidData::m(int i, int a, int b, int c) const {
  auto it = mult[static_cast<std::size_t>(i)].find(Triple{a, b, c});
  if (it == mult[static_cast<std::size_t>(i)].end())
    throw StructuralError("3-multiplication argument outside its horn space");
  return it->second;
}

bool TwoGroupoidData::operator==(const TwoGroupoidData& o) const {
  return x0 == o.x0 && x1 == o.x1 && x2 == o.x2 && d10 == o.d10 && d11 == o.d11 &&
         s00 == o.s00 && d20 == o.d20 && d21 == o.d21 && d22 == o.d22 &&
         s10 == o.s10 && s11 == o.s11 && mult[0] == o.mult[0] &&
         mult[1] == o.mult[1] && mult[2] == o.mult[2] && mult[3] == o.mult[3];
}

TruncatedSimplicialSet two_truncation(const TwoGroupoidData& D) {
  TruncatedSimplicialSet X = make_simplicial_skeleton({D.x0, D.x1, D.x2});
  X.face[1] = {D.d10, D.d11};
  X.face[2] = {D.d20, D.d21, D.d22};
  X.degen[0] = {D.s00};
  X.degen[1] = {D.s10, D.s11};
  return X;
}

std::vector<std::vector<int>> lambda_space(const TwoGroupoidData& D, int m, int j) {
  if ((m != 2 && m != 3) || j < 0 || j > m)
    throw StructuralError("lambda_space: (m, j) out of range");
  std::vector<std::vector<int>> out;
  if (m == 2) {
    // two 1-cells glued on a vertex; faces p < q of a triangle share the
    // vertex d_p(x_q) = d_{q-1}(x_p), where 1-cells have d_0 = d10, d_1 = d11
    std::array<int, 2> idx{};
    int c = 0;
    for (int i = 0; i <= 2; ++i)
      if (i != j) idx[static_cast<std::size_t>(c++)] = i;
    auto d1 = [&D](int i, int g) { return i == 0 ? D.d10[g] : D.d11[g]; };
    for (int a = 0; a < D.x1; ++a)
      for (int b = 0; b < D.x1; ++b) {
        if (d1(idx[0], b) != d1(idx[1] - 1, a)) continue;
        budget::charge(out.size() + 1, "lambda space");
        out.push_back({a, b});
      }
    return out;
  }
  auto idx = face_indices_without(j);
  for (int a = 0; a < D.x2; ++a) {
    for (int b = 0; b < D.x2; ++b) {
      if (!faces_glue(D, idx[0], idx[1], a, b)) continue;
      for (int c2 = 0; c2 < D.x2; ++c2) {
        if (!faces_glue(D, idx[0], idx[2], a, c2)) continue;
        if (!faces_glue(D, idx[1], idx[2], b, c2)) continue;
        budget::charge(out.size() + 1, "lambda space");
        out.push_back({a, b, c2});
      }
    }
  }
  return out;
}

namespace {

// Full boundary tuples (eta_0..eta_3) of the graph of mult[0], sorted.
std::vector<std::array<int, 4>> graph_of_m0(const TwoGroupoidData& D) {
  std::vector<std::array<int, 4>> tuples;
  for (const auto& [tri, val] : D.mult[0])
    tuples.push_back({val, tri[0], tri[1], tri[2]});
  std::sort(tuples.begin(), tuples.end());
  return tuples;
}

}  // namespace

TwoGroupoidReport check_two_groupoid(const TwoGroupoidData& D) {
  TwoGroupoidReport rep;
  auto violate = [&rep](std::string axiom, std::vector<int> witness, std::string detail) {
    rep.ok = false;
    rep.violations.push_back({std::move(axiom), std::move(witness), std::move(detail)});
  };

  // structural sanity
  auto sized = [](const std::vector<int>& v, int n) {
    return static_cast<int>(v.size()) == n;
  };
  if (!sized(D.d10, D.x1) || !sized(D.d11, D.x1) || !sized(D.s00, D.x0) ||
      !sized(D.d20, D.x2) || !sized(D.d21, D.x2) || !sized(D.d22, D.x2) ||
      !sized(D.s10, D.x1) || !sized(D.s11, D.x1))
    throw StructuralError("two-groupoid data arity mismatch");

  // simplicial identities on the two-truncation
  TruncatedSimplicialSet tr = two_truncation(D);
  SimplicialReport sr = check_simplicial_identities(tr);
  for (const auto& v : sr.violations)
    violate("simplicial-identity", {v.level, v.i, v.j, v.element},
            v.identity + " fails");
  if (!sr.ok) return rep;  // the horn spaces below assume the identities

  // 1-Kan: both maps X1 -> X0 surjective
  for (int which = 0; which < 2; ++which) {
    const std::vector<int>& mp = which == 0 ? D.d10 : D.d11;
    std::vector<char> hit(static_cast<std::size_t>(D.x0), 0);
    for (int v : mp) hit[static_cast<std::size_t>(v)] = 1;
    for (int x = 0; x < D.x0; ++x)
      if (!hit[static_cast<std::size_t>(x)])
        violate("1-kan", {x},
                std::string(which == 0 ? "d10" : "d11") + " misses an object");
  }

  // 2-Kan: X2 covers each Lambda(X)_{2,j}
  for (int j = 0; j <= 2; ++j) {
    auto lam = lambda_space(D, 2, j);
    std::map<std::vector<int>, int> hit;
    for (const auto& t : lam) hit[t] = 0;
    std::array<int, 2> idx2{};
    int c = 0;
    for (int i = 0; i <= 2; ++i)
      if (i != j) idx2[static_cast<std::size_t>(c++)] = i;
    for (int eta = 0; eta < D.x2; ++eta) {
      std::vector<int> key{D.d2(idx2[0], eta), D.d2(idx2[1], eta)};
      auto it = hit.find(key);
      if (it != hit.end()) ++it->second;
    }
    for (const auto& t : lam)
      if (hit[t] == 0)
        violate("2-kan", t, "horn (2," + std::to_string(j) + ") has no 2-cell over it");
  }
  if (!rep.ok) return rep;

  // multiplication domains: exactly the Lambda(X)_{3,i}
  for (int i = 0; i <= 3; ++i) {
    auto lam = lambda_space(D, 3, i);
    if (lam.size() != D.mult[static_cast<std::size_t>(i)].size())
      violate("m-domain", {i},
              "mult[" + std::to_string(i) + "] has " +
                  std::to_string(D.mult[static_cast<std::size_t>(i)].size()) +
                  " entries, horn space has " + std::to_string(lam.size()));
    for (const auto& t : lam) {
      auto it = D.mult[static_cast<std::size_t>(i)].find({t[0], t[1], t[2]});
      if (it == D.mult[static_cast<std::size_t>(i)].end()) {
        violate("m-domain", t, "mult[" + std::to_string(i) + "] undefined on a horn");
        continue;
      }
      if (it->second < 0 || it->second >= D.x2)
        violate("m-domain", t, "mult value out of range");
    }
  }
  if (!rep.ok) return rep;

  // face matching: the output of mult[i] glues against its inputs
  for (int i = 0; i <= 3; ++i) {
    auto idx = face_indices_without(i);
    for (const auto& [tri, val] : D.mult[static_cast<std::size_t>(i)]) {
      for (int p = 0; p < 3; ++p) {
        int other = idx[static_cast<std::size_t>(p)];
        bool ok = other < i ? faces_glue(D, other, i, tri[static_cast<std::size_t>(p)], val)
                            : faces_glue(D, i, other, val, tri[static_cast<std::size_t>(p)]);
        if (!ok)
          violate("m-face", {i, tri[0], tri[1], tri[2]},
                  "output of mult[" + std::to_string(i) +
                      "] does not glue with input face " + std::to_string(other));
      }
    }
  }
  if (!rep.ok) return rep;

  // mutual determination: the four graphs coincide
  {
    auto g0 = graph_of_m0(D);
    for (int i = 1; i <= 3; ++i) {
      std::vector<std::array<int, 4>> gi;
      for (const auto& [tri, val] : D.mult[static_cast<std::size_t>(i)]) {
        std::array<int, 4> full{};
        int c = 0;
        for (int p = 0; p <= 3; ++p)
          full[static_cast<std::size_t>(p)] =
              (p == i) ? val : tri[static_cast<std::size_t>(c++)];
        gi.push_back(full);
      }
      std::sort(gi.begin(), gi.end());
      if (gi != g0) {
        // find one disagreeing tuple for the witness
        std::vector<std::array<int, 4>> diff;
        std::set_symmetric_difference(g0.begin(), g0.end(), gi.begin(), gi.end(),
                                      std::back_inserter(diff));
        std::vector<int> w;
        if (!diff.empty()) w.assign(diff[0].begin(), diff[0].end());
        violate("m-compat", w,
                "graphs of mult[0] and mult[" + std::to_string(i) + "] differ");
      }
    }
  }
  if (!rep.ok) return rep;

  // compatibility with degeneracies (the three pairs of equations)
  for (int eta = 0; eta < D.x2; ++eta) {
    int a1 = D.s10[D.d21[eta]], a2 = D.s10[D.d22[eta]];
    if (D.m(1, eta, a1, a2) != eta)
      violate("coco", {eta}, "eta = m1(eta, s0 d1 eta, s0 d2 eta) fails");
    if (D.m(0, eta, a1, a2) != eta)
      violate("coco", {eta}, "eta = m0(eta, s0 d1 eta, s0 d2 eta) fails");
    int b0 = D.s10[D.d20[eta]], b2 = D.s11[D.d22[eta]];
    if (D.m(2, b0, eta, b2) != eta)
      violate("coco", {eta}, "eta = m2(s0 d0 eta, eta, s1 d2 eta) fails");
    if (D.m(1, b0, eta, b2) != eta)
      violate("coco", {eta}, "eta = m1(s0 d0 eta, eta, s1 d2 eta) fails");
    int c0 = D.s11[D.d20[eta]], c1 = D.s11[D.d21[eta]];
    if (D.m(3, c0, c1, eta) != eta)
      violate("coco", {eta}, "eta = m3(s1 d0 eta, s1 d1 eta, eta) fails");
    if (D.m(2, c0, c1, eta) != eta)
      violate("coco", {eta}, "eta = m2(s1 d0 eta, s1 d1 eta, eta) fails");
  }
  if (!rep.ok) return rep;

  // pentagon: over all six-face configurations (eta_{0i4}, eta_{0ij}) glued
  // along their shared edges, the two determinations of eta_{123} agree.
  // Shared edges: d1 equal across the 0i4 faces (edge 04), and
  //   edge 01: d2(f14) = d2(f12) = d2(f13)
  //   edge 02: d2(f24) = d1(f12) = d2(f23)
  //   edge 03: d2(f34) = d1(f13) = d1(f23)
  {
    std::vector<std::vector<int>> by_d1(static_cast<std::size_t>(D.x1));
    std::map<std::pair<int, int>, std::vector<int>> by_d2d1;
    for (int eta = 0; eta < D.x2; ++eta) {
      by_d1[static_cast<std::size_t>(D.d21[eta])].push_back(eta);
      by_d2d1[{D.d22[eta], D.d21[eta]}].push_back(eta);
    }
    auto cands = [&](int e_d2, int e_d1) -> const std::vector<int>* {
      auto it = by_d2d1.find({e_d2, e_d1});
      return it == by_d2d1.end() ? nullptr : &it->second;
    };
    for (int f14 = 0; f14 < D.x2; ++f14) {
      int e04 = D.d21[f14], e01 = D.d22[f14];
      for (int f24 : by_d1[static_cast<std::size_t>(e04)]) {
        int e02 = D.d22[f24];
        for (int f34 : by_d1[static_cast<std::size_t>(e04)]) {
          int e03 = D.d22[f34];
          auto c12 = cands(e01, e02);
          auto c13 = cands(e01, e03);
          auto c23 = cands(e02, e03);
          if (!c12 || !c13 || !c23) continue;
          for (int f12 : *c12)
            for (int f13 : *c13)
              for (int f23 : *c23) {
                int direct = D.m(0, f23, f13, f12);
                int f234 = D.m(0, f34, f24, f23);
                int f134 = D.m(0, f34, f14, f13);
                int f124 = D.m(0, f24, f14, f12);
                int via = D.m(3, f234, f134, f124);
                if (direct != via)
                  violate("pentagon", {f14, f24, f34, f12, f13, f23},
                          "two determinations of the far face differ");
              }
        }
      }
    }
  }
  return rep;
}

TruncatedSimplicialSet nerve_two_groupoid(const TwoGroupoidData& D, int N,
                                          bool validate) {
  if (N < 3) throw DimensionError("nerve of a 2-groupoid needs N >= 3");
  if (validate) {
    TwoGroupoidReport rep = check_two_groupoid(D);
    if (!rep.ok)
      throw StructuralError("nerve_two_groupoid: input fails checks (" +
                            rep.violations[0].axiom + ")");
  }
  TruncatedSimplicialSet base = two_truncation(D);
  auto tuples3 = graph_of_m0(D);
  budget::charge(tuples3.size(), "nerve level 3");

  std::vector<int> sizes{D.x0, D.x1, D.x2, static_cast<int>(tuples3.size())};
  sizes.resize(static_cast<std::size_t>(N) + 1, 0);
  TruncatedSimplicialSet X = make_simplicial_skeleton(sizes);
  X.face[1] = base.face[1];
  X.face[2] = base.face[2];
  X.degen[0] = base.degen[0];
  X.degen[1] = base.degen[1];

  std::map<std::array<int, 4>, int> idx3;
  for (std::size_t i = 0; i < tuples3.size(); ++i)
    idx3[tuples3[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < tuples3.size(); ++i)
    for (int p = 0; p <= 3; ++p)
      X.face[3][p][i] = tuples3[i][static_cast<std::size_t>(p)];
  for (int eta = 0; eta < D.x2; ++eta) {
    int a1 = D.s10[D.d21[eta]], a2 = D.s10[D.d22[eta]];
    int b0 = D.s10[D.d20[eta]], b2 = D.s11[D.d22[eta]];
    int c0 = D.s11[D.d20[eta]], c1 = D.s11[D.d21[eta]];
    X.degen[2][0][eta] = idx3.at({eta, eta, a1, a2});
    X.degen[2][1][eta] = idx3.at({b0, eta, eta, b2});
    X.degen[2][2][eta] = idx3.at({c0, c1, eta, eta});
  }

  for (int k = 4; k <= N; ++k) {
    auto tuples = detail::simplicial_kernel(X, k);
    X.level_size[static_cast<std::size_t>(k)] = static_cast<int>(tuples.size());
    std::map<std::vector<int>, int> lookup;
    for (std::size_t i = 0; i < tuples.size(); ++i)
      lookup[tuples[i]] = static_cast<int>(i);
    X.face[k].assign(k + 1, std::vector<int>(tuples.size()));
    for (std::size_t i = 0; i < tuples.size(); ++i)
      for (int p = 0; p <= k; ++p)
        X.face[k][p][i] = tuples[i][static_cast<std::size_t>(p)];
    X.degen[k - 1].assign(k, std::vector<int>(X.size(k - 1)));
    for (int p = 0; p <= k - 1; ++p)
      for (int y = 0; y < X.size(k - 1); ++y) {
        std::vector<int> t(static_cast<std::size_t>(k) + 1);
        for (int l = 0; l <= k; ++l) {
          if (l == p || l == p + 1)
            t[static_cast<std::size_t>(l)] = y;
          else if (l < p)
            t[static_cast<std::size_t>(l)] = X.s(k - 2, p - 1, X.d(k - 1, l, y));
          else
            t[static_cast<std::size_t>(l)] = X.s(k - 2, p, X.d(k - 1, l - 1, y));
        }
        auto it = lookup.find(t);
        if (it == lookup.end())
          throw StructuralError("nerve: degeneracy tuple escapes level " +
                                std::to_string(k));
        X.degen[k - 1][p][y] = it->second;
      }
  }
  return X;
}

std::vector<std::vector<int>> nerve_level_via_vertex_induction(
    const TwoGroupoidData& D, const TruncatedSimplicialSet& nerve, int m, int j) {
  if (m < 3 || m > nerve.trunc_dim)
    throw DimensionError("vertex induction: level out of range");

  // subsets of {0..m} of each size, lexicographic
  std::vector<std::vector<std::vector<int>>> subsets(static_cast<std::size_t>(m) + 2);
  {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
      if (!cur.empty()) subsets[cur.size()].push_back(cur);
      for (int v = start; v <= m; ++v) {
        cur.push_back(v);
        rec(v + 1);
        cur.pop_back();
      }
    };
    rec(0);
  }
  const auto& edges = subsets[2];
  const auto& tris = subsets[3];
  auto edge_index = [&](int a, int b) {
    std::vector<int> key{a, b};
    return static_cast<int>(std::lower_bound(edges.begin(), edges.end(), key) -
                            edges.begin());
  };
  auto tri_index = [&](const std::vector<int>& t) {
    return static_cast<int>(std::lower_bound(tris.begin(), tris.end(), t) -
                            tris.begin());
  };

  std::vector<std::vector<int>> out;

  std::vector<int> edge(edges.size(), -1);
  std::vector<int> tri(tris.size(), -1);

  // The free data for a map out of the star of vertex j: the edges through j
  // (with a common vertex at j), then one 2-cell per triangle through j,
  // constrained by its two edges through j; the remaining edges are faces of
  // those 2-cells. Index X1 by one end and X2 by two faces for tight loops.
  std::map<std::pair<int, int>, std::vector<int>> x2_by_d1d2, x2_by_d0d2, x2_by_d0d1;
  for (int eta = 0; eta < D.x2; ++eta) {
    x2_by_d1d2[{D.d21[eta], D.d22[eta]}].push_back(eta);
    x2_by_d0d2[{D.d20[eta], D.d22[eta]}].push_back(eta);
    x2_by_d0d1[{D.d20[eta], D.d21[eta]}].push_back(eta);
  }
  // x1 by the end at j's side: edge (a,b) has small end d11 and big end d10
  std::vector<std::vector<int>> x1_by_small(static_cast<std::size_t>(D.x0));
  std::vector<std::vector<int>> x1_by_big(static_cast<std::size_t>(D.x0));
  for (int g = 0; g < D.x1; ++g) {
    x1_by_small[static_cast<std::size_t>(D.d11[g])].push_back(g);
    x1_by_big[static_cast<std::size_t>(D.d10[g])].push_back(g);
  }
  std::vector<int> j_edges;  // edge-array indices of the edges through j
  for (int i = 0; i <= m; ++i)
    if (i != j) j_edges.push_back(edge_index(std::min(i, j), std::max(i, j)));
  std::vector<int> j_tris;  // triangle-array indices through j
  for (std::size_t t = 0; t < tris.size(); ++t)
    if (std::find(tris[t].begin(), tris[t].end(), j) != tris[t].end())
      j_tris.push_back(static_cast<int>(t));

  // face-tuple lookup per nerve level, built once
  std::vector<std::map<std::vector<int>, int>> level_lookup(
      static_cast<std::size_t>(m) + 1);
  for (int k = 3; k < m; ++k) {
    for (int x = 0; x < nerve.size(k); ++x) {
      std::vector<int> key(static_cast<std::size_t>(k) + 1);
      for (int i = 0; i <= k; ++i) key[static_cast<std::size_t>(i)] = nerve.d(k, i, x);
      level_lookup[static_cast<std::size_t>(k)][key] = x;
    }
  }

  std::function<void(std::size_t)> assign_tri;
  auto complete = [&]() {
    // derive the triangles missing vertex j (restore them before returning
    // so backtracking state is clean)
    std::vector<std::size_t> derived;
    auto restore = [&]() {
      for (std::size_t t : derived) tri[t] = -1;
    };
    for (std::size_t t = 0; t < tris.size(); ++t) {
      if (tri[t] >= 0) continue;
      std::vector<int> w = tris[t];
      std::vector<int> tetra = w;
      tetra.push_back(j);
      std::sort(tetra.begin(), tetra.end());
      int p = static_cast<int>(std::find(tetra.begin(), tetra.end(), j) -
                               tetra.begin());
      std::array<int, 3> args{};
      int c = 0;
      for (int q = 0; q <= 3; ++q) {
        if (q == p) continue;
        std::vector<int> face = tetra;
        face.erase(face.begin() + q);
        args[static_cast<std::size_t>(c++)] = tri[static_cast<std::size_t>(tri_index(face))];
      }
      try {
        tri[t] = D.m(p, args[0], args[1], args[2]);
        derived.push_back(t);
      } catch (const StructuralError&) {
        restore();
        return;  // discrepancy: inputs escaped the horn space
      }
    }
    // value of each subset of size >= 4, bottom-up
    std::map<std::vector<int>, int> value;  // subset (size>=4) -> level index
    for (std::size_t sz = 4; sz <= static_cast<std::size_t>(m) + 1; ++sz) {
      for (const auto& w : subsets[sz]) {
        std::vector<int> key;
        for (std::size_t q = 0; q < sz; ++q) {
          std::vector<int> sub = w;
          sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(q));
          int v;
          if (sz - 1 == 3)
            v = tri[static_cast<std::size_t>(tri_index(sub))];
          else
            v = value.at(sub);
          key.push_back(v);
        }
        if (sz == static_cast<std::size_t>(m) + 1) {
          out.push_back(key);
          restore();
          return;
        }
        auto it = level_lookup[sz - 1].find(key);
        if (it == level_lookup[sz - 1].end()) {
          restore();
          return;  // discrepancy
        }
        value[w] = it->second;
      }
    }
    restore();
  };

  assign_tri = [&](std::size_t pos) {
    if (pos == j_tris.size()) {
      complete();
      return;
    }
    std::size_t t = static_cast<std::size_t>(j_tris[pos]);
    const auto& w = tris[t];
    int pj = static_cast<int>(std::find(w.begin(), w.end(), j) - w.begin());
    // the two faces through j are known; the third is a face of the 2-cell
    const std::vector<int>* cand = nullptr;
    int e01 = edge[static_cast<std::size_t>(edge_index(w[0], w[1]))];  // d2
    int e02 = edge[static_cast<std::size_t>(edge_index(w[0], w[2]))];  // d1
    int e12 = edge[static_cast<std::size_t>(edge_index(w[1], w[2]))];  // d0
    if (pj == 0) {
      auto it = x2_by_d1d2.find({e02, e01});
      cand = it == x2_by_d1d2.end() ? nullptr : &it->second;
    } else if (pj == 1) {
      auto it = x2_by_d0d2.find({e12, e01});
      cand = it == x2_by_d0d2.end() ? nullptr : &it->second;
    } else {
      auto it = x2_by_d0d1.find({e12, e02});
      cand = it == x2_by_d0d1.end() ? nullptr : &it->second;
    }
    if (!cand) return;
    int free_edge = pj == 0 ? edge_index(w[1], w[2])
                            : (pj == 1 ? edge_index(w[0], w[2]) : edge_index(w[0], w[1]));
    int saved = edge[static_cast<std::size_t>(free_edge)];
    for (int eta : *cand) {
      int derived = pj == 0 ? D.d20[eta] : (pj == 1 ? D.d21[eta] : D.d22[eta]);
      if (saved >= 0 && saved != derived) continue;
      tri[t] = eta;
      edge[static_cast<std::size_t>(free_edge)] = derived;
      assign_tri(pos + 1);
      tri[t] = -1;
      edge[static_cast<std::size_t>(free_edge)] = saved;
    }
  };

  std::function<void(std::size_t, int)> assign_j_edge = [&](std::size_t pos, int vj) {
    if (pos == j_edges.size()) {
      assign_tri(0);
      return;
    }
    std::size_t e = static_cast<std::size_t>(j_edges[pos]);
    // orientation: j may be the small or the big end of this edge
    bool j_small = (edges[e][0] == j);
    const auto& cand = j_small ? x1_by_small[static_cast<std::size_t>(vj)]
                               : x1_by_big[static_cast<std::size_t>(vj)];
    for (int g : cand) {
      edge[e] = g;
      assign_j_edge(pos + 1, vj);
      edge[e] = -1;
    }
  };

  for (int vj = 0; vj < D.x0; ++vj) assign_j_edge(0, vj);

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TwoGroupoidData truncate_to_two_groupoid(const TruncatedSimplicialSet& X) {
  if (X.trunc_dim < 3) throw DimensionError("truncation needs at least 3 levels");
  int dim = std::min(4, X.trunc_dim);
  ClassifyResult cls = classify_n_groupoid(X, dim);
  if (!cls.is_n_groupoid || cls.n > 2)
    throw StructuralError("not a 2-groupoid up to dimension " + std::to_string(dim));

  TwoGroupoidData D;
  D.x0 = X.size(0);
  D.x1 = X.size(1);
  D.x2 = X.size(2);
  D.d10 = X.face[1][0];
  D.d11 = X.face[1][1];
  D.s00 = X.degen[0][0];
  D.d20 = X.face[2][0];
  D.d21 = X.face[2][1];
  D.d22 = X.face[2][2];
  D.s10 = X.degen[1][0];
  D.s11 = X.degen[1][1];

  for (int jj = 0; jj <= 3; ++jj) {
    auto lam = lambda_space(D, 3, jj);
    auto idx = face_indices_without(jj);
    // index level-3 elements by their faces other than jj
    std::map<std::array<int, 3>, std::vector<int>> by_faces;
    for (int s = 0; s < X.size(3); ++s)
      by_faces[{X.d(3, idx[0], s), X.d(3, idx[1], s), X.d(3, idx[2], s)}].push_back(s);
    for (const auto& t : lam) {
      auto it = by_faces.find({t[0], t[1], t[2]});
      if (it == by_faces.end() || it->second.size() != 1)
        throw StructuralError("horn (3," + std::to_string(jj) +
                              ") does not have a unique filler");
      D.mult[static_cast<std::size_t>(jj)][{t[0], t[1], t[2]}] =
          X.d(3, jj, it->second[0]);
    }
  }
  TwoGroupoidReport rep = check_two_groupoid(D);
  if (!rep.ok)
    throw StructuralError("extracted layers fail the finite-data checks (" +
                          rep.violations[0].axiom + ")");
  return D;
}

TwoGroupoidData promote_groupoid(const FiniteGroupoid& G) {
  TwoGroupoidData D;
  D.x0 = G.num_objects;
  D.x1 = G.num_arrows;
  D.d10 = G.src;
  D.d11 = G.tgt;
  D.s00 = G.unit;

  // X2 = composable pairs (outer edge g1 = d2, inner edge g2 = d0)
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < G.num_arrows; ++a)
    for (int b = 0; b < G.num_arrows; ++b)
      if (G.composable(a, b)) pairs.emplace_back(a, b);
  budget::charge(pairs.size(), "promoted 2-cells");
  D.x2 = static_cast<int>(pairs.size());
  std::map<std::pair<int, int>, int> pidx;
  for (std::size_t i = 0; i < pairs.size(); ++i) pidx[pairs[i]] = static_cast<int>(i);

  D.d20.resize(D.x2);
  D.d21.resize(D.x2);
  D.d22.resize(D.x2);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [a, b] = pairs[i];
    D.d22[i] = a;
    D.d20[i] = b;
    D.d21[i] = G.comp(a, b);
  }
  D.s10.resize(D.x1);
  D.s11.resize(D.x1);
  for (int g = 0; g < G.num_arrows; ++g) {
    D.s10[g] = pidx.at({G.unit[G.tgt[g]], g});
    D.s11[g] = pidx.at({g, G.unit[G.src[g]]});
  }

  auto pair_of = [&](int eta) { return pairs[static_cast<std::size_t>(eta)]; };
  for (int jj = 0; jj <= 3; ++jj) {
    auto lam = lambda_space(D, 3, jj);
    for (const auto& t : lam) {
      int v = -1;
      if (jj == 0) {
        auto [a, b] = pair_of(t[2]);  // eta_3 = (a, b)
        int c = pair_of(t[0]).second; // eta_1 = (ab, c)
        v = pidx.at({b, c});
      } else if (jj == 1) {
        auto [a, b] = pair_of(t[2]);  // eta_3
        int c = pair_of(t[0]).second; // eta_0 = (b, c)
        v = pidx.at({G.comp(a, b), c});
      } else if (jj == 2) {
        auto [a, b] = pair_of(t[2]);  // eta_3
        int c = pair_of(t[0]).second; // eta_0 = (b, c)
        v = pidx.at({a, G.comp(b, c)});
      } else {
        auto [a, bc] = pair_of(t[2]);  // eta_2 = (a, bc)
        int b = pair_of(t[0]).first;   // eta_0 = (b, c)
        (void)bc;
        v = pidx.at({a, b});
      }
      D.mult[static_cast<std::size_t>(jj)][{t[0], t[1], t[2]}] = v;
    }
  }
  return D;
}

TwoGroupoidData abelian_two_group(const std::vector<std::vector<int>>& add_table) {
  const int n = static_cast<int>(add_table.size());
  if (n == 0) throw StructuralError("empty group table");
  std::vector<int> neg(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (add_table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] == 0)
        neg[static_cast<std::size_t>(a)] = b;
  auto add = [&](int a, int b) {
    return add_table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  };

  TwoGroupoidData D;
  D.x0 = 1;
  D.x1 = 1;
  D.x2 = n;
  D.d10 = D.d11 = {0};
  D.s00 = {0};
  D.d20.assign(static_cast<std::size_t>(n), 0);
  D.d21.assign(static_cast<std::size_t>(n), 0);
  D.d22.assign(static_cast<std::size_t>(n), 0);
  D.s10 = D.s11 = {0};

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        int e0 = add(add(a, neg[static_cast<std::size_t>(b)]), c);
        D.mult[0][{a, b, c}] = e0;               // m0(e1,e2,e3) = e1 - e2 + e3
        D.mult[1][{e0, b, c}] = a;               // solve for eta_1
        D.mult[2][{e0, a, c}] = b;               // solve for eta_2
        D.mult[3][{e0, a, b}] = c;               // solve for eta_3
      }
  return D;
}

}  // namespace kanforge
