#include "kanforge/hyper.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace kanforge {

namespace {

// Values of a partially assigned map on an arbitrary simplex of T, through
// the Eilenberg-Zilber core (cores of faces always precede in (dim, lex)
// order).
struct NdTable {
  TruncatedSimplicialSet tss;
  std::vector<std::vector<int>> nd;       // nondegenerate elements per level
  std::vector<std::vector<int>> nd_pos;   // element -> position in flat order
  std::vector<std::vector<EzDecomposition>> ez;
  std::vector<std::pair<int, int>> order;  // flat (dim, element)

  explicit NdTable(const TruncatedSimplicialSet& t) : tss(t) {
    nd = nondegenerate_elements(tss);
    nd_pos.resize(static_cast<std::size_t>(tss.trunc_dim) + 1);
    ez.resize(static_cast<std::size_t>(tss.trunc_dim) + 1);
    for (int n = 0; n <= tss.trunc_dim; ++n) {
      nd_pos[static_cast<std::size_t>(n)].assign(tss.size(n), -1);
      for (int x : nd[static_cast<std::size_t>(n)]) {
        nd_pos[static_cast<std::size_t>(n)][static_cast<std::size_t>(x)] =
            static_cast<int>(order.size());
        order.emplace_back(n, x);
      }
      for (int x = 0; x < tss.size(n); ++x)
        ez[static_cast<std::size_t>(n)].push_back(ez_decompose(tss, n, x));
    }
  }

  int value(const TruncatedSimplicialSet& target, const std::vector<int>& assigned,
            int n, int x) const {
    const EzDecomposition& e = ez[static_cast<std::size_t>(n)][static_cast<std::size_t>(x)];
    int pos = nd_pos[static_cast<std::size_t>(e.core_dim)][static_cast<std::size_t>(e.core)];
    int core_val = assigned[static_cast<std::size_t>(pos)];
    if (e.core_dim == n) return core_val;
    return apply_operator(target, e.collapse, e.core_dim, core_val);
  }
};

}  // namespace

std::vector<std::pair<std::vector<int>, int>> pb_space_inductive(
    const ShapePresentation& T, const ShapePresentation& S,
    const TruncatedSimplicialSet& Z, const TruncatedSimplicialSet& X,
    const SimplicialMap& f) {
  if (!shape_contains(S, T)) throw StructuralError("pb: T is not a subshape of S");
  TruncatedSimplicialSet t_tss = T.as_simplicial();
  NdTable tnd(t_tss);
  auto homSX = hom_set(S, X);

  // candidates per level keyed by (all faces, image under f)
  std::vector<std::map<std::vector<int>, std::vector<int>>> z_index(
      static_cast<std::size_t>(t_tss.trunc_dim) + 1);
  for (int l = 0; l <= t_tss.trunc_dim && l <= Z.trunc_dim; ++l) {
    auto& idx = z_index[static_cast<std::size_t>(l)];
    for (int sigma = 0; sigma < Z.size(l); ++sigma) {
      std::vector<int> key;
      for (int i = 0; l >= 1 && i <= l; ++i) key.push_back(Z.d(l, i, sigma));
      key.push_back(f.level[l][sigma]);
      idx[key].push_back(sigma);
    }
  }

  // start: PB over the empty subshape is hom(S, X)
  std::vector<std::pair<std::vector<int>, int>> states;
  for (std::size_t v = 0; v < homSX.size(); ++v)
    states.emplace_back(std::vector<int>(tnd.order.size(), -1), static_cast<int>(v));

  // add one nondegenerate simplex of T per step; each step is the fibre
  // product with Z_l over the boundary pull-back
  for (std::size_t pos = 0; pos < tnd.order.size(); ++pos) {
    auto [l, elem] = tnd.order[pos];
    const auto& mono = T.simplex(l, elem);
    int s_level_idx = S.index_of(l, mono);
    if (s_level_idx < 0) throw StructuralError("pb: T simplex missing from S");
    std::vector<std::pair<std::vector<int>, int>> next;
    std::vector<int> key;
    for (const auto& [u, v] : states) {
      key.clear();
      for (int i = 0; l >= 1 && i <= l; ++i)
        key.push_back(tnd.value(Z, u, l - 1, t_tss.d(l, i, elem)));
      key.push_back(homSX[static_cast<std::size_t>(v)].level[l][s_level_idx]);
      auto it = z_index[static_cast<std::size_t>(l)].find(key);
      if (it == z_index[static_cast<std::size_t>(l)].end()) continue;
      for (int sigma : it->second) {
        next.emplace_back(u, v);
        next.back().first[pos] = sigma;
      }
    }
    budget::charge(next.size(), "pull-back space step");
    states = std::move(next);
  }
  std::sort(states.begin(), states.end());
  return states;
}

PBSpace pb_space(const ShapePresentation& T, const ShapePresentation& S,
                 const TruncatedSimplicialSet& Z, const TruncatedSimplicialSet& X,
                 const SimplicialMap& f, bool crosscheck) {
  if (!shape_contains(S, T)) throw StructuralError("pb: T is not a subshape of S");
  PBSpace out;
  TruncatedSimplicialSet t_tss = T.as_simplicial();
  auto t_nd = nondegenerate_elements(t_tss);
  out.hom_t_z = hom_set(t_tss, Z);
  out.hom_s_x = hom_set(S, X);

  // key both sides over T's nondegenerate simplices
  auto key_of_u = [&](const SimplicialMap& u) {
    std::vector<int> key;
    for (int n = 0; n <= t_tss.trunc_dim; ++n)
      for (int x : t_nd[static_cast<std::size_t>(n)])
        key.push_back(f.level[n][u.level[n][x]]);
    return key;
  };
  auto key_of_v = [&](const SimplicialMap& v) {
    std::vector<int> key;
    for (int n = 0; n <= t_tss.trunc_dim; ++n)
      for (int x : t_nd[static_cast<std::size_t>(n)]) {
        int s_idx = S.index_of(n, T.simplex(n, x));
        key.push_back(v.level[n][s_idx]);
      }
    return key;
  };
  std::map<std::vector<int>, std::vector<int>> u_by_key;
  for (std::size_t i = 0; i < out.hom_t_z.size(); ++i)
    u_by_key[key_of_u(out.hom_t_z[i])].push_back(static_cast<int>(i));
  for (std::size_t vix = 0; vix < out.hom_s_x.size(); ++vix) {
    auto it = u_by_key.find(key_of_v(out.hom_s_x[vix]));
    if (it == u_by_key.end()) continue;
    for (int u : it->second) out.elems.emplace_back(u, static_cast<int>(vix));
  }
  std::sort(out.elems.begin(), out.elems.end());
  budget::charge(out.elems.size(), "pull-back space");

  if (crosscheck) {
    auto inductive = pb_space_inductive(T, S, Z, X, f);
    if (inductive.size() != out.elems.size())
      throw StructuralError("pull-back space: direct and inductive sizes differ (" +
                            std::to_string(out.elems.size()) + " vs " +
                            std::to_string(inductive.size()) + ")");
    std::set<std::pair<std::vector<int>, int>> direct_keys;
    for (const auto& [u, v] : out.elems) {
      std::vector<int> ukey;
      for (int n = 0; n <= t_tss.trunc_dim; ++n)
        for (int x : t_nd[static_cast<std::size_t>(n)])
          ukey.push_back(out.hom_t_z[static_cast<std::size_t>(u)].level[n][x]);
      direct_keys.emplace(std::move(ukey), v);
    }
    for (const auto& st : inductive)
      if (!direct_keys.count(st))
        throw StructuralError("pull-back space: paths disagree on an element");
  }
  return out;
}

namespace {

// index of the hom(Delta[k], X) element corresponding to an element of X_k
std::vector<int> top_simplex_index(const ShapePresentation& S,
                                   const std::vector<SimplicialMap>& homSX,
                                   const TruncatedSimplicialSet& X, int k) {
  std::vector<int> by_top(static_cast<std::size_t>(X.size(k)), -1);
  std::vector<int> id_simplex(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) id_simplex[static_cast<std::size_t>(i)] = i;
  int top = S.index_of(k, id_simplex);
  for (std::size_t v = 0; v < homSX.size(); ++v)
    by_top[static_cast<std::size_t>(homSX[v].level[k][top])] = static_cast<int>(v);
  return by_top;
}

}  // namespace

HypercoverCertificate check_hypercover(const TruncatedSimplicialSet& Z,
                                       const TruncatedSimplicialSet& X,
                                       const SimplicialMap& f, int n) {
  if (!is_simplicial_map(Z, X, f))
    throw StructuralError("hypercover check: not a strict simplicial map");
  HypercoverCertificate cert;
  cert.n = n;
  int top = std::min({n + 2, Z.trunc_dim, X.trunc_dim});
  if (top < n)
    throw DimensionError("hypercover check: truncation below the groupoid level");
  cert.checked_dim = top;
  cert.ok = true;

  for (int k = 0; k <= top; ++k) {
    HypercoverLevel lvl;
    lvl.k = k;
    lvl.require_iso = (k >= n);
    lvl.corroboration = (k > n);
    ShapePresentation T = shape(ShapeKind::Boundary, k, -1, std::max(0, k - 1));
    ShapePresentation S = shape(ShapeKind::Simplex, k, -1, k);
    PBSpace pb = pb_space(T, S, Z, X, f);
    lvl.pb_size = pb.elems.size();

    TruncatedSimplicialSet t_tss = T.as_simplicial();
    auto t_nd = nondegenerate_elements(t_tss);
    auto by_top = top_simplex_index(S, pb.hom_s_x, X, k);

    // locate each Z_k element inside PB
    std::map<std::pair<std::vector<int>, int>, int> pb_index;
    for (std::size_t i = 0; i < pb.elems.size(); ++i) {
      auto [u, v] = pb.elems[i];
      pb_index[{nondegenerate_key(t_tss, t_nd, pb.hom_t_z[static_cast<std::size_t>(u)]),
                v}] = static_cast<int>(i);
    }
    std::vector<int> fiber(pb.elems.size(), 0);
    bool ok_level = true;
    for (int sigma = 0; sigma < Z.size(k); ++sigma) {
      std::vector<int> ukey = restrict_simplex(Z, k, sigma, T);
      int v = by_top[static_cast<std::size_t>(f.level[k][sigma])];
      auto it = pb_index.find({ukey, v});
      if (it == pb_index.end())
        throw StructuralError("hypercover check: image escapes the pull-back");
      ++fiber[static_cast<std::size_t>(it->second)];
    }
    lvl.cover = true;
    lvl.iso = true;
    for (std::size_t i = 0; i < fiber.size(); ++i) {
      if (fiber[i] == 0) {
        lvl.iso = false;
        if (lvl.cover) {
          lvl.cover = false;
          lvl.witness = pb.elems[i];
          lvl.witness_fiber = 0;
        }
      } else if (fiber[i] > 1 && lvl.iso) {
        lvl.iso = false;
        if (!lvl.witness) {
          lvl.witness = pb.elems[i];
          lvl.witness_fiber = fiber[i];
        }
      }
    }
    ok_level = lvl.require_iso ? lvl.iso : lvl.cover;
    if (!ok_level && cert.ok) {
      cert.ok = false;
      cert.detail = "level " + std::to_string(k) + " fails the " +
                    (lvl.require_iso ? std::string("isomorphism") : std::string("cover")) +
                    " condition";
    }
    cert.levels.push_back(std::move(lvl));
  }
  return cert;
}

HypercoverCertificate compose_hypercovers(const TruncatedSimplicialSet& Z,
                                          const TruncatedSimplicialSet& Y,
                                          const TruncatedSimplicialSet& X,
                                          const SimplicialMap& f,
                                          const SimplicialMap& g, int n) {
  if (!is_simplicial_map(Z, Y, f) || !is_simplicial_map(Y, X, g))
    throw StructuralError("compose_hypercovers: legs are not strict maps");
  return check_hypercover(Z, X, compose_maps(f, g), n);
}

FibreProductResult fibre_product_ngroupoids(const TruncatedSimplicialSet& Z,
                                            const TruncatedSimplicialSet& X,
                                            const TruncatedSimplicialSet& Zp,
                                            const SimplicialMap& f,
                                            const SimplicialMap& fp, int n,
                                            int classify_dim) {
  int N = std::min(Z.trunc_dim, Zp.trunc_dim);
  N = std::min(N, X.trunc_dim);
  FibreProductResult out;
  std::vector<std::vector<std::pair<int, int>>> elems(static_cast<std::size_t>(N) + 1);
  std::vector<std::map<std::pair<int, int>, int>> index(static_cast<std::size_t>(N) + 1);
  for (int k = 0; k <= N; ++k) {
    for (int a = 0; a < Z.size(k); ++a)
      for (int b = 0; b < Zp.size(k); ++b)
        if (f.level[k][a] == fp.level[k][b]) {
          index[static_cast<std::size_t>(k)][{a, b}] =
              static_cast<int>(elems[static_cast<std::size_t>(k)].size());
          elems[static_cast<std::size_t>(k)].emplace_back(a, b);
        }
    budget::charge(elems[static_cast<std::size_t>(k)].size(), "fibre product level");
  }
  std::vector<int> sizes;
  for (auto& lv : elems) sizes.push_back(static_cast<int>(lv.size()));
  out.total = make_simplicial_skeleton(sizes);
  for (int k = 1; k <= N; ++k)
    for (std::size_t i = 0; i < elems[static_cast<std::size_t>(k)].size(); ++i) {
      auto [a, b] = elems[static_cast<std::size_t>(k)][i];
      for (int p = 0; p <= k; ++p)
        out.total.face[k][p][i] =
            index[static_cast<std::size_t>(k - 1)].at({Z.d(k, p, a), Zp.d(k, p, b)});
    }
  for (int k = 0; k < N; ++k)
    for (std::size_t i = 0; i < elems[static_cast<std::size_t>(k)].size(); ++i) {
      auto [a, b] = elems[static_cast<std::size_t>(k)][i];
      for (int p = 0; p <= k; ++p)
        out.total.degen[k][p][i] =
            index[static_cast<std::size_t>(k + 1)].at({Z.s(k, p, a), Zp.s(k, p, b)});
    }

  out.to_z.level.resize(static_cast<std::size_t>(N) + 1);
  out.to_zp.level.resize(static_cast<std::size_t>(N) + 1);
  for (int k = 0; k <= N; ++k) {
    out.to_z.level[k].resize(elems[static_cast<std::size_t>(k)].size());
    out.to_zp.level[k].resize(elems[static_cast<std::size_t>(k)].size());
    for (std::size_t i = 0; i < elems[static_cast<std::size_t>(k)].size(); ++i) {
      out.to_z.level[k][i] = elems[static_cast<std::size_t>(k)][i].first;
      out.to_zp.level[k][i] = elems[static_cast<std::size_t>(k)][i].second;
    }
  }

  out.classified = classify_n_groupoid(out.total, std::min(classify_dim, N));
  out.projection_cert = check_hypercover(out.total, Z, out.to_z, n);
  return out;
}

SimplicialMap extend_strict_map_by_faces(const TruncatedSimplicialSet& Z,
                                         const TruncatedSimplicialSet& X,
                                         SimplicialMap f) {
  int N = std::min(Z.trunc_dim, X.trunc_dim);
  f.level.resize(static_cast<std::size_t>(N) + 1);
  for (int k = 3; k <= N; ++k) {
    std::map<std::vector<int>, int> lookup;
    for (int x = 0; x < X.size(k); ++x) {
      std::vector<int> key(static_cast<std::size_t>(k) + 1);
      for (int i = 0; i <= k; ++i) key[static_cast<std::size_t>(i)] = X.d(k, i, x);
      lookup[key] = x;
    }
    f.level[k].assign(Z.size(k), -1);
    for (int z = 0; z < Z.size(k); ++z) {
      std::vector<int> key(static_cast<std::size_t>(k) + 1);
      for (int i = 0; i <= k; ++i)
        key[static_cast<std::size_t>(i)] = f.level[k - 1][Z.d(k, i, z)];
      auto it = lookup.find(key);
      if (it == lookup.end())
        throw StructuralError("strict map extension: face tuple has no image");
      f.level[k][z] = it->second;
    }
  }
  return f;
}

PullbackTwoGroupoid pullback_two_groupoid(const PartialLevelData& zp,
                                          const TwoGroupoidData& D, int nerve_dim) {
  // structural checks on the partial data
  auto expect = [](bool c, const std::string& msg) {
    if (!c) throw StructuralError("pull-back hypotheses: " + msg);
  };
  expect(static_cast<int>(zp.d0.size()) == zp.z1 &&
             static_cast<int>(zp.d1.size()) == zp.z1 &&
             static_cast<int>(zp.s0.size()) == zp.z0 &&
             static_cast<int>(zp.f0.size()) == zp.z0 &&
             static_cast<int>(zp.f1.size()) == zp.z1,
         "arity mismatch");
  for (int h = 0; h < zp.z1; ++h) {
    expect(zp.f0[static_cast<std::size_t>(zp.d0[static_cast<std::size_t>(h)])] ==
               D.d10[static_cast<std::size_t>(zp.f1[static_cast<std::size_t>(h)])],
           "f does not preserve the 0th face");
    expect(zp.f0[static_cast<std::size_t>(zp.d1[static_cast<std::size_t>(h)])] ==
               D.d11[static_cast<std::size_t>(zp.f1[static_cast<std::size_t>(h)])],
           "f does not preserve the 1st face");
  }
  for (int x = 0; x < zp.z0; ++x) {
    expect(zp.d0[static_cast<std::size_t>(zp.s0[static_cast<std::size_t>(x)])] == x &&
               zp.d1[static_cast<std::size_t>(zp.s0[static_cast<std::size_t>(x)])] == x,
           "degenerate edge has wrong ends");
    expect(zp.f1[static_cast<std::size_t>(zp.s0[static_cast<std::size_t>(x)])] ==
               D.s00[static_cast<std::size_t>(zp.f0[static_cast<std::size_t>(x)])],
           "f does not preserve the degeneracy");
  }
  // covering hypotheses
  {
    std::vector<char> hit(static_cast<std::size_t>(D.x0), 0);
    for (int x = 0; x < zp.z0; ++x) hit[static_cast<std::size_t>(zp.f0[x])] = 1;
    for (int v = 0; v < D.x0; ++v)
      expect(hit[static_cast<std::size_t>(v)],
             "f0 misses object " + std::to_string(v));
  }
  {
    std::set<std::array<int, 3>> targets;
    for (int a = 0; a < zp.z0; ++a)
      for (int b = 0; b < zp.z0; ++b)
        for (int x = 0; x < D.x1; ++x)
          if (D.d11[static_cast<std::size_t>(x)] == zp.f0[static_cast<std::size_t>(a)] &&
              D.d10[static_cast<std::size_t>(x)] == zp.f0[static_cast<std::size_t>(b)])
            targets.insert({a, b, x});
    std::set<std::array<int, 3>> hit;
    for (int h = 0; h < zp.z1; ++h)
      hit.insert({zp.d1[static_cast<std::size_t>(h)], zp.d0[static_cast<std::size_t>(h)],
                  zp.f1[static_cast<std::size_t>(h)]});
    for (const auto& t : targets)
      expect(hit.count(t) > 0, "an edge over (" + std::to_string(t[0]) + "," +
                                   std::to_string(t[1]) + ") is missing");
  }

  PullbackTwoGroupoid out;
  TwoGroupoidData& Znew = out.data;
  Znew.x0 = zp.z0;
  Znew.x1 = zp.z1;
  Znew.d10 = zp.d0;
  Znew.d11 = zp.d1;
  Znew.s00 = zp.s0;

  // level 2: boundary-compatible triples of edges with a 2-cell over them
  std::map<std::array<int, 4>, int> cell_index;
  for (int c0 = 0; c0 < zp.z1; ++c0)
    for (int c1 = 0; c1 < zp.z1; ++c1) {
      if (zp.d0[static_cast<std::size_t>(c1)] != zp.d0[static_cast<std::size_t>(c0)])
        continue;
      for (int c2 = 0; c2 < zp.z1; ++c2) {
        if (zp.d1[static_cast<std::size_t>(c2)] != zp.d1[static_cast<std::size_t>(c1)])
          continue;
        if (zp.d0[static_cast<std::size_t>(c2)] != zp.d1[static_cast<std::size_t>(c0)])
          continue;
        for (int x = 0; x < D.x2; ++x) {
          if (D.d20[static_cast<std::size_t>(x)] != zp.f1[static_cast<std::size_t>(c0)] ||
              D.d21[static_cast<std::size_t>(x)] != zp.f1[static_cast<std::size_t>(c1)] ||
              D.d22[static_cast<std::size_t>(x)] != zp.f1[static_cast<std::size_t>(c2)])
            continue;
          cell_index[{c0, c1, c2, x}] = static_cast<int>(out.cells.size());
          out.cells.push_back({c0, c1, c2, x});
        }
      }
    }
  budget::charge(out.cells.size(), "pull-back 2-cells");
  Znew.x2 = static_cast<int>(out.cells.size());
  Znew.d20.resize(Znew.x2);
  Znew.d21.resize(Znew.x2);
  Znew.d22.resize(Znew.x2);
  for (int i = 0; i < Znew.x2; ++i) {
    Znew.d20[static_cast<std::size_t>(i)] = out.cells[static_cast<std::size_t>(i)][0];
    Znew.d21[static_cast<std::size_t>(i)] = out.cells[static_cast<std::size_t>(i)][1];
    Znew.d22[static_cast<std::size_t>(i)] = out.cells[static_cast<std::size_t>(i)][2];
  }
  Znew.s10.resize(Znew.x1);
  Znew.s11.resize(Znew.x1);
  for (int h = 0; h < zp.z1; ++h) {
    int sv = zp.s0[static_cast<std::size_t>(zp.d1[static_cast<std::size_t>(h)])];
    Znew.s10[static_cast<std::size_t>(h)] = cell_index.at(
        {h, h, sv, D.s10[static_cast<std::size_t>(zp.f1[static_cast<std::size_t>(h)])]});
    int sv0 = zp.s0[static_cast<std::size_t>(zp.d0[static_cast<std::size_t>(h)])];
    Znew.s11[static_cast<std::size_t>(h)] = cell_index.at(
        {sv0, h, h, D.s11[static_cast<std::size_t>(zp.f1[static_cast<std::size_t>(h)])]});
  }

  // multiplications componentwise over the base ones
  for (int j = 0; j <= 3; ++j) {
    auto lam = lambda_space(Znew, 3, j);
    std::array<int, 4> faces{};
    for (const auto& t : lam) {
      int c = 0;
      std::array<int, 3> xs{};
      std::array<int, 3> input_idx{};
      for (int q = 0; q <= 3; ++q)
        if (q != j) {
          input_idx[static_cast<std::size_t>(c)] = q;
          xs[static_cast<std::size_t>(c)] =
              out.cells[static_cast<std::size_t>(t[static_cast<std::size_t>(c)])][3];
          ++c;
        }
      int x_out = D.m(j, xs[0], xs[1], xs[2]);
      // the result's edges come from the boundary relations with the inputs
      std::array<int, 3> z_edges{};
      for (int i = 0; i <= 2; ++i) {
        int edge = -1;
        if (i < j) {
          // d_i(face j) = d_{j-1}(face i); face i is input slot (i)
          int slot = 0;
          while (input_idx[static_cast<std::size_t>(slot)] != i) ++slot;
          int cell = t[static_cast<std::size_t>(slot)];
          edge = Znew.d2(j - 1, cell);
        } else {
          // d_i(face j) = d_j(face i+1)
          int slot = 0;
          while (input_idx[static_cast<std::size_t>(slot)] != i + 1) ++slot;
          int cell = t[static_cast<std::size_t>(slot)];
          edge = Znew.d2(j, cell);
        }
        z_edges[static_cast<std::size_t>(i)] = edge;
      }
      faces = {z_edges[0], z_edges[1], z_edges[2], x_out};
      auto it = cell_index.find(faces);
      if (it == cell_index.end())
        throw StructuralError("pull-back multiplication leaves the 2-cell space");
      Znew.mult[static_cast<std::size_t>(j)][{t[0], t[1], t[2]}] = it->second;
    }
  }

  TwoGroupoidReport rep = check_two_groupoid(Znew);
  if (!rep.ok)
    throw StructuralError("pull-back data fails the finite-data checks (" +
                          rep.violations[0].axiom + ")");

  // induced strict map of nerves and its certificate
  TruncatedSimplicialSet ZN = nerve_two_groupoid(Znew, nerve_dim, false);
  TruncatedSimplicialSet XN = nerve_two_groupoid(D, nerve_dim, false);
  SimplicialMap F;
  F.level.resize(3);
  F.level[0] = zp.f0;
  F.level[1] = zp.f1;
  F.level[2].resize(Znew.x2);
  for (int i = 0; i < Znew.x2; ++i)
    F.level[2][static_cast<std::size_t>(i)] = out.cells[static_cast<std::size_t>(i)][3];
  out.map01 = extend_strict_map_by_faces(ZN, XN, F);
  if (!is_simplicial_map(ZN, XN, out.map01))
    throw StructuralError("pull-back comparison is not a strict map");
  out.cert = check_hypercover(ZN, XN, out.map01, 2);
  return out;
}

OneHypercoverReport check_1_hypercover(const TruncatedSimplicialSet& Z,
                                       const TruncatedSimplicialSet& X,
                                       const SimplicialMap& f, int n) {
  OneHypercoverReport rep;
  rep.cert = check_hypercover(Z, X, f, n);
  // f0 bijective
  std::vector<int> hit(static_cast<std::size_t>(X.size(0)), 0);
  for (int z = 0; z < Z.size(0); ++z) ++hit[static_cast<std::size_t>(f.level[0][z])];
  rep.f0_bijective = Z.size(0) == X.size(0);
  for (int c : hit)
    if (c != 1) rep.f0_bijective = false;
  // the simplified level-1 condition
  std::vector<char> hit1(static_cast<std::size_t>(X.size(1)), 0);
  for (int z = 0; z < Z.size(1); ++z) hit1[static_cast<std::size_t>(f.level[1][z])] = 1;
  rep.f1_surjective = true;
  for (char c : hit1)
    if (!c) rep.f1_surjective = false;
  bool level1_cover = true;
  for (const auto& lvl : rep.cert.levels)
    if (lvl.k == 1) level1_cover = lvl.cover;
  rep.remark_agrees = !rep.f0_bijective || (rep.f1_surjective == level1_cover);
  rep.ok = rep.cert.ok && rep.f0_bijective && rep.remark_agrees;
  return rep;
}

OneMoritaReport check_1_morita(const TruncatedSimplicialSet& X,
                               const TruncatedSimplicialSet& Y,
                               const TruncatedSimplicialSet& Z,
                               const SimplicialMap& f, const SimplicialMap& g,
                               int n) {
  OneMoritaReport rep;
  rep.left = check_1_hypercover(Z, X, f, n);
  rep.right = check_1_hypercover(Z, Y, g, n);
  rep.ok = rep.left.ok && rep.right.ok;
  return rep;
}

}  // namespace kanforge
