#include "kanforge/groupoid.hpp"

#include <algorithm>
#include <map>

namespace kanforge {

GroupoidReport validate_groupoid(const FiniteGroupoid& G) {
  auto sized = [](const std::vector<int>& v, int n) {
    return static_cast<int>(v.size()) == n;
  };
  if (!sized(G.src, G.num_arrows) || !sized(G.tgt, G.num_arrows) ||
      !sized(G.unit, G.num_objects) || !sized(G.inv, G.num_arrows) ||
      static_cast<int>(G.comp_table.size()) != G.num_arrows * G.num_arrows)
    throw StructuralError("groupoid arity mismatch");
  for (int a = 0; a < G.num_arrows; ++a)
    if (G.src[a] < 0 || G.src[a] >= G.num_objects || G.tgt[a] < 0 ||
        G.tgt[a] >= G.num_objects || G.inv[a] < 0 || G.inv[a] >= G.num_arrows)
      throw StructuralError("groupoid map out of range");
  for (int x = 0; x < G.num_objects; ++x)
    if (G.unit[x] < 0 || G.unit[x] >= G.num_arrows)
      throw StructuralError("groupoid unit out of range");

  GroupoidReport rep;
  auto fail = [&rep](std::string d) {
    rep.ok = false;
    rep.detail = std::move(d);
    return rep;
  };

  for (int x = 0; x < G.num_objects; ++x) {
    int e = G.unit[x];
    if (G.src[e] != x || G.tgt[e] != x)
      return fail("unit of object " + std::to_string(x) + " has wrong ends");
  }
  for (int a = 0; a < G.num_arrows; ++a)
    for (int b = 0; b < G.num_arrows; ++b) {
      int c = G.comp(a, b);
      if (G.composable(a, b)) {
        if (c < 0) return fail("missing composite");
        if (G.src[c] != G.src[b] || G.tgt[c] != G.tgt[a])
          return fail("composite has wrong ends");
      } else if (c != -1) {
        return fail("composite defined on a non-composable pair");
      }
    }
  for (int a = 0; a < G.num_arrows; ++a) {
    if (G.comp(a, G.unit[G.src[a]]) != a || G.comp(G.unit[G.tgt[a]], a) != a)
      return fail("unit law fails at arrow " + std::to_string(a));
    int i = G.inv[a];
    if (G.src[i] != G.tgt[a] || G.tgt[i] != G.src[a])
      return fail("inverse has wrong ends");
    if (G.comp(a, i) != G.unit[G.tgt[a]] || G.comp(i, a) != G.unit[G.src[a]])
      return fail("inverse law fails at arrow " + std::to_string(a));
  }
  for (int a = 0; a < G.num_arrows; ++a)
    for (int b = 0; b < G.num_arrows; ++b) {
      if (!G.composable(a, b)) continue;
      for (int c = 0; c < G.num_arrows; ++c) {
        if (!G.composable(b, c)) continue;
        if (G.comp(G.comp(a, b), c) != G.comp(a, G.comp(b, c)))
          return fail("associativity fails at (" + std::to_string(a) + "," +
                      std::to_string(b) + "," + std::to_string(c) + ")");
      }
    }
  return rep;
}

FiniteGroupoid opposite_groupoid(const FiniteGroupoid& G) {
  FiniteGroupoid H = G;
  std::swap(H.src, H.tgt);
  for (int a = 0; a < G.num_arrows; ++a)
    for (int b = 0; b < G.num_arrows; ++b) H.set_comp(a, b, G.comp(b, a));
  return H;
}

FiniteGroupoid disjoint_union(const FiniteGroupoid& G, const FiniteGroupoid& H) {
  FiniteGroupoid U;
  U.num_objects = G.num_objects + H.num_objects;
  U.num_arrows = G.num_arrows + H.num_arrows;
  U.src = G.src;
  U.tgt = G.tgt;
  for (int a = 0; a < H.num_arrows; ++a) {
    U.src.push_back(H.src[a] + G.num_objects);
    U.tgt.push_back(H.tgt[a] + G.num_objects);
  }
  U.unit = G.unit;
  for (int x = 0; x < H.num_objects; ++x) U.unit.push_back(H.unit[x] + G.num_arrows);
  U.inv = G.inv;
  for (int a = 0; a < H.num_arrows; ++a) U.inv.push_back(H.inv[a] + G.num_arrows);
  U.comp_table.assign(static_cast<std::size_t>(U.num_arrows) * U.num_arrows, -1);
  for (int a = 0; a < G.num_arrows; ++a)
    for (int b = 0; b < G.num_arrows; ++b) U.set_comp(a, b, G.comp(a, b));
  for (int a = 0; a < H.num_arrows; ++a)
    for (int b = 0; b < H.num_arrows; ++b) {
      int c = H.comp(a, b);
      U.set_comp(a + G.num_arrows, b + G.num_arrows, c < 0 ? -1 : c + G.num_arrows);
    }
  return U;
}

FiniteGroupoid product_groupoid(const FiniteGroupoid& G, const FiniteGroupoid& H) {
  FiniteGroupoid P;
  P.num_objects = G.num_objects * H.num_objects;
  P.num_arrows = G.num_arrows * H.num_arrows;
  auto obj = [&](int g, int h) { return g * H.num_objects + h; };
  auto arr = [&](int g, int h) { return g * H.num_arrows + h; };
  P.src.resize(P.num_arrows);
  P.tgt.resize(P.num_arrows);
  P.inv.resize(P.num_arrows);
  P.unit.resize(P.num_objects);
  for (int g = 0; g < G.num_arrows; ++g)
    for (int h = 0; h < H.num_arrows; ++h) {
      P.src[arr(g, h)] = obj(G.src[g], H.src[h]);
      P.tgt[arr(g, h)] = obj(G.tgt[g], H.tgt[h]);
      P.inv[arr(g, h)] = arr(G.inv[g], H.inv[h]);
    }
  for (int x = 0; x < G.num_objects; ++x)
    for (int y = 0; y < H.num_objects; ++y)
      P.unit[obj(x, y)] = arr(G.unit[x], H.unit[y]);
  P.comp_table.assign(static_cast<std::size_t>(P.num_arrows) * P.num_arrows, -1);
  for (int a = 0; a < P.num_arrows; ++a)
    for (int b = 0; b < P.num_arrows; ++b) {
      int ag = a / H.num_arrows, ah = a % H.num_arrows;
      int bg = b / H.num_arrows, bh = b % H.num_arrows;
      if (G.composable(ag, bg) && H.composable(ah, bh))
        P.set_comp(a, b, arr(G.comp(ag, bg), H.comp(ah, bh)));
    }
  return P;
}

FiniteGroupoid unit_groupoid(int num_objects) {
  FiniteGroupoid G;
  G.num_objects = num_objects;
  G.num_arrows = num_objects;
  G.src.resize(num_objects);
  G.tgt.resize(num_objects);
  G.unit.resize(num_objects);
  G.inv.resize(num_objects);
  for (int x = 0; x < num_objects; ++x) {
    G.src[x] = G.tgt[x] = x;
    G.unit[x] = G.inv[x] = x;
  }
  G.comp_table.assign(static_cast<std::size_t>(num_objects) * num_objects, -1);
  for (int x = 0; x < num_objects; ++x) G.set_comp(x, x, x);
  return G;
}

FiniteGroupoid pair_groupoid(int num_objects) {
  FiniteGroupoid G;
  G.num_objects = num_objects;
  G.num_arrows = num_objects * num_objects;
  auto arr = [&](int to, int from) { return to * num_objects + from; };
  G.src.resize(G.num_arrows);
  G.tgt.resize(G.num_arrows);
  G.inv.resize(G.num_arrows);
  G.unit.resize(num_objects);
  for (int t = 0; t < num_objects; ++t)
    for (int f = 0; f < num_objects; ++f) {
      G.src[arr(t, f)] = f;
      G.tgt[arr(t, f)] = t;
      G.inv[arr(t, f)] = arr(f, t);
    }
  for (int x = 0; x < num_objects; ++x) G.unit[x] = arr(x, x);
  G.comp_table.assign(static_cast<std::size_t>(G.num_arrows) * G.num_arrows, -1);
  for (int a = 0; a < G.num_arrows; ++a)
    for (int b = 0; b < G.num_arrows; ++b)
      if (G.composable(a, b)) G.set_comp(a, b, arr(G.tgt[a], G.src[b]));
  return G;
}

std::vector<std::vector<std::vector<int>>> nerve_strings(const FiniteGroupoid& G, int N) {
  std::vector<std::vector<std::vector<int>>> strings(static_cast<std::size_t>(N) + 1);
  strings[0] = {};  // level 0 indexed by objects, not strings
  for (int n = 1; n <= N; ++n) {
    std::vector<std::vector<int>>& out = strings[static_cast<std::size_t>(n)];
    std::vector<int> cur;
    std::function<void()> rec = [&]() {
      if (static_cast<int>(cur.size()) == n) {
        budget::charge(out.size() + 1, "nerve level " + std::to_string(n));
        out.push_back(cur);
        return;
      }
      for (int a = 0; a < G.num_arrows; ++a) {
        if (!cur.empty() && G.src[cur.back()] != G.tgt[a]) continue;
        cur.push_back(a);
        rec();
        cur.pop_back();
      }
    };
    rec();
  }
  return strings;
}

TruncatedSimplicialSet nerve_groupoid(const FiniteGroupoid& G, int N) {
  auto strings = nerve_strings(G, N);
  std::vector<int> sizes(static_cast<std::size_t>(N) + 1);
  sizes[0] = G.num_objects;
  std::vector<std::map<std::vector<int>, int>> index(static_cast<std::size_t>(N) + 1);
  for (int n = 1; n <= N; ++n) {
    sizes[static_cast<std::size_t>(n)] =
        static_cast<int>(strings[static_cast<std::size_t>(n)].size());
    for (std::size_t i = 0; i < strings[static_cast<std::size_t>(n)].size(); ++i)
      index[static_cast<std::size_t>(n)][strings[static_cast<std::size_t>(n)][i]] =
          static_cast<int>(i);
  }
  TruncatedSimplicialSet X = make_simplicial_skeleton(sizes);

  for (int n = 1; n <= N; ++n) {
    const auto& lvl = strings[static_cast<std::size_t>(n)];
    for (std::size_t idx = 0; idx < lvl.size(); ++idx) {
      const std::vector<int>& s = lvl[idx];
      for (int i = 0; i <= n; ++i) {
        if (n == 1) {
          // faces of an arrow: d_0 = src, d_1 = tgt
          X.face[1][i][idx] = (i == 0) ? G.src[s[0]] : G.tgt[s[0]];
          continue;
        }
        std::vector<int> t;
        if (i == 0) {
          t.assign(s.begin() + 1, s.end());
        } else if (i == n) {
          t.assign(s.begin(), s.end() - 1);
        } else {
          t = s;
          t[static_cast<std::size_t>(i - 1)] =
              G.comp(s[static_cast<std::size_t>(i - 1)], s[static_cast<std::size_t>(i)]);
          t.erase(t.begin() + i);
        }
        X.face[n][i][idx] = index[static_cast<std::size_t>(n - 1)].at(t);
      }
    }
  }
  for (int n = 0; n < N; ++n) {
    if (n == 0) {
      for (int x = 0; x < G.num_objects; ++x)
        X.degen[0][0][x] = index[1].at({G.unit[x]});
      continue;
    }
    const auto& lvl = strings[static_cast<std::size_t>(n)];
    for (std::size_t idx = 0; idx < lvl.size(); ++idx) {
      const std::vector<int>& s = lvl[idx];
      for (int i = 0; i <= n; ++i) {
        std::vector<int> t = s;
        // s_i inserts the unit at vertex i: before position i in the string
        int obj = (i == 0) ? G.tgt[s[0]] : G.src[s[static_cast<std::size_t>(i - 1)]];
        t.insert(t.begin() + i, G.unit[obj]);
        X.degen[n][i][idx] = index[static_cast<std::size_t>(n + 1)].at(t);
      }
    }
  }
  return X;
}

FiniteGroupoid groupoid_from_1groupoid(const TruncatedSimplicialSet& X) {
  int dim = std::min(3, X.trunc_dim);
  if (dim < 2) throw DimensionError("need truncation >= 2 to extract a groupoid");
  ClassifyResult cls = classify_n_groupoid(X, dim);
  if (!cls.is_n_groupoid || cls.n > 1)
    throw StructuralError("not a 1-groupoid up to dimension " + std::to_string(dim));

  FiniteGroupoid G;
  G.num_objects = X.size(0);
  G.num_arrows = X.size(1);
  G.src.resize(G.num_arrows);
  G.tgt.resize(G.num_arrows);
  for (int a = 0; a < G.num_arrows; ++a) {
    G.src[a] = X.d(1, 0, a);
    G.tgt[a] = X.d(1, 1, a);
  }
  G.unit.resize(G.num_objects);
  for (int x = 0; x < G.num_objects; ++x) G.unit[x] = X.s(0, 0, x);

  // composition: fill the inner horn (b as face 0, a as face 2), take face 1
  G.comp_table.assign(static_cast<std::size_t>(G.num_arrows) * G.num_arrows, -1);
  for (int a = 0; a < G.num_arrows; ++a)
    for (int b = 0; b < G.num_arrows; ++b) {
      if (G.src[a] != G.tgt[b]) continue;
      SimplicialMap horn = horn_from_faces(X, 2, 1, {b, a});
      auto fillers = fill_horn(X, 2, 1, horn);
      if (fillers.size() != 1)
        throw StructuralError("inner horn filler not unique");
      G.set_comp(a, b, X.d(2, 1, fillers[0]));
    }
  // inverse: fill the outer horn with a degenerate face 1
  G.inv.resize(G.num_arrows);
  for (int a = 0; a < G.num_arrows; ++a) {
    SimplicialMap horn = horn_from_faces(X, 2, 0, {X.s(0, 0, G.tgt[a]), a});
    auto fillers = fill_horn(X, 2, 0, horn);
    if (fillers.empty()) throw StructuralError("outer horn has no filler");
    G.inv[a] = X.d(2, 0, fillers[0]);
  }
  GroupoidReport rep = validate_groupoid(G);
  if (!rep.ok)
    throw StructuralError("extracted data is not a groupoid: " + rep.detail);
  return G;
}

namespace {

bool extend_iso(const FiniteGroupoid& G, const FiniteGroupoid& H, GroupoidIso& iso,
                std::vector<char>& used_arrow, int a) {
  if (a == G.num_arrows) return is_groupoid_iso(G, H, iso);
  for (int b = 0; b < H.num_arrows; ++b) {
    if (used_arrow[static_cast<std::size_t>(b)]) continue;
    // object consistency
    int so = iso.object_map[static_cast<std::size_t>(G.src[a])];
    int to = iso.object_map[static_cast<std::size_t>(G.tgt[a])];
    if (H.src[b] != so || H.tgt[b] != to) continue;
    if (a == G.unit[G.src[a]] && b != H.unit[so]) continue;
    if (b == H.unit[H.src[b]] && a != G.unit[G.src[a]]) continue;
    // structure consistency against already-mapped arrows
    bool okc = true;
    for (int c = 0; c < a && okc; ++c) {
      int bc = iso.arrow_map[static_cast<std::size_t>(c)];
      if (G.composable(a, c) && G.comp(a, c) < a &&
          H.comp(b, bc) != iso.arrow_map[static_cast<std::size_t>(G.comp(a, c))])
        okc = false;
      if (okc && G.composable(c, a) && G.comp(c, a) < a &&
          H.comp(bc, b) != iso.arrow_map[static_cast<std::size_t>(G.comp(c, a))])
        okc = false;
    }
    if (!okc) continue;
    if (G.inv[a] < a &&
        H.inv[b] != iso.arrow_map[static_cast<std::size_t>(G.inv[a])])
      continue;
    iso.arrow_map[static_cast<std::size_t>(a)] = b;
    used_arrow[static_cast<std::size_t>(b)] = 1;
    if (extend_iso(G, H, iso, used_arrow, a + 1)) return true;
    used_arrow[static_cast<std::size_t>(b)] = 0;
    iso.arrow_map[static_cast<std::size_t>(a)] = -1;
  }
  return false;
}

bool extend_obj(const FiniteGroupoid& G, const FiniteGroupoid& H, GroupoidIso& iso,
                std::vector<char>& used_obj, int x) {
  if (x == G.num_objects) {
    std::vector<char> used_arrow(static_cast<std::size_t>(H.num_arrows), 0);
    iso.arrow_map.assign(static_cast<std::size_t>(G.num_arrows), -1);
    return extend_iso(G, H, iso, used_arrow, 0);
  }
  for (int y = 0; y < H.num_objects; ++y) {
    if (used_obj[static_cast<std::size_t>(y)]) continue;
    iso.object_map[static_cast<std::size_t>(x)] = y;
    used_obj[static_cast<std::size_t>(y)] = 1;
    if (extend_obj(G, H, iso, used_obj, x + 1)) return true;
    used_obj[static_cast<std::size_t>(y)] = 0;
    iso.object_map[static_cast<std::size_t>(x)] = -1;
  }
  return false;
}

}  // namespace

std::optional<GroupoidIso> find_groupoid_iso(const FiniteGroupoid& G,
                                             const FiniteGroupoid& H) {
  if (G.num_objects != H.num_objects || G.num_arrows != H.num_arrows)
    return std::nullopt;
  GroupoidIso iso;
  iso.object_map.assign(static_cast<std::size_t>(G.num_objects), -1);
  std::vector<char> used_obj(static_cast<std::size_t>(H.num_objects), 0);
  if (!extend_obj(G, H, iso, used_obj, 0)) return std::nullopt;
  return iso;
}

bool is_groupoid_iso(const FiniteGroupoid& G, const FiniteGroupoid& H,
                     const GroupoidIso& iso) {
  if (G.num_objects != H.num_objects || G.num_arrows != H.num_arrows) return false;
  std::vector<char> seen_obj(static_cast<std::size_t>(H.num_objects), 0);
  for (int x = 0; x < G.num_objects; ++x) {
    int y = iso.object_map[static_cast<std::size_t>(x)];
    if (y < 0 || y >= H.num_objects || seen_obj[static_cast<std::size_t>(y)]) return false;
    seen_obj[static_cast<std::size_t>(y)] = 1;
  }
  std::vector<char> seen_arr(static_cast<std::size_t>(H.num_arrows), 0);
  for (int a = 0; a < G.num_arrows; ++a) {
    int b = iso.arrow_map[static_cast<std::size_t>(a)];
    if (b < 0 || b >= H.num_arrows || seen_arr[static_cast<std::size_t>(b)]) return false;
    seen_arr[static_cast<std::size_t>(b)] = 1;
    if (H.src[b] != iso.object_map[static_cast<std::size_t>(G.src[a])]) return false;
    if (H.tgt[b] != iso.object_map[static_cast<std::size_t>(G.tgt[a])]) return false;
    if (H.inv[b] != iso.arrow_map[static_cast<std::size_t>(G.inv[a])]) return false;
  }
  for (int x = 0; x < G.num_objects; ++x)
    if (H.unit[iso.object_map[static_cast<std::size_t>(x)]] !=
        iso.arrow_map[static_cast<std::size_t>(G.unit[x])])
      return false;
  for (int a = 0; a < G.num_arrows; ++a)
    for (int b = 0; b < G.num_arrows; ++b) {
      if (!G.composable(a, b)) continue;
      if (H.comp(iso.arrow_map[static_cast<std::size_t>(a)],
                 iso.arrow_map[static_cast<std::size_t>(b)]) !=
          iso.arrow_map[static_cast<std::size_t>(G.comp(a, b))])
        return false;
    }
  return true;
}

}  // namespace kanforge
