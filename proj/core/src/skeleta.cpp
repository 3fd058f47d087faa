#include "kanforge/skeleta.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace kanforge {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

TruncatedSimplicialSet skeleton(const TruncatedSimplicialSet& X, int m, int out_dim) {
  validate_structure(X);
  if (out_dim < 0) out_dim = X.trunc_dim;
  if (m > X.trunc_dim || out_dim > X.trunc_dim)
    throw DimensionError("skeleton: dimension exceeds truncation");

  // sel[k]: original indices kept at level k; pos[k]: original -> new
  std::vector<std::vector<int>> sel(static_cast<std::size_t>(out_dim) + 1);
  std::vector<std::vector<int>> pos(static_cast<std::size_t>(out_dim) + 1);
  for (int k = 0; k <= out_dim; ++k) {
    if (k <= m) {
      sel[k].resize(X.size(k));
      for (int x = 0; x < X.size(k); ++x) sel[k][static_cast<std::size_t>(x)] = x;
    } else {
      for (int y : sel[k - 1])
        for (int i = 0; i <= k - 1; ++i) sel[k].push_back(X.s(k - 1, i, y));
      std::sort(sel[k].begin(), sel[k].end());
      sel[k].erase(std::unique(sel[k].begin(), sel[k].end()), sel[k].end());
    }
    pos[k].assign(X.size(k), -1);
    for (std::size_t idx = 0; idx < sel[k].size(); ++idx)
      pos[k][static_cast<std::size_t>(sel[k][idx])] = static_cast<int>(idx);
  }

  std::vector<int> sizes;
  for (auto& s : sel) sizes.push_back(static_cast<int>(s.size()));
  TruncatedSimplicialSet Y = make_simplicial_skeleton(sizes);
  for (int k = 1; k <= out_dim; ++k)
    for (std::size_t idx = 0; idx < sel[k].size(); ++idx)
      for (int i = 0; i <= k; ++i) {
        int t = pos[k - 1][static_cast<std::size_t>(X.d(k, i, sel[k][idx]))];
        if (t < 0) throw StructuralError("skeleton: not closed under faces");
        Y.face[k][i][idx] = t;
      }
  for (int k = 0; k < out_dim; ++k)
    for (std::size_t idx = 0; idx < sel[k].size(); ++idx)
      for (int i = 0; i <= k; ++i) {
        int t = pos[k + 1][static_cast<std::size_t>(X.s(k, i, sel[k][idx]))];
        if (t < 0) throw StructuralError("skeleton: not closed under degeneracies");
        Y.degen[k][i][idx] = t;
      }
  return Y;
}

namespace detail {

// Simplicial kernel level on top of the (k-1)-th level of Y: compatible
// (k+1)-tuples of level-(k-1) elements, lexicographically ordered.
std::vector<std::vector<int>> simplicial_kernel(const TruncatedSimplicialSet& Y, int k) {
  const int lvl = k - 1;
  std::vector<std::vector<int>> out;
  if (Y.size(lvl) == 0) return out;

  // prefix[j] maps (d_{j-1} x_0, ..., d_{j-1} x_{j-1}) -> candidates x_j with
  // d_i x_j matching for i < j. Keyed by x_j's faces 0..j-1.
  std::vector<std::unordered_map<std::vector<int>, std::vector<int>, VecHash>> prefix(
      static_cast<std::size_t>(k) + 1);
  for (int j = 1; j <= k; ++j) {
    if (lvl == 0) break;  // no face conditions between vertices
    auto& idx = prefix[static_cast<std::size_t>(j)];
    std::vector<int> key(static_cast<std::size_t>(std::min(j, lvl + 1)));
    for (int x = 0; x < Y.size(lvl); ++x) {
      for (int i = 0; i < static_cast<int>(key.size()); ++i)
        key[static_cast<std::size_t>(i)] = Y.d(lvl, i, x);
      idx[key].push_back(x);
    }
  }

  std::vector<int> tuple(static_cast<std::size_t>(k) + 1, -1);
  std::function<void(int)> rec = [&](int j) {
    if (j == k + 1) {
      budget::charge(out.size() + 1, "simplicial kernel level " + std::to_string(k));
      out.push_back(tuple);
      return;
    }
    if (j == 0 || lvl == 0) {
      for (int x = 0; x < Y.size(lvl); ++x) {
        tuple[static_cast<std::size_t>(j)] = x;
        rec(j + 1);
      }
      return;
    }
    // faces 0..min(j,lvl+1)-1 of x_j are prescribed by earlier entries
    int keylen = std::min(j, lvl + 1);
    std::vector<int> key(static_cast<std::size_t>(keylen));
    for (int i = 0; i < keylen; ++i)
      key[static_cast<std::size_t>(i)] =
          Y.d(lvl, j - 1, tuple[static_cast<std::size_t>(i)]);
    auto it = prefix[static_cast<std::size_t>(j)].find(key);
    if (it == prefix[static_cast<std::size_t>(j)].end()) return;
    for (int x : it->second) {
      // remaining conditions (i >= keylen) cannot occur: keylen = min(j, lvl+1)
      tuple[static_cast<std::size_t>(j)] = x;
      rec(j + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace detail

TruncatedSimplicialSet coskeleton(const TruncatedSimplicialSet& X, int m, int out_dim) {
  validate_structure(X);
  if (m > X.trunc_dim) throw DimensionError("coskeleton: m exceeds truncation");
  if (out_dim < m) throw DimensionError("coskeleton: out_dim below m");

  std::vector<int> sizes(static_cast<std::size_t>(out_dim) + 1, 0);
  for (int k = 0; k <= m; ++k) sizes[static_cast<std::size_t>(k)] = X.size(k);
  TruncatedSimplicialSet Y = make_simplicial_skeleton(sizes);
  for (int k = 1; k <= m; ++k) Y.face[k] = X.face[k];
  for (int k = 0; k < m; ++k) Y.degen[k] = X.degen[k];
  // degen[m] of X is ignored: levels above m are rebuilt

  for (int k = m + 1; k <= out_dim; ++k) {
    auto tuples = detail::simplicial_kernel(Y, k);
    Y.level_size[static_cast<std::size_t>(k)] = static_cast<int>(tuples.size());
    std::unordered_map<std::vector<int>, int, VecHash> lookup;
    for (std::size_t idx = 0; idx < tuples.size(); ++idx)
      lookup[tuples[idx]] = static_cast<int>(idx);

    Y.face[k].assign(k + 1, std::vector<int>(tuples.size()));
    for (std::size_t idx = 0; idx < tuples.size(); ++idx)
      for (int i = 0; i <= k; ++i)
        Y.face[k][i][idx] = tuples[idx][static_cast<std::size_t>(i)];

    Y.degen[k - 1].assign(k, std::vector<int>(Y.size(k - 1)));
    for (int i = 0; i <= k - 1; ++i)
      for (int y = 0; y < Y.size(k - 1); ++y) {
        std::vector<int> t(static_cast<std::size_t>(k) + 1);
        for (int l = 0; l <= k; ++l) {
          if (l == i || l == i + 1)
            t[static_cast<std::size_t>(l)] = y;
          else if (l < i)
            t[static_cast<std::size_t>(l)] = Y.s(k - 2, i - 1, Y.d(k - 1, l, y));
          else
            t[static_cast<std::size_t>(l)] = Y.s(k - 2, i, Y.d(k - 1, l - 1, y));
        }
        auto it = lookup.find(t);
        if (it == lookup.end())
          throw StructuralError("coskeleton: degeneracy tuple escapes the kernel");
        Y.degen[k - 1][i][y] = it->second;
      }
  }
  return Y;
}

CoskIdentityReport check_cosk_identity(const TruncatedSimplicialSet& X, int m,
                                       int up_to) {
  CoskIdentityReport rep;
  if (up_to > X.trunc_dim) {
    rep.ok = false;
    rep.detail = "requested dimension exceeds truncation";
    return rep;
  }
  TruncatedSimplicialSet Y = coskeleton(X, m, up_to);
  // canonical comparison c_k : X_k -> Y_k
  std::vector<std::vector<int>> c(static_cast<std::size_t>(up_to) + 1);
  for (int k = 0; k <= m && k <= up_to; ++k) {
    c[k].resize(X.size(k));
    for (int x = 0; x < X.size(k); ++x) c[k][x] = x;
  }
  for (int k = m + 1; k <= up_to; ++k) {
    // index Y_k tuples for lookup
    std::unordered_map<std::vector<int>, int, VecHash> lookup;
    for (int y = 0; y < Y.size(k); ++y) {
      std::vector<int> t(static_cast<std::size_t>(k) + 1);
      for (int i = 0; i <= k; ++i) t[static_cast<std::size_t>(i)] = Y.d(k, i, y);
      lookup[t] = y;
    }
    c[k].assign(X.size(k), -1);
    for (int x = 0; x < X.size(k); ++x) {
      std::vector<int> t(static_cast<std::size_t>(k) + 1);
      for (int i = 0; i <= k; ++i)
        t[static_cast<std::size_t>(i)] = c[k - 1][X.d(k, i, x)];
      auto it = lookup.find(t);
      if (it == lookup.end()) {
        rep.ok = false;
        rep.failed_level = k;
        rep.detail = "element " + std::to_string(x) + " has no kernel image";
        return rep;
      }
      c[k][x] = it->second;
    }
    // bijection?
    if (X.size(k) != Y.size(k)) {
      rep.ok = false;
      rep.failed_level = k;
      rep.detail = "level sizes differ: " + std::to_string(X.size(k)) + " vs " +
                   std::to_string(Y.size(k));
      return rep;
    }
    std::vector<char> hit(static_cast<std::size_t>(Y.size(k)), 0);
    for (int x = 0; x < X.size(k); ++x) {
      if (hit[static_cast<std::size_t>(c[k][x])]) {
        rep.ok = false;
        rep.failed_level = k;
        rep.detail = "comparison not injective at element " + std::to_string(x);
        return rep;
      }
      hit[static_cast<std::size_t>(c[k][x])] = 1;
    }
  }
  // degeneracy commutation
  for (int k = 0; k < up_to; ++k)
    for (int i = 0; i <= k; ++i)
      for (int x = 0; x < X.size(k); ++x)
        if (c[k + 1][X.s(k, i, x)] != Y.s(k, i, c[k][x])) {
          rep.ok = false;
          rep.failed_level = k + 1;
          rep.detail = "degeneracy mismatch";
          return rep;
        }
  return rep;
}

AdjunctionReport check_skeleton_adjunction(const TruncatedSimplicialSet& Y,
                                           const TruncatedSimplicialSet& X, int n) {
  AdjunctionReport rep;
  TruncatedSimplicialSet SkY = skeleton(Y, n);
  TruncatedSimplicialSet CoX = coskeleton(X, n, Y.trunc_dim);
  auto A = hom_set(SkY, X);
  auto B = hom_set(Y, CoX);
  rep.lhs_count = A.size();
  rep.rhs_count = B.size();
  if (A.size() != B.size()) {
    rep.ok = false;
    rep.detail = "hom counts differ";
    return rep;
  }
  std::map<SimplicialMap, int> b_index;
  for (std::size_t i = 0; i < B.size(); ++i) b_index[B[i]] = static_cast<int>(i);

  std::vector<char> used(B.size(), 0);
  for (const auto& F : A) {
    // Transpose: levels <= n agree (on Sk^n(Y) those are Y's levels); above n
    // the image tuple in the kernel is forced.
    SimplicialMap G;
    int D = std::min(Y.trunc_dim, CoX.trunc_dim);
    G.level.resize(static_cast<std::size_t>(D) + 1);
    for (int k = 0; k <= std::min(n, D); ++k) G.level[k] = F.level[k];
    bool fail = false;
    for (int k = n + 1; k <= D && !fail; ++k) {
      std::unordered_map<std::vector<int>, int, VecHash> lookup;
      for (int y = 0; y < CoX.size(k); ++y) {
        std::vector<int> t(static_cast<std::size_t>(k) + 1);
        for (int i = 0; i <= k; ++i) t[static_cast<std::size_t>(i)] = CoX.d(k, i, y);
        lookup[t] = y;
      }
      G.level[k].assign(Y.size(k), -1);
      for (int y = 0; y < Y.size(k); ++y) {
        std::vector<int> t(static_cast<std::size_t>(k) + 1);
        for (int i = 0; i <= k; ++i)
          t[static_cast<std::size_t>(i)] = G.level[k - 1][Y.d(k, i, y)];
        auto it = lookup.find(t);
        if (it == lookup.end()) { fail = true; break; }
        G.level[k][y] = it->second;
      }
    }
    auto it = fail ? b_index.end() : b_index.find(G);
    if (it == b_index.end()) {
      rep.ok = false;
      rep.detail = "transposed map not found on the coskeleton side";
      return rep;
    }
    if (used[static_cast<std::size_t>(it->second)]) {
      rep.ok = false;
      rep.detail = "transposition is not injective";
      return rep;
    }
    used[static_cast<std::size_t>(it->second)] = 1;
  }
  return rep;
}

}  // namespace kanforge
