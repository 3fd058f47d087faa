#include "kanforge/hom.hpp"

#include <algorithm>
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

// Per-level index of X elements by their full face vector (d_0 .. d_n).
struct FaceIndex {
  std::vector<std::unordered_map<std::vector<int>, std::vector<int>, VecHash>> by_faces;

  explicit FaceIndex(const TruncatedSimplicialSet& X) {
    by_faces.resize(static_cast<std::size_t>(X.trunc_dim) + 1);
    for (int n = 1; n <= X.trunc_dim; ++n) {
      auto& idx = by_faces[static_cast<std::size_t>(n)];
      std::vector<int> key(static_cast<std::size_t>(n) + 1);
      for (int x = 0; x < X.size(n); ++x) {
        for (int i = 0; i <= n; ++i) key[static_cast<std::size_t>(i)] = X.d(n, i, x);
        idx[key].push_back(x);
      }
    }
  }
};

}  // namespace

SimplicialMap identity_map(const TruncatedSimplicialSet& X) {
  SimplicialMap f;
  f.level.resize(static_cast<std::size_t>(X.trunc_dim) + 1);
  for (int n = 0; n <= X.trunc_dim; ++n) {
    f.level[n].resize(X.size(n));
    for (int x = 0; x < X.size(n); ++x) f.level[n][x] = x;
  }
  return f;
}

SimplicialMap compose_maps(const SimplicialMap& f, const SimplicialMap& g) {
  SimplicialMap h;
  std::size_t d = std::min(f.level.size(), g.level.size());
  h.level.resize(d);
  for (std::size_t n = 0; n < d; ++n) {
    h.level[n].resize(f.level[n].size());
    for (std::size_t x = 0; x < f.level[n].size(); ++x)
      h.level[n][x] = g.level[n][f.level[n][x]];
  }
  return h;
}

bool is_simplicial_map(const TruncatedSimplicialSet& S,
                       const TruncatedSimplicialSet& X, const SimplicialMap& f) {
  int D = std::min(S.trunc_dim, X.trunc_dim);
  if (static_cast<int>(f.level.size()) < D + 1)
    throw StructuralError("map is missing levels");
  for (int n = 0; n <= D; ++n)
    if (static_cast<int>(f.level[n].size()) != S.size(n))
      throw StructuralError("map level " + std::to_string(n) + " has wrong arity");
  for (int n = 1; n <= D; ++n)
    for (int i = 0; i <= n; ++i)
      for (int x = 0; x < S.size(n); ++x)
        if (f.level[n - 1][S.d(n, i, x)] != X.d(n, i, f.level[n][x])) return false;
  for (int n = 0; n < D; ++n)
    for (int i = 0; i <= n; ++i)
      for (int x = 0; x < S.size(n); ++x)
        if (f.level[n + 1][S.s(n, i, x)] != X.s(n, i, f.level[n][x])) return false;
  return true;
}

std::vector<SimplicialMap> hom_set(const TruncatedSimplicialSet& S,
                                   const TruncatedSimplicialSet& X) {
  const auto nd = nondegenerate_elements(S);
  for (int n = X.trunc_dim + 1; n <= S.trunc_dim; ++n)
    if (!nd[static_cast<std::size_t>(n)].empty())
      throw DimensionError("source has a nondegenerate " + std::to_string(n) +
                           "-simplex above target truncation " +
                           std::to_string(X.trunc_dim));

  // Flattened nondegenerate list in (dim, index) order, with positions.
  struct NdRef { int dim; int elem; };
  std::vector<NdRef> order;
  std::vector<std::vector<int>> nd_pos(static_cast<std::size_t>(S.trunc_dim) + 1);
  for (int n = 0; n <= S.trunc_dim; ++n) {
    nd_pos[static_cast<std::size_t>(n)].assign(S.size(n), -1);
    for (int x : nd[static_cast<std::size_t>(n)]) {
      nd_pos[static_cast<std::size_t>(n)][static_cast<std::size_t>(x)] =
          static_cast<int>(order.size());
      order.push_back({n, x});
    }
  }

  // EZ data for every element of S within the assignable range.
  std::vector<std::vector<EzDecomposition>> ez(static_cast<std::size_t>(S.trunc_dim) + 1);
  for (int n = 0; n <= S.trunc_dim; ++n) {
    ez[static_cast<std::size_t>(n)].reserve(S.size(n));
    for (int x = 0; x < S.size(n); ++x)
      ez[static_cast<std::size_t>(n)].push_back(ez_decompose(S, n, x));
  }

  FaceIndex index(X);

  std::vector<int> assigned(order.size(), -1);
  auto value_of = [&](int n, int x) {
    // value of an arbitrary element from its nondegenerate core
    const EzDecomposition& e = ez[static_cast<std::size_t>(n)][static_cast<std::size_t>(x)];
    int pos = nd_pos[static_cast<std::size_t>(e.core_dim)][static_cast<std::size_t>(e.core)];
    int core_val = assigned[static_cast<std::size_t>(pos)];
    if (e.core_dim == n) return core_val;
    return apply_operator(X, e.collapse, e.core_dim, core_val);
  };

  std::vector<SimplicialMap> out;
  const int D = std::min(S.trunc_dim, X.trunc_dim);

  std::vector<int> key;
  auto emit = [&]() {
    SimplicialMap f;
    f.level.resize(static_cast<std::size_t>(D) + 1);
    for (int n = 0; n <= D; ++n) {
      f.level[n].resize(S.size(n));
      for (int x = 0; x < S.size(n); ++x) f.level[n][x] = value_of(n, x);
    }
    budget::charge(out.size() + 1, "hom set");
    out.push_back(std::move(f));
  };

  // Depth-first assignment in (dim, index) order.
  std::vector<int> cand_stack;
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == order.size()) {
      emit();
      return;
    }
    const int n = order[pos].dim;
    const int x = order[pos].elem;
    if (n == 0) {
      for (int v = 0; v < X.size(0); ++v) {
        assigned[pos] = v;
        rec(pos + 1);
      }
      assigned[pos] = -1;
      return;
    }
    key.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i <= n; ++i)
      key[static_cast<std::size_t>(i)] = value_of(n - 1, S.d(n, i, x));
    auto it = index.by_faces[static_cast<std::size_t>(n)].find(key);
    if (it == index.by_faces[static_cast<std::size_t>(n)].end()) return;
    for (int v : it->second) {
      assigned[pos] = v;
      rec(pos + 1);
    }
    assigned[pos] = -1;
  };
  rec(0);
  return out;
}

std::vector<SimplicialMap> hom_set(const ShapePresentation& S,
                                   const TruncatedSimplicialSet& X) {
  return hom_set(S.as_simplicial(), X);
}

std::vector<int> nondegenerate_key(const TruncatedSimplicialSet& S,
                                   const std::vector<std::vector<int>>& nd,
                                   const SimplicialMap& f) {
  std::vector<int> key;
  int D = static_cast<int>(f.level.size()) - 1;
  for (int n = 0; n <= std::min(D, S.trunc_dim); ++n)
    for (int x : nd[static_cast<std::size_t>(n)]) key.push_back(f.level[n][x]);
  return key;
}

std::vector<int> restrict_simplex(const TruncatedSimplicialSet& X, int m, int sigma,
                                  const ShapePresentation& T) {
  std::vector<int> key;
  for (int n = 0; n <= T.trunc_dim; ++n)
    for (int idx = 0; idx < T.size(n); ++idx) {
      const auto& f = T.simplex(n, idx);
      bool inj = true;
      for (std::size_t i = 0; i + 1 < f.size(); ++i)
        if (f[i] == f[i + 1]) { inj = false; break; }
      if (!inj) continue;  // degenerate in T iff non-injective as a monotone map
      key.push_back(apply_operator(X, f, m, sigma));
    }
  return key;
}

}  // namespace kanforge
