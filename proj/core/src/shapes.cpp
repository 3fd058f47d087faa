#include "kanforge/shapes.hpp"

#include <algorithm>

namespace kanforge {

std::string to_string(ShapeKind k) {
  switch (k) {
    case ShapeKind::Simplex: return "simplex";
    case ShapeKind::Horn: return "horn";
    case ShapeKind::Boundary: return "boundary";
    case ShapeKind::Custom: return "custom";
  }
  return "?";
}

namespace {

void enumerate_monotone(int n, int m, std::vector<int>& cur,
                        const std::function<void(const std::vector<int>&)>& emit) {
  if (static_cast<int>(cur.size()) == n + 1) {
    emit(cur);
    return;
  }
  int lo = cur.empty() ? 0 : cur.back();
  for (int v = lo; v <= m; ++v) {
    cur.push_back(v);
    enumerate_monotone(n, m, cur, emit);
    cur.pop_back();
  }
}

bool image_covers(const std::vector<int>& f, int m, int skip) {
  std::vector<char> hit(static_cast<std::size_t>(m) + 1, 0);
  for (int v : f) hit[static_cast<std::size_t>(v)] = 1;
  for (int v = 0; v <= m; ++v)
    if (v != skip && !hit[static_cast<std::size_t>(v)]) return false;
  return true;
}

std::vector<int> compose_coface(const std::vector<int>& f, int i) {
  // f restricted along delta_i: drop position i of the domain
  std::vector<int> g = f;
  g.erase(g.begin() + i);
  return g;
}

std::vector<int> compose_codegen(const std::vector<int>& f, int i) {
  // f along sigma_i: repeat position i of the domain
  std::vector<int> g = f;
  g.insert(g.begin() + i, f[static_cast<std::size_t>(i)]);
  return g;
}

}  // namespace

int ShapePresentation::index_of(int n, const std::vector<int>& f) const {
  if (n < 0 || n > trunc_dim) return -1;
  const auto& lvl = simplices[static_cast<std::size_t>(n)];
  auto it = std::lower_bound(lvl.begin(), lvl.end(), f);
  if (it == lvl.end() || *it != f) return -1;
  return static_cast<int>(it - lvl.begin());
}

TruncatedSimplicialSet ShapePresentation::as_simplicial() const {
  std::vector<int> sizes;
  for (const auto& lvl : simplices) sizes.push_back(static_cast<int>(lvl.size()));
  TruncatedSimplicialSet X = make_simplicial_skeleton(sizes);
  for (int n = 1; n <= trunc_dim; ++n)
    for (int idx = 0; idx < size(n); ++idx)
      for (int i = 0; i <= n; ++i) {
        int t = index_of(n - 1, compose_coface(simplex(n, idx), i));
        if (t < 0) throw StructuralError("shape not closed under faces");
        X.face[n][i][idx] = t;
      }
  for (int n = 0; n < trunc_dim; ++n)
    for (int idx = 0; idx < size(n); ++idx)
      for (int i = 0; i <= n; ++i) {
        int t = index_of(n + 1, compose_codegen(simplex(n, idx), i));
        if (t < 0) throw StructuralError("shape not closed under degeneracies");
        X.degen[n][i][idx] = t;
      }
  return X;
}

ShapePresentation shape(ShapeKind kind, int m, int j, int trunc_dim) {
  if (m < 0) throw StructuralError("shape: m must be nonnegative");
  if (kind == ShapeKind::Horn && (j < 0 || j > m))
    throw StructuralError("horn index j out of range");
  if (kind == ShapeKind::Custom)
    throw StructuralError("use custom_shape for Custom presentations");
  ShapePresentation S;
  S.kind = kind;
  S.m = m;
  S.j = (kind == ShapeKind::Horn) ? j : -1;
  S.trunc_dim = trunc_dim >= 0 ? trunc_dim : m + 1;
  S.simplices.resize(static_cast<std::size_t>(S.trunc_dim) + 1);
  for (int n = 0; n <= S.trunc_dim; ++n) {
    std::vector<int> cur;
    enumerate_monotone(n, m, cur, [&](const std::vector<int>& f) {
      bool keep = true;
      switch (kind) {
        case ShapeKind::Simplex: break;
        case ShapeKind::Horn: keep = !image_covers(f, m, j); break;
        case ShapeKind::Boundary: keep = !image_covers(f, m, -1); break;
        case ShapeKind::Custom: break;
      }
      if (keep) S.simplices[static_cast<std::size_t>(n)].push_back(f);
    });
    budget::charge(S.simplices[static_cast<std::size_t>(n)].size(),
                   "shape level " + std::to_string(n));
  }
  return S;
}

ShapePresentation custom_shape(int m, std::vector<std::vector<std::vector<int>>> simplices) {
  ShapePresentation S;
  S.kind = ShapeKind::Custom;
  S.m = m;
  S.trunc_dim = static_cast<int>(simplices.size()) - 1;
  for (auto& lvl : simplices) std::sort(lvl.begin(), lvl.end());
  S.simplices = std::move(simplices);
  S.as_simplicial();  // validates closure
  return S;
}

bool shape_contains(const ShapePresentation& S, const ShapePresentation& T) {
  if (T.trunc_dim > S.trunc_dim) return false;
  for (int n = 0; n <= T.trunc_dim; ++n)
    for (int idx = 0; idx < T.size(n); ++idx)
      if (S.index_of(n, T.simplex(n, idx)) < 0) return false;
  return true;
}

}  // namespace kanforge
