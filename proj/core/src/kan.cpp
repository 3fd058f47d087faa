#include "kanforge/kan.hpp"

#include <algorithm>
#include <map>

namespace kanforge {

RestrictionFibers restriction_fibers(const TruncatedSimplicialSet& X, int m, int j) {
  if (m < 1 || m > X.trunc_dim)
    throw DimensionError("restriction_fibers: level " + std::to_string(m) +
                         " outside truncation");
  RestrictionFibers out;
  out.m = m;
  out.j = j;
  ShapePresentation horn = shape(ShapeKind::Horn, m, j, std::max(0, m - 1));
  TruncatedSimplicialSet horn_tss = horn.as_simplicial();
  auto nd = nondegenerate_elements(horn_tss);

  auto homs = hom_set(horn_tss, X);
  std::map<std::vector<int>, std::vector<int>> fillers_by_key;
  for (int sigma = 0; sigma < X.size(m); ++sigma)
    fillers_by_key[restrict_simplex(X, m, sigma, horn)].push_back(sigma);

  for (const auto& h : homs) {
    out.horns.push_back(nondegenerate_key(horn_tss, nd, h));
    auto it = fillers_by_key.find(out.horns.back());
    out.fillers.push_back(it == fillers_by_key.end() ? std::vector<int>{}
                                                     : it->second);
  }
  return out;
}

KanStatus check_kan(const TruncatedSimplicialSet& X, int m, int j) {
  KanStatus st;
  st.m = m;
  st.j = j;
  RestrictionFibers rf = restriction_fibers(X, m, j);
  st.cover = true;
  st.iso = true;
  for (std::size_t i = 0; i < rf.horns.size(); ++i) {
    std::size_t c = rf.fillers[i].size();
    if (c == 0) {
      st.iso = false;
      if (st.cover) {
        st.cover = false;
        st.witness_horn = rf.horns[i];
        st.witness_filler_count = 0;
      }
    } else if (c > 1 && st.iso) {
      st.iso = false;
      if (!st.witness_horn) {
        st.witness_horn = rf.horns[i];
        st.witness_filler_count = static_cast<int>(c);
      }
    }
  }
  return st;
}

ClassifyResult classify_n_groupoid(const TruncatedSimplicialSet& X, int up_to_dim) {
  if (up_to_dim > X.trunc_dim)
    throw DimensionError("classify: up_to_dim exceeds truncation");
  ClassifyResult res;
  res.checked_dim = up_to_dim;
  int worst_non_unique = 0;
  for (int m = 1; m <= up_to_dim; ++m)
    for (int j = 0; j <= m; ++j) {
      KanStatus st = check_kan(X, m, j);
      res.statuses.push_back(st);
      if (!st.cover && !res.failure) res.failure = st;
      if (!st.iso) worst_non_unique = std::max(worst_non_unique, m);
    }
  if (res.failure) {
    res.is_n_groupoid = false;
    res.n = -1;
  } else {
    res.is_n_groupoid = true;
    res.n = worst_non_unique;
  }
  return res;
}

std::vector<int> fill_horn(const TruncatedSimplicialSet& X, int m, int j,
                           const SimplicialMap& horn) {
  ShapePresentation hs = shape(ShapeKind::Horn, m, j, std::max(0, m - 1));
  TruncatedSimplicialSet horn_tss = hs.as_simplicial();
  if (!is_simplicial_map(horn_tss, X, horn))
    throw StructuralError("fill_horn: not a horn map");
  auto nd = nondegenerate_elements(horn_tss);
  std::vector<int> key = nondegenerate_key(horn_tss, nd, horn);
  std::vector<int> fillers;
  for (int sigma = 0; sigma < X.size(m); ++sigma)
    if (restrict_simplex(X, m, sigma, hs) == key) fillers.push_back(sigma);
  return fillers;
}

SimplicialMap horn_from_faces(const TruncatedSimplicialSet& X, int m, int j,
                              const std::vector<int>& faces) {
  if (static_cast<int>(faces.size()) != m)
    throw StructuralError("horn_from_faces: need m faces");
  ShapePresentation hs = shape(ShapeKind::Horn, m, j, std::max(0, m - 1));
  TruncatedSimplicialSet horn_tss = hs.as_simplicial();
  auto face_value = [&](int v) {
    int pos = v < j ? v : v - 1;
    return faces[static_cast<std::size_t>(pos)];
  };
  SimplicialMap f;
  int D = std::min(horn_tss.trunc_dim, X.trunc_dim);
  f.level.resize(static_cast<std::size_t>(D) + 1);
  for (int n = 0; n <= D; ++n) {
    f.level[n].resize(hs.size(n));
    for (int idx = 0; idx < hs.size(n); ++idx) {
      const auto& g = hs.simplex(n, idx);
      // least vertex v != j missing from image(g); g factors through face v
      std::vector<char> hit(static_cast<std::size_t>(m) + 1, 0);
      for (int val : g) hit[static_cast<std::size_t>(val)] = 1;
      int v = -1;
      for (int c = 0; c <= m; ++c)
        if (c != j && !hit[static_cast<std::size_t>(c)]) { v = c; break; }
      if (v < 0) throw StructuralError("horn membership broken");
      std::vector<int> g2 = g;
      for (int& val : g2)
        if (val > v) --val;
      f.level[n][idx] = apply_operator(X, g2, m - 1, face_value(v));
    }
  }
  if (!is_simplicial_map(horn_tss, X, f))
    throw StructuralError("horn_from_faces: faces do not glue");
  return f;
}

}  // namespace kanforge
