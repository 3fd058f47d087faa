#include "kanforge/simplicial.hpp"

#include <numeric>

namespace kanforge {

TruncatedSimplicialSet make_simplicial_skeleton(const std::vector<int>& level_sizes) {
  if (level_sizes.empty()) throw StructuralError("need at least level 0");
  TruncatedSimplicialSet X;
  X.trunc_dim = static_cast<int>(level_sizes.size()) - 1;
  X.level_size = level_sizes;
  X.face.resize(level_sizes.size());
  X.degen.resize(level_sizes.size());
  for (int n = 1; n <= X.trunc_dim; ++n)
    X.face[n].assign(n + 1, std::vector<int>(level_sizes[n], -1));
  for (int n = 0; n < X.trunc_dim; ++n)
    X.degen[n].assign(n + 1, std::vector<int>(level_sizes[n], -1));
  return X;
}

TruncatedSimplicialSet constant_point(int trunc_dim) {
  return constant_set(1, trunc_dim);
}

TruncatedSimplicialSet constant_set(int size, int trunc_dim) {
  TruncatedSimplicialSet X = make_simplicial_skeleton(
      std::vector<int>(static_cast<std::size_t>(trunc_dim) + 1, size));
  std::vector<int> id(size);
  std::iota(id.begin(), id.end(), 0);
  for (int n = 1; n <= trunc_dim; ++n)
    for (int i = 0; i <= n; ++i) X.face[n][i] = id;
  for (int n = 0; n < trunc_dim; ++n)
    for (int i = 0; i <= n; ++i) X.degen[n][i] = id;
  return X;
}

namespace {

void check_map(const std::vector<int>& f, int dom, int cod, const std::string& name) {
  if (static_cast<int>(f.size()) != dom)
    throw StructuralError(name + ": domain size " + std::to_string(f.size()) +
                          ", expected " + std::to_string(dom));
  for (int v : f)
    if (v < 0 || v >= cod)
      throw StructuralError(name + ": value " + std::to_string(v) +
                            " out of range [0," + std::to_string(cod) + ")");
}

}  // namespace

void validate_structure(const TruncatedSimplicialSet& X) {
  const int N = X.trunc_dim;
  if (static_cast<int>(X.level_size.size()) != N + 1)
    throw StructuralError("level_size arity mismatch");
  if (static_cast<int>(X.face.size()) != N + 1 || static_cast<int>(X.degen.size()) != N + 1)
    throw StructuralError("face/degen arity mismatch");
  for (int n = 1; n <= N; ++n) {
    if (static_cast<int>(X.face[n].size()) != n + 1)
      throw StructuralError("face[" + std::to_string(n) + "] must have " +
                            std::to_string(n + 1) + " maps");
    for (int i = 0; i <= n; ++i)
      check_map(X.face[n][i], X.size(n), X.size(n - 1),
                "face[" + std::to_string(n) + "][" + std::to_string(i) + "]");
  }
  for (int n = 0; n < N; ++n) {
    if (static_cast<int>(X.degen[n].size()) != n + 1)
      throw StructuralError("degen[" + std::to_string(n) + "] must have " +
                            std::to_string(n + 1) + " maps");
    for (int i = 0; i <= n; ++i)
      check_map(X.degen[n][i], X.size(n), X.size(n + 1),
                "degen[" + std::to_string(n) + "][" + std::to_string(i) + "]");
  }
}

SimplicialReport check_simplicial_identities(const TruncatedSimplicialSet& X) {
  validate_structure(X);
  SimplicialReport rep;
  const int N = X.trunc_dim;
  auto violate = [&rep](std::string id, int level, int i, int j, int x, int l, int r) {
    rep.ok = false;
    rep.violations.push_back({std::move(id), level, i, j, x, l, r});
  };

  // d_i d_j = d_{j-1} d_i, i < j, on level n >= 2
  for (int n = 2; n <= N; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        for (int x = 0; x < X.size(n); ++x) {
          int lhs = X.d(n - 1, i, X.d(n, j, x));
          int rhs = X.d(n - 1, j - 1, X.d(n, i, x));
          if (lhs != rhs) violate("d_i d_j = d_{j-1} d_i", n, i, j, x, lhs, rhs);
        }

  // s_i s_j = s_{j+1} s_i, i <= j, on level n <= N-2
  for (int n = 0; n + 2 <= N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        for (int x = 0; x < X.size(n); ++x) {
          int lhs = X.s(n + 1, i, X.s(n, j, x));
          int rhs = X.s(n + 1, j + 1, X.s(n, i, x));
          if (lhs != rhs) violate("s_i s_j = s_{j+1} s_i", n, i, j, x, lhs, rhs);
        }

  // d_i s_j = s_{j-1} d_i, i < j, on level n (1 <= n <= N-1)
  for (int n = 1; n < N; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        for (int x = 0; x < X.size(n); ++x) {
          int lhs = X.d(n + 1, i, X.s(n, j, x));
          int rhs = X.s(n - 1, j - 1, X.d(n, i, x));
          if (lhs != rhs) violate("d_i s_j = s_{j-1} d_i", n, i, j, x, lhs, rhs);
        }

  // d_j s_j = id = d_{j+1} s_j, on level n <= N-1
  for (int n = 0; n < N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int x = 0; x < X.size(n); ++x) {
        int a = X.d(n + 1, j, X.s(n, j, x));
        if (a != x) violate("d_j s_j = id", n, j, j, x, a, x);
        int b = X.d(n + 1, j + 1, X.s(n, j, x));
        if (b != x) violate("d_{j+1} s_j = id", n, j + 1, j, x, b, x);
      }

  // d_i s_j = s_j d_{i-1}, i > j+1, on level n (1 <= n <= N-1)
  for (int n = 1; n < N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = j + 2; i <= n + 1; ++i)
        for (int x = 0; x < X.size(n); ++x) {
          int lhs = X.d(n + 1, i, X.s(n, j, x));
          int rhs = X.s(n - 1, j, X.d(n, i - 1, x));
          if (lhs != rhs) violate("d_i s_j = s_j d_{i-1}", n, i, j, x, lhs, rhs);
        }

  return rep;
}

int apply_operator(const TruncatedSimplicialSet& X, const std::vector<int>& f,
                   int m, int x) {
  const int k = static_cast<int>(f.size()) - 1;
  if (k < 0) throw StructuralError("empty operator");
  for (int i = 0; i < k; ++i)
    if (f[i] > f[i + 1]) throw StructuralError("operator not monotone");
  if (f.back() > m || f.front() < 0)
    throw StructuralError("operator out of range");

  // Injective, non-surjective part: peel the largest missing target value.
  // x moves down via face maps; then duplicates are re-expanded by
  // degeneracies (contravariance puts faces innermost).
  std::vector<int> g = f;
  int cur = m;
  int y = x;
  while (true) {
    // find largest t in [0, cur] missing from image(g)
    int t = -1;
    {
      std::vector<char> hit(static_cast<std::size_t>(cur) + 1, 0);
      for (int v : g) hit[static_cast<std::size_t>(v)] = 1;
      for (int c = cur; c >= 0; --c)
        if (!hit[static_cast<std::size_t>(c)]) { t = c; break; }
    }
    if (t < 0) break;
    y = X.d(cur, t, y);
    for (int& v : g)
      if (v > t) --v;
    --cur;
  }
  // g is now surjective onto [0, cur]; expand duplicates left to right.
  // Record degeneracy indices, then apply them outermost-last.
  std::vector<int> degen_indices;
  {
    std::vector<int> h = g;
    while (static_cast<int>(h.size()) - 1 > cur) {
      int i = -1;
      for (int p = 0; p + 1 < static_cast<int>(h.size()); ++p)
        if (h[p] == h[p + 1]) { i = p; break; }
      if (i < 0) throw StructuralError("operator reduction failed");
      degen_indices.push_back(i);
      h.erase(h.begin() + i);
    }
  }
  // degen_indices were recorded while shrinking h from size k+1 down to
  // cur+1; replay in reverse (building the domain back up).
  for (auto it = degen_indices.rbegin(); it != degen_indices.rend(); ++it) {
    y = X.s(cur, *it, y);
    ++cur;
  }
  return y;
}

bool is_degenerate(const TruncatedSimplicialSet& X, int n, int x) {
  if (n == 0) return false;
  for (int i = 0; i < n; ++i) {
    int y = X.d(n, i, x);  // if x = s_i(y) then y = d_i x = d_{i+1} x
    if (X.d(n, i + 1, x) == y && X.s(n - 1, i, y) == x) return true;
  }
  return false;
}

EzDecomposition ez_decompose(const TruncatedSimplicialSet& X, int n, int x) {
  EzDecomposition ez;
  ez.collapse.resize(static_cast<std::size_t>(n) + 1);
  std::iota(ez.collapse.begin(), ez.collapse.end(), 0);
  int cur = n;
  int y = x;
  bool stripped = true;
  while (cur > 0 && stripped) {
    stripped = false;
    for (int i = 0; i < cur; ++i) {
      int z = X.d(cur, i, y);
      if (X.d(cur, i + 1, y) == z && X.s(cur - 1, i, z) == y) {
        // y = s_i(z): compose collapse with sigma_i
        for (int& v : ez.collapse)
          if (v > i) --v;
        y = z;
        --cur;
        stripped = true;
        break;
      }
    }
  }
  ez.core_dim = cur;
  ez.core = y;
  return ez;
}

std::vector<std::vector<int>> nondegenerate_elements(const TruncatedSimplicialSet& X) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(X.trunc_dim) + 1);
  for (int n = 0; n <= X.trunc_dim; ++n)
    for (int x = 0; x < X.size(n); ++x)
      if (!is_degenerate(X, n, x)) out[static_cast<std::size_t>(n)].push_back(x);
  return out;
}

}  // namespace kanforge
