#include "kanforge/bibundle.hpp"

#include <algorithm>
#include <map>

namespace kanforge {

Bibundle make_bibundle(FiniteGroupoid left, FiniteGroupoid right, int total) {
  Bibundle E;
  E.left = std::move(left);
  E.right = std::move(right);
  E.total = total;
  E.jl.assign(total, -1);
  E.jr.assign(total, -1);
  budget::charge(static_cast<std::size_t>(std::max(1, E.left.num_arrows)) * total,
                 "bibundle action table");
  budget::charge(static_cast<std::size_t>(std::max(1, E.right.num_arrows)) * total,
                 "bibundle action table");
  E.left_act.assign(static_cast<std::size_t>(E.left.num_arrows) * total, -1);
  E.right_act.assign(static_cast<std::size_t>(total) * E.right.num_arrows, -1);
  return E;
}

BibundleReport validate_bibundle(const Bibundle& E) {
  BibundleReport rep;
  auto fail = [&rep](std::string d) {
    rep.ok = false;
    rep.detail = std::move(d);
    return rep;
  };
  if (static_cast<int>(E.jl.size()) != E.total ||
      static_cast<int>(E.jr.size()) != E.total)
    throw StructuralError("bibundle moment map arity");
  if (static_cast<int>(E.left_act.size()) !=
          E.left.num_arrows * E.total ||
      static_cast<int>(E.right_act.size()) != E.total * E.right.num_arrows)
    throw StructuralError("bibundle action arity");
  for (int e = 0; e < E.total; ++e) {
    if (E.jl[e] < 0 || E.jl[e] >= E.left.num_objects) throw StructuralError("jl range");
    if (E.jr[e] < 0 || E.jr[e] >= E.right.num_objects) throw StructuralError("jr range");
  }

  // left action definedness + moment rules
  for (int k = 0; k < E.left.num_arrows; ++k)
    for (int e = 0; e < E.total; ++e) {
      int v = E.lact(k, e);
      bool should = (E.left.src[k] == E.jl[e]);
      if (should != (v >= 0))
        return fail("left action defined exactly when src matches jl fails");
      if (v >= 0) {
        if (E.jl[v] != E.left.tgt[k]) return fail("left action breaks jl");
        if (E.jr[v] != E.jr[e]) return fail("left action must preserve jr");
      }
    }
  for (int e = 0; e < E.total; ++e)
    for (int k = 0; k < E.right.num_arrows; ++k) {
      int v = E.ract(e, k);
      bool should = (E.right.tgt[k] == E.jr[e]);
      if (should != (v >= 0))
        return fail("right action defined exactly when tgt matches jr fails");
      if (v >= 0) {
        if (E.jr[v] != E.right.src[k]) return fail("right action breaks jr");
        if (E.jl[v] != E.jl[e]) return fail("right action must preserve jl");
      }
    }
  // unit and composition laws
  for (int e = 0; e < E.total; ++e) {
    if (E.lact(E.left.unit[E.jl[e]], e) != e) return fail("left unit law");
    if (E.ract(e, E.right.unit[E.jr[e]]) != e) return fail("right unit law");
  }
  for (int k2 = 0; k2 < E.left.num_arrows; ++k2)
    for (int k1 = 0; k1 < E.left.num_arrows; ++k1) {
      if (!E.left.composable(k1, k2)) continue;
      for (int e = 0; e < E.total; ++e) {
        if (E.left.src[k2] != E.jl[e]) continue;
        if (E.lact(E.left.comp(k1, k2), e) != E.lact(k1, E.lact(k2, e)))
          return fail("left action associativity");
      }
    }
  for (int k1 = 0; k1 < E.right.num_arrows; ++k1)
    for (int k2 = 0; k2 < E.right.num_arrows; ++k2) {
      if (!E.right.composable(k1, k2)) continue;
      for (int e = 0; e < E.total; ++e) {
        if (E.right.tgt[k1] != E.jr[e]) continue;
        if (E.ract(e, E.right.comp(k1, k2)) != E.ract(E.ract(e, k1), k2))
          return fail("right action associativity");
      }
    }
  // commutation
  for (int k = 0; k < E.left.num_arrows; ++k)
    for (int e = 0; e < E.total; ++e) {
      if (E.left.src[k] != E.jl[e]) continue;
      for (int h = 0; h < E.right.num_arrows; ++h) {
        if (E.right.tgt[h] != E.jr[e]) continue;
        if (E.lact(k, E.ract(e, h)) != E.ract(E.lact(k, e), h))
          return fail("actions do not commute");
      }
    }
  return rep;
}

bool right_principal(const Bibundle& E) {
  std::vector<std::vector<int>> fibers(static_cast<std::size_t>(E.left.num_objects));
  for (int e = 0; e < E.total; ++e) fibers[static_cast<std::size_t>(E.jl[e])].push_back(e);
  for (const auto& f : fibers)
    if (f.empty()) return false;  // jl not surjective
  for (const auto& f : fibers)
    for (int e : f) {
      // the orbit map k |-> e.k must hit the fiber bijectively
      std::vector<char> hit(f.size(), 0);
      int count = 0;
      for (int k = 0; k < E.right.num_arrows; ++k) {
        int v = E.ract(e, k);
        if (v < 0) continue;
        auto it = std::lower_bound(f.begin(), f.end(), v);
        if (it == f.end() || *it != v) return false;
        std::size_t pos = static_cast<std::size_t>(it - f.begin());
        if (hit[pos]) return false;  // not free
        hit[pos] = 1;
        ++count;
      }
      if (count != static_cast<int>(f.size())) return false;  // not transitive
    }
  return true;
}

bool left_principal(const Bibundle& E) {
  std::vector<std::vector<int>> fibers(static_cast<std::size_t>(E.right.num_objects));
  for (int e = 0; e < E.total; ++e) fibers[static_cast<std::size_t>(E.jr[e])].push_back(e);
  for (const auto& f : fibers)
    if (f.empty()) return false;
  for (const auto& f : fibers)
    for (int e : f) {
      std::vector<char> hit(f.size(), 0);
      int count = 0;
      for (int k = 0; k < E.left.num_arrows; ++k) {
        int v = E.lact(k, e);
        if (v < 0) continue;
        auto it = std::lower_bound(f.begin(), f.end(), v);
        if (it == f.end() || *it != v) return false;
        std::size_t pos = static_cast<std::size_t>(it - f.begin());
        if (hit[pos]) return false;
        hit[pos] = 1;
        ++count;
      }
      if (count != static_cast<int>(f.size())) return false;
    }
  return true;
}

bool check_morita(const Bibundle& E) {
  return right_principal(E) && left_principal(E);
}

Bibundle identity_bibundle(const FiniteGroupoid& G) {
  Bibundle E = make_bibundle(G, G, G.num_arrows);
  for (int e = 0; e < G.num_arrows; ++e) {
    E.jl[e] = G.tgt[e];
    E.jr[e] = G.src[e];
  }
  for (int k = 0; k < G.num_arrows; ++k)
    for (int e = 0; e < G.num_arrows; ++e)
      if (G.src[k] == G.tgt[e]) E.set_lact(k, e, G.comp(k, e));
  for (int e = 0; e < G.num_arrows; ++e)
    for (int k = 0; k < G.num_arrows; ++k)
      if (G.tgt[k] == G.src[e]) E.set_ract(e, k, G.comp(e, k));
  return E;
}

Bibundle reverse_bibundle(const Bibundle& E) {
  Bibundle R = make_bibundle(E.right, E.left, E.total);
  R.jl = E.jr;
  R.jr = E.jl;
  for (int k = 0; k < R.left.num_arrows; ++k)
    for (int e = 0; e < E.total; ++e)
      if (R.left.src[k] == R.jl[e])
        R.set_lact(k, e, E.ract(e, E.right.inv[k]));
  for (int e = 0; e < E.total; ++e)
    for (int k = 0; k < R.right.num_arrows; ++k)
      if (R.right.tgt[k] == R.jr[e]) R.set_ract(e, k, E.lact(E.left.inv[k], e));
  return R;
}

int ComposedBibundle::orbit_of(int e, int f) const {
  auto it = std::lower_bound(raw.begin(), raw.end(), std::make_pair(e, f));
  if (it == raw.end() || *it != std::make_pair(e, f)) return -1;
  return orbit_of_raw[static_cast<std::size_t>(it - raw.begin())];
}

ComposedBibundle compose_bibundles(const Bibundle& E, const Bibundle& F) {
  if (!(E.right == F.left))
    throw StructuralError("compose_bibundles: middle groupoids differ");
  if (!right_principal(E))
    throw StructuralError("compose_bibundles: left factor not right-principal");

  ComposedBibundle C;
  for (int e = 0; e < E.total; ++e)
    for (int f = 0; f < F.total; ++f)
      if (E.jr[e] == F.jl[f]) C.raw.emplace_back(e, f);
  budget::charge(C.raw.size(), "bibundle fibre product");
  std::sort(C.raw.begin(), C.raw.end());

  // orbits of (e, f) ~ (e.k, k^{-1}.f)
  C.orbit_of_raw.assign(C.raw.size(), -1);
  const FiniteGroupoid& K = E.right;
  auto raw_index = [&](int e, int f) {
    auto it = std::lower_bound(C.raw.begin(), C.raw.end(), std::make_pair(e, f));
    return static_cast<int>(it - C.raw.begin());
  };
  int next_orbit = 0;
  for (std::size_t i = 0; i < C.raw.size(); ++i) {
    if (C.orbit_of_raw[i] >= 0) continue;
    int orbit = next_orbit++;
    C.rep_of_orbit.push_back(static_cast<int>(i));
    std::vector<int> stack = {static_cast<int>(i)};
    C.orbit_of_raw[i] = orbit;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      auto [e, f] = C.raw[static_cast<std::size_t>(cur)];
      for (int k = 0; k < K.num_arrows; ++k) {
        if (K.tgt[k] != E.jr[e]) continue;
        int e2 = E.ract(e, k);
        int f2 = F.lact(K.inv[k], f);
        int idx = raw_index(e2, f2);
        if (C.orbit_of_raw[static_cast<std::size_t>(idx)] < 0) {
          C.orbit_of_raw[static_cast<std::size_t>(idx)] = orbit;
          stack.push_back(idx);
        }
      }
    }
  }

  C.bundle = make_bibundle(E.left, F.right, next_orbit);
  for (int o = 0; o < next_orbit; ++o) {
    auto [e, f] = C.raw[static_cast<std::size_t>(C.rep_of_orbit[static_cast<std::size_t>(o)])];
    C.bundle.jl[o] = E.jl[e];
    C.bundle.jr[o] = F.jr[f];
  }
  for (int k = 0; k < C.bundle.left.num_arrows; ++k)
    for (int o = 0; o < next_orbit; ++o) {
      if (C.bundle.left.src[k] != C.bundle.jl[o]) continue;
      auto [e, f] = C.raw[static_cast<std::size_t>(C.rep_of_orbit[static_cast<std::size_t>(o)])];
      C.bundle.set_lact(k, o, C.orbit_of(E.lact(k, e), f));
    }
  for (int o = 0; o < next_orbit; ++o)
    for (int k = 0; k < C.bundle.right.num_arrows; ++k) {
      if (C.bundle.right.tgt[k] != C.bundle.jr[o]) continue;
      auto [e, f] = C.raw[static_cast<std::size_t>(C.rep_of_orbit[static_cast<std::size_t>(o)])];
      C.bundle.set_ract(o, k, C.orbit_of(e, F.ract(f, k)));
    }
  return C;
}

bool is_bibundle_iso(const Bibundle& E, const Bibundle& F, const BibundleIso& iso) {
  if (!(E.left == F.left) || !(E.right == F.right)) return false;
  if (E.total != F.total) return false;
  if (static_cast<int>(iso.fwd.size()) != E.total ||
      static_cast<int>(iso.bwd.size()) != F.total)
    return false;
  for (int e = 0; e < E.total; ++e) {
    int v = iso.fwd[static_cast<std::size_t>(e)];
    if (v < 0 || v >= F.total || iso.bwd[static_cast<std::size_t>(v)] != e) return false;
    if (F.jl[v] != E.jl[e] || F.jr[v] != E.jr[e]) return false;
  }
  for (int k = 0; k < E.left.num_arrows; ++k)
    for (int e = 0; e < E.total; ++e) {
      int v = E.lact(k, e);
      if (v < 0) continue;
      if (F.lact(k, iso.fwd[static_cast<std::size_t>(e)]) !=
          iso.fwd[static_cast<std::size_t>(v)])
        return false;
    }
  for (int e = 0; e < E.total; ++e)
    for (int k = 0; k < E.right.num_arrows; ++k) {
      int v = E.ract(e, k);
      if (v < 0) continue;
      if (F.ract(iso.fwd[static_cast<std::size_t>(e)], k) !=
          iso.fwd[static_cast<std::size_t>(v)])
        return false;
    }
  return true;
}

namespace {

bool extend_bib_iso(const Bibundle& E, const Bibundle& F, BibundleIso& iso,
                    std::vector<char>& used, int e) {
  if (e == E.total) return is_bibundle_iso(E, F, iso);
  for (int v = 0; v < F.total; ++v) {
    if (used[static_cast<std::size_t>(v)]) continue;
    if (F.jl[v] != E.jl[e] || F.jr[v] != E.jr[e]) continue;
    bool ok = true;
    // incremental equivariance against already-assigned elements
    for (int k = 0; k < E.left.num_arrows && ok; ++k) {
      int w = E.lact(k, e);
      if (w >= 0 && w < e && F.lact(k, v) != iso.fwd[static_cast<std::size_t>(w)])
        ok = false;
    }
    for (int k = 0; k < E.right.num_arrows && ok; ++k) {
      int w = E.ract(e, k);
      if (w >= 0 && w < e && F.ract(v, k) != iso.fwd[static_cast<std::size_t>(w)])
        ok = false;
    }
    if (!ok) continue;
    iso.fwd[static_cast<std::size_t>(e)] = v;
    iso.bwd[static_cast<std::size_t>(v)] = e;
    used[static_cast<std::size_t>(v)] = 1;
    if (extend_bib_iso(E, F, iso, used, e + 1)) return true;
    used[static_cast<std::size_t>(v)] = 0;
    iso.bwd[static_cast<std::size_t>(v)] = -1;
    iso.fwd[static_cast<std::size_t>(e)] = -1;
  }
  return false;
}

}  // namespace

std::optional<BibundleIso> find_bibundle_iso(const Bibundle& E, const Bibundle& F) {
  if (!(E.left == F.left) || !(E.right == F.right) || E.total != F.total)
    return std::nullopt;
  BibundleIso iso;
  iso.fwd.assign(static_cast<std::size_t>(E.total), -1);
  iso.bwd.assign(static_cast<std::size_t>(F.total), -1);
  std::vector<char> used(static_cast<std::size_t>(F.total), 0);
  if (!extend_bib_iso(E, F, iso, used, 0)) return std::nullopt;
  return iso;
}

}  // namespace kanforge
