#include "kanforge/corpus.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>

namespace kanforge {

namespace {

FiniteGroup from_table(std::string name, std::vector<std::vector<int>> mul) {
  FiniteGroup g;
  g.name = std::move(name);
  g.mul = std::move(mul);
  return g;
}

// permutation-based table with element 0 forced to the identity
FiniteGroup from_elements(std::string name, std::vector<std::vector<int>> perms) {
  // perms: each element a permutation acting on a fixed set; composition table
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  const int n = static_cast<int>(perms.size());
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> c(perms[static_cast<std::size_t>(a)].size());
      for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = perms[static_cast<std::size_t>(a)]
                    [static_cast<std::size_t>(perms[static_cast<std::size_t>(b)][i])];
      mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = index.at(c);
    }
  return from_table(std::move(name), std::move(mul));
}

}  // namespace

std::vector<std::vector<int>> cyclic_table(int n) {
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return mul;
}

std::vector<std::vector<int>> klein_table() {
  return {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
}

FiniteGroup cyclic_group(int n) { return from_table("C" + std::to_string(n), cyclic_table(n)); }

FiniteGroup klein_four() { return from_table("C2xC2", klein_table()); }

FiniteGroup dihedral_group(int n) {
  // elements r^i (i < n) then s r^i
  const int N = 2 * n;
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(N),
                                    std::vector<int>(static_cast<std::size_t>(N)));
  auto enc = [n](int flip, int rot) { return flip * n + ((rot % n) + n) % n; };
  for (int f1 = 0; f1 < 2; ++f1)
    for (int r1 = 0; r1 < n; ++r1)
      for (int f2 = 0; f2 < 2; ++f2)
        for (int r2 = 0; r2 < n; ++r2) {
          // (f1, r1) * (f2, r2): s^f1 r^r1 s^f2 r^r2 = s^{f1+f2} r^{(-1)^{f2} r1 + r2}
          int rot = (f2 ? -r1 : r1) + r2;
          mul[static_cast<std::size_t>(enc(f1, r1))][static_cast<std::size_t>(enc(f2, r2))] =
              enc((f1 + f2) % 2, rot);
        }
  return from_table("D" + std::to_string(n), std::move(mul));
}

FiniteGroup dicyclic_group(int n) {
  // presentation a^{2n} = 1, b^2 = a^n, b a b^{-1} = a^{-1};
  // elements a^i (i < 2n) then b a^i
  const int N = 4 * n;
  auto enc = [n](int flip, int rot) { return flip * 2 * n + ((rot % (2 * n)) + 2 * n) % (2 * n); };
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(N),
                                    std::vector<int>(static_cast<std::size_t>(N)));
  for (int f1 = 0; f1 < 2; ++f1)
    for (int r1 = 0; r1 < 2 * n; ++r1)
      for (int f2 = 0; f2 < 2; ++f2)
        for (int r2 = 0; r2 < 2 * n; ++r2) {
          int flip = (f1 + f2) % 2;
          int rot;
          if (f2 == 0)
            rot = r1 + r2;  // a^{r1} a^{r2} or (b a^{r1}) a^{r2}
          else
            rot = (f1 == 0 ? -r1 : -r1 + n) + r2;  // x b = b a^{-i} b-shift
          // b a^{r1} b = a^{-r1} b^2 = a^{n - r1}
          mul[static_cast<std::size_t>(enc(f1, r1))][static_cast<std::size_t>(enc(f2, r2))] =
              enc(flip, rot);
        }
  return from_table(n == 2 ? std::string("Q8") : "Dic" + std::to_string(n),
                    std::move(mul));
}

FiniteGroup alternating_four() {
  std::vector<std::vector<int>> perms;
  std::array<int, 4> p{0, 1, 2, 3};
  std::sort(p.begin(), p.end());
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) ++inversions;
    if (inversions % 2 == 0) perms.push_back({p[0], p[1], p[2], p[3]});
  } while (std::next_permutation(p.begin(), p.end()));
  return from_elements("A4", std::move(perms));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int n = a.order() * b.order();
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n)));
  auto enc = [&b](int x, int y) { return x * b.order() + y; };
  for (int x1 = 0; x1 < a.order(); ++x1)
    for (int y1 = 0; y1 < b.order(); ++y1)
      for (int x2 = 0; x2 < a.order(); ++x2)
        for (int y2 = 0; y2 < b.order(); ++y2)
          mul[static_cast<std::size_t>(enc(x1, y1))][static_cast<std::size_t>(enc(x2, y2))] =
              enc(a.mul[static_cast<std::size_t>(x1)][static_cast<std::size_t>(x2)],
                  b.mul[static_cast<std::size_t>(y1)][static_cast<std::size_t>(y2)]);
  return from_table(a.name + "x" + b.name, std::move(mul));
}

std::vector<FiniteGroup> groups_up_to_order(int max_order) {
  if (max_order > 12)
    throw StructuralError("group corpus is tabulated up to order 12");
  std::vector<FiniteGroup> out;
  for (int n = 1; n <= max_order; ++n) out.push_back(cyclic_group(n));
  auto add = [&](FiniteGroup g) {
    if (g.order() <= max_order) out.push_back(std::move(g));
  };
  add(klein_four());                                        // 4
  add(dihedral_group(3));                                   // 6 (symmetric group)
  add(direct_product(cyclic_group(2), cyclic_group(4)));    // 8
  add(direct_product(cyclic_group(2), klein_four()));       // 8
  add(dihedral_group(4));                                   // 8
  add(dicyclic_group(2));                                   // 8
  add(direct_product(cyclic_group(3), cyclic_group(3)));    // 9
  add(dihedral_group(5));                                   // 10
  add(direct_product(cyclic_group(2), cyclic_group(6)));    // 12
  add(dihedral_group(6));                                   // 12
  add(dicyclic_group(3));                                   // 12
  add(alternating_four());                                  // 12
  std::stable_sort(out.begin(), out.end(),
                   [](const FiniteGroup& a, const FiniteGroup& b) {
                     return a.order() < b.order();
                   });
  return out;
}

FiniteGroupoid group_as_groupoid(const FiniteGroup& g) {
  FiniteGroupoid G;
  G.num_objects = 1;
  G.num_arrows = g.order();
  G.src.assign(static_cast<std::size_t>(g.order()), 0);
  G.tgt.assign(static_cast<std::size_t>(g.order()), 0);
  G.unit = {0};
  G.inv.resize(g.order());
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (g.mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] == 0)
        G.inv[a] = b;
  G.comp_table.resize(static_cast<std::size_t>(g.order()) * g.order());
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      G.set_comp(a, b, g.mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
  return G;
}

FiniteGroupoid transitive_groupoid(int k, const FiniteGroup& g) {
  return product_groupoid(pair_groupoid(k), group_as_groupoid(g));
}

std::vector<NamedGroupoid> exhaustive_groupoid_corpus(int max_objects, int max_arrows) {
  auto groups = groups_up_to_order(max_arrows);
  // connected pieces: (#objects k, group index), with k^2 * |g| arrows
  struct Piece {
    int objects, arrows;
    int k, group;
    std::string name;
  };
  std::vector<Piece> pieces;
  for (int k = 1; k <= max_objects; ++k)
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
      int arrows = k * k * groups[gi].order();
      if (arrows > max_arrows) continue;
      std::string nm = k == 1 ? groups[gi].name
                              : "Pair" + std::to_string(k) + "x" + groups[gi].name;
      pieces.push_back({k, arrows, k, static_cast<int>(gi), nm});
    }

  std::vector<NamedGroupoid> out;
  // multisets of pieces (nondecreasing index) within the bounds
  std::vector<int> chosen;
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t start, int objs,
                                                       int arrs) {
    if (!chosen.empty()) {
      FiniteGroupoid G;
      std::string name;
      bool first = true;
      for (int idx : chosen) {
        const Piece& p = pieces[static_cast<std::size_t>(idx)];
        FiniteGroupoid piece = transitive_groupoid(p.k, groups[static_cast<std::size_t>(p.group)]);
        G = first ? piece : disjoint_union(G, piece);
        name += (first ? "" : "+") + p.name;
        first = false;
      }
      out.push_back({std::move(name), std::move(G)});
    }
    for (std::size_t i = start; i < pieces.size(); ++i) {
      const Piece& p = pieces[i];
      if (objs + p.objects > max_objects || arrs + p.arrows > max_arrows) continue;
      chosen.push_back(static_cast<int>(i));
      rec(i, objs + p.objects, arrs + p.arrows);
      chosen.pop_back();
    }
  };
  rec(0, 0, 0);
  return out;
}

std::vector<NamedGroupoid> random_groupoid_corpus(int count, int max_objects,
                                                  int max_arrows, std::uint64_t seed) {
  auto groups = groups_up_to_order(max_arrows);
  std::mt19937_64 rng(seed);
  std::vector<NamedGroupoid> out;
  while (static_cast<int>(out.size()) < count) {
    int objs_left = max_objects;
    int arrs_left = max_arrows;
    FiniteGroupoid G;
    std::string name;
    bool first = true;
    int pieces = 1 + static_cast<int>(rng() % 3);
    for (int p = 0; p < pieces && objs_left > 0; ++p) {
      int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(objs_left));
      std::vector<int> fitting;
      for (std::size_t gi = 0; gi < groups.size(); ++gi)
        if (k * k * groups[gi].order() <= arrs_left) fitting.push_back(static_cast<int>(gi));
      if (fitting.empty()) break;
      int gi = fitting[static_cast<std::size_t>(rng() % fitting.size())];
      FiniteGroupoid piece = transitive_groupoid(k, groups[static_cast<std::size_t>(gi)]);
      G = first ? piece : disjoint_union(G, piece);
      name += (first ? "" : "+") +
              (k == 1 ? groups[static_cast<std::size_t>(gi)].name
                      : "Pair" + std::to_string(k) + "x" +
                            groups[static_cast<std::size_t>(gi)].name);
      first = false;
      objs_left -= k;
      arrs_left -= k * k * groups[static_cast<std::size_t>(gi)].order();
    }
    if (first) continue;
    out.push_back({"random:" + name, std::move(G)});
  }
  return out;
}

FiniteGroupoid cech_groupoid(const std::vector<int>& projection, int base_size) {
  const int u = static_cast<int>(projection.size());
  for (int x : projection)
    if (x < 0 || x >= base_size) throw StructuralError("projection out of range");
  std::vector<char> hit(static_cast<std::size_t>(base_size), 0);
  for (int x : projection) hit[static_cast<std::size_t>(x)] = 1;
  for (char c : hit)
    if (!c) throw StructuralError("projection is not surjective");

  FiniteGroupoid G;
  G.num_objects = u;
  std::vector<std::pair<int, int>> arrows;
  std::map<std::pair<int, int>, int> aidx;
  for (int a = 0; a < u; ++a)
    for (int b = 0; b < u; ++b)
      if (projection[static_cast<std::size_t>(a)] == projection[static_cast<std::size_t>(b)]) {
        aidx[{a, b}] = static_cast<int>(arrows.size());
        arrows.emplace_back(a, b);  // arrow b -> a
      }
  G.num_arrows = static_cast<int>(arrows.size());
  G.src.resize(G.num_arrows);
  G.tgt.resize(G.num_arrows);
  G.inv.resize(G.num_arrows);
  G.unit.resize(G.num_objects);
  for (int i = 0; i < G.num_arrows; ++i) {
    G.tgt[i] = arrows[static_cast<std::size_t>(i)].first;
    G.src[i] = arrows[static_cast<std::size_t>(i)].second;
    G.inv[i] = aidx.at({arrows[static_cast<std::size_t>(i)].second,
                        arrows[static_cast<std::size_t>(i)].first});
  }
  for (int x = 0; x < u; ++x) G.unit[x] = aidx.at({x, x});
  G.comp_table.assign(static_cast<std::size_t>(G.num_arrows) * G.num_arrows, -1);
  for (int i = 0; i < G.num_arrows; ++i)
    for (int j = 0; j < G.num_arrows; ++j)
      if (G.composable(i, j))
        G.set_comp(i, j, aidx.at({arrows[static_cast<std::size_t>(i)].first,
                                  arrows[static_cast<std::size_t>(j)].second}));
  return G;
}

}  // namespace kanforge
