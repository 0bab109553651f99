#include "weyl/models.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace weyl {

Report validate_groupoid(const FiniteGroupoid& g) {
  Report r;
  for (int a = 0; a < g.m; ++a) {
    if (g.inv[static_cast<std::size_t>(g.inv[static_cast<std::size_t>(a)])] != a)
      r.fail("inverse involutive", {a});
    int src = g.source[static_cast<std::size_t>(a)];
    int rg = g.range[static_cast<std::size_t>(a)];
    if (!g.unit[static_cast<std::size_t>(src)] || !g.unit[static_cast<std::size_t>(rg)])
      r.fail("source and range are units", {a});
    if (g.prod[static_cast<std::size_t>(a)][static_cast<std::size_t>(src)] != a ||
        g.prod[static_cast<std::size_t>(rg)][static_cast<std::size_t>(a)] != a)
      r.fail("unit laws", {a});
    if (g.prod[static_cast<std::size_t>(a)][static_cast<std::size_t>(g.inv[static_cast<std::size_t>(a)])] != rg)
      r.fail("a a^-1 is the range unit", {a});
    for (int b = 0; b < g.m; ++b) {
      bool defined = g.prod[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] >= 0;
      if (defined != (g.source[static_cast<std::size_t>(a)] == g.range[static_cast<std::size_t>(b)]))
        r.fail("composability matches source and range", {a, b});
      if (!defined) continue;
      int ab = g.prod[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      for (int c = 0; c < g.m; ++c) {
        int bc = g.prod[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)];
        if (bc < 0) continue;
        if (g.prod[static_cast<std::size_t>(ab)][static_cast<std::size_t>(c)] !=
            g.prod[static_cast<std::size_t>(a)][static_cast<std::size_t>(bc)])
          r.fail("associativity", {a, b, c});
      }
    }
  }
  return r;
}

FiniteGroupoid pair_groupoid(int k) {
  FiniteGroupoid g;
  g.m = k * k;
  auto id = [k](int i, int j) { return i * k + j; };
  g.inv.resize(static_cast<std::size_t>(g.m));
  g.source.resize(static_cast<std::size_t>(g.m));
  g.range.resize(static_cast<std::size_t>(g.m));
  g.unit.resize(static_cast<std::size_t>(g.m));
  g.prod.assign(static_cast<std::size_t>(g.m),
                std::vector<int>(static_cast<std::size_t>(g.m), -1));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int a = id(i, j);
      g.inv[static_cast<std::size_t>(a)] = id(j, i);
      g.source[static_cast<std::size_t>(a)] = id(j, j);
      g.range[static_cast<std::size_t>(a)] = id(i, i);
      g.unit[static_cast<std::size_t>(a)] = i == j;
      for (int l = 0; l < k; ++l)
        g.prod[static_cast<std::size_t>(a)][static_cast<std::size_t>(id(j, l))] = id(i, l);
    }
  return g;
}

namespace {

int group_identity(const StarSemigroup& g) {
  for (int e = 0; e < g.size(); ++e) {
    bool ok = true;
    for (int a = 0; a < g.size(); ++a)
      if (g.mul(e, a) != a || g.mul(a, e) != a) {
        ok = false;
        break;
      }
    if (ok) return e;
  }
  return -1;
}

}  // namespace

FiniteGroupoid group_groupoid(const StarSemigroup& grp) {
  int e = group_identity(grp);
  if (e < 0) throw std::invalid_argument("input has no identity");
  FiniteGroupoid g;
  g.m = grp.size();
  g.inv.resize(static_cast<std::size_t>(g.m));
  g.prod.assign(static_cast<std::size_t>(g.m),
                std::vector<int>(static_cast<std::size_t>(g.m), -1));
  for (int a = 0; a < g.m; ++a) {
    g.inv[static_cast<std::size_t>(a)] = grp.star(a);
    g.source.push_back(e);
    g.range.push_back(e);
    g.unit.push_back(a == e);
    for (int b = 0; b < g.m; ++b)
      g.prod[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = grp.mul(a, b);
  }
  return g;
}

FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  FiniteGroupoid g;
  g.m = a.m + b.m;
  g.prod.assign(static_cast<std::size_t>(g.m),
                std::vector<int>(static_cast<std::size_t>(g.m), -1));
  for (int i = 0; i < a.m; ++i) {
    g.inv.push_back(a.inv[static_cast<std::size_t>(i)]);
    g.source.push_back(a.source[static_cast<std::size_t>(i)]);
    g.range.push_back(a.range[static_cast<std::size_t>(i)]);
    g.unit.push_back(a.unit[static_cast<std::size_t>(i)]);
    for (int j = 0; j < a.m; ++j)
      g.prod[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          a.prod[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  for (int i = 0; i < b.m; ++i) {
    g.inv.push_back(b.inv[static_cast<std::size_t>(i)] + a.m);
    g.source.push_back(b.source[static_cast<std::size_t>(i)] + a.m);
    g.range.push_back(b.range[static_cast<std::size_t>(i)] + a.m);
    g.unit.push_back(b.unit[static_cast<std::size_t>(i)]);
    for (int j = 0; j < b.m; ++j) {
      int p = b.prod[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (p >= 0)
        g.prod[static_cast<std::size_t>(i + a.m)][static_cast<std::size_t>(j + a.m)] = p + a.m;
    }
  }
  return g;
}

StarSemigroup cyclic_group(int n) {
  std::vector<std::vector<int>> mult(static_cast<std::size_t>(n),
                                     std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<int> star(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    star[static_cast<std::size_t>(a)] = (n - a) % n;
    for (int b = 0; b < n; ++b) mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  }
  return StarSemigroup(n, mult, star);
}

StarSemigroup symmetric_group_s3() {
  // permutations of {0,1,2} in lexicographic one-line order
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto find = [&](const std::array<int, 3>& q) {
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == q) return static_cast<int>(i);
    return -1;
  };
  const int n = 6;
  std::vector<std::vector<int>> mult(n, std::vector<int>(n));
  std::vector<int> star(n);
  for (int a = 0; a < n; ++a) {
    std::array<int, 3> inv{};
    for (int x = 0; x < 3; ++x) inv[static_cast<std::size_t>(perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)])] = x;
    star[static_cast<std::size_t>(a)] = find(inv);
    for (int b = 0; b < n; ++b) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x)
        c[static_cast<std::size_t>(x)] =
            perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(
                perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)])];
      mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = find(c);
    }
  }
  return StarSemigroup(n, mult, star);
}

WeylPair from_group_pair(const StarSemigroup& g, const ElementSet& normal, std::string name) {
  int e = group_identity(g);
  if (e < 0) throw std::invalid_argument("group pair: no identity");
  for (int a = 0; a < g.size(); ++a)
    if (g.mul(a, g.star(a)) != e || g.mul(g.star(a), a) != e)
      throw std::invalid_argument("group pair: star is not inversion");
  if (!normal.contains(e)) throw std::invalid_argument("group pair: subgroup lacks identity");
  for (int x : normal.elements()) {
    if (!normal.contains(g.star(x)))
      throw std::invalid_argument("group pair: not closed under inverse");
    for (int y : normal.elements())
      if (!normal.contains(g.mul(x, y)))
        throw std::invalid_argument("group pair: not closed under product");
    for (int a = 0; a < g.size(); ++a)
      if (!normal.contains(g.mul3(g.star(a), x, a)))
        throw std::invalid_argument("group pair: subgroup not normal");
  }
  return WeylPair{g, normal, std::move(name)};
}

WeylPair symmetric_inverse_monoid(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("supported range is 1..4");
  // partial injective maps as image vectors, -1 for undefined
  std::vector<std::vector<int>> maps;
  std::vector<int> cur(static_cast<std::size_t>(n), -1);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      maps.push_back(cur);
      return;
    }
    for (int v = -1; v < n; ++v) {
      if (v >= 0) {
        bool dup = false;
        for (int i = 0; i < pos; ++i)
          if (cur[static_cast<std::size_t>(i)] == v) dup = true;
        if (dup) continue;
      }
      cur[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1);
    }
    cur[static_cast<std::size_t>(pos)] = -1;
  };
  rec(rec, 0);
  std::sort(maps.begin(), maps.end());
  std::map<std::vector<int>, int> id;
  for (std::size_t i = 0; i < maps.size(); ++i) id[maps[i]] = static_cast<int>(i);
  const int m = static_cast<int>(maps.size());
  std::vector<std::vector<int>> mult(static_cast<std::size_t>(m),
                                     std::vector<int>(static_cast<std::size_t>(m)));
  std::vector<int> star(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) {
    std::vector<int> inv(static_cast<std::size_t>(n), -1);
    for (int x = 0; x < n; ++x)
      if (maps[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)] >= 0)
        inv[static_cast<std::size_t>(maps[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)])] = x;
    star[static_cast<std::size_t>(a)] = id.at(inv);
    for (int b = 0; b < m; ++b) {
      std::vector<int> comp(static_cast<std::size_t>(n), -1);
      for (int x = 0; x < n; ++x) {
        int y = maps[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)];
        if (y >= 0) comp[static_cast<std::size_t>(x)] = maps[static_cast<std::size_t>(a)][static_cast<std::size_t>(y)];
      }
      mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = id.at(comp);
    }
  }
  std::vector<int> empty(static_cast<std::size_t>(n), -1);
  StarSemigroup s(m, mult, star, id.at(empty));
  ElementSet e(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a)
    if (s.mul(a, a) == a && s.star(a) == a) e.add(a);
  return WeylPair{s, e, "inv" + std::to_string(n)};
}

SignModel sign_semigroup(const FiniteGroupoid& g, std::string name) {
  if (g.m > 16) throw std::invalid_argument("groupoid too large for sign model");
  // bisections: arrow sets with pairwise distinct sources and ranges
  std::vector<std::uint32_t> bisections;
  for (std::uint32_t mask = 0; mask < (1u << g.m); ++mask) {
    bool ok = true;
    for (int a = 0; a < g.m && ok; ++a) {
      if (!((mask >> a) & 1)) continue;
      for (int b = a + 1; b < g.m && ok; ++b) {
        if (!((mask >> b) & 1)) continue;
        if (g.source[static_cast<std::size_t>(a)] == g.source[static_cast<std::size_t>(b)] ||
            g.range[static_cast<std::size_t>(a)] == g.range[static_cast<std::size_t>(b)])
          ok = false;
      }
    }
    if (ok) bisections.push_back(mask);
  }
  std::sort(bisections.begin(), bisections.end());
  std::vector<std::vector<int>> els;
  for (std::uint32_t mask : bisections) {
    std::vector<int> arrows;
    for (int a = 0; a < g.m; ++a)
      if ((mask >> a) & 1) arrows.push_back(a);
    std::uint32_t cnt = 1u << arrows.size();
    for (std::uint32_t sb = 0; sb < cnt; ++sb) {
      std::vector<int> v(static_cast<std::size_t>(g.m), 0);
      for (std::size_t i = 0; i < arrows.size(); ++i)
        v[static_cast<std::size_t>(arrows[i])] = ((sb >> i) & 1) ? -1 : 1;
      els.push_back(v);
    }
  }
  std::map<std::vector<int>, int> id;
  for (std::size_t i = 0; i < els.size(); ++i) id[els[i]] = static_cast<int>(i);
  const int m = static_cast<int>(els.size());
  std::vector<std::vector<int>> mult(static_cast<std::size_t>(m),
                                     std::vector<int>(static_cast<std::size_t>(m)));
  std::vector<int> star(static_cast<std::size_t>(m));
  for (int x = 0; x < m; ++x) {
    std::vector<int> st(static_cast<std::size_t>(g.m), 0);
    for (int a = 0; a < g.m; ++a)
      if (els[static_cast<std::size_t>(x)][static_cast<std::size_t>(a)] != 0)
        st[static_cast<std::size_t>(g.inv[static_cast<std::size_t>(a)])] =
            els[static_cast<std::size_t>(x)][static_cast<std::size_t>(a)];
    star[static_cast<std::size_t>(x)] = id.at(st);
    for (int y = 0; y < m; ++y) {
      std::vector<int> pr(static_cast<std::size_t>(g.m), 0);
      for (int a = 0; a < g.m; ++a) {
        if (els[static_cast<std::size_t>(x)][static_cast<std::size_t>(a)] == 0) continue;
        for (int b = 0; b < g.m; ++b) {
          if (els[static_cast<std::size_t>(y)][static_cast<std::size_t>(b)] == 0) continue;
          int ab = g.prod[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
          if (ab >= 0)
            pr[static_cast<std::size_t>(ab)] =
                els[static_cast<std::size_t>(x)][static_cast<std::size_t>(a)] *
                els[static_cast<std::size_t>(y)][static_cast<std::size_t>(b)];
        }
      }
      mult[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = id.at(pr);
    }
  }
  std::vector<int> zerov(static_cast<std::size_t>(g.m), 0);
  StarSemigroup s(m, mult, star, id.at(zerov));
  ElementSet e(static_cast<std::size_t>(m));
  for (int x = 0; x < m; ++x) {
    bool on_units = true;
    for (int a = 0; a < g.m; ++a)
      if (els[static_cast<std::size_t>(x)][static_cast<std::size_t>(a)] != 0 &&
          !g.unit[static_cast<std::size_t>(a)])
        on_units = false;
    if (on_units) e.add(x);
  }
  SignModel model{WeylPair{s, e, std::move(name)}, g, els};
  return model;
}

EmbeddedModel embedded_sign_model(int k) {
  SignModel sm = sign_semigroup(pair_groupoid(k), "sign_pair" + std::to_string(k));
  EmbeddedModel em;
  em.pair = sm.pair;
  em.d = k;
  em.lattice = LatticeSubring{k, LatticeKind::DiagInt};
  for (std::size_t x = 0; x < sm.signs.size(); ++x) {
    RMatrix mtx(k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) mtx.at(i, j) = sm.signs[x][static_cast<std::size_t>(i * k + j)];
    em.rep.push_back(mtx);
    em.lookup[mtx] = static_cast<int>(x);
  }
  em.unit_ball_certified = true;
  em.hereditary_certified = true;
  em.e_unit_ball_certified = true;
  return em;
}

EmbeddedModel embedded_group_pair(const StarSemigroup& g, const ElementSet& normal,
                                  std::string name) {
  EmbeddedModel em;
  em.pair = from_group_pair(g, normal, std::move(name));
  em.d = g.size();
  em.lattice = LatticeSubring{g.size(), LatticeKind::DiagInt};
  for (int a = 0; a < g.size(); ++a) {
    RMatrix mtx(g.size());
    for (int h = 0; h < g.size(); ++h) mtx.at(g.mul(a, h), h) = 1;
    em.rep.push_back(mtx);
    em.lookup[mtx] = a;
  }
  em.unit_ball_certified = true;
  em.hereditary_certified = false;
  em.e_unit_ball_certified = false;
  return em;
}

CommutativePairExample commutative_square_example() {
  const int n = 9;
  auto id = [](int x, int y) { return (x + 1) * 3 + (y + 1); };
  std::vector<std::vector<int>> mult(n, std::vector<int>(n));
  std::vector<int> star(n);
  for (int x = -1; x <= 1; ++x)
    for (int y = -1; y <= 1; ++y) {
      star[static_cast<std::size_t>(id(x, y))] = id(x, y);
      for (int u = -1; u <= 1; ++u)
        for (int v = -1; v <= 1; ++v)
          mult[static_cast<std::size_t>(id(x, y))][static_cast<std::size_t>(id(u, v))] =
              id(x * u, y * v);
    }
  StarSemigroup s(n, mult, star, id(0, 0));
  ElementSet e(static_cast<std::size_t>(n));
  for (int x = -1; x <= 1; ++x) e.add(id(x, x));
  ElementSet exp(static_cast<std::size_t>(n));
  for (int x = -1; x <= 1; ++x)
    for (int y = -1; y <= 1; ++y)
      if (x == y || x == -y) exp.add(id(x, y));
  return CommutativePairExample{s, e, exp};
}

std::vector<std::string> model_names() {
  return {"z2_trivial", "z4_mod2", "s3_a3",      "inv1",      "inv2",
          "inv3",       "inv4",    "sign_pair2", "sign_pair3", "sign_z2",
          "sign_union"};
}

WeylPair model_by_name(const std::string& name) {
  if (name == "z2_trivial")
    return from_group_pair(cyclic_group(2), ElementSet::single(2, 0), name);
  if (name == "z4_mod2") {
    ElementSet n4(4);
    n4.add(0);
    n4.add(2);
    return from_group_pair(cyclic_group(4), n4, name);
  }
  if (name == "s3_a3") {
    StarSemigroup s3 = symmetric_group_s3();
    // even permutations, matching the lexicographic listing
    std::array<int, 3> p{0, 1, 2};
    std::vector<std::array<int, 3>> perms;
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    ElementSet a3(6);
    for (int a = 0; a < 6; ++a) {
      int inv_count = 0;
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
          if (perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] >
              perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)])
            ++inv_count;
      if (inv_count % 2 == 0) a3.add(a);
    }
    return from_group_pair(s3, a3, name);
  }
  if (name == "inv1") return symmetric_inverse_monoid(1);
  if (name == "inv2") return symmetric_inverse_monoid(2);
  if (name == "inv3") return symmetric_inverse_monoid(3);
  if (name == "inv4") return symmetric_inverse_monoid(4);
  if (name == "sign_pair2") return sign_semigroup(pair_groupoid(2), name).pair;
  if (name == "sign_pair3") return sign_semigroup(pair_groupoid(3), name).pair;
  if (name == "sign_z2") return sign_semigroup(group_groupoid(cyclic_group(2)), name).pair;
  if (name == "sign_union")
    return sign_semigroup(disjoint_union(pair_groupoid(2), group_groupoid(cyclic_group(2))),
                          name)
        .pair;
  throw std::invalid_argument("unknown model: " + name);
}

}  // namespace weyl
