#include "weyl/topology.hpp"

#include <algorithm>
#include <set>

namespace weyl {

bool FiniteTopology::is_open(const ElementSet& o) const {
  return std::binary_search(opens.begin(), opens.end(), o);
}

ElementSet FiniteTopology::min_nbhd(int x) const {
  ElementSet r = ElementSet::full(m);
  for (const ElementSet& o : opens)
    if (o.contains(x)) r &= o;
  return r;
}

FiniteTopology topology_from_subbasis(std::size_t m, const std::vector<ElementSet>& subbasis) {
  // the minimal neighbourhoods of the subbasis form a basis, and the
  // opens are exactly the unions of minimal neighbourhoods
  std::vector<ElementSet> mins;
  for (std::size_t x = 0; x < m; ++x) {
    ElementSet r = ElementSet::full(m);
    for (const ElementSet& s : subbasis)
      if (s.contains(static_cast<int>(x))) r &= s;
    mins.push_back(r);
  }
  std::set<ElementSet> opens;
  opens.insert(ElementSet(m));
  std::vector<ElementSet> frontier{ElementSet(m)};
  while (!frontier.empty()) {
    std::vector<ElementSet> next;
    for (const ElementSet& o : frontier)
      for (const ElementSet& mn : mins) {
        ElementSet u = o | mn;
        if (opens.insert(u).second) next.push_back(u);
      }
    frontier = std::move(next);
  }
  FiniteTopology t;
  t.m = m;
  t.opens.assign(opens.begin(), opens.end());
  return t;
}

bool compactly_contained(const FiniteTopology& t, const ElementSet& o, const ElementSet& n) {
  if (!t.is_open(o) || !t.is_open(n))
    throw std::invalid_argument("compactly_contained: arguments must be open");
  // the pointwise-minimal cover of n dominates every other open cover
  ElementSet least(t.m);
  for (int x : n.elements()) least |= t.min_nbhd(x);
  return o.subset_of(least);
}

TopGroupoid weyl_groupoid(const RelationCache& rc, Carrier carrier, int exhaustive_cap) {
  TopGroupoid g;
  switch (carrier) {
    case Carrier::Ultrafilters:
      g.points = enumerate_ultrafilters(rc);
      break;
    case Carrier::Filters:
      g.points = enumerate_filters(rc);
      break;
    case Carrier::Cosets: {
      CosetFamily fam = enumerate_cosets(rc, exhaustive_cap);
      g.points = fam.cosets;
      g.exhaustive = fam.exhaustive;
      break;
    }
  }
  std::sort(g.points.begin(), g.points.end());
  const int m = static_cast<int>(g.points.size());
  const StarSemigroup& s = rc.pair().s;
  auto idx = [&](const ElementSet& c) -> int {
    auto it = std::lower_bound(g.points.begin(), g.points.end(), c);
    if (it != g.points.end() && *it == c) return static_cast<int>(it - g.points.begin());
    return -1;
  };
  g.star.resize(static_cast<std::size_t>(m));
  g.source.resize(static_cast<std::size_t>(m));
  g.range.resize(static_cast<std::size_t>(m));
  g.unit.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const ElementSet& c = g.points[static_cast<std::size_t>(i)];
    int st = idx(rc.up(set_star(s, c), Rel::StarDominates));
    int rg = idx(range_of(rc, c));
    int src = idx(rc.up(set_product(s, set_star(s, c), c), Rel::StarDominates));
    if (st < 0 || rg < 0 || src < 0)
      throw std::logic_error("carrier not closed under involution or units");
    g.star[static_cast<std::size_t>(i)] = st;
    g.range[static_cast<std::size_t>(i)] = rg;
    g.source[static_cast<std::size_t>(i)] = src;
    g.unit[static_cast<std::size_t>(i)] = c == range_of(rc, c);
  }
  g.prod.assign(static_cast<std::size_t>(m),
                std::vector<int>(static_cast<std::size_t>(m), -1));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto p = coset_product(rc, g.points[static_cast<std::size_t>(i)],
                             g.points[static_cast<std::size_t>(j)]);
      if (p) {
        int k = idx(*p);
        if (k < 0) throw std::logic_error("carrier not closed under products");
        g.prod[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = k;
      }
    }
  g.subbasis.assign(static_cast<std::size_t>(s.size()),
                    ElementSet(static_cast<std::size_t>(m)));
  for (int a = 0; a < s.size(); ++a)
    for (int i = 0; i < m; ++i)
      if (g.points[static_cast<std::size_t>(i)].contains(a))
        g.subbasis[static_cast<std::size_t>(a)].add(i);
  g.top = topology_from_subbasis(static_cast<std::size_t>(m), g.subbasis);
  return g;
}

namespace {

ElementSet unit_set(const TopGroupoid& g) {
  ElementSet u(g.points.size());
  for (std::size_t i = 0; i < g.points.size(); ++i)
    if (g.unit[i]) u.add(static_cast<int>(i));
  return u;
}

bool continuity_ok(const TopGroupoid& g) {
  const int m = static_cast<int>(g.points.size());
  std::vector<ElementSet> mins;
  for (int i = 0; i < m; ++i) mins.push_back(g.top.min_nbhd(i));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int k = g.prod[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (k < 0) continue;
      // minimal neighbourhoods decide continuity in a finite space
      for (int i2 : mins[static_cast<std::size_t>(i)].elements())
        for (int j2 : mins[static_cast<std::size_t>(j)].elements()) {
          int k2 = g.prod[static_cast<std::size_t>(i2)][static_cast<std::size_t>(j2)];
          if (k2 >= 0 && !mins[static_cast<std::size_t>(k)].contains(k2)) return false;
        }
    }
  return true;
}

}  // namespace

Report etale_report(const TopGroupoid& g) {
  Report r;
  const int m = static_cast<int>(g.points.size());
  // preimages and images commute with unions, so checking the basis
  // of minimal neighbourhoods decides continuity and openness
  std::vector<ElementSet> mins;
  for (int i = 0; i < m; ++i) mins.push_back(g.top.min_nbhd(i));
  for (const ElementSet& o : mins) {
    ElementSet pre(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
      if (o.contains(g.star[static_cast<std::size_t>(i)])) pre.add(i);
    if (!g.top.is_open(pre)) r.fail("involution continuous", o.elements());
  }
  if (!continuity_ok(g)) r.fail("product continuous", {});
  ElementSet units = unit_set(g);
  // opens are closed under union, so openness is plain membership
  bool units_open = g.top.is_open(units);
  if (!units_open) r.fail("units open", units.elements());
  bool source_open = true;
  for (const ElementSet& o : mins) {
    ElementSet img(static_cast<std::size_t>(m));
    for (int i : o.elements()) img.add(g.source[static_cast<std::size_t>(i)]);
    if (!g.top.is_open(img)) {
      source_open = false;
      r.fail("source map open", o.elements());
      break;
    }
  }
  if (units_open != source_open)
    r.fail("open units equivalent to open source", {});
  return r;
}

Report hausdorff_units_check(const TopGroupoid& g) {
  Report r;
  ElementSet units = unit_set(g);
  std::vector<int> us = units.elements();
  // minimal neighbourhoods are the optimal separators
  std::vector<ElementSet> mins;
  for (int u : us) mins.push_back(g.top.min_nbhd(u) & units);
  for (std::size_t i = 0; i < us.size(); ++i)
    for (std::size_t j = i + 1; j < us.size(); ++j)
      if (mins[i].intersects(mins[j])) r.fail("unit pair separated", {us[i], us[j]});
  return r;
}

Report bisection_product_check(const RelationCache& rc, const TopGroupoid& g) {
  Report r;
  const StarSemigroup& s = rc.pair().s;
  const int n = s.size();
  for (int a = 0; a < n; ++a) {
    const ElementSet& ca = g.subbasis[static_cast<std::size_t>(a)];
    for (int i : ca.elements())
      for (int j : ca.elements()) {
        int ij = g.prod[static_cast<std::size_t>(i)]
                       [static_cast<std::size_t>(g.star[static_cast<std::size_t>(j)])];
        if (ij >= 0 && !g.unit[static_cast<std::size_t>(ij)])
          r.fail("C_a C_a* inside units", {a, i, j});
        int ji = g.prod[static_cast<std::size_t>(g.star[static_cast<std::size_t>(i)])]
                       [static_cast<std::size_t>(j)];
        if (ji >= 0 && !g.unit[static_cast<std::size_t>(ji)])
          r.fail("C_a* C_a inside units", {a, i, j});
      }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      ElementSet prod(g.points.size());
      for (int i : g.subbasis[static_cast<std::size_t>(a)].elements())
        for (int j : g.subbasis[static_cast<std::size_t>(b)].elements()) {
          int k = g.prod[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          if (k >= 0) prod.add(k);
        }
      if (prod != g.subbasis[static_cast<std::size_t>(s.mul(a, b))]) {
        r.fail("C_ab equals C_a C_b", {a, b});
        if (r.violations.size() > 16) return r;
      }
    }
  return r;
}

Report subbasis_is_basis_check(const TopGroupoid& g) {
  Report r;
  for (const ElementSet& o : g.top.opens) {
    ElementSet uni(g.points.size());
    for (const ElementSet& b : g.subbasis)
      if (b.subset_of(o)) uni |= b;
    if (uni != o && !o.empty()) r.fail("open is union of subbasic sets", o.elements());
  }
  return r;
}

GroupoidTable table_of(const TopGroupoid& g) {
  GroupoidTable t;
  t.m = static_cast<int>(g.points.size());
  t.star = g.star;
  t.prod = g.prod;
  return t;
}

namespace {

bool extend(const GroupoidTable& a, const GroupoidTable& b, std::vector<int>& f, int next,
            std::vector<bool>& used) {
  if (next == a.m) return true;
  for (int y = 0; y < b.m; ++y) {
    if (used[static_cast<std::size_t>(y)]) continue;
    f[static_cast<std::size_t>(next)] = y;
    used[static_cast<std::size_t>(y)] = true;
    bool ok = true;
    for (int i = 0; i <= next && ok; ++i) {
      int fi = f[static_cast<std::size_t>(i)];
      int si = a.star[static_cast<std::size_t>(i)];
      if (si <= next && b.star[static_cast<std::size_t>(fi)] != f[static_cast<std::size_t>(si)])
        ok = false;
      for (int j = 0; j <= next && ok; ++j) {
        int fj = f[static_cast<std::size_t>(j)];
        int p = a.prod[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        int q = b.prod[static_cast<std::size_t>(fi)][static_cast<std::size_t>(fj)];
        if ((p < 0) != (q < 0)) ok = false;
        else if (p >= 0 && p <= next && f[static_cast<std::size_t>(p)] != q)
          ok = false;
      }
    }
    if (ok && extend(a, b, f, next + 1, used)) return true;
    used[static_cast<std::size_t>(y)] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> groupoid_isomorphism(const GroupoidTable& a,
                                                     const GroupoidTable& b) {
  if (a.m != b.m) return std::nullopt;
  std::vector<int> f(static_cast<std::size_t>(a.m), -1);
  std::vector<bool> used(static_cast<std::size_t>(a.m), false);
  if (extend(a, b, f, 0, used)) return f;
  return std::nullopt;
}

}  // namespace weyl
