#include "weyl/bundle.hpp"

#include <algorithm>
#include <set>

#include "weyl/models.hpp"

namespace weyl {

namespace {

bool rel_contains(const std::vector<ElementSet>& r, int x, int y) {
  return r[static_cast<std::size_t>(x)].contains(y);
}

bool rel_subset(const std::vector<ElementSet>& a, const std::vector<ElementSet>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].subset_of(b[i])) return false;
  return true;
}

std::vector<ElementSet> rel_compose(const std::vector<ElementSet>& a,
                                    const std::vector<ElementSet>& b) {
  std::vector<ElementSet> r(a.size(), ElementSet(a.size()));
  for (std::size_t x = 0; x < a.size(); ++x)
    for (int y : a[x].elements()) r[x] |= b[static_cast<std::size_t>(y)];
  return r;
}

std::vector<ElementSet> rel_intersect(const std::vector<ElementSet>& a,
                                      const std::vector<ElementSet>& b) {
  std::vector<ElementSet> r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] &= b[i];
  return r;
}

}  // namespace

Report validate_uniformity(const FiniteUniformity& u) {
  Report rep;
  if (u.base.empty()) rep.fail("base nonempty", {});
  for (std::size_t k = 0; k < u.base.size(); ++k) {
    const auto& r = u.base[k];
    if (static_cast<int>(r.size()) != u.m) {
      rep.fail("entourage dimension", {static_cast<int>(k)});
      continue;
    }
    for (int x = 0; x < u.m; ++x) {
      if (!rel_contains(r, x, x)) rep.fail("entourage reflexive", {static_cast<int>(k), x});
      for (int y : r[static_cast<std::size_t>(x)].elements())
        if (!rel_contains(r, y, x)) rep.fail("entourage symmetric", {static_cast<int>(k), x, y});
    }
    bool divisible = false;
    for (const auto& q : u.base)
      if (rel_subset(rel_compose(q, q), r)) {
        divisible = true;
        break;
      }
    if (!divisible) rep.fail("entourage divisible", {static_cast<int>(k)});
  }
  for (std::size_t i = 0; i < u.base.size(); ++i)
    for (std::size_t j = i + 1; j < u.base.size(); ++j) {
      std::vector<ElementSet> cap = rel_intersect(u.base[i], u.base[j]);
      bool found = false;
      for (const auto& q : u.base)
        if (rel_subset(q, cap)) {
          found = true;
          break;
        }
      if (!found) rep.fail("filter base", {static_cast<int>(i), static_cast<int>(j)});
    }
  return rep;
}

Report validate_action_system(const ActionSystem& sys) {
  Report rep = validate_uniformity(sys.uniformity);
  const StarSemigroup& s = sys.pair.s;
  if (sys.uniformity.m != sys.x) rep.fail("uniformity carries X", {});
  if (static_cast<int>(sys.act.size()) != s.size() ||
      static_cast<int>(sys.psi.size()) != sys.x) {
    rep.fail("tables sized", {});
    return rep;
  }
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b)
      for (int x = 0; x < sys.x; ++x)
        if (sys.act[static_cast<std::size_t>(s.mul(a, b))][static_cast<std::size_t>(x)] !=
            sys.act[static_cast<std::size_t>(a)]
                   [static_cast<std::size_t>(sys.act[static_cast<std::size_t>(b)]
                                                    [static_cast<std::size_t>(x)])])
          rep.fail("action associative", {a, b, x});
  for (int e : sys.pair.e.elements())
    for (int x = 0; x < sys.x; ++x) {
      int ex = sys.act[static_cast<std::size_t>(e)][static_cast<std::size_t>(x)];
      if (sys.psi[static_cast<std::size_t>(ex)] !=
          sys.act[static_cast<std::size_t>(e)]
                 [static_cast<std::size_t>(sys.psi[static_cast<std::size_t>(x)])])
        rep.fail("psi E-equivariant", {e, x});
    }
  for (std::size_t r = 0; r < sys.uniformity.base.size(); ++r) {
    bool found = false;
    for (const auto& q : sys.uniformity.base) {
      bool ok = true;
      for (int a = 0; a < s.size() && ok; ++a)
        for (int x = 0; x < sys.x && ok; ++x)
          for (int y : q[static_cast<std::size_t>(x)].elements()) {
            int ax = sys.act[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)];
            int ay = sys.act[static_cast<std::size_t>(a)][static_cast<std::size_t>(y)];
            if (!rel_contains(sys.uniformity.base[r], ax, ay)) {
              ok = false;
              break;
            }
          }
      if (ok) {
        found = true;
        break;
      }
    }
    if (!found) rep.fail("action uniformly continuous", {static_cast<int>(r)});
  }
  return rep;
}

bool rel_RU(const ActionSystem& sys, const ElementSet& u, int r, int x, int y) {
  const StarSemigroup& s = sys.pair.s;
  for (int a : u.elements()) {
    int sa = s.star(a);
    int px = sys.psi[static_cast<std::size_t>(
        sys.act[static_cast<std::size_t>(sa)][static_cast<std::size_t>(x)])];
    int py = sys.psi[static_cast<std::size_t>(
        sys.act[static_cast<std::size_t>(sa)][static_cast<std::size_t>(y)])];
    if (rel_contains(sys.uniformity.base[static_cast<std::size_t>(r)], px, py)) return true;
  }
  return false;
}

std::vector<ElementSet> equivalence_classes(const ActionSystem& sys, const ElementSet& u,
                                            Report* rep) {
  const int m = sys.x;
  std::vector<ElementSet> close(static_cast<std::size_t>(m),
                                ElementSet(static_cast<std::size_t>(m)));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      bool all = true;
      for (std::size_t r = 0; r < sys.uniformity.base.size(); ++r)
        if (!rel_RU(sys, u, static_cast<int>(r), x, y)) {
          all = false;
          break;
        }
      if (all) close[static_cast<std::size_t>(x)].add(y);
    }
  if (rep) {
    for (int x = 0; x < m; ++x) {
      if (!close[static_cast<std::size_t>(x)].contains(x)) rep->fail("closeness reflexive", {x});
      for (int y : close[static_cast<std::size_t>(x)].elements()) {
        if (!close[static_cast<std::size_t>(y)].contains(x))
          rep->fail("closeness symmetric", {x, y});
        for (int z : close[static_cast<std::size_t>(y)].elements())
          if (!close[static_cast<std::size_t>(x)].contains(z))
            rep->fail("closeness transitive", {x, y, z});
      }
    }
  }
  std::vector<ElementSet> classes;
  ElementSet seen(static_cast<std::size_t>(m));
  for (int x = 0; x < m; ++x) {
    if (seen.contains(x)) continue;
    // reachability closure so a partition results even on a reported
    // transitivity failure
    ElementSet cls(static_cast<std::size_t>(m));
    std::vector<int> stack{x};
    cls.add(x);
    while (!stack.empty()) {
      int y = stack.back();
      stack.pop_back();
      for (int z : close[static_cast<std::size_t>(y)].elements())
        if (!cls.contains(z)) {
          cls.add(z);
          stack.push_back(z);
        }
    }
    seen |= cls;
    classes.push_back(cls);
  }
  std::sort(classes.begin(), classes.end());
  return classes;
}

BundleSpace bundle_space(const ActionSystem& sys) {
  BundleSpace w;
  RelationCache rc(sys.pair);
  w.ultrafilters = enumerate_ultrafilters(rc);
  for (std::size_t j = 0; j < w.ultrafilters.size(); ++j)
    for (const ElementSet& cls : equivalence_classes(sys, w.ultrafilters[j]))
      w.points.push_back({static_cast<int>(j), cls});
  const std::size_t n = w.points.size();
  const StarSemigroup& s = sys.pair.s;
  std::set<ElementSet> nbhds;
  for (int x = 0; x < sys.x; ++x)
    for (int a = 0; a < s.size(); ++a)
      for (std::size_t r = 0; r < sys.uniformity.base.size(); ++r) {
        ElementSet nb(n);
        for (std::size_t i = 0; i < n; ++i) {
          const BundlePoint& p = w.points[i];
          if (!w.ultrafilters[static_cast<std::size_t>(p.u)].contains(a)) continue;
          for (int y : p.cls.elements())
            if (rel_RU(sys, w.ultrafilters[static_cast<std::size_t>(p.u)],
                       static_cast<int>(r), x, y)) {
              nb.add(static_cast<int>(i));
              break;
            }
        }
        if (!nb.empty()) nbhds.insert(nb);
      }
  w.nbhds.assign(nbhds.begin(), nbhds.end());
  w.top = topology_from_subbasis(n, w.nbhds);
  std::vector<ElementSet> usub;
  for (int a = 0; a < s.size(); ++a) {
    ElementSet ua(w.ultrafilters.size());
    for (std::size_t j = 0; j < w.ultrafilters.size(); ++j)
      if (w.ultrafilters[j].contains(a)) ua.add(static_cast<int>(j));
    usub.push_back(ua);
  }
  w.base_top = topology_from_subbasis(w.ultrafilters.size(), usub);
  return w;
}

Report neighborhood_base_check(const BundleSpace& w) {
  Report rep;
  for (std::size_t i = 0; i < w.points.size(); ++i)
    for (const ElementSet& n1 : w.nbhds) {
      if (!n1.contains(static_cast<int>(i))) continue;
      for (const ElementSet& n2 : w.nbhds) {
        if (!n2.contains(static_cast<int>(i))) continue;
        ElementSet cap = n1 & n2;
        bool found = false;
        for (const ElementSet& n3 : w.nbhds)
          if (n3.contains(static_cast<int>(i)) && n3.subset_of(cap)) {
            found = true;
            break;
          }
        if (!found) {
          rep.fail("neighbourhoods form a base", {static_cast<int>(i)});
          if (rep.violations.size() > 8) return rep;
        }
      }
    }
  return rep;
}

Report projection_report(const ActionSystem& sys, const BundleSpace& w) {
  Report rep;
  auto image = [&](const ElementSet& o) {
    ElementSet img(w.ultrafilters.size());
    for (int i : o.elements()) img.add(w.points[static_cast<std::size_t>(i)].u);
    return img;
  };
  for (const ElementSet& o : w.base_top.opens) {
    ElementSet pre(w.points.size());
    for (std::size_t i = 0; i < w.points.size(); ++i)
      if (o.contains(w.points[i].u)) pre.add(static_cast<int>(i));
    if (!w.top.is_open(pre)) rep.fail("projection continuous", o.elements());
  }
  for (const ElementSet& o : w.top.opens)
    if (!w.base_top.is_open(image(o))) rep.fail("projection open", o.elements());
  // each neighbourhood set projects exactly onto the subbasic set of
  // the semigroup element it was built from
  const StarSemigroup& s = sys.pair.s;
  for (int x = 0; x < sys.x; ++x)
    for (int a = 0; a < s.size(); ++a)
      for (std::size_t r = 0; r < sys.uniformity.base.size(); ++r) {
        ElementSet nb(w.points.size());
        ElementSet ua(w.ultrafilters.size());
        for (std::size_t j = 0; j < w.ultrafilters.size(); ++j)
          if (w.ultrafilters[j].contains(a)) ua.add(static_cast<int>(j));
        for (std::size_t i = 0; i < w.points.size(); ++i) {
          const BundlePoint& p = w.points[i];
          if (!w.ultrafilters[static_cast<std::size_t>(p.u)].contains(a)) continue;
          for (int y : p.cls.elements())
            if (rel_RU(sys, w.ultrafilters[static_cast<std::size_t>(p.u)],
                       static_cast<int>(r), x, y)) {
              nb.add(static_cast<int>(i));
              break;
            }
        }
        if (image(nb) != ua) rep.fail("neighbourhood projects onto U_s", {x, a, static_cast<int>(r)});
      }
  // surjectivity: every ultrafilter carries a fiber
  ElementSet everything(w.points.size());
  for (std::size_t i = 0; i < w.points.size(); ++i) everything.add(static_cast<int>(i));
  if (image(everything) != ElementSet::full(w.ultrafilters.size()))
    rep.fail("projection surjective", {});
  return rep;
}

bool section_continuity(const ActionSystem& sys, const BundleSpace& w, int x) {
  (void)sys;
  std::vector<int> sec(w.ultrafilters.size(), -1);
  for (std::size_t i = 0; i < w.points.size(); ++i)
    if (w.points[i].cls.contains(x)) sec[static_cast<std::size_t>(w.points[i].u)] =
        static_cast<int>(i);
  for (const ElementSet& o : w.top.opens) {
    ElementSet pre(w.ultrafilters.size());
    for (std::size_t j = 0; j < sec.size(); ++j)
      if (sec[j] >= 0 && o.contains(sec[j])) pre.add(static_cast<int>(j));
    if (!w.base_top.is_open(pre)) return false;
  }
  return true;
}

Report bundle_hausdorff_check(const BundleSpace& w) {
  Report rep;
  const int n = static_cast<int>(w.points.size());
  // minimal neighbourhoods are the optimal separators
  std::vector<ElementSet> mins;
  for (int i = 0; i < n; ++i) mins.push_back(w.top.min_nbhd(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (mins[static_cast<std::size_t>(i)].intersects(mins[static_cast<std::size_t>(j)]))
        rep.fail("bundle points separated", {i, j});
  return rep;
}

namespace {

std::vector<ElementSet> diagonal_rel(int m) {
  std::vector<ElementSet> r(static_cast<std::size_t>(m), ElementSet(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i) r[static_cast<std::size_t>(i)].add(i);
  return r;
}

std::vector<ElementSet> full_rel(int m) {
  return std::vector<ElementSet>(static_cast<std::size_t>(m),
                                 ElementSet::full(static_cast<std::size_t>(m)));
}

std::vector<std::vector<int>> trivial_action(int s, int x) {
  std::vector<int> row(static_cast<std::size_t>(x));
  for (int i = 0; i < x; ++i) row[static_cast<std::size_t>(i)] = i;
  return std::vector<std::vector<int>>(static_cast<std::size_t>(s), row);
}

std::vector<int> identity_map(int x) {
  std::vector<int> r(static_cast<std::size_t>(x));
  for (int i = 0; i < x; ++i) r[static_cast<std::size_t>(i)] = i;
  return r;
}

}  // namespace

std::vector<std::string> action_system_names() {
  return {"singleton", "indiscrete", "two_block"};
}

ActionSystem action_system_by_name(const std::string& name) {
  ActionSystem sys;
  sys.name = name;
  if (name == "singleton") {
    sys.pair = model_by_name("z4_mod2");
    sys.x = 1;
    sys.act = trivial_action(sys.pair.s.size(), 1);
    sys.psi = identity_map(1);
    sys.uniformity = {1, {diagonal_rel(1)}};
    return sys;
  }
  if (name == "indiscrete") {
    sys.pair = model_by_name("inv2");
    sys.x = 3;
    sys.act = trivial_action(sys.pair.s.size(), 3);
    sys.psi = identity_map(3);
    sys.uniformity = {3, {full_rel(3)}};
    return sys;
  }
  if (name == "two_block") {
    // Z/4 translating itself, psi folding {0,1} and {2,3} together;
    // the two ultrafilters induce different partitions of X
    sys.pair = model_by_name("z4_mod2");
    sys.x = 4;
    sys.act.assign(4, std::vector<int>(4));
    for (int s = 0; s < 4; ++s)
      for (int x = 0; x < 4; ++x) sys.act[static_cast<std::size_t>(s)]
                                         [static_cast<std::size_t>(x)] = (s + x) % 4;
    sys.psi = {0, 0, 2, 2};
    std::vector<ElementSet> blocks(4, ElementSet(4));
    for (int i = 0; i < 4; ++i) {
      blocks[static_cast<std::size_t>(i)].add(i);
      blocks[static_cast<std::size_t>(i)].add(i ^ 1);
    }
    sys.uniformity = {4, {diagonal_rel(4), blocks, full_rel(4)}};
    return sys;
  }
  throw std::invalid_argument("unknown action system: " + name);
}

}  // namespace weyl
