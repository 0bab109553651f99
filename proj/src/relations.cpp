#include "weyl/relations.hpp"

namespace weyl {

RelationCache::RelationCache(const WeylPair& p) : p_(&p) {
  const StarSemigroup& s = p.s;
  const int n = s.size();
  auto make = [&](auto pred) {
    std::vector<ElementSet> m(static_cast<std::size_t>(n),
                              ElementSet(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (pred(a, b)) m[static_cast<std::size_t>(a)].add(b);
    return m;
  };
  dom_ = make([&](int a, int b) { return s.mul(a, b) == a; });
  compat_ = make([&](int a, int b) { return p.e.contains(s.mul_star(a, b)); });
  sdom_ = make([&](int a, int b) {
    return p.e.contains(s.mul_star(a, b)) && s.mul3(a, s.star(b), b) == a;
  });
  auto transpose = [&](const std::vector<ElementSet>& m) {
    std::vector<ElementSet> t(static_cast<std::size_t>(n),
                              ElementSet(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (m[static_cast<std::size_t>(a)].contains(b)) t[static_cast<std::size_t>(b)].add(a);
    return t;
  };
  domT_ = transpose(dom_);
  compatT_ = transpose(compat_);
  sdomT_ = transpose(sdom_);
}

ElementSet RelationCache::up(const ElementSet& t, Rel r) const {
  ElementSet out(static_cast<std::size_t>(n()));
  for (int e : t.elements()) out |= row(r, e);
  return out;
}

ElementSet RelationCache::down(const ElementSet& t, Rel r) const {
  ElementSet out(static_cast<std::size_t>(n()));
  for (int e : t.elements()) out |= col(r, e);
  return out;
}

Report relation_law_suite(const WeylPair& p, int max_n) {
  Report r;
  const StarSemigroup& s = p.s;
  const int n = s.size();
  if (n > max_n) {
    r.fail("size gate", {n}, "law suite gated; raise max_n to force");
    return r;
  }
  RelationCache rc(p);
  const int cap = 64;  // stop collecting witnesses past this many

  // list of star-dominating pairs, reused by the quadratic laws
  std::vector<std::pair<int, int>> sdom_pairs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (rc.holds(Rel::StarDominates, a, b)) sdom_pairs.push_back({a, b});

  for (auto [a, b] : sdom_pairs) {
    if (static_cast<int>(r.violations.size()) > cap) break;
    for (int c = 0; c < n; ++c) {
      if (rc.holds(Rel::Compatible, b, c) && !rc.holds(Rel::Compatible, a, c))
        r.fail("sdom then compat gives compat", {a, b, c});
      if (rc.holds(Rel::Dominates, b, c) && !rc.holds(Rel::Dominates, a, c))
        r.fail("sdom then dom gives dom", {a, b, c});
      if (rc.holds(Rel::StarDominates, b, c) && !rc.holds(Rel::StarDominates, a, c))
        r.fail("sdom transitive", {a, b, c});
      // a <* b and a < cc*  =>  a <* b cc*  and  ac <* bc
      int cc = s.mul_star(c, c);
      if (rc.holds(Rel::Dominates, a, cc)) {
        if (!rc.holds(Rel::StarDominates, a, s.mul(b, cc)))
          r.fail("sdom extends along dominated square", {a, b, c});
        if (!rc.holds(Rel::StarDominates, s.mul(a, c), s.mul(b, c)))
          r.fail("sdom right multiplicative", {a, b, c});
      }
    }
    if (!rc.holds(Rel::StarDominates, s.star(a), s.star(b)))
      r.fail("sdom star invariant", {a, b});
    if (p.e.contains(b) && !p.e.contains(a)) r.fail("sdom into E stays in E", {a, b});
    if (!rc.holds(Rel::Compatible, a, b)) r.fail("sdom implies compat", {a, b});
    if (!rc.holds(Rel::Dominates, a, s.mul(s.star(b), b)))
      r.fail("sdom implies dom of square", {a, b});
    // e a <* b and a e <* b for e in E
    for (int e : p.e.elements()) {
      if (!rc.holds(Rel::StarDominates, s.mul(e, a), b))
        r.fail("left E-multiple still sdom", {e, a, b});
      if (!rc.holds(Rel::StarDominates, s.mul(a, e), b))
        r.fail("right E-multiple still sdom", {a, e, b});
    }
  }

  // product preservation: a <* b and c <* d  =>  ac <* bd
  for (auto [a, b] : sdom_pairs) {
    if (static_cast<int>(r.violations.size()) > cap) break;
    for (auto [c, d] : sdom_pairs)
      if (!rc.holds(Rel::StarDominates, s.mul(a, c), s.mul(b, d))) {
        r.fail("sdom product preserving", {a, b, c, d});
        break;
      }
  }

  // compat symmetric, and reflexivity on partial isometries with
  // square in E
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (rc.holds(Rel::Compatible, a, b) != rc.holds(Rel::Compatible, b, a))
        r.fail("compat symmetric", {a, b});

  for (int e : p.e.elements()) {
    for (int a = 0; a < n; ++a) {
      int sq = s.mul(s.star(a), a);
      if (rc.holds(Rel::Dominates, e, sq) && !rc.holds(Rel::StarDominates, e, sq))
        r.fail("E under dominated square is sdom", {e, a});
      if (rc.holds(Rel::Dominates, e, a) &&
          !rc.holds(Rel::Dominates, e, s.mul_star(a, a)))
        r.fail("E dominated passes to aa*", {e, a});
    }
  }

  // c a < b whenever a < b
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (rc.holds(Rel::Dominates, a, b)) {
        for (int c = 0; c < n; ++c)
          if (!rc.holds(Rel::Dominates, s.mul(c, a), b)) {
            r.fail("dom left absorbing", {c, a, b});
            break;
          }
      }
  return r;
}

}  // namespace weyl
