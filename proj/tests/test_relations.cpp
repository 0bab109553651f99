#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weyl/models.hpp"
#include "weyl/relations.hpp"

using namespace weyl;

namespace {

// direct definitional oracles, bypassing the cache
bool dom_def(const WeylPair& p, int a, int b) { return p.s.mul(a, b) == a; }
bool compat_def(const WeylPair& p, int a, int b) { return p.e.contains(p.s.mul_star(a, b)); }
bool sdom_def(const WeylPair& p, int a, int b) {
  return compat_def(p, a, b) && p.s.mul3(a, p.s.star(b), b) == a;
}

}  // namespace

TEST_CASE("relation matrices match the definitions") {
  for (const std::string& name : model_names()) {
    WeylPair p = model_by_name(name);
    if (p.s.size() > 64) continue;
    INFO(name);
    RelationCache rc(p);
    for (int a = 0; a < p.s.size(); ++a)
      for (int b = 0; b < p.s.size(); ++b) {
        CHECK(rc.holds(Rel::Dominates, a, b) == dom_def(p, a, b));
        CHECK(rc.holds(Rel::Compatible, a, b) == compat_def(p, a, b));
        CHECK(rc.holds(Rel::StarDominates, a, b) == sdom_def(p, a, b));
        CHECK(rc.col(Rel::StarDominates, b).contains(a) == sdom_def(p, a, b));
      }
  }
}

TEST_CASE("upward and downward closures") {
  WeylPair p = model_by_name("inv2");
  RelationCache rc(p);
  const int n = p.s.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    ElementSet t(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) t.add(i);
    for (Rel r : {Rel::Dominates, Rel::Compatible, Rel::StarDominates}) {
      ElementSet up(static_cast<std::size_t>(n)), down(static_cast<std::size_t>(n));
      for (int a = 0; a < n; ++a)
        for (int x : t.elements()) {
          if (rc.holds(r, x, a)) up.add(a);
          if (rc.holds(r, a, x)) down.add(a);
        }
      CHECK(rc.up(t, r) == up);
      CHECK(rc.down(t, r) == down);
    }
  }
}

TEST_CASE("relation interaction laws hold on bundled models") {
  for (const std::string& name : model_names()) {
    WeylPair p = model_by_name(name);
    if (p.s.size() > 64) continue;
    INFO(name);
    CHECK(relation_law_suite(p).ok);
  }
}

TEST_CASE("star-domination is a partial order up to sign on the bisection model") {
  SignModel m = sign_semigroup(pair_groupoid(2), "sign_pair2");
  RelationCache rc(m.pair);
  const int n = m.pair.s.size();
  std::size_t arrows = m.signs.empty() ? 0 : m.signs[0].size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // signed functions on bisections: a <* b iff dom a inside dom b
      bool dom_incl = true;
      for (std::size_t g = 0; g < arrows; ++g)
        if (m.signs[static_cast<std::size_t>(a)][g] != 0 &&
            m.signs[static_cast<std::size_t>(b)][g] == 0)
          dom_incl = false;
      CHECK(rc.holds(Rel::StarDominates, a, b) == dom_incl);
    }
}

TEST_CASE("star-domination refines both other relations") {
  for (const std::string& name : {"inv2", "inv3", "sign_pair2", "sign_z2"}) {
    WeylPair p = model_by_name(name);
    INFO(name);
    RelationCache rc(p);
    for (int a = 0; a < p.s.size(); ++a) {
      CHECK(rc.row(Rel::StarDominates, a).subset_of(rc.row(Rel::Compatible, a)));
      // a <* b splits as compatibility plus domination by b*b
      for (int b = 0; b < p.s.size(); ++b)
        CHECK(rc.holds(Rel::StarDominates, a, b) ==
              (rc.holds(Rel::Compatible, a, b) &&
               rc.holds(Rel::Dominates, a, p.s.mul(p.s.star(b), b))));
    }
  }
}
