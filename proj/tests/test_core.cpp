#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weyl/models.hpp"

using namespace weyl;

TEST_CASE("constructor rejects malformed tables") {
  CHECK_THROWS_AS(StarSemigroup(0, {}, {}), std::invalid_argument);
  CHECK_THROWS_AS(StarSemigroup(2, {{0, 1}}, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(StarSemigroup(2, {{0, 1}, {1, 2}}, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(StarSemigroup(2, {{0, 1}, {1, 0}}, {0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(StarSemigroup(2, {{0, 1}, {1, 0}}, {0, 1}, 5), std::invalid_argument);
}

TEST_CASE("group tables validate") {
  for (int n = 1; n <= 6; ++n) {
    StarSemigroup g = cyclic_group(n);
    CHECK(validate_star_semigroup(g).ok);
    for (int a = 0; a < n; ++a) {
      CHECK(g.mul(a, g.star(a)) == 0);
      for (int b = 0; b < n; ++b) CHECK(g.mul(a, b) == (a + b) % n);
    }
  }
  CHECK(validate_star_semigroup(symmetric_group_s3()).ok);
}

TEST_CASE("violations carry witnesses") {
  // two-element meet semilattice with the identity star
  StarSemigroup s(2, {{0, 0}, {0, 1}}, {0, 1});
  Report r = validate_star_semigroup(s);
  CHECK(r.ok);
  // Z/2 with star swapping the elements breaks the antihomomorphism law
  StarSemigroup bad(2, {{0, 1}, {1, 0}}, {1, 0});
  Report rb = validate_star_semigroup(bad);
  CHECK_FALSE(rb.ok);
  CHECK_FALSE(rb.violations.empty());
}

TEST_CASE("bundled pairs satisfy the Weyl-pair laws") {
  for (const std::string& name : model_names()) {
    WeylPair p = model_by_name(name);
    INFO(name);
    CHECK(validate_star_semigroup(p.s).ok);
    CHECK(is_weyl_pair(p).ok);
  }
}

TEST_CASE("a non-normal subset is rejected as E") {
  StarSemigroup s3 = symmetric_group_s3();
  // a two-element subgroup generated by a transposition is not normal
  for (int a = 1; a < 6; ++a) {
    if (s3.mul(a, a) != 0 || s3.star(a) != a) continue;
    ElementSet e(6);
    e.add(0);
    e.add(a);
    bool normal = true;
    for (int g = 0; g < 6 && normal; ++g)
      for (int x : e.elements())
        if (!e.contains(s3.mul3(g, x, s3.star(g)))) {
          normal = false;
          break;
        }
    if (!normal) {
      WeylPair p{s3, e, "bad"};
      CHECK_FALSE(is_weyl_pair(p).ok);
    }
  }
}

namespace {

// brute-force oracle for the derived subsets, straight from the definitions
ElementSet oracle_subset(const StarSemigroup& s, const ElementSet& t, SubsetKind kind) {
  const int n = s.size();
  ElementSet r(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    bool in = false;
    switch (kind) {
      case SubsetKind::StarSquares:
        for (int x : t.elements())
          if (s.mul(s.star(x), x) == a) in = true;
        break;
      case SubsetKind::SelfAdjoint:
        in = t.contains(a) && s.star(a) == a;
        break;
      case SubsetKind::PartialIsometries:
        in = t.contains(a) && s.mul3(a, s.star(a), a) == a;
        break;
      case SubsetKind::StarNormalisers: {
        in = true;
        for (int x : t.elements())
          if (!t.contains(s.mul3(s.star(a), x, a)) || !t.contains(s.mul3(a, x, s.star(a))))
            in = false;
        break;
      }
      case SubsetKind::DotNormalisers: {
        ElementSet at(static_cast<std::size_t>(n)), ta(static_cast<std::size_t>(n));
        for (int x : t.elements()) {
          at.add(s.mul(a, x));
          ta.add(s.mul(x, a));
        }
        in = at == ta;
        break;
      }
      case SubsetKind::Centralisers: {
        in = true;
        for (int x : t.elements())
          if (s.mul(a, x) != s.mul(x, a)) in = false;
        break;
      }
    }
    if (in) r.add(a);
  }
  return r;
}

}  // namespace

TEST_CASE("derived subsets agree with the brute-force oracle") {
  for (const std::string& name : {"z4_mod2", "s3_a3", "inv2", "sign_z2", "sign_pair2"}) {
    WeylPair p = model_by_name(name);
    INFO(name);
    for (SubsetKind k :
         {SubsetKind::StarSquares, SubsetKind::SelfAdjoint, SubsetKind::PartialIsometries,
          SubsetKind::StarNormalisers, SubsetKind::DotNormalisers, SubsetKind::Centralisers}) {
      CHECK(derived_subset(p.s, p.e, k) == oracle_subset(p.s, p.e, k));
      ElementSet all = ElementSet::full(static_cast<std::size_t>(p.s.size()));
      CHECK(derived_subset(p.s, all, k) == oracle_subset(p.s, all, k));
    }
  }
}

TEST_CASE("commutative example star normaliser") {
  CommutativePairExample ex = commutative_square_example();
  CHECK(derived_subset(ex.s, ex.e, SubsetKind::StarNormalisers) == ex.expected_star_normaliser);
}

TEST_CASE("partial isometries form an inverse semigroup") {
  for (const std::string& name : {"inv2", "inv3", "sign_z2", "sign_pair2", "z4_mod2"}) {
    INFO(name);
    CHECK(check_pi_inverse_semigroup(model_by_name(name)).ok);
  }
}
