#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "weyl/models.hpp"
#include "weyl/topology.hpp"

using namespace weyl;

namespace {

// fixpoint closure under finite intersections and arbitrary unions
std::vector<ElementSet> closure_oracle(std::size_t m, const std::vector<ElementSet>& sub) {
  std::set<ElementSet> open(sub.begin(), sub.end());
  open.insert(ElementSet(m));
  open.insert(ElementSet::full(m));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<ElementSet> cur(open.begin(), open.end());
    for (const ElementSet& a : cur)
      for (const ElementSet& b : cur) {
        if (open.insert(a & b).second) grew = true;
        if (open.insert(a | b).second) grew = true;
      }
  }
  return {open.begin(), open.end()};
}

ElementSet random_subset(std::mt19937& rng, std::size_t m) {
  ElementSet s(m);
  for (std::size_t i = 0; i < m; ++i)
    if (rng() & 1) s.add(static_cast<int>(i));
  return s;
}

}  // namespace

TEST_CASE("subbasis generation matches the lattice-closure oracle") {
  std::mt19937 rng(20240911);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t m = 2 + rng() % 6;
    std::vector<ElementSet> sub;
    std::size_t k = 1 + rng() % 4;
    for (std::size_t i = 0; i < k; ++i) sub.push_back(random_subset(rng, m));
    FiniteTopology t = topology_from_subbasis(m, sub);
    std::vector<ElementSet> expect = closure_oracle(m, sub);
    // the generated topology need not contain the full set unless the
    // subbasis covers, so compare after adding it to both sides
    std::set<ElementSet> got(t.opens.begin(), t.opens.end());
    got.insert(ElementSet::full(m));
    std::set<ElementSet> want(expect.begin(), expect.end());
    CHECK(std::vector<ElementSet>(got.begin(), got.end()) ==
          std::vector<ElementSet>(want.begin(), want.end()));
  }
}

TEST_CASE("minimal neighbourhoods generate and are minimal") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t m = 2 + rng() % 5;
    std::vector<ElementSet> sub;
    for (int i = 0; i < 3; ++i) sub.push_back(random_subset(rng, m));
    FiniteTopology t = topology_from_subbasis(m, sub);
    for (std::size_t x = 0; x < m; ++x) {
      ElementSet mn = t.min_nbhd(static_cast<int>(x));
      for (const ElementSet& o : t.opens)
        if (o.contains(static_cast<int>(x))) CHECK(mn.subset_of(o));
      if (mn.contains(static_cast<int>(x))) CHECK(t.is_open(mn));
    }
    for (const ElementSet& o : t.opens) {
      ElementSet u(m);
      for (int x : o.elements()) u |= t.min_nbhd(x);
      CHECK(u == o);
    }
  }
}

TEST_CASE("compact containment matches the cover-enumeration oracle") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t m = 2 + rng() % 4;
    std::vector<ElementSet> sub;
    for (int i = 0; i < 2; ++i) sub.push_back(random_subset(rng, m));
    sub.push_back(ElementSet::full(m));
    FiniteTopology t = topology_from_subbasis(m, sub);
    if (t.opens.size() > 12) continue;
    const std::size_t no = t.opens.size();
    for (const ElementSet& o : t.opens)
      for (const ElementSet& nb : t.opens) {
        // every family of opens covering nb must already cover o
        bool expect = true;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << no); ++mask) {
          ElementSet u(m);
          for (std::size_t i = 0; i < no; ++i)
            if ((mask >> i) & 1) u |= t.opens[i];
          if (nb.subset_of(u) && !o.subset_of(u)) {
            expect = false;
            break;
          }
        }
        CHECK(compactly_contained(t, o, nb) == expect);
      }
  }
}

TEST_CASE("weyl groupoid structure on the ultrafilter carrier") {
  for (const std::string& name : {"z4_mod2", "s3_a3", "inv2", "sign_z2", "sign_pair2"}) {
    WeylPair p = model_by_name(name);
    INFO(name);
    RelationCache rc(p);
    TopGroupoid g = weyl_groupoid(rc, Carrier::Ultrafilters);
    CHECK(g.points == enumerate_ultrafilters(rc));
    for (std::size_t i = 0; i < g.points.size(); ++i) {
      CHECK(g.star[static_cast<std::size_t>(g.star[i])] == static_cast<int>(i));
      CHECK(g.unit[static_cast<std::size_t>(g.source[i])]);
      CHECK(g.unit[static_cast<std::size_t>(g.range[i])]);
      // product defined exactly when source meets range
      for (std::size_t j = 0; j < g.points.size(); ++j)
        CHECK((g.prod[i][j] >= 0) == (g.source[i] == g.range[j]));
    }
    CHECK(etale_report(g).ok);
    CHECK(subbasis_is_basis_check(g).ok);
  }
}

TEST_CASE("etale and groupoid laws on filter and coset carriers") {
  for (const std::string& name : {"z4_mod2", "inv2", "sign_z2"}) {
    WeylPair p = model_by_name(name);
    INFO(name);
    RelationCache rc(p);
    for (Carrier c : {Carrier::Filters, Carrier::Cosets}) {
      TopGroupoid g = weyl_groupoid(rc, c);
      CHECK(etale_report(g).ok);
      CHECK(coset_groupoid_laws(rc, g.points).ok);
    }
  }
}

TEST_CASE("unit space separation") {
  for (const std::string& name : {"inv1", "inv2", "sign_z2", "sign_pair2", "z4_mod2"}) {
    INFO(name);
    WeylPair p = model_by_name(name);
    RelationCache rc(p);
    CHECK(hausdorff_units_check(weyl_groupoid(rc, Carrier::Ultrafilters)).ok);
  }
}

TEST_CASE("subbasic sets are bisections with multiplicative product") {
  for (const std::string& name : {"z4_mod2", "sign_z2", "sign_pair2"}) {
    INFO(name);
    WeylPair p = model_by_name(name);
    RelationCache rc(p);
    TopGroupoid g = weyl_groupoid(rc, Carrier::Ultrafilters);
    CHECK(bisection_product_check(rc, g).ok);
  }
}

TEST_CASE("groupoid isomorphism search") {
  WeylPair p = model_by_name("z4_mod2");
  RelationCache rc(p);
  GroupoidTable a = table_of(weyl_groupoid(rc, Carrier::Ultrafilters));
  CHECK(groupoid_isomorphism(a, a).has_value());
  // relabeled copy
  GroupoidTable b = a;
  if (a.m == 2) {
    std::swap(b.star[0], b.star[1]);
    for (auto& row : b.prod) std::swap(row[0], row[1]);
    std::swap(b.prod[0], b.prod[1]);
    for (auto& x : b.star) x = x >= 0 ? 1 - x : x;
    for (auto& row : b.prod)
      for (auto& x : row) x = x >= 0 ? 1 - x : x;
    CHECK(groupoid_isomorphism(a, b).has_value());
  }
  // a two-point discrete unit groupoid is not isomorphic to a 2-group
  GroupoidTable units2{2, {0, 1}, {{0, -1}, {-1, 1}}};
  CHECK_FALSE(groupoid_isomorphism(a, units2).has_value());
  GroupoidTable units3{3, {0, 1, 2}, {{0, -1, -1}, {-1, 1, -1}, {-1, -1, 2}}};
  CHECK_FALSE(groupoid_isomorphism(a, units3).has_value());
}
