#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "weyl/cosets.hpp"
#include "weyl/json_io.hpp"
#include "weyl/models.hpp"

using namespace weyl;

TEST_CASE("finite groupoids validate") {
  for (int k = 1; k <= 4; ++k) CHECK(validate_groupoid(pair_groupoid(k)).ok);
  CHECK(validate_groupoid(group_groupoid(cyclic_group(3))).ok);
  CHECK(validate_groupoid(group_groupoid(symmetric_group_s3())).ok);
  FiniteGroupoid u = disjoint_union(pair_groupoid(2), group_groupoid(cyclic_group(2)));
  CHECK(validate_groupoid(u).ok);
  CHECK(u.m == pair_groupoid(2).m + 2);
}

TEST_CASE("pair groupoid arrow counts") {
  for (int k = 1; k <= 4; ++k) {
    FiniteGroupoid g = pair_groupoid(k);
    CHECK(g.m == k * k);
    int units = 0;
    for (bool b : g.unit)
      if (b) ++units;
    CHECK(units == k);
  }
}

TEST_CASE("sign semigroup element counts") {
  // one zero plus a sign pattern for each nonempty bisection
  SignModel m2 = sign_semigroup(pair_groupoid(2), "p2");
  CHECK(m2.pair.s.size() == 17);
  SignModel mz = sign_semigroup(group_groupoid(cyclic_group(2)), "z2");
  CHECK(mz.pair.s.size() == 5);
  SignModel m3 = sign_semigroup(pair_groupoid(3), "p3");
  CHECK(m3.pair.s.size() == 139);
  for (const SignModel* m : {&m2, &mz}) {
    CHECK(is_weyl_pair(m->pair).ok);
    // signs table matches the multiplication on a few probes
    const StarSemigroup& s = m->pair.s;
    std::optional<int> z = s.zero();
    REQUIRE(z.has_value());
    for (int a = 0; a < s.size(); ++a) {
      CHECK(s.mul(a, *z) == *z);
      CHECK(s.mul(*z, a) == *z);
    }
  }
}

TEST_CASE("bundled models expose the expected combinatorics") {
  struct Row {
    const char* name;
    int n, filters, ultrafilters;
  };
  // frozen counts; filters = -1 skips the filter count
  const Row rows[] = {
      {"z2_trivial", 2, -1, 2},  {"z4_mod2", 4, -1, 2},    {"s3_a3", 6, -1, 2},
      {"inv1", 2, -1, 1},        {"inv2", 7, 7, 4},        {"inv3", 34, 34, 9},
      {"inv4", 209, 209, 16},    {"sign_pair2", 17, 7, 4}, {"sign_pair3", 139, 34, 9},
      {"sign_z2", 5, 3, 2},      {"sign_union", 85, 21, 6},
  };
  for (const Row& r : rows) {
    INFO(r.name);
    WeylPair p = model_by_name(r.name);
    CHECK(p.s.size() == r.n);
    RelationCache rc(p);
    if (r.filters >= 0)
      CHECK(enumerate_filters(rc).size() == static_cast<std::size_t>(r.filters));
    CHECK(enumerate_ultrafilters(rc).size() == static_cast<std::size_t>(r.ultrafilters));
  }
  CHECK_THROWS_AS(model_by_name("nope"), std::invalid_argument);
}

TEST_CASE("registry names are exactly the constructible models") {
  std::vector<std::string> names = model_names();
  CHECK(names.size() == 11);
  for (const std::string& n : names) CHECK(model_by_name(n).name == n);
}

TEST_CASE("group pair quotient sizes") {
  WeylPair p = model_by_name("s3_a3");
  CHECK(p.e.size() == 3);
  WeylPair q = model_by_name("z4_mod2");
  CHECK(q.e.size() == 2);
  // E is the unit coset of the identity
  CHECK(p.e.contains(0));
}

TEST_CASE("embedded models round-trip their semigroup structure") {
  EmbeddedModel m = embedded_sign_model(2);
  CHECK(m.pair.s.size() == 17);
  for (int a = 0; a < m.pair.s.size(); ++a)
    for (int b = 0; b < m.pair.s.size(); ++b)
      CHECK(m.elem(m.mat(a) * m.mat(b)) == m.pair.s.mul(a, b));
  CHECK(m.elem(RMatrix::identity(m.d) + RMatrix::identity(m.d)) == -1);
}

TEST_CASE("pair JSON round trip") {
  for (const std::string& name : {"z4_mod2", "inv2", "sign_z2"}) {
    WeylPair p = model_by_name(name);
    Json j = pair_to_json(p);
    WeylPair q = pair_from_json(j);
    CHECK(q.name == p.name);
    CHECK(q.s.size() == p.s.size());
    CHECK(q.e == p.e);
    CHECK(q.s.zero() == p.s.zero());
    for (int a = 0; a < p.s.size(); ++a) {
      CHECK(q.s.star(a) == p.s.star(a));
      for (int b = 0; b < p.s.size(); ++b) CHECK(q.s.mul(a, b) == p.s.mul(a, b));
    }
  }
  Json bad = pair_to_json(model_by_name("z4_mod2"));
  bad["E"].push_back(99);
  CHECK_THROWS_AS(pair_from_json(bad), std::invalid_argument);
}

TEST_CASE("matrix JSON round trip") {
  RMatrix m(2);
  m.at(0, 0) = Rat(-3, 7);
  m.at(1, 0) = 5;
  Json j = matrix_to_json(m);
  CHECK(j["entries"][0][0] == "-3/7");
  CHECK(matrix_from_json(j) == m);
  CHECK(rat_from_string("-22/7") == Rat(-22, 7));
  CHECK(rat_to_string(Rat(8, 4)) == "2");
  CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
}

TEST_CASE("report JSON shape") {
  Report r;
  r.fail("some law", {1, 2}, "detail");
  Json j = report_to_json(r);
  CHECK(j["ok"] == false);
  CHECK(j["violations"].size() == 1);
  CHECK(j["violations"][0]["law"] == "some law");
  CHECK(j["violations"][0]["elems"] == Json::array({1, 2}));
  CHECK(j["violations"][0]["note"] == "detail");
}
