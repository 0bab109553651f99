#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "weyl/rmatrix.hpp"

using namespace weyl;

namespace {

Rat random_entry(std::mt19937& rng) {
  // the documented sampling grid
  static const int num[] = {-2, -1, 0, 1, 2};
  return Rat(num[rng() % 5], 2);
}

RMatrix random_matrix(std::mt19937& rng, int d) {
  RMatrix m(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m.at(i, j) = random_entry(rng);
  return m;
}

RMatrix random_symmetric(std::mt19937& rng, int d) {
  RMatrix m(d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) m.at(i, j) = m.at(j, i) = random_entry(rng);
  return m;
}

// determinant by Laplace expansion, the test-side oracle
Rat det_oracle(const RMatrix& m) {
  const int d = m.dim();
  if (d == 1) return m.at(0, 0);
  Rat sum = 0;
  for (int k = 0; k < d; ++k) {
    if (m.at(0, k) == 0) continue;
    RMatrix minor(d - 1);
    for (int i = 1; i < d; ++i) {
      int jj = 0;
      for (int j = 0; j < d; ++j) {
        if (j == k) continue;
        minor.at(i - 1, jj++) = m.at(i, j);
      }
    }
    Rat term = m.at(0, k) * det_oracle(minor);
    sum += (k % 2 == 0) ? term : -term;
  }
  return sum;
}

// PSD oracle: all leading and non-leading principal minors nonnegative
bool psd_oracle(const RMatrix& m) {
  if (!m.is_symmetric()) return false;
  const int d = m.dim();
  for (std::uint32_t mask = 1; mask < (1u << d); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < d; ++i)
      if ((mask >> i) & 1) idx.push_back(i);
    RMatrix sub(static_cast<int>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j)
        sub.at(static_cast<int>(i), static_cast<int>(j)) = m.at(idx[i], idx[j]);
    if (det_oracle(sub) < 0) return false;
  }
  return true;
}

// evaluate a polynomial given low-to-high coefficients
Rat eval(const std::vector<Rat>& p, const Rat& x) {
  Rat v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

}  // namespace

TEST_CASE("arithmetic basics") {
  RMatrix a(2);
  a.at(0, 0) = 1;
  a.at(0, 1) = Rat(1, 2);
  a.at(1, 0) = -2;
  RMatrix i2 = RMatrix::identity(2);
  CHECK(a * i2 == a);
  CHECK(i2 * a == a);
  CHECK((a + a) == a.scaled(2));
  CHECK((a - a).is_zero());
  CHECK(a.transpose().transpose() == a);
  CHECK_THROWS_AS(a + RMatrix(3), std::invalid_argument);
  CHECK_THROWS_AS(RMatrix(0), std::invalid_argument);
}

TEST_CASE("psd test against the principal-minor oracle") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 400; ++trial) {
    int d = 1 + static_cast<int>(rng() % 3);
    RMatrix m = random_symmetric(rng, d);
    CHECK(psd_test(m) == psd_oracle(m));
    RMatrix a = random_matrix(rng, d);
    RMatrix g = a * a.transpose();
    CHECK(psd_test(g));
    CHECK(psd_oracle(g));
  }
  RMatrix asym(2);
  asym.at(0, 1) = 1;
  CHECK_FALSE(psd_test(asym));
}

TEST_CASE("characteristic polynomial against the determinant oracle") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 120; ++trial) {
    int d = 1 + static_cast<int>(rng() % 3);
    RMatrix m = random_matrix(rng, d);
    std::vector<Rat> p = char_poly(m);
    REQUIRE(p.size() == static_cast<std::size_t>(d + 1));
    CHECK(p.back() == 1);
    for (const Rat& x : {Rat(0), Rat(1), Rat(-1), Rat(5, 2), Rat(-7, 3)}) {
      RMatrix xi = RMatrix::identity(d).scaled(x) - m;
      CHECK(eval(p, x) == det_oracle(xi));
    }
  }
}

TEST_CASE("sturm counts on factored polynomials") {
  // (x-1)(x-2)(x-3)
  std::vector<Rat> p{-6, 11, -6, 1};
  CHECK(sturm_root_count(p, 0, 4) == 3);
  CHECK(sturm_root_count(p, Rat(3, 2), Rat(5, 2)) == 1);
  CHECK(sturm_root_count(p, 4, 10) == 0);
  CHECK(sturm_roots_above(p, 0) == 3);
  CHECK(sturm_roots_above(p, Rat(5, 2)) == 1);
  CHECK(sturm_roots_above(p, 3) == 0);
  // (x^2-2)^2 has two distinct real roots
  std::vector<Rat> q{4, 0, -4, 0, 1};
  CHECK(sturm_roots_above(q, -10) == 2);
  CHECK(sturm_root_count(q, 1, 2) == 1);
}

TEST_CASE("largest-root bracket and rational detection") {
  std::vector<Rat> p{-6, 11, -6, 1};
  auto [lo, hi] = sturm_max_root_bracket(p, Rat(1, 1000));
  CHECK(lo <= 3);
  CHECK(3 <= hi);
  CHECK(hi - lo <= Rat(1, 1000));
  Rat r;
  CHECK(rational_max_root(p, r));
  CHECK(r == 3);
  // x^2 - 2 has an irrational top root near 1.41421
  std::vector<Rat> q{-2, 0, 1};
  CHECK_FALSE(rational_max_root(q, r));
  auto [lo2, hi2] = sturm_max_root_bracket(q, Rat(1, 100000));
  CHECK(lo2 * lo2 <= 2);
  CHECK(2 <= hi2 * hi2);
}

TEST_CASE("four squares") {
  for (int n = 0; n <= 300; ++n) {
    std::vector<Int> sq = four_squares(n);
    REQUIRE(sq.size() == 4);
    Int sum = 0;
    for (const Int& x : sq) sum += x * x;
    CHECK(sum == n);
  }
  std::vector<Int> big = four_squares(Int("123456789123456789"));
  Int sum = 0;
  for (const Int& x : big) sum += x * x;
  CHECK(sum == Int("123456789123456789"));
}

TEST_CASE("sigma witnesses reconstruct the matrix") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    int d = 1 + static_cast<int>(rng() % 3);
    RMatrix a = random_matrix(rng, d);
    RMatrix g = a * a.transpose();
    std::vector<RMatrix> ws = sigma_witness(g);
    RMatrix sum(d);
    for (const RMatrix& b : ws) sum = sum + b * b.transpose();
    CHECK(sum == g);
  }
  RMatrix neg(1);
  neg.at(0, 0) = -1;
  CHECK_THROWS(sigma_witness(neg));
}
