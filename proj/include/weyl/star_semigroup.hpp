#ifndef WEYL_STAR_SEMIGROUP_HPP
#define WEYL_STAR_SEMIGROUP_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "weyl/element_set.hpp"
#include "weyl/report.hpp"

namespace weyl {

// Finite *-semigroup given by dense tables over element ids 0..n-1.
// Structural problems (ragged tables, ids out of range) throw
// std::invalid_argument; law violations are reported by
// validate_star_semigroup instead.
class StarSemigroup {
public:
  // trivial one-element *-semigroup, placeholder for later assignment
  StarSemigroup() : StarSemigroup(1, {{0}}, {0}) {}

  StarSemigroup(int n, std::vector<std::vector<int>> mult, std::vector<int> star,
                std::optional<int> zero = std::nullopt)
      : n_(n), star_(std::move(star)), zero_(zero) {
    if (n <= 0) throw std::invalid_argument("element count must be positive");
    if (static_cast<int>(mult.size()) != n || static_cast<int>(star_.size()) != n)
      throw std::invalid_argument("table size does not match element count");
    mult_.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
      if (static_cast<int>(mult[a].size()) != n)
        throw std::invalid_argument("multiplication table is ragged");
      for (int b = 0; b < n; ++b) {
        int p = mult[a][b];
        if (p < 0 || p >= n) throw std::invalid_argument("product id out of range");
        mult_[static_cast<std::size_t>(a) * n + b] = p;
      }
      if (star_[a] < 0 || star_[a] >= n)
        throw std::invalid_argument("star id out of range");
    }
    if (zero_ && (*zero_ < 0 || *zero_ >= n))
      throw std::invalid_argument("zero id out of range");
  }

  int size() const { return n_; }
  int mul(int a, int b) const { return mult_[static_cast<std::size_t>(a) * n_ + b]; }
  int star(int a) const { return star_[a]; }
  std::optional<int> zero() const { return zero_; }

  int mul3(int a, int b, int c) const { return mul(mul(a, b), c); }

  // a b* (the compatibility product)
  int mul_star(int a, int b) const { return mul(a, star(b)); }

private:
  int n_;
  std::vector<int> mult_;
  std::vector<int> star_;
  std::optional<int> zero_;
};

// A Weyl pair: a *-semigroup together with a distinguished subset E.
struct WeylPair {
  StarSemigroup s;
  ElementSet e;
  std::string name;
};

enum class SubsetKind {
  StarSquares,       // |T|^2 = { t* t : t in T }
  SelfAdjoint,       // { t in T : t* = t }
  PartialIsometries, // { t in T : t = t t* t }
  StarNormalisers,   // { a in S : a* T a  and  a T a*  both inside T }
  DotNormalisers,    // { a in S : aT = Ta as sets }
  Centralisers       // { a in S : at = ta for all t in T }
};

Report validate_star_semigroup(const StarSemigroup& s);
Report is_weyl_pair(const WeylPair& p);
ElementSet derived_subset(const StarSemigroup& s, const ElementSet& t, SubsetKind kind);
// The partial isometries of S form an inverse semigroup with commuting
// idempotents; checks closure under product and star as well.
Report check_pi_inverse_semigroup(const WeylPair& p);

}  // namespace weyl

#endif
