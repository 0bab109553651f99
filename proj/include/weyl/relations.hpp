#ifndef WEYL_RELATIONS_HPP
#define WEYL_RELATIONS_HPP

#include <vector>

#include "weyl/star_semigroup.hpp"

namespace weyl {

enum class Rel {
  Dominates,      // a < b  iff  a = ab
  Compatible,     // a ~ b  iff  ab* in E
  StarDominates   // a <* b iff  ab* in E and a = ab*b
};

// Memoized relation matrices for one Weyl pair.  row(a) holds the set
// of b with  a rel b.
class RelationCache {
public:
  explicit RelationCache(const WeylPair& p);

  const WeylPair& pair() const { return *p_; }
  int n() const { return p_->s.size(); }

  bool holds(Rel r, int a, int b) const { return row(r, a).contains(b); }
  const ElementSet& row(Rel r, int a) const { return mat(r)[static_cast<std::size_t>(a)]; }
  // column view: set of a with  a rel b
  const ElementSet& col(Rel r, int b) const { return matT(r)[static_cast<std::size_t>(b)]; }

  // T^rel = { a : some t in T has  t rel a }  (closure upward)
  ElementSet up(const ElementSet& t, Rel r) const;
  // { a : some t in T has  a rel t }  (closure downward)
  ElementSet down(const ElementSet& t, Rel r) const;

private:
  const std::vector<ElementSet>& mat(Rel r) const {
    return r == Rel::Dominates ? dom_ : r == Rel::Compatible ? compat_ : sdom_;
  }
  const std::vector<ElementSet>& matT(Rel r) const {
    return r == Rel::Dominates ? domT_ : r == Rel::Compatible ? compatT_ : sdomT_;
  }
  const WeylPair* p_;
  std::vector<ElementSet> dom_, compat_, sdom_;
  std::vector<ElementSet> domT_, compatT_, sdomT_;
};

// Checks the interaction laws between the three relations.  The pair
// must already validate; n is gated (default 64) because several laws
// scan element quadruples.
Report relation_law_suite(const WeylPair& p, int max_n = 64);

}  // namespace weyl

#endif
