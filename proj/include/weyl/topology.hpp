#ifndef WEYL_TOPOLOGY_HPP
#define WEYL_TOPOLOGY_HPP

#include "weyl/cosets.hpp"

namespace weyl {

// Extensional finite topology on points 0..m-1: the full list of open
// sets, canonically sorted.
struct FiniteTopology {
  std::size_t m = 0;
  std::vector<ElementSet> opens;

  bool is_open(const ElementSet& o) const;
  // smallest open set containing the point
  ElementSet min_nbhd(int x) const;
};

FiniteTopology topology_from_subbasis(std::size_t m, const std::vector<ElementSet>& subbasis);

// every open cover of n admits a finite subcover of o; in a finite
// space this reduces to o lying inside the union of minimal
// neighbourhoods of points of n.  Both sets must be open.
bool compactly_contained(const FiniteTopology& t, const ElementSet& o, const ElementSet& n);

enum class Carrier { Ultrafilters, Filters, Cosets };

// Topological groupoid on a coset carrier with the subbasis C_a.
struct TopGroupoid {
  std::vector<ElementSet> points;      // the carrier cosets
  std::vector<int> star;               // involution on point indices
  std::vector<std::vector<int>> prod;  // -1 when undefined
  std::vector<int> source, range;      // unit point indices
  std::vector<bool> unit;
  std::vector<ElementSet> subbasis;    // per semigroup element a: {i : a in points[i]}
  FiniteTopology top;
  bool exhaustive = true;
};

TopGroupoid weyl_groupoid(const RelationCache& rc, Carrier carrier, int exhaustive_cap = 16);

// Continuity of product and involution, open units, open source map,
// and the equivalence of the last two given the first two.
Report etale_report(const TopGroupoid& g);

// Pairwise separation of unit points in the subspace topology.
Report hausdorff_units_check(const TopGroupoid& g);

// Subbasis sets are bisections and C_ab = C_a C_b pointwise.  Needs
// the carrier to be exhaustive or an ideal closed under the products
// used; reports witnesses otherwise.
Report bisection_product_check(const RelationCache& rc, const TopGroupoid& g);

// For the ultrafilter carrier, the subbasis is already a basis.
Report subbasis_is_basis_check(const TopGroupoid& g);

// Abstract finite groupoid isomorphism search (product, involution,
// units); returns a witness bijection if one exists.
struct GroupoidTable {
  int m = 0;
  std::vector<int> star;
  std::vector<std::vector<int>> prod;  // -1 undefined
};
GroupoidTable table_of(const TopGroupoid& g);
std::optional<std::vector<int>> groupoid_isomorphism(const GroupoidTable& a,
                                                     const GroupoidTable& b);

}  // namespace weyl

#endif
