#ifndef WEYL_COSETS_HPP
#define WEYL_COSETS_HPP

#include <optional>

#include "weyl/relations.hpp"

namespace weyl {

struct SubsetClass {
  bool atlas = false;
  bool coset = false;        // nonempty and CC*C inside C = C-up
  bool unit_coset = false;
  bool filter = false;
  bool ultrafilter = false;
  bool proper = false;
};

// C D = { cd : c in C, d in D } elementwise.
ElementSet set_product(const StarSemigroup& s, const ElementSet& c, const ElementSet& d);
ElementSet set_star(const StarSemigroup& s, const ElementSet& c);

// C-up under star-domination; throws if C is not an atlas.
ElementSet coset_closure(const RelationCache& rc, const ElementSet& c);

SubsetClass classify_subset(const RelationCache& rc, const ElementSet& c);

// All filters (including the improper one when S itself is a filter),
// by principal generation; sorted canonically.
std::vector<ElementSet> enumerate_filters(const RelationCache& rc);
std::vector<ElementSet> enumerate_ultrafilters(const RelationCache& rc);

// All cosets: exhaustive 2^n scan for n <= exhaustive_cap, otherwise
// generated from filters by products, involutions and ranges.
struct CosetFamily {
  std::vector<ElementSet> cosets;
  bool exhaustive = false;
};
CosetFamily enumerate_cosets(const RelationCache& rc, int exhaustive_cap = 16);

// (B C)-up when sources match, nullopt otherwise; throws if either
// input is not a coset.  Verifies the product equals (B c)-up for
// every c in C.
std::optional<ElementSet> coset_product(const RelationCache& rc, const ElementSet& b,
                                        const ElementSet& c);

// (C C*)-up, the range unit of C.
ElementSet range_of(const RelationCache& rc, const ElementSet& c);

// The five equivalent characterisations of unit cosets, evaluated
// independently; all must agree on cosets.
struct UnitCosetViews {
  bool unit_coset;        // C = (C C*)-up and C is a coset
  bool closed_form;       // C C* inside C = C-up and C a coset
  bool star_subsemigroup; // C a coset, *-subsemigroup with C = C-up
  bool has_star_square;
  bool has_e_element;
};
UnitCosetViews unit_coset_equivalences(const RelationCache& rc, const ElementSet& c);

// Groupoid laws of the coset product over the given carrier.
Report coset_groupoid_laws(const RelationCache& rc, const std::vector<ElementSet>& carrier);

}  // namespace weyl

#endif
