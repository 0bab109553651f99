#ifndef WEYL_BUNDLE_HPP
#define WEYL_BUNDLE_HPP

#include "weyl/topology.hpp"

namespace weyl {

// Uniformity on a finite point set, given by a base of entourages;
// upward closure is implicit since the checked conditions are
// monotone in the entourage.
struct FiniteUniformity {
  int m = 0;
  std::vector<std::vector<ElementSet>> base;  // per entourage: row x -> {y : x R y}
};

// Symmetry, reflexivity, divisibility (some Q with Q.Q inside R) and
// the filter-base property (pairwise lower bounds in the base).
Report validate_uniformity(const FiniteUniformity& u);

// A uniform space X acted on by S together with an E-equivariant map
// psi used to compare points along an ultrafilter.
struct ActionSystem {
  WeylPair pair;
  int x = 0;
  std::vector<std::vector<int>> act;  // act[s][p]
  std::vector<int> psi;               // psi[p]
  FiniteUniformity uniformity;
  std::string name;
};

// Associativity of the action, E-equivariance of psi, uniform
// continuity (each entourage R admits Q with S.Q inside R).
Report validate_action_system(const ActionSystem& sys);

// x and y are R-close along U: some u in U has psi(u* x) R psi(u* y).
bool rel_RU(const ActionSystem& sys, const ElementSet& u, int r, int x, int y);

// Blocks of the relation "R-close along U for every base entourage";
// reflexivity, symmetry and transitivity are verified into rep.
std::vector<ElementSet> equivalence_classes(const ActionSystem& sys, const ElementSet& u,
                                            Report* rep = nullptr);

struct BundlePoint {
  int u;           // ultrafilter index
  ElementSet cls;  // its equivalence class of X
};

struct BundleSpace {
  std::vector<ElementSet> ultrafilters;
  std::vector<BundlePoint> points;
  // one neighbourhood set per (x, s, r): { (U, cls) : s in U and some
  // y in cls is r-close to x along U }
  std::vector<ElementSet> nbhds;
  FiniteTopology top;       // on bundle points, generated by nbhds
  FiniteTopology base_top;  // on ultrafilters, generated by the sets U_s
};

BundleSpace bundle_space(const ActionSystem& sys);

// The neighbourhood sets form a base at each point: any two members
// through a point contain a third one through it.
Report neighborhood_base_check(const BundleSpace& w);

// The projection (U, cls) -> U is continuous and open, and maps each
// neighbourhood set for (x, s, r) exactly onto U_s.
Report projection_report(const ActionSystem& sys, const BundleSpace& w);

// U -> (U, class of x along U) is continuous.
bool section_continuity(const ActionSystem& sys, const BundleSpace& w, int x);

// Pairwise separation of bundle points by disjoint open sets.
Report bundle_hausdorff_check(const BundleSpace& w);

std::vector<std::string> action_system_names();
ActionSystem action_system_by_name(const std::string& name);

}  // namespace weyl

#endif
