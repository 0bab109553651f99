#ifndef WEYL_MODELS_HPP
#define WEYL_MODELS_HPP

#include "weyl/starring.hpp"

namespace weyl {

// Finite groupoid given by arrow tables; products partial.
struct FiniteGroupoid {
  int m = 0;
  std::vector<int> inv;
  std::vector<std::vector<int>> prod;  // -1 undefined
  std::vector<int> source, range;      // arrow ids of unit arrows
  std::vector<bool> unit;
};

Report validate_groupoid(const FiniteGroupoid& g);
FiniteGroupoid pair_groupoid(int k);
FiniteGroupoid group_groupoid(const StarSemigroup& grp);
FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b);

// Groups with star = inverse.
StarSemigroup cyclic_group(int n);
StarSemigroup symmetric_group_s3();

// Example family: S a group, E a normal subgroup.
WeylPair from_group_pair(const StarSemigroup& g, const ElementSet& normal, std::string name);

// Symmetric inverse monoid on n points (n <= 4), E = idempotents.
WeylPair symmetric_inverse_monoid(int n);

// The sign semigroup of a finite groupoid: {-1,+1}-valued functions on
// bisections plus an absorbing zero, E = those supported on units.
struct SignModel {
  WeylPair pair;
  FiniteGroupoid groupoid;
  // per element: sign of each arrow (0 when absent)
  std::vector<std::vector<int>> signs;
};
SignModel sign_semigroup(const FiniteGroupoid& g, std::string name);

// Sign model over the pair groupoid on k points, embedded as signed
// 0/1 matrices; all Assumption flags certified.
EmbeddedModel embedded_sign_model(int k);

// Group pair embedded by the regular representation; unit ball
// certified, lattice not hereditary.
EmbeddedModel embedded_group_pair(const StarSemigroup& g, const ElementSet& normal,
                                  std::string name);

// Commutative instance with star = identity used for normaliser
// computations: pointwise products on {-1,0,1}^2, E the diagonal.
struct CommutativePairExample {
  StarSemigroup s;
  ElementSet e;
  ElementSet expected_star_normaliser;
};
CommutativePairExample commutative_square_example();

// Registry of bundled models by name, for the CLI and the test suites.
std::vector<std::string> model_names();
WeylPair model_by_name(const std::string& name);

}  // namespace weyl

#endif
