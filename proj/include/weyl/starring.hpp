#ifndef WEYL_STARRING_HPP
#define WEYL_STARRING_HPP

#include <map>
#include <optional>

#include "weyl/relations.hpp"
#include "weyl/rmatrix.hpp"
#include "weyl/star_semigroup.hpp"

namespace weyl {

// Value of the unital reduction [a] = inf{ m/n : m 1 - n a is a sum of
// *-squares }.  `exact` records whether the value is the true infimum
// or an upper bracket within the requested tolerance.
struct ExtRat {
  bool infinite = false;
  Rat value = 0;
  bool exact = true;

  bool operator==(const ExtRat& o) const {
    return infinite == o.infinite && (infinite || value == o.value);
  }
};

// Decide [a] <= q exactly (q >= 0): q 1 - a is a sum of *-squares.
bool ceil_leq(const RMatrix& a, const Rat& q);

// Unital reduction.  Exact mode isolates the top eigenvalue with Sturm
// sequences and certifies rational values; otherwise returns a bracket
// of width <= eps, cross-checked against the PSD oracle at both ends.
ExtRat ceil_norm(const RMatrix& a, bool exact_mode = true, const Rat& eps = Rat(1, 1000000));

// [aa*] v [a*a], the square of the quasi-norm.
ExtRat quasi_norm_sq(const RMatrix& a, bool exact_mode = true, const Rat& eps = Rat(1, 1000000));

// a <= b in the ring order: [a - b] = 0, equivalently b - a symmetric PSD.
bool ring_leq(const RMatrix& a, const RMatrix& b);
// a and b orthogonal: a b* = 0.
bool ring_orthogonal(const RMatrix& a, const RMatrix& b);

// Exact verification of [aa*] = [a*a] and [(aa*)^2] = [aa*]^2 via
// characteristic-polynomial identities; together with PSD checks this
// certifies the norm C*-identity for the matrix backend.
Report norm_csq_identity_check(const RMatrix& a);

enum class LatticeKind { DiagInt, DiagRat };

// Commutative lattice *-subring of the matrix backend: diagonal
// matrices with integer (or rational) entries, ordered entrywise.
struct LatticeSubring {
  int d;
  LatticeKind kind;

  bool contains(const RMatrix& m) const;
  RMatrix join(const RMatrix& a, const RMatrix& b) const;
  RMatrix meet(const RMatrix& a, const RMatrix& b) const;
  RMatrix pos(const RMatrix& a) const { return join(a, RMatrix(d)); }
  RMatrix neg(const RMatrix& a) const { return join(a.scaled(-1), RMatrix(d)); }
};

// A Weyl pair represented faithfully by rational matrices.
struct EmbeddedModel {
  WeylPair pair;
  int d = 0;
  std::vector<RMatrix> rep;
  std::map<RMatrix, int> lookup;
  LatticeSubring lattice{0, LatticeKind::DiagInt};
  bool unit_ball_certified = false;       // S inside the unit ball
  bool hereditary_certified = false;      // lattice is S-hereditary
  bool e_unit_ball_certified = false;     // E = unit ball of ring it generates

  int elem(const RMatrix& m) const {
    auto it = lookup.find(m);
    return it == lookup.end() ? -1 : it->second;
  }
  const RMatrix& mat(int a) const { return rep[static_cast<std::size_t>(a)]; }
};

// Checks the embedding is a faithful *-homomorphism and certifies the
// unit-ball, hereditary and E-unit-ball flags it claims.
Report validate_embedding(const EmbeddedModel& m);

// S-hereditariness of the lattice: |S|^2 inside L and every positive
// lattice element below a *-square lies in (the image of) S.
Report hereditary_check(const EmbeddedModel& m);

// r = (ab)^2 with a = prod p_k (k < m), b = prod (a^2 - a q_k a)^2
// (k >= m); the trapped projection of Prop-style interpolation over
// *-squares.  Requires p_k, q_k *-squares of the model with p_k dom q_k.
RMatrix trap(const EmbeddedModel& m, const std::vector<RMatrix>& p,
             const std::vector<RMatrix>& q, int split);

// Lift of trap along d: c = d r with r built from the *-squares of the
// given elements; returns the element id of c.
int trap_lift(const EmbeddedModel& m, const std::vector<int>& a,
              const std::vector<int>& b, int d, int split);

// r = (2p - q)_+, s = 2p ^ q, with the doubling fallback making r
// nonzero when p is.
struct Interpolant {
  RMatrix r, s;
};
Interpolant interpolate(const EmbeddedModel& m, const RMatrix& p, const RMatrix& q);

// c = b r^2, d = b s^2 from interpolate(a*a, b*b); element ids.
struct InterpolantS {
  int c, d;
};
InterpolantS interpolate_S(const EmbeddedModel& m, int a, int b);

// t = c (a*a v b*b)^4; element id.
int join_bound(const EmbeddedModel& m, int a, int b, int c);

// d = c e with e = p + q - pq; element id (needs the E-unit-ball flag).
int additive_bound(const EmbeddedModel& m, int a, int b, int c);

// Sampled and exhaustive checks of the order, reduction and norm laws.
Report ring_law_suite(std::uint64_t seed, int samples, int workers = 1);

// Exhaustive *-ring law checks over all elements of an embedded model.
Report model_law_suite(const EmbeddedModel& m);

// Exhaustive order, trap, interpolation and covering checks over an
// embedded model with zero; includes the subset-quantified covering
// chain, so the element count is capped at 20.
Report model_order_suite(const EmbeddedModel& m);

}  // namespace weyl

#endif
