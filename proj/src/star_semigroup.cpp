#include "weyl/star_semigroup.hpp"

namespace weyl {

Report validate_star_semigroup(const StarSemigroup& s) {
  Report r;
  const int n = s.size();
  for (int a = 0; a < n && r.violations.size() < 32; ++a)
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c)
        if (s.mul(s.mul(a, b), c) != s.mul(a, s.mul(b, c))) {
          r.fail("associativity", {a, b, c});
          break;
        }
      if (s.star(s.mul(a, b)) != s.mul(s.star(b), s.star(a)))
        r.fail("star antihomomorphism", {a, b});
    }
  for (int a = 0; a < n; ++a)
    if (s.star(s.star(a)) != a) r.fail("star involution", {a});
  if (s.zero()) {
    int z = *s.zero();
    for (int a = 0; a < n; ++a)
      if (s.mul(z, a) != z || s.mul(a, z) != z) r.fail("zero absorbing", {a});
    if (s.star(z) != z) r.fail("zero self-adjoint", {z});
  }
  return r;
}

Report is_weyl_pair(const WeylPair& p) {
  Report r = validate_star_semigroup(p.s);
  const StarSemigroup& s = p.s;
  const int n = s.size();
  if (p.e.universe() != static_cast<std::size_t>(n)) {
    r.fail("E universe mismatch", {});
    return r;
  }
  if (p.e.empty()) r.fail("E nonempty", {});
  for (int e = 0; e < n; ++e) {
    if (!p.e.contains(e)) continue;
    if (!p.e.contains(s.star(e))) r.fail("E closed under star", {e});
    for (int f = 0; f < n; ++f)
      if (p.e.contains(f) && !p.e.contains(s.mul(e, f)))
        r.fail("E closed under product", {e, f});
  }
  for (int a = 0; a < n; ++a) {
    int p2 = s.mul(s.star(a), a);
    if (!p.e.contains(p2)) r.fail("star squares in E", {a});
    for (int e = 0; e < n; ++e) {
      if (!p.e.contains(e)) continue;
      if (!p.e.contains(s.mul3(s.star(a), e, a)))
        r.fail("E star-normal", {a, e});
      if (s.mul(p2, e) != s.mul(e, p2))
        r.fail("star squares central in E", {a, e});
    }
  }
  return r;
}

ElementSet derived_subset(const StarSemigroup& s, const ElementSet& t, SubsetKind kind) {
  const int n = s.size();
  ElementSet r(static_cast<std::size_t>(n));
  switch (kind) {
    case SubsetKind::StarSquares:
      for (int a : t.elements()) r.add(s.mul(s.star(a), a));
      break;
    case SubsetKind::SelfAdjoint:
      for (int a : t.elements())
        if (s.star(a) == a) r.add(a);
      break;
    case SubsetKind::PartialIsometries:
      for (int a : t.elements())
        if (s.mul3(a, s.star(a), a) == a) r.add(a);
      break;
    case SubsetKind::StarNormalisers:
      for (int a = 0; a < n; ++a) {
        bool ok = true;
        for (int x : t.elements())
          if (!t.contains(s.mul3(s.star(a), x, a)) || !t.contains(s.mul3(a, x, s.star(a)))) {
            ok = false;
            break;
          }
        if (ok) r.add(a);
      }
      break;
    case SubsetKind::DotNormalisers:
      for (int a = 0; a < n; ++a) {
        ElementSet left(static_cast<std::size_t>(n)), right(static_cast<std::size_t>(n));
        for (int x : t.elements()) {
          left.add(s.mul(a, x));
          right.add(s.mul(x, a));
        }
        if (left == right) r.add(a);
      }
      break;
    case SubsetKind::Centralisers:
      for (int a = 0; a < n; ++a) {
        bool ok = true;
        for (int x : t.elements())
          if (s.mul(a, x) != s.mul(x, a)) {
            ok = false;
            break;
          }
        if (ok) r.add(a);
      }
      break;
  }
  return r;
}

Report check_pi_inverse_semigroup(const WeylPair& p) {
  Report r;
  const StarSemigroup& s = p.s;
  ElementSet pi = derived_subset(s, ElementSet::full(static_cast<std::size_t>(s.size())),
                                 SubsetKind::PartialIsometries);
  std::vector<int> els = pi.elements();
  for (int a : els) {
    if (!pi.contains(s.star(a))) r.fail("pi closed under star", {a});
    for (int b : els)
      if (!pi.contains(s.mul(a, b))) r.fail("pi closed under product", {a, b});
  }
  std::vector<int> idem;
  for (int a : els)
    if (s.mul(a, a) == a) idem.push_back(a);
  for (int a : idem)
    for (int b : idem)
      if (s.mul(a, b) != s.mul(b, a)) r.fail("pi idempotents commute", {a, b});
  // inverse semigroup: a* is the unique generalized inverse of a
  for (int a : els)
    for (int b : els)
      if (s.mul3(a, b, a) == a && s.mul3(b, a, b) == b &&
          s.mul3(a, s.star(a), a) == a && b != s.star(a)) {
        // uniqueness holds when idempotents commute; report if broken
        if (s.mul(a, b) != s.mul(a, s.star(a)) || s.mul(b, a) != s.mul(s.star(a), a))
          continue;
        r.fail("pi inverse unique", {a, b});
      }
  return r;
}

}  // namespace weyl
