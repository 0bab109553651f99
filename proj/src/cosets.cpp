#include "weyl/cosets.hpp"

#include <algorithm>

namespace weyl {

ElementSet set_product(const StarSemigroup& s, const ElementSet& c, const ElementSet& d) {
  ElementSet r(static_cast<std::size_t>(s.size()));
  for (int a : c.elements())
    for (int b : d.elements()) r.add(s.mul(a, b));
  return r;
}

ElementSet set_star(const StarSemigroup& s, const ElementSet& c) {
  ElementSet r(static_cast<std::size_t>(s.size()));
  for (int a : c.elements()) r.add(s.star(a));
  return r;
}

namespace {

bool is_atlas(const RelationCache& rc, const ElementSet& c, ElementSet* up_out = nullptr) {
  const StarSemigroup& s = rc.pair().s;
  ElementSet up = rc.up(c, Rel::StarDominates);
  if (up_out) *up_out = up;
  if (!c.subset_of(up)) return false;
  ElementSet ccc = set_product(s, set_product(s, c, set_star(s, c)), c);
  return ccc.subset_of(up);
}

bool is_coset(const RelationCache& rc, const ElementSet& c) {
  if (c.empty()) return false;
  ElementSet up = rc.up(c, Rel::StarDominates);
  if (up != c) return false;
  const StarSemigroup& s = rc.pair().s;
  ElementSet ccc = set_product(s, set_product(s, c, set_star(s, c)), c);
  return ccc.subset_of(c);
}

bool is_filter(const RelationCache& rc, const ElementSet& c) {
  if (c.empty()) return false;
  // up-set
  if (!rc.up(c, Rel::StarDominates).subset_of(c)) return false;
  // down-directed, which also forces every element to sit above one
  std::vector<int> els = c.elements();
  for (int a : els)
    for (int b : els) {
      bool found = false;
      for (int x : els)
        if (rc.holds(Rel::StarDominates, x, a) && rc.holds(Rel::StarDominates, x, b)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

}  // namespace

ElementSet coset_closure(const RelationCache& rc, const ElementSet& c) {
  ElementSet up(0);
  if (!is_atlas(rc, c, &up)) throw std::invalid_argument("coset_closure: input is not an atlas");
  return up;
}

ElementSet range_of(const RelationCache& rc, const ElementSet& c) {
  const StarSemigroup& s = rc.pair().s;
  return rc.up(set_product(s, c, set_star(s, c)), Rel::StarDominates);
}

SubsetClass classify_subset(const RelationCache& rc, const ElementSet& c) {
  SubsetClass k;
  k.atlas = is_atlas(rc, c);
  k.coset = is_coset(rc, c);
  k.proper = c != ElementSet::full(c.universe());
  if (k.coset) k.unit_coset = c == range_of(rc, c);
  k.filter = is_filter(rc, c);
  if (k.filter && k.proper) {
    k.ultrafilter = true;
    for (const ElementSet& f : enumerate_filters(rc))
      if (c != f && c.subset_of(f) && f != ElementSet::full(c.universe())) {
        k.ultrafilter = false;
        break;
      }
  }
  return k;
}

std::vector<ElementSet> enumerate_filters(const RelationCache& rc) {
  // every finite filter is the up-set of a self-star-dominating
  // generator, so principal generation is exhaustive
  const int n = rc.n();
  std::vector<ElementSet> out;
  for (int c = 0; c < n; ++c) {
    if (!rc.holds(Rel::StarDominates, c, c)) continue;
    ElementSet f = rc.row(Rel::StarDominates, c);
    if (is_filter(rc, f)) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ElementSet> enumerate_ultrafilters(const RelationCache& rc) {
  std::vector<ElementSet> fs = enumerate_filters(rc);
  ElementSet all = ElementSet::full(static_cast<std::size_t>(rc.n()));
  std::vector<ElementSet> out;
  for (const ElementSet& f : fs) {
    if (f == all) continue;
    bool maximal = true;
    for (const ElementSet& g : fs)
      if (g != f && g != all && f.subset_of(g)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(f);
  }
  return out;
}

CosetFamily enumerate_cosets(const RelationCache& rc, int exhaustive_cap) {
  const int n = rc.n();
  CosetFamily fam;
  if (n <= exhaustive_cap) {
    fam.exhaustive = true;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      ElementSet c(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1) c.add(i);
      if (is_coset(rc, c)) fam.cosets.push_back(c);
    }
    std::sort(fam.cosets.begin(), fam.cosets.end());
    return fam;
  }
  // closure of the filters under involution, range and product
  const StarSemigroup& s = rc.pair().s;
  std::vector<ElementSet> work = enumerate_filters(rc);
  std::sort(work.begin(), work.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<ElementSet> found;
    for (const ElementSet& c : work) {
      found.push_back(rc.up(set_star(s, c), Rel::StarDominates));
      found.push_back(range_of(rc, c));
      for (const ElementSet& d : work) {
        auto p = coset_product(rc, c, d);
        if (p) found.push_back(*p);
      }
    }
    for (const ElementSet& f : found)
      if (!std::binary_search(work.begin(), work.end(), f)) {
        work.push_back(f);
        std::sort(work.begin(), work.end());
        grew = true;
      }
  }
  fam.cosets = work;
  return fam;
}

std::optional<ElementSet> coset_product(const RelationCache& rc, const ElementSet& b,
                                        const ElementSet& c) {
  if (!is_coset(rc, b) || !is_coset(rc, c))
    throw std::invalid_argument("coset_product: inputs must be cosets");
  const StarSemigroup& s = rc.pair().s;
  ElementSet bsrc = rc.up(set_product(s, set_star(s, b), b), Rel::StarDominates);
  ElementSet crange = range_of(rc, c);
  if (bsrc != crange) return std::nullopt;
  ElementSet prod = rc.up(set_product(s, b, c), Rel::StarDominates);
  // the product must agree with (B c)-up for every single c
  for (int x : c.elements()) {
    ElementSet single = rc.up(set_product(s, b, ElementSet::single(c.universe(), x)),
                              Rel::StarDominates);
    if (single != prod)
      throw std::logic_error("coset_product: single-element closure mismatch");
  }
  return prod;
}

UnitCosetViews unit_coset_equivalences(const RelationCache& rc, const ElementSet& c) {
  const StarSemigroup& s = rc.pair().s;
  UnitCosetViews v{};
  bool coset = is_coset(rc, c);
  ElementSet up = rc.up(c, Rel::StarDominates);
  v.unit_coset = coset && c == range_of(rc, c);
  v.closed_form = coset && set_product(s, c, set_star(s, c)).subset_of(c) && up == c;
  v.star_subsemigroup =
      coset && set_product(s, c, c).subset_of(c) && set_star(s, c) == c && up == c;
  v.has_star_square = false;
  v.has_e_element = false;
  if (coset) {
    for (int a = 0; a < s.size(); ++a)
      if (c.contains(s.mul(s.star(a), a))) {
        v.has_star_square = true;
        break;
      }
    for (int e : rc.pair().e.elements())
      if (c.contains(e)) {
        v.has_e_element = true;
        break;
      }
  }
  return v;
}

Report coset_groupoid_laws(const RelationCache& rc, const std::vector<ElementSet>& carrier) {
  Report r;
  const StarSemigroup& s = rc.pair().s;
  auto idx = [&](const ElementSet& c) -> int {
    for (std::size_t i = 0; i < carrier.size(); ++i)
      if (carrier[i] == c) return static_cast<int>(i);
    return -1;
  };
  const int m = static_cast<int>(carrier.size());
  std::vector<std::vector<int>> prod(static_cast<std::size_t>(m),
                                     std::vector<int>(static_cast<std::size_t>(m), -1));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto p = coset_product(rc, carrier[static_cast<std::size_t>(i)],
                             carrier[static_cast<std::size_t>(j)]);
      if (p) {
        int k = idx(*p);
        if (k < 0) {
          r.fail("carrier closed under products", {i, j});
          continue;
        }
        prod[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = k;
      }
    }
  std::vector<int> star(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    int k = idx(rc.up(set_star(s, carrier[static_cast<std::size_t>(i)]), Rel::StarDominates));
    if (k < 0) {
      r.fail("carrier closed under involution", {i});
      return r;
    }
    star[static_cast<std::size_t>(i)] = k;
  }
  auto pr = [&](int i, int j) { return prod[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  for (int i = 0; i < m; ++i) {
    // C* C is always defined and a unit
    int u = pr(star[static_cast<std::size_t>(i)], i);
    if (u < 0) {
      r.fail("C*C defined", {i});
      continue;
    }
    auto views = unit_coset_equivalences(rc, carrier[static_cast<std::size_t>(u)]);
    if (!views.unit_coset) r.fail("C*C is a unit coset", {i});
    // unit laws
    if (pr(i, u) != i) r.fail("right unit law", {i});
    int v = pr(i, star[static_cast<std::size_t>(i)]);
    if (v < 0 || pr(v, i) != i) r.fail("left unit law", {i});
    if (star[static_cast<std::size_t>(star[static_cast<std::size_t>(i)])] != i)
      r.fail("involution involutive", {i});
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int ij = pr(i, j);
      if (ij >= 0 &&
          pr(star[static_cast<std::size_t>(j)], star[static_cast<std::size_t>(i)]) !=
              star[static_cast<std::size_t>(ij)])
        r.fail("involution antihomomorphism", {i, j});
      for (int k = 0; k < m; ++k) {
        int jk = pr(j, k);
        int left = ij >= 0 ? pr(ij, k) : -1;
        int right = jk >= 0 ? pr(i, jk) : -1;
        if (ij >= 0 && jk >= 0) {
          if (left != right || left < 0) r.fail("associativity", {i, j, k});
        } else if (left >= 0 && right >= 0 && left != right) {
          r.fail("associativity", {i, j, k});
        }
      }
    }
  return r;
}

}  // namespace weyl
