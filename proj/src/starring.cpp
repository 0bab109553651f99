#include "weyl/starring.hpp"

#include <algorithm>
#include <random>
#include <thread>

#include "weyl/topology.hpp"

namespace weyl {

bool ceil_leq(const RMatrix& a, const Rat& q) {
  if (q < 0 || !a.is_symmetric()) return false;
  RMatrix m = RMatrix::identity(a.dim()).scaled(q) - a;
  return psd_test(m);
}

ExtRat ceil_norm(const RMatrix& a, bool exact_mode, const Rat& eps) {
  ExtRat r;
  if (!a.is_symmetric()) {
    r.infinite = true;
    return r;
  }
  std::vector<Rat> p = char_poly(a);
  if (sturm_roots_above(p, Rat(0)) == 0) {
    r.value = 0;
    r.exact = true;
    return r;
  }
  if (exact_mode) {
    Rat root;
    if (rational_max_root(p, root)) {
      r.value = root > 0 ? root : Rat(0);
      r.exact = true;
      if (!ceil_leq(a, r.value) || (r.value > 0 && ceil_leq(a, r.value - Rat(1, 1000000000))))
        throw std::logic_error("ceil_norm: PSD oracle disagrees with exact root");
      return r;
    }
  }
  auto br = sturm_max_root_bracket(p, eps);
  r.value = br.second;
  r.exact = false;
  if (!ceil_leq(a, br.second) || ceil_leq(a, br.first - eps))
    throw std::logic_error("ceil_norm: PSD oracle disagrees with isolating bracket");
  return r;
}

ExtRat quasi_norm_sq(const RMatrix& a, bool exact_mode, const Rat& eps) {
  ExtRat l = ceil_norm(a * a.transpose(), exact_mode, eps);
  ExtRat r = ceil_norm(a.transpose() * a, exact_mode, eps);
  if (l.infinite || r.infinite) return ExtRat{true, 0, true};
  if (l.value >= r.value) return l;
  return r;
}

bool ring_leq(const RMatrix& a, const RMatrix& b) { return psd_test(b - a); }

bool ring_orthogonal(const RMatrix& a, const RMatrix& b) {
  return (a * b.transpose()).is_zero();
}

namespace {

std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> r(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

}  // namespace

Report norm_csq_identity_check(const RMatrix& a) {
  Report rep;
  RMatrix m = a * a.transpose();
  RMatrix n = a.transpose() * a;
  if (char_poly(m) != char_poly(n)) rep.fail("char polys of aa* and a*a agree", {});
  if (!psd_test(m)) rep.fail("aa* is PSD", {});
  // det(x^2 I - m^2) = det(x I - m) * det(x I + m)
  std::vector<Rat> p = char_poly(m);
  std::vector<Rat> q = char_poly(m * m);
  std::vector<Rat> q_of_sq(2 * q.size() - 1, Rat(0));
  for (std::size_t i = 0; i < q.size(); ++i) q_of_sq[2 * i] = q[i];
  std::vector<Rat> p_neg = p;
  for (std::size_t i = 1; i < p_neg.size(); ++i)
    if (i % 2 == 1) p_neg[i] = -p_neg[i];
  std::vector<Rat> prod = poly_mul(p, p_neg);
  if (a.dim() % 2 == 1)
    for (auto& c : prod) c = -c;
  if (prod != q_of_sq) rep.fail("eigenvalues of m^2 are squares", {});
  return rep;
}

bool LatticeSubring::contains(const RMatrix& m) const {
  if (m.dim() != d || !m.is_diagonal()) return false;
  if (kind == LatticeKind::DiagInt)
    for (int i = 0; i < d; ++i)
      if (denominator(m.at(i, i)) != 1) return false;
  return true;
}

RMatrix LatticeSubring::join(const RMatrix& a, const RMatrix& b) const {
  if (!contains(a) || !contains(b)) throw std::invalid_argument("join: not lattice members");
  RMatrix r(d);
  for (int i = 0; i < d; ++i) r.at(i, i) = std::max(a.at(i, i), b.at(i, i));
  return r;
}

RMatrix LatticeSubring::meet(const RMatrix& a, const RMatrix& b) const {
  if (!contains(a) || !contains(b)) throw std::invalid_argument("meet: not lattice members");
  RMatrix r(d);
  for (int i = 0; i < d; ++i) r.at(i, i) = std::min(a.at(i, i), b.at(i, i));
  return r;
}

Report validate_embedding(const EmbeddedModel& m) {
  Report rep;
  const StarSemigroup& s = m.pair.s;
  const int n = s.size();
  if (static_cast<int>(m.rep.size()) != n) {
    rep.fail("representation covers all elements", {});
    return rep;
  }
  for (int a = 0; a < n; ++a) {
    if (m.elem(m.mat(a)) != a) rep.fail("embedding faithful", {a});
    if (m.mat(s.star(a)) != m.mat(a).transpose()) rep.fail("star is transpose", {a});
    for (int b = 0; b < n; ++b)
      if (m.mat(s.mul(a, b)) != m.mat(a) * m.mat(b)) rep.fail("multiplicative", {a, b});
  }
  if (s.zero() && !m.mat(*s.zero()).is_zero()) rep.fail("zero maps to zero", {});
  if (m.unit_ball_certified)
    for (int a = 0; a < n; ++a)
      if (!ceil_leq(m.mat(a) * m.mat(a).transpose(), 1) ||
          !ceil_leq(m.mat(a).transpose() * m.mat(a), 1))
        rep.fail("unit ball", {a});
  if (m.hereditary_certified) rep.merge(hereditary_check(m));
  if (m.e_unit_ball_certified) {
    // the ring generated by E is its integer span; its unit ball is
    // the diagonal sign matrices, which must all come from E
    for (int e : m.pair.e.elements())
      if (!m.lattice.contains(m.mat(e))) rep.fail("E inside the diagonal lattice", {e});
    const int d = m.d;
    for (std::uint32_t mask = 0; mask < (1u << d); ++mask)
      for (std::uint32_t sgn = 0; sgn < (1u << d); ++sgn) {
        RMatrix mm(d);
        bool skip = false;
        for (int i = 0; i < d; ++i) {
          if ((mask >> i) & 1)
            mm.at(i, i) = ((sgn >> i) & 1) ? -1 : 1;
          else if ((sgn >> i) & 1)
            skip = true;
        }
        if (skip) continue;
        int x = m.elem(mm);
        if (x < 0 || !m.pair.e.contains(x)) {
          rep.fail("unit ball of generated ring inside E", {});
          return rep;
        }
      }
  }
  return rep;
}

Report hereditary_check(const EmbeddedModel& m) {
  Report rep;
  const StarSemigroup& s = m.pair.s;
  for (int a = 0; a < s.size(); ++a) {
    RMatrix p = m.mat(a).transpose() * m.mat(a);
    if (!m.lattice.contains(p)) {
      rep.fail("star squares inside L", {a});
      continue;
    }
    if (m.lattice.kind == LatticeKind::DiagRat) {
      if (!p.is_zero() && m.elem(p.scaled(Rat(1, 2))) < 0) {
        rep.fail("positive element below a star square escapes S", {a}, "half of it");
        return rep;
      }
      continue;
    }
    // integer diagonals l with 0 <= l <= p entrywise
    std::vector<Int> caps;
    for (int i = 0; i < m.d; ++i) caps.push_back(numerator(p.at(i, i)));
    std::vector<Int> cur(static_cast<std::size_t>(m.d), 0);
    bool done = false;
    while (!done) {
      RMatrix l(m.d);
      for (int i = 0; i < m.d; ++i) l.at(i, i) = cur[static_cast<std::size_t>(i)];
      if (m.elem(l) < 0) rep.fail("positive slice below star square lies in S", {a});
      int pos = 0;
      while (pos < m.d && cur[static_cast<std::size_t>(pos)] == caps[static_cast<std::size_t>(pos)]) {
        cur[static_cast<std::size_t>(pos)] = 0;
        ++pos;
      }
      if (pos == m.d)
        done = true;
      else
        ++cur[static_cast<std::size_t>(pos)];
    }
    if (!rep.ok) return rep;
  }
  return rep;
}

namespace {

bool mat_dominates(const RMatrix& a, const RMatrix& b) { return a * b == a; }

bool is_star_square(const EmbeddedModel& m, const RMatrix& p) {
  int e = m.elem(p);
  if (e < 0) return false;
  const StarSemigroup& s = m.pair.s;
  for (int a = 0; a < s.size(); ++a)
    if (s.mul(s.star(a), a) == e) return true;
  return false;
}

}  // namespace

RMatrix trap(const EmbeddedModel& m, const std::vector<RMatrix>& p,
             const std::vector<RMatrix>& q, int split) {
  if (p.size() != q.size() || split < 1 || split > static_cast<int>(p.size()))
    throw std::invalid_argument("trap: need 1 <= split <= n and matching lists");
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (!is_star_square(m, p[k]) || !is_star_square(m, q[k]))
      throw std::invalid_argument("trap: arguments must be star squares of the model");
    if (!mat_dominates(p[k], q[k])) throw std::invalid_argument("trap: p_k must dominate into q_k");
  }
  RMatrix a = RMatrix::identity(m.d);
  for (int k = 0; k < split; ++k) a = a * p[static_cast<std::size_t>(k)];
  RMatrix b = RMatrix::identity(m.d);
  for (std::size_t k = static_cast<std::size_t>(split); k < q.size(); ++k) {
    RMatrix f = a * a - a * q[k] * a;
    b = b * (f * f);
  }
  RMatrix ab = a * b;
  return ab * ab;
}

int trap_lift(const EmbeddedModel& m, const std::vector<int>& a, const std::vector<int>& b,
              int d, int split) {
  if (a.size() != b.size()) throw std::invalid_argument("trap_lift: list size mismatch");
  RelationCache rc(m.pair);
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!rc.holds(Rel::StarDominates, a[k], b[k]))
      throw std::invalid_argument("trap_lift: a_k must star-dominate into b_k");
    if (!rc.holds(Rel::StarDominates, b[k], d))
      throw std::invalid_argument("trap_lift: b_k must star-dominate into d");
  }
  std::vector<RMatrix> ps, qs;
  for (std::size_t k = 0; k < a.size(); ++k) {
    ps.push_back(m.mat(a[k]).transpose() * m.mat(a[k]));
    qs.push_back(m.mat(b[k]).transpose() * m.mat(b[k]));
  }
  RMatrix r = trap(m, ps, qs, split);
  int c = m.elem(m.mat(d) * r);
  if (c < 0) throw std::logic_error("trap_lift: lifted element escapes S");
  return c;
}

Interpolant interpolate(const EmbeddedModel& m, const RMatrix& p_in, const RMatrix& q) {
  const LatticeSubring& lat = m.lattice;
  if (!lat.contains(p_in) || !lat.contains(q) || !psd_test(p_in) || !psd_test(q))
    throw std::invalid_argument("interpolate: arguments must be positive lattice members");
  if (!mat_dominates(p_in, q)) throw std::invalid_argument("interpolate: p must dominate into q");
  RMatrix p = p_in;
  auto make = [&](const RMatrix& pp) {
    Interpolant out{lat.pos(pp.scaled(2) - q), lat.meet(pp.scaled(2), q)};
    return out;
  };
  Interpolant r = make(p);
  if (r.r.is_zero() && !p.is_zero()) {
    // doubling search: np <= q but 2np not <= q
    Rat n = 1;
    while (ring_leq(p.scaled(2 * n), q)) n *= 2;
    p = p.scaled(n);
    r = make(p);
  }
  return r;
}

InterpolantS interpolate_S(const EmbeddedModel& m, int a, int b) {
  RelationCache rc(m.pair);
  if (!rc.holds(Rel::StarDominates, a, b))
    throw std::invalid_argument("interpolate_S: a must star-dominate into b");
  RMatrix p = m.mat(a).transpose() * m.mat(a);
  RMatrix q = m.mat(b).transpose() * m.mat(b);
  Interpolant in = interpolate(m, p, q);
  RMatrix r2 = in.r * in.r, s2 = in.s * in.s;
  int c = m.elem(m.mat(b) * r2);
  int d = m.elem(m.mat(b) * s2);
  if (c < 0 || d < 0) throw std::logic_error("interpolate_S: image escapes S");
  return InterpolantS{c, d};
}

int join_bound(const EmbeddedModel& m, int a, int b, int c) {
  RelationCache rc(m.pair);
  if (!rc.holds(Rel::StarDominates, a, c) || !rc.holds(Rel::StarDominates, b, c))
    throw std::invalid_argument("join_bound: a and b must star-dominate into c");
  RMatrix p = m.mat(a).transpose() * m.mat(a);
  RMatrix q = m.mat(b).transpose() * m.mat(b);
  RMatrix j = m.lattice.join(p, q);
  RMatrix j2 = j * j;
  int t = m.elem(m.mat(c) * (j2 * j2));
  if (t < 0) throw std::logic_error("join_bound: image escapes S");
  return t;
}

int additive_bound(const EmbeddedModel& m, int a, int b, int c) {
  if (!m.e_unit_ball_certified)
    throw std::invalid_argument("additive_bound: needs the E-unit-ball certificate");
  RelationCache rc(m.pair);
  if (!rc.holds(Rel::StarDominates, a, c) || !rc.holds(Rel::StarDominates, b, c))
    throw std::invalid_argument("additive_bound: a and b must star-dominate into c");
  RMatrix p = m.mat(a).transpose() * m.mat(a);
  RMatrix q = m.mat(b).transpose() * m.mat(b);
  RMatrix e = p + q - p * q;
  int d = m.elem(m.mat(c) * e);
  if (d < 0) throw std::logic_error("additive_bound: image escapes S");
  return d;
}

namespace {

struct Sampler {
  std::mt19937_64 rng;
  explicit Sampler(std::uint64_t seed) : rng(seed) {}
  // entries from the fixed grid {-1, -1/2, 0, 1/2, 1}
  Rat entry() {
    static const Rat grid[5] = {Rat(-1), Rat(-1, 2), Rat(0), Rat(1, 2), Rat(1)};
    return grid[rng() % 5];
  }
  RMatrix matrix(int d) {
    RMatrix m(d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m.at(i, j) = entry();
    return m;
  }
  RMatrix symmetric(int d) {
    RMatrix m(d);
    for (int i = 0; i < d; ++i)
      for (int j = i; j < d; ++j) m.at(i, j) = m.at(j, i) = entry();
    return m;
  }
  RMatrix positive(int d) {
    RMatrix c = matrix(d);
    return c * c.transpose();
  }
  int dim() { return 2 + static_cast<int>(rng() % 2); }
};

Rat ext_val(const ExtRat& e) { return e.infinite ? Rat(-1) : e.value; }

void norm_laws_chunk(std::uint64_t seed, int samples, Report& rep) {
  Sampler sp(seed);
  const Rat eps(1, 1000000);
  for (int it = 0; it < samples; ++it) {
    int d = sp.dim();
    RMatrix a = sp.matrix(d), b = sp.matrix(d);
    RMatrix as = sp.symmetric(d), bs = sp.symmetric(d);
    RMatrix p = sp.positive(d), q = sp.positive(d);

    // reduction laws on symmetric samples
    ExtRat ca = ceil_norm(as, false, eps), cb = ceil_norm(bs, false, eps);
    ExtRat cab = ceil_norm(as + bs, false, eps);
    if (!cab.infinite && ext_val(cab) > ext_val(ca) + ext_val(cb) + 2 * eps)
      rep.fail("reduction subadditive", {it});
    ExtRat c2a = ceil_norm(as.scaled(2), false, eps);
    if (abs(ext_val(c2a) - 2 * ext_val(ca)) > 3 * eps)
      rep.fail("reduction positively homogeneous", {it});

    // quasi-norm laws
    ExtRat na = quasi_norm_sq(a, false, eps), nb = quasi_norm_sq(b, false, eps);
    ExtRat nab = quasi_norm_sq(a * b, false, eps);
    if (ext_val(nab) > ext_val(na) * ext_val(nb) + eps * 8)
      rep.fail("quasi-norm submultiplicative", {it});
    ExtRat nat = quasi_norm_sq(a.transpose(), false, eps);
    if (abs(ext_val(nat) - ext_val(na)) > 2 * eps) rep.fail("quasi-norm star invariant", {it});
    ExtRat nsum = quasi_norm_sq(a + b, false, eps);
    // sqrt(2)-subadditivity, squared: |a+b|^2 <= 2(|a|+|b|)^2
    {
      // compare against (sqrt(na)+sqrt(nb))^2 * 2 <= 2(na + nb + 2 sqrt(na nb))
      // use the coarser bound  |a+b|^2 <= 4 max(na, nb) ... exact bound:
      Rat bound = 2 * (ext_val(na) + ext_val(nb)) +
                  4 * (ext_val(na) > ext_val(nb) ? ext_val(na) : ext_val(nb));
      if (ext_val(nsum) > bound + 8 * eps) rep.fail("quasi-norm subadditive bound", {it});
    }

    // C*-identity certified exactly via characteristic polynomials
    Report id = norm_csq_identity_check(a);
    if (!id.ok) {
      rep.fail("norm C* identity", {it});
      rep.merge(id);
    }

    // order laws
    if (!ring_leq(p, p)) rep.fail("order reflexive", {it});
    if (ring_leq(as, bs) && ring_leq(bs, as) && !(as == bs)) rep.fail("order antisymmetric", {it});
    RMatrix cs = sp.symmetric(d);
    if (ring_leq(as, bs) && ring_leq(bs, cs) && !ring_leq(as, cs))
      rep.fail("order transitive", {it});
    if (ring_leq(as, bs) && !ring_leq(as + cs, bs + cs)) rep.fail("order translation", {it});
    if (ring_leq(as, bs) && !ring_leq(a * as * a.transpose(), a * bs * a.transpose()))
      rep.fail("order conjugation", {it});
    if (!psd_test(p)) rep.fail("star squares positive", {it});
    // a <= b  iff  [a - b] = 0, the two routes agree
    {
      ExtRat diff = ceil_norm(as - bs, true, eps);
      bool route2 = !diff.infinite && diff.exact && diff.value == 0;
      bool route1 = ring_leq(as, bs);
      if (route1 != route2 && diff.exact) rep.fail("order routes agree", {it});
    }
    // orthogonality symmetric under properness
    if (ring_orthogonal(a, b) != ring_orthogonal(b, a))
      rep.fail("orthogonality symmetric", {it});
    // properness: a a* = 0 implies a = 0
    if ((a * a.transpose()).is_zero() && !a.is_zero()) rep.fail("proper", {it});
    // Archimedean at matrix scale: [p] <= m for some natural m
    if (!ceil_leq(p, Rat(4 * d))) rep.fail("archimedean bound", {it});

    // reduction vs conjugation: [a] <= m/n implies n b a b* <= m b b*
    {
      ExtRat cp = ceil_norm(p, false, eps);
      Rat mn = ext_val(cp) + Rat(1, 8);
      if (!ring_leq(b * p.scaled(8) * b.transpose(),
                    b * b.transpose().scaled(8 * numerator(mn) / denominator(mn) + 8)))
        rep.fail("reduction conjugation bound", {it});
      // n a <= m 1 implies [a] <= m/n
      if (ring_leq(as.scaled(2), RMatrix::identity(d).scaled(3)) &&
          ext_val(ceil_norm(as, false, eps)) > Rat(3, 2) + 2 * eps)
        rep.fail("scaled cap bounds reduction", {it});
    }

    // p orthogonal laws: ap + pa = 0 implies ap = 0 for positive p
    if ((a * p + p * a).is_zero() && !(a * p).is_zero())
      rep.fail("anticommuting with positive forces zero", {it});
    if (a * (p * p) == (p * p) * a && !(a * p == p * a))
      rep.fail("commuting with square forces commuting", {it});
  }
}

}  // namespace

Report ring_law_suite(std::uint64_t seed, int samples, int workers) {
  if (workers < 1) workers = 1;
  std::vector<Report> parts(static_cast<std::size_t>(workers));
  // deterministic partition: worker w handles a fixed substream
  std::vector<std::thread> threads;
  int base = samples / workers, extra = samples % workers;
  for (int w = 0; w < workers; ++w) {
    int cnt = base + (w < extra ? 1 : 0);
    threads.emplace_back([&parts, w, seed, cnt] {
      norm_laws_chunk(seed + 1000003ull * static_cast<std::uint64_t>(w), cnt,
                      parts[static_cast<std::size_t>(w)]);
    });
  }
  for (auto& t : threads) t.join();
  Report rep;
  for (const Report& p : parts) rep.merge(p);
  return rep;
}

Report model_law_suite(const EmbeddedModel& m) {
  Report rep = validate_embedding(m);
  if (!rep.ok) return rep;
  const StarSemigroup& s = m.pair.s;
  const int n = s.size();
  RelationCache rc(m.pair);

  // relations agree with their matrix forms
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (rc.holds(Rel::Dominates, a, b) != mat_dominates(m.mat(a), m.mat(b)))
        rep.fail("domination matches matrices", {a, b});
      bool semi_orth = s.zero() && s.mul_star(a, b) == *s.zero();
      if (semi_orth != ring_orthogonal(m.mat(a), m.mat(b)))
        rep.fail("orthogonality matches matrices", {a, b});
    }

  // star squares commute and are positive contractions
  std::vector<int> squares;
  for (int a = 0; a < n; ++a) squares.push_back(s.mul(s.star(a), a));
  std::sort(squares.begin(), squares.end());
  squares.erase(std::unique(squares.begin(), squares.end()), squares.end());
  for (int p : squares) {
    if (!psd_test(m.mat(p))) rep.fail("star square positive", {p});
    if (!ceil_leq(m.mat(p), 1)) rep.fail("star square contractive", {p});
    for (int q : squares)
      if (m.mat(p) * m.mat(q) != m.mat(q) * m.mat(p)) rep.fail("star squares commute", {p, q});
  }
  return rep;
}

namespace {

// enumerate integer diagonal matrices with entries in [-2, 2]
std::vector<RMatrix> small_diagonals(int d) {
  std::vector<RMatrix> out;
  std::vector<int> cur(static_cast<std::size_t>(d), -2);
  bool done = false;
  while (!done) {
    RMatrix m(d);
    for (int i = 0; i < d; ++i) m.at(i, i) = cur[static_cast<std::size_t>(i)];
    out.push_back(m);
    int pos = 0;
    while (pos < d && cur[static_cast<std::size_t>(pos)] == 2) {
      cur[static_cast<std::size_t>(pos)] = -2;
      ++pos;
    }
    if (pos == d)
      done = true;
    else
      ++cur[static_cast<std::size_t>(pos)];
  }
  return out;
}

}  // namespace

Report model_order_suite(const EmbeddedModel& m) {
  Report rep;
  const StarSemigroup& s = m.pair.s;
  const int n = s.size();
  if (!s.zero()) throw std::invalid_argument("model_order_suite: needs an absorbing zero");
  if (n > 20) throw std::invalid_argument("model_order_suite: element count capped at 20");
  const int z = *s.zero();
  RelationCache rc(m.pair);

  auto sdom = [&](int a, int b) { return rc.holds(Rel::StarDominates, a, b); };
  auto dom = [&](int a, int b) { return rc.holds(Rel::Dominates, a, b); };
  auto orth = [&](int a, int b) { return s.mul_star(a, b) == z; };

  // element masks for the set-quantified checks
  using Mask = std::uint64_t;
  const Mask all = n == 64 ? ~Mask(0) : (Mask(1) << n) - 1;
  const Mask zmask = Mask(1) << z;
  std::vector<Mask> dn(static_cast<std::size_t>(n), 0), perp(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      if (sdom(c, a)) dn[static_cast<std::size_t>(a)] |= Mask(1) << c;
      if (orth(c, a)) perp[static_cast<std::size_t>(a)] |= Mask(1) << c;
    }
  auto down_of = [&](Mask t) {
    Mask r = 0;
    for (int a = 0; a < n; ++a)
      if ((t >> a) & 1) r |= dn[static_cast<std::size_t>(a)];
    return r;
  };
  auto perp_of = [&](Mask f) {
    Mask r = all;
    for (int a = 0; a < n; ++a)
      if ((f >> a) & 1) r &= perp[static_cast<std::size_t>(a)];
    return r;
  };

  std::vector<ElementSet> ults = enumerate_ultrafilters(rc);
  std::vector<Mask> umask;
  for (const ElementSet& u : ults) {
    Mask t = 0;
    for (int a : u.elements()) t |= Mask(1) << a;
    umask.push_back(t);
  }
  // covered(x, T): every ultrafilter containing x meets T
  auto covered = [&](int x, Mask t) {
    for (const Mask& u : umask)
      if (((u >> x) & 1) && !(u & t)) return false;
    return true;
  };

  std::vector<int> squares;
  for (int a = 0; a < n; ++a) squares.push_back(s.mul(s.star(a), a));
  std::sort(squares.begin(), squares.end());
  squares.erase(std::unique(squares.begin(), squares.end()), squares.end());

  // finite-join bound through the additive E-combination
  if (m.e_unit_ball_certified)
    for (int c = 0; c < n; ++c)
      for (int a = 0; a < n; ++a) {
        if (!sdom(a, c)) continue;
        for (int b = 0; b < n; ++b) {
          if (!sdom(b, c)) continue;
          int d = additive_bound(m, a, b, c);
          for (int f = 0; f < n; ++f) {
            if ((sdom(f, a) || sdom(f, b)) && !sdom(f, d))
              rep.fail("additive bound absorbs lower bounds", {a, b, c, f});
            if (sdom(a, f) && sdom(b, f) && !sdom(d, f))
              rep.fail("additive bound below upper bounds", {a, b, c, f});
          }
        }
      }

  // lattice commutes elementwise
  for (int e1 : m.pair.e.elements())
    for (int e2 : m.pair.e.elements())
      if (m.mat(e1) * m.mat(e2) != m.mat(e2) * m.mat(e1))
        rep.fail("E commutative in the lattice", {e1, e2});

  // trapped projections: lists of length one and two over *-squares
  {
    std::vector<std::pair<int, int>> dompairs;
    for (int p : squares)
      for (int q : squares)
        if (dom(p, q)) dompairs.emplace_back(p, q);
    auto check_trap = [&](const std::vector<int>& ps, const std::vector<int>& qs, int split) {
      std::vector<RMatrix> pm, qm;
      for (int p : ps) pm.push_back(m.mat(p));
      for (int q : qs) qm.push_back(m.mat(q));
      RMatrix r = trap(m, pm, qm, split);
      int rid = m.elem(r);
      if (rid < 0 || !std::binary_search(squares.begin(), squares.end(), rid)) {
        rep.fail("trap lands in the *-squares", ps);
        return;
      }
      for (int c = 0; c < n; ++c) {
        bool hyp = true;
        for (int k = 0; k < split; ++k)
          hyp = hyp && dom(c, ps[static_cast<std::size_t>(k)]);
        for (std::size_t k = static_cast<std::size_t>(split); k < qs.size(); ++k)
          hyp = hyp && orth(c, qs[k]);
        if (hyp && !(m.mat(c) * r == m.mat(c))) rep.fail("trap traps", {c});
      }
      for (int k = 0; k < split; ++k)
        if (!(r * m.mat(qs[static_cast<std::size_t>(k)]) == r))
          rep.fail("trap below the dominators", {qs[static_cast<std::size_t>(k)]});
      for (std::size_t k = static_cast<std::size_t>(split); k < ps.size(); ++k)
        if (!(r * m.mat(ps[k])).is_zero()) rep.fail("trap orthogonal to the rest", {ps[k]});
    };
    for (auto [p, q] : dompairs) check_trap({p}, {q}, 1);
    for (auto [p1, q1] : dompairs)
      for (auto [p2, q2] : dompairs) {
        check_trap({p1, p2}, {q1, q2}, 1);
        check_trap({p1, p2}, {q1, q2}, 2);
      }
  }

  // lifted traps over *-dominated pairs below a common bound
  {
    for (int d = 0; d < n; ++d)
      for (int b1 = 0; b1 < n; ++b1) {
        if (!sdom(b1, d)) continue;
        for (int a1 = 0; a1 < n; ++a1) {
          if (!sdom(a1, b1)) continue;
          int c = trap_lift(m, {a1}, {b1}, d, 1);
          for (int f = 0; f < n; ++f)
            if (sdom(f, a1) && !sdom(f, c)) rep.fail("lifted trap traps", {a1, b1, d, f});
          if (!sdom(c, b1)) rep.fail("lifted trap below bound", {a1, b1, d});
        }
      }
  }

  // diagonal lattice: disjoint positive parts multiply to zero, and
  // domination passes to positive parts
  {
    std::vector<RMatrix> diags = small_diagonals(m.d);
    for (const RMatrix& a : diags)
      for (const RMatrix& b : diags) {
        RMatrix meet = m.lattice.meet(a, b);
        if (meet.is_zero() && !(a * b).is_zero()) rep.fail("meet-zero forces product-zero", {});
      }
    for (int a = 0; a < n; ++a)
      for (const RMatrix& b : diags)
        if (m.mat(a) * b == m.mat(a) && !(m.mat(a) * m.lattice.pos(b) == m.mat(a)))
          rep.fail("domination passes to the positive part", {a});
  }

  // joins of dominated squares stay dominated
  for (int p : squares)
    for (int q : squares)
      for (int r : squares) {
        if (!(dom(p, r) && dom(q, r))) continue;
        bool bounded = false;
        for (int ss : squares) bounded = bounded || dom(r, ss);
        if (!bounded) continue;
        RMatrix j = m.lattice.join(m.mat(p), m.mat(q));
        for (int x = 0; x < n; ++x)
          if ((dom(x, p) || dom(x, q)) && !(m.mat(x) * j == m.mat(x)))
            rep.fail("join absorbs dominated elements", {p, q, x});
        for (int x = 0; x < n; ++x)
          if ((m.mat(x) * j.transpose()).is_zero() &&
              !((m.mat(x) * m.mat(p).transpose()).is_zero() &&
                (m.mat(x) * m.mat(q).transpose()).is_zero()))
            rep.fail("join orthogonality refines", {p, q, x});
        if (!(j * m.mat(r) == j)) rep.fail("join below dominator", {p, q, r});
      }

  // interpolation inside the lattice
  for (int p : squares)
    for (int q : squares) {
      if (!dom(p, q)) continue;
      Interpolant in = interpolate(m, m.mat(p), m.mat(q));
      for (int x = 0; x < n; ++x) {
        if (m.mat(x) * m.mat(p) == m.mat(x) && !(m.mat(x) * in.r == m.mat(x)))
          rep.fail("interpolant traps dominated elements", {p, q, x});
        if ((m.mat(x) * m.mat(p).transpose()).is_zero() && !(m.mat(x) * in.s.transpose()).is_zero())
          rep.fail("interpolant preserves orthogonality", {p, q, x});
      }
      if (!(in.r * in.s == in.r)) rep.fail("interpolant chain r below s", {p, q});
      if (!(in.s * m.mat(q) == in.s)) rep.fail("interpolant chain s below q", {p, q});
      if (!ring_leq(in.s, m.mat(q))) rep.fail("interpolant s bounded by q", {p, q});
      if (ring_leq(m.mat(p), m.mat(q)) && !ring_leq(in.r, m.mat(q)))
        rep.fail("interpolant r bounded by q", {p, q});
      if (!m.mat(p).is_zero() && in.r.is_zero()) rep.fail("interpolant r nonzero", {p, q});
    }

  // interpolation lifted to S
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!sdom(a, b)) continue;
      InterpolantS is = interpolate_S(m, a, b);
      for (int f = 0; f < n; ++f) {
        if (sdom(f, a) && !sdom(f, is.c)) rep.fail("lifted interpolant lower bounds", {a, b, f});
        if (orth(f, a) && !orth(f, is.d)) rep.fail("lifted interpolant orthogonality", {a, b, f});
      }
      if (!sdom(is.c, is.d) || !sdom(is.d, b)) rep.fail("lifted interpolant chain", {a, b});
      if (a != z && is.c == z) rep.fail("lifted interpolant nonzero", {a, b});
    }

  // each ultrafilter is blind to what sits strictly below it twice over
  for (std::size_t ui = 0; ui < umask.size(); ++ui) {
    Mask u = umask[ui];
    Mask below = down_of(u) & ~u;
    Mask twice = down_of(down_of(below));
    // orthogonal to some member of the ultrafilter
    Mask uperp = 0;
    for (int x = 0; x < n; ++x)
      if ((u >> x) & 1) uperp |= perp[static_cast<std::size_t>(x)];
    if (twice & ~uperp) rep.fail("double down-closure is orthogonal", {static_cast<int>(ui)});
    if (uperp & u) rep.fail("orthogonal complement misses the ultrafilter", {static_cast<int>(ui)});
  }

  // the covering chain over every subset of S
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!sdom(a, b)) continue;
      for (Mask t = 0; t <= all; ++t) {
        bool c1 = covered(b, t);
        Mask f = down_of(down_of(down_of(t) & dn[static_cast<std::size_t>(b)]));
        bool c2 = (dn[static_cast<std::size_t>(a)] & perp_of(f)) == zmask;
        bool c3 = covered(a, t);
        if (c1 && !c2) rep.fail("cover gives a killing family", {a, b, static_cast<int>(t & 0xffff)});
        if (c2 && !c3) rep.fail("killing family gives a cover", {a, b, static_cast<int>(t & 0xffff)});
        if (t == all) break;
      }
    }

  // the separation criterion for basic-set containment
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      bool lhs = true;
      Mask pool = down_of(dn[static_cast<std::size_t>(a)] & dn[static_cast<std::size_t>(b)]);
      for (int c = 0; c < n && lhs; ++c) {
        if (!sdom(c, a)) continue;
        bool found = false;
        for (int d = 0; d < n && !found; ++d)
          if (((pool >> d) & 1) &&
              (dn[static_cast<std::size_t>(c)] & perp[static_cast<std::size_t>(d)]) == zmask)
            found = true;
        lhs = found;
      }
      bool mid = (dn[static_cast<std::size_t>(a)] & ~dn[static_cast<std::size_t>(b)]) == 0;
      bool rhs = true;
      for (const Mask& u : umask)
        if (((u >> a) & 1) && !((u >> b) & 1)) rhs = false;
      if (lhs != mid) rep.fail("separation criterion matches containment", {a, b});
      if (mid && !rhs) rep.fail("containment gives basic-set containment", {a, b});
      bool side = m.e_unit_ball_certified ||
                  (down_of(all) >> a & 1 && down_of(all) >> b & 1 &&
                   rc.holds(Rel::Compatible, a, b));
      if (side && rhs && !mid) rep.fail("basic-set containment reverses", {a, b});
    }

  // basic-set compact containment matches the interpolation side
  {
    TopGroupoid g = weyl_groupoid(rc, Carrier::Ultrafilters);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        bool side = false;
        for (int c = 0; c < n && !side; ++c)
          if (sdom(c, b) &&
              (dn[static_cast<std::size_t>(a)] & ~dn[static_cast<std::size_t>(c)]) == 0)
            side = true;
        bool cc = compactly_contained(g.top, g.subbasis[static_cast<std::size_t>(a)],
                                      g.subbasis[static_cast<std::size_t>(b)]);
        if (side && !cc) rep.fail("interpolation side gives compact containment", {a, b});
        bool conv = m.e_unit_ball_certified ||
                    (down_of(all) >> a & 1 && down_of(all) >> b & 1 &&
                     rc.holds(Rel::Compatible, a, b));
        if (conv && cc && !side) rep.fail("compact containment reverses", {a, b});
      }
    // local compactness: a basic neighbourhood pair through every point
    for (std::size_t ui = 0; ui < ults.size(); ++ui)
      for (int a : ults[ui].elements()) {
        bool found = false;
        for (int b : ults[ui].elements())
          if (sdom(b, a) &&
              compactly_contained(g.top, g.subbasis[static_cast<std::size_t>(b)],
                                  g.subbasis[static_cast<std::size_t>(a)])) {
            found = true;
            break;
          }
        if (!found) rep.fail("locally compact at every point", {static_cast<int>(ui), a});
      }
  }

  return rep;
}

}  // namespace weyl
