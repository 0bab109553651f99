#include "weyl/rmatrix.hpp"

#include <algorithm>

namespace weyl {

std::string RMatrix::to_string() const {
  std::string s = "[";
  for (int i = 0; i < d_; ++i) {
    s += i ? "; " : "";
    for (int j = 0; j < d_; ++j) {
      if (j) s += " ";
      s += at(i, j).str();
    }
  }
  return s + "]";
}

bool psd_test(const RMatrix& m) {
  if (!m.is_symmetric()) return false;
  const int d = m.dim();
  RMatrix w = m;
  for (int k = 0; k < d; ++k) {
    if (w.at(k, k) < 0) return false;
    if (w.at(k, k) == 0) {
      // zero pivot forces a zero row in the remaining block
      for (int j = k; j < d; ++j)
        if (w.at(k, j) != 0) return false;
      continue;
    }
    for (int i = k + 1; i < d; ++i) {
      Rat f = w.at(i, k) / w.at(k, k);
      if (f == 0) continue;
      for (int j = k; j < d; ++j) w.at(i, j) -= f * w.at(k, j);
      for (int j = k; j < d; ++j) w.at(j, i) = w.at(i, j);
    }
  }
  return true;
}

std::vector<Rat> char_poly(const RMatrix& m) {
  // Faddeev-LeVerrier: exact over the rationals
  const int d = m.dim();
  std::vector<Rat> c(static_cast<std::size_t>(d) + 1, Rat(0));
  c[static_cast<std::size_t>(d)] = 1;
  RMatrix mk(d);  // starts as zero
  for (int k = 1; k <= d; ++k) {
    mk = m * mk;
    for (int i = 0; i < d; ++i) mk.at(i, i) += c[static_cast<std::size_t>(d - k + 1)];
    RMatrix prod = m * mk;
    Rat tr = 0;
    for (int i = 0; i < d; ++i) tr += prod.at(i, i);
    c[static_cast<std::size_t>(d - k)] = -tr / k;
  }
  return c;
}

namespace {

void poly_trim(std::vector<Rat>& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

std::vector<Rat> poly_deriv(const std::vector<Rat>& p) {
  if (p.size() <= 1) return {Rat(0)};
  std::vector<Rat> d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = Rat(i) * p[i];
  return d;
}

// remainder of u / v, v nonzero
std::vector<Rat> poly_rem(std::vector<Rat> u, const std::vector<Rat>& v) {
  poly_trim(u);
  while (u.size() >= v.size() && !(u.size() == 1 && u[0] == 0)) {
    Rat f = u.back() / v.back();
    std::size_t off = u.size() - v.size();
    for (std::size_t i = 0; i < v.size(); ++i) u[off + i] -= f * v[i];
    u.pop_back();
    poly_trim(u);
  }
  if (u.empty()) u.push_back(Rat(0));
  return u;
}

Rat poly_eval(const std::vector<Rat>& p, const Rat& x) {
  Rat r = 0;
  for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

// exact quotient of u / v, remainder known to vanish
std::vector<Rat> poly_div(std::vector<Rat> u, const std::vector<Rat>& v) {
  poly_trim(u);
  if (u.size() < v.size()) return {Rat(0)};
  std::vector<Rat> q(u.size() - v.size() + 1, Rat(0));
  while (u.size() >= v.size() && !(u.size() == 1 && u[0] == 0)) {
    Rat f = u.back() / v.back();
    std::size_t off = u.size() - v.size();
    q[off] = f;
    for (std::size_t i = 0; i < v.size(); ++i) u[off + i] -= f * v[i];
    u.pop_back();
    poly_trim(u);
  }
  return q;
}

std::vector<Rat> poly_gcd(std::vector<Rat> a, std::vector<Rat> b) {
  poly_trim(a);
  poly_trim(b);
  while (!(b.size() == 1 && b[0] == 0)) {
    std::vector<Rat> r = poly_rem(a, b);
    poly_trim(r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::vector<Rat>> sturm_chain(std::vector<Rat> p) {
  poly_trim(p);
  // variation counts need a squarefree polynomial, and evaluating at a
  // repeated root would silently drop sign information
  if (p.size() > 2) {
    std::vector<Rat> g = poly_gcd(p, poly_deriv(p));
    if (g.size() > 1) p = poly_div(p, g);
  }
  std::vector<std::vector<Rat>> ch;
  ch.push_back(p);
  if (p.size() > 1) {
    ch.push_back(poly_deriv(p));
    while (ch.back().size() > 1) {
      std::vector<Rat> r = poly_rem(ch[ch.size() - 2], ch.back());
      poly_trim(r);
      if (r.size() == 1 && r[0] == 0) break;
      for (auto& c : r) c = -c;
      ch.push_back(r);
    }
  }
  return ch;
}

int sign_of(const Rat& x) { return x > 0 ? 1 : x < 0 ? -1 : 0; }

int variations_at(const std::vector<std::vector<Rat>>& ch, const Rat& x) {
  int v = 0, last = 0;
  for (const auto& q : ch) {
    int s = sign_of(poly_eval(q, x));
    if (s != 0) {
      if (last != 0 && s != last) ++v;
      last = s;
    }
  }
  return v;
}

int variations_at_inf(const std::vector<std::vector<Rat>>& ch, int dir) {
  int v = 0, last = 0;
  for (const auto& q : ch) {
    int s = sign_of(q.back());
    if (dir < 0 && (q.size() - 1) % 2 == 1) s = -s;
    if (s != 0) {
      if (last != 0 && s != last) ++v;
      last = s;
    }
  }
  return v;
}

Rat root_bound(const std::vector<Rat>& p) {
  // Cauchy bound: 1 + max |a_i / a_n|
  Rat m = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    Rat v = abs(p[i] / p.back());
    if (v > m) m = v;
  }
  return m + 1;
}

}  // namespace

int sturm_root_count(const std::vector<Rat>& p, const Rat& a, const Rat& b) {
  auto ch = sturm_chain(p);
  if (ch[0].size() == 1) return 0;
  return variations_at(ch, a) - variations_at(ch, b);
}

int sturm_roots_above(const std::vector<Rat>& p, const Rat& a) {
  auto ch = sturm_chain(p);
  if (ch[0].size() == 1) return 0;
  return variations_at(ch, a) - variations_at_inf(ch, +1);
}

std::pair<Rat, Rat> sturm_max_root_bracket(const std::vector<Rat>& p, const Rat& eps) {
  auto ch = sturm_chain(p);
  if (ch[0].size() == 1 || sturm_roots_above(p, -root_bound(ch[0]) - 1) == 0)
    throw std::invalid_argument("polynomial has no real root");
  Rat hi = root_bound(ch[0]);
  Rat lo = -hi;
  // invariant: at least one root in (lo, hi], none above hi
  while (hi - lo > eps) {
    Rat mid = (lo + hi) / 2;
    int above = variations_at(ch, mid) - variations_at_inf(ch, +1);
    if (above > 0)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

bool rational_max_root(const std::vector<Rat>& p, Rat& out) {
  auto br = sturm_max_root_bracket(p, Rat(1, 1024));
  // candidate rational roots of the primitive integer form of p
  Int lead_den = 1;
  for (const auto& c : p) lead_den = lcm(lead_den, denominator(c));
  std::vector<Int> ip(p.size());
  Int g = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    ip[i] = numerator(p[i] * Rat(lead_den));
    g = gcd(g, ip[i]);
  }
  if (g > 1)
    for (auto& c : ip) c /= g;
  std::size_t lo_i = 0;
  while (lo_i < ip.size() && ip[lo_i] == 0) ++lo_i;
  if (lo_i == ip.size()) {
    out = 0;
    return poly_eval(p, Rat(0)) == 0 && sturm_roots_above(p, Rat(0)) == 0;
  }
  auto divisors = [](Int n) {
    n = abs(n);
    std::vector<Int> d;
    for (Int i = 1; i * i <= n; ++i)
      if (n % i == 0) {
        d.push_back(i);
        d.push_back(n / i);
      }
    return d;
  };
  std::vector<Int> nums = divisors(ip[lo_i]);
  std::vector<Int> dens = divisors(ip.back());
  Rat best;
  bool found = false;
  for (const auto& nu : nums)
    for (const auto& de : dens)
      for (int sgn : {1, -1}) {
        Rat cand(sgn * nu, de);
        if (cand < br.first || cand > br.second) continue;
        if (poly_eval(p, cand) == 0 && (!found || cand > best)) {
          best = cand;
          found = true;
        }
      }
  if (found && sturm_roots_above(p, best) == 0) {
    out = best;
    return true;
  }
  return false;
}

namespace {

Int isqrt_floor(const Int& n) {
  Int s = sqrt(n);
  while (s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}

// three-square theorem residue test: representable iff not 4^k (8m + 7)
bool is_three_square(Int r) {
  while (r > 0 && r % 4 == 0) r /= 4;
  return r % 8 != 7;
}

bool two_square(const Int& n, Int& x, Int& y) {
  for (Int a = isqrt_floor(n); a * a * 2 >= n; --a) {
    Int rest = n - a * a;
    Int b = isqrt_floor(rest);
    if (b * b == rest) {
      x = b;
      y = a;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Int> four_squares(const Int& n) {
  if (n < 0) throw std::invalid_argument("negative input");
  if (n == 0) return {0, 0, 0, 0};
  // peel the largest square whose remainder passes the three-square residue
  // test; the remainders left for the brute two-square search stay near 2*sqrt(n)
  for (Int a = isqrt_floor(n); a >= 0; --a) {
    Int r3 = n - a * a;
    if (!is_three_square(r3)) continue;
    for (Int b = isqrt_floor(r3); b >= 0; --b) {
      Int r2 = r3 - b * b;
      Int x, y;
      if (r2 == 0) {
        x = 0;
        y = 0;
      } else if (!two_square(r2, x, y)) {
        continue;
      }
      std::vector<Int> out{a, b, x, y};
      std::sort(out.begin(), out.end());
      return out;
    }
  }
  throw std::logic_error("four squares search failed");
}

std::vector<RMatrix> sigma_witness(const RMatrix& m) {
  if (!psd_test(m)) throw std::invalid_argument("matrix is not symmetric PSD");
  const int d = m.dim();
  // LDL^T with exact rationals, then split each d_i = (p q) / q^2 into
  // four integer squares
  RMatrix w = m;
  std::vector<RMatrix> out;
  for (int k = 0; k < d; ++k) {
    if (w.at(k, k) == 0) continue;
    Rat piv = w.at(k, k);
    std::vector<Rat> col(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) col[static_cast<std::size_t>(i)] = w.at(i, k) / piv;
    // subtract piv * col col^T
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        w.at(i, j) -= piv * col[static_cast<std::size_t>(i)] * col[static_cast<std::size_t>(j)];
    Int p = numerator(piv), q = denominator(piv);
    for (const Int& s : four_squares(p * q)) {
      if (s == 0) continue;
      RMatrix b(d);
      for (int i = 0; i < d; ++i) b.at(i, 0) = col[static_cast<std::size_t>(i)] * Rat(s, q);
      out.push_back(b);
    }
  }
  return out;
}

}  // namespace weyl
