#ifndef WEYL_RMATRIX_HPP
#define WEYL_RMATRIX_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace weyl {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

// Dense square matrix over exact rationals.
class RMatrix {
public:
  RMatrix() : d_(0) {}
  explicit RMatrix(int d) : d_(d), a_(static_cast<std::size_t>(d) * d, Rat(0)) {
    if (d <= 0) throw std::invalid_argument("dimension must be positive");
  }

  static RMatrix identity(int d) {
    RMatrix m(d);
    for (int i = 0; i < d; ++i) m.at(i, i) = 1;
    return m;
  }

  int dim() const { return d_; }
  Rat& at(int i, int j) { return a_[static_cast<std::size_t>(i) * d_ + j]; }
  const Rat& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * d_ + j]; }

  RMatrix operator+(const RMatrix& o) const {
    check(o);
    RMatrix r(d_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
  }
  RMatrix operator-(const RMatrix& o) const {
    check(o);
    RMatrix r(d_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
  }
  RMatrix operator*(const RMatrix& o) const {
    check(o);
    RMatrix r(d_);
    for (int i = 0; i < d_; ++i)
      for (int k = 0; k < d_; ++k) {
        const Rat& v = at(i, k);
        if (v == 0) continue;
        for (int j = 0; j < d_; ++j) r.at(i, j) += v * o.at(k, j);
      }
    return r;
  }
  RMatrix scaled(const Rat& c) const {
    RMatrix r(d_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = c * a_[i];
    return r;
  }
  RMatrix transpose() const {
    RMatrix r(d_);
    for (int i = 0; i < d_; ++i)
      for (int j = 0; j < d_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  bool operator==(const RMatrix& o) const { return d_ == o.d_ && a_ == o.a_; }
  bool operator!=(const RMatrix& o) const { return !(*this == o); }
  bool operator<(const RMatrix& o) const {
    if (d_ != o.d_) return d_ < o.d_;
    for (std::size_t i = 0; i < a_.size(); ++i)
      if (a_[i] != o.a_[i]) return a_[i] < o.a_[i];
    return false;
  }

  bool is_symmetric() const {
    for (int i = 0; i < d_; ++i)
      for (int j = i + 1; j < d_; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }
  bool is_zero() const {
    for (const auto& v : a_)
      if (v != 0) return false;
    return true;
  }
  bool is_diagonal() const {
    for (int i = 0; i < d_; ++i)
      for (int j = 0; j < d_; ++j)
        if (i != j && at(i, j) != 0) return false;
    return true;
  }

  std::string to_string() const;

private:
  void check(const RMatrix& o) const {
    if (d_ != o.d_) throw std::invalid_argument("dimension mismatch");
  }
  int d_;
  std::vector<Rat> a_;
};

// Exact positive-semidefiniteness via fraction-free symmetric
// elimination: false for nonsymmetric input.
bool psd_test(const RMatrix& m);

// Characteristic polynomial det(xI - m), coefficients low to high.
std::vector<Rat> char_poly(const RMatrix& m);

// Number of distinct real roots of p in (a, b], via Sturm chains.
int sturm_root_count(const std::vector<Rat>& p, const Rat& a, const Rat& b);
// Number of distinct real roots strictly greater than a.
int sturm_roots_above(const std::vector<Rat>& p, const Rat& a);

// Largest real root of p bracketed to width <= eps; returns {lo, hi}.
// p must have at least one real root.
std::pair<Rat, Rat> sturm_max_root_bracket(const std::vector<Rat>& p, const Rat& eps);

// If the largest real root of p is rational, return it.
bool rational_max_root(const std::vector<Rat>& p, Rat& out);

// Writes a nonnegative integer as a sum of four squares.
std::vector<Int> four_squares(const Int& n);

// Explicit witnesses b_i with  m = sum b_i b_i^T ; throws if m is not
// symmetric PSD.
std::vector<RMatrix> sigma_witness(const RMatrix& m);

}  // namespace weyl

#endif
