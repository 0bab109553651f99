#ifndef WEYL_ELEMENT_SET_HPP
#define WEYL_ELEMENT_SET_HPP

#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

namespace weyl {

// Set of element ids drawn from a fixed universe {0, ..., n-1}.
// Backed by 64-bit words; ordering compares the sets as unsigned
// integers (bit i has weight 2^i), which gives the canonical order
// used for all serialized listings.
class ElementSet {
public:
  ElementSet() : n_(0) {}
  explicit ElementSet(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  static ElementSet full(std::size_t n) {
    ElementSet s(n);
    for (std::size_t i = 0; i < n; ++i) s.add(static_cast<int>(i));
    return s;
  }
  static ElementSet single(std::size_t n, int e) {
    ElementSet s(n);
    s.add(e);
    return s;
  }

  std::size_t universe() const { return n_; }

  void add(int e) { w_[static_cast<std::size_t>(e) / 64] |= (std::uint64_t{1} << (e % 64)); }
  void remove(int e) { w_[static_cast<std::size_t>(e) / 64] &= ~(std::uint64_t{1} << (e % 64)); }
  bool contains(int e) const {
    return (w_[static_cast<std::size_t>(e) / 64] >> (e % 64)) & 1u;
  }

  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

  bool subset_of(const ElementSet& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool intersects(const ElementSet& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  ElementSet& operator-=(const ElementSet& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  ElementSet complement() const {
    ElementSet r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
    r.trim();
    return r;
  }

  bool operator==(const ElementSet& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const ElementSet& o) const { return !(*this == o); }

  // Numeric order: treat the bit pattern as one big unsigned integer.
  bool operator<(const ElementSet& o) const {
    for (std::size_t i = w_.size(); i-- > 0;)
      if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
    return false;
  }

  std::vector<int> elements() const {
    std::vector<int> r;
    for (std::size_t i = 0; i < n_; ++i)
      if (contains(static_cast<int>(i))) r.push_back(static_cast<int>(i));
    return r;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int e : elements()) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    }
    return s + "}";
  }

private:
  void trim() {
    if (n_ % 64 != 0 && !w_.empty())
      w_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }
  std::size_t n_;
  std::vector<std::uint64_t> w_;
};

}  // namespace weyl

#endif
