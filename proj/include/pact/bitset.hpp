#ifndef PACT_BITSET_HPP
#define PACT_BITSET_HPP

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace pact {

// Set of points over a fixed finite universe, stored as a bit vector.
// Binary operations require both operands to share the same universe size.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t universe)
      : n_(universe), w_((universe + 63) / 64, 0) {}

  static PointSet empty_set(std::size_t universe) { return PointSet(universe); }

  static PointSet full_set(std::size_t universe) {
    PointSet s(universe);
    for (auto& word : s.w_) word = ~std::uint64_t(0);
    s.trim();
    return s;
  }

  static PointSet of(std::size_t universe, std::initializer_list<int> bits) {
    PointSet s(universe);
    for (int b : bits) s.set(static_cast<std::size_t>(b));
    return s;
  }

  static PointSet single(std::size_t universe, std::size_t bit) {
    PointSet s(universe);
    s.set(bit);
    return s;
  }

  // Interprets the low bits of mask as membership of points 0..universe-1.
  static PointSet from_mask(std::size_t universe, std::uint64_t mask) {
    assert(universe <= 64);
    PointSet s(universe);
    if (!s.w_.empty()) s.w_[0] = mask;
    s.trim();
    return s;
  }

  std::size_t universe() const { return n_; }

  bool test(std::size_t i) const {
    assert(i < n_);
    return (w_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) {
    assert(i < n_);
    w_[i >> 6] |= std::uint64_t(1) << (i & 63);
  }
  void reset(std::size_t i) {
    assert(i < n_);
    w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
  }

  bool any() const {
    for (auto word : w_)
      if (word) return true;
    return false;
  }
  bool none() const { return !any(); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto word : w_) c += static_cast<std::size_t>(std::popcount(word));
    return c;
  }

  bool is_subset_of(const PointSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool intersects(const PointSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  PointSet& operator|=(const PointSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  PointSet& operator&=(const PointSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  // Set difference.
  PointSet& operator-=(const PointSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
  friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
  friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }

  PointSet complement() const {
    PointSet s(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) s.w_[i] = ~w_[i];
    s.trim();
    return s;
  }

  bool operator==(const PointSet& o) const = default;

  // Total order matching numeric order of the underlying mask; gives a
  // deterministic canonical ordering of subsets.
  bool operator<(const PointSet& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    for (std::size_t i = w_.size(); i-- > 0;)
      if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
    return false;
  }

  // Calls f(i) for each member in ascending order.
  template <class F>
  void for_each(F f) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t word = w_[wi];
      while (word) {
        int b = std::countr_zero(word);
        f(static_cast<int>(wi * 64 + static_cast<std::size_t>(b)));
        word &= word - 1;
      }
    }
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  // Least member, or -1 when empty.
  int first() const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi)
      if (w_[wi]) return static_cast<int>(wi * 64) + std::countr_zero(w_[wi]);
    return -1;
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto word : w_) {
      h ^= word;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ n_);
  }

 private:
  void trim() {
    if (n_ % 64 != 0 && !w_.empty())
      w_.back() &= (std::uint64_t(1) << (n_ % 64)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct PointSetHash {
  std::size_t operator()(const PointSet& s) const { return s.hash(); }
};

}  // namespace pact

#endif
