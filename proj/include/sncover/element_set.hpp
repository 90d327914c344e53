#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace sncover {

/// A set of element ids over a fixed universe {0..n-1}, packed into 64-bit
/// words. This is the workhorse for coverage unions, layer masks, and
/// neighborhood intersections; all set algebra is word-at-a-time.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int universe)
      : n_(universe), words_((static_cast<size_t>(universe) + 63) / 64, 0) {}

  static ElementSet full(int universe) {
    ElementSet s(universe);
    for (auto& w : s.words_) w = ~uint64_t{0};
    s.mask_tail();
    return s;
  }

  int universe() const { return n_; }

  bool contains(int e) const {
    assert(e >= 0 && e < n_);
    return (words_[static_cast<size_t>(e) >> 6] >> (e & 63)) & 1;
  }
  void insert(int e) {
    assert(e >= 0 && e < n_);
    words_[static_cast<size_t>(e) >> 6] |= uint64_t{1} << (e & 63);
  }
  void erase(int e) {
    assert(e >= 0 && e < n_);
    words_[static_cast<size_t>(e) >> 6] &= ~(uint64_t{1} << (e & 63));
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  size_t count() const {
    size_t c = 0;
    for (uint64_t w : words_) c += static_cast<size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (uint64_t w : words_)
      if (w) return false;
    return true;
  }

  ElementSet& operator|=(const ElementSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  ElementSet& operator-=(const ElementSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  bool operator==(const ElementSet& o) const { return n_ == o.n_ && words_ == o.words_; }

  bool is_subset_of(const ElementSet& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const ElementSet& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  size_t intersection_count(const ElementSet& o) const {
    assert(n_ == o.n_);
    size_t c = 0;
    for (size_t i = 0; i < words_.size(); ++i)
      c += static_cast<size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }

  /// Members in ascending order.
  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int e) { out.push_back(e); });
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      uint64_t w = words_[i];
      while (w) {
        int b = std::countr_zero(w);
        f(static_cast<int>(i * 64) + b);
        w &= w - 1;
      }
    }
  }

  static ElementSet of(int universe, std::initializer_list<int> elems) {
    ElementSet s(universe);
    for (int e : elems) s.insert(e);
    return s;
  }
  static ElementSet from_vector(int universe, const std::vector<int>& elems) {
    ElementSet s(universe);
    for (int e : elems) s.insert(e);
    return s;
  }

 private:
  void mask_tail() {
    if (n_ % 64 != 0 && !words_.empty())
      words_.back() &= (uint64_t{1} << (n_ % 64)) - 1;
  }

  int n_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace sncover
