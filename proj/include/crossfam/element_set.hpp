#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace crossfam {

inline constexpr int kMaxUniverse = 128;

/// A subset of the universe [n] = {1, ..., n}, n <= 128.
///
/// Elements are 1-based. Storage is two fixed 64-bit words, so every set
/// operation is a handful of bitwise instructions. Values are immutable;
/// "mutators" return modified copies.
///
/// Canonical order (used everywhere a family is sorted): smaller cardinality
/// first, ties broken lexicographically on the ascending element lists.
class ElementSet {
public:
  explicit ElementSet(int universe_size) : n_(universe_size), w_{0, 0} {
    if (universe_size < 1 || universe_size > kMaxUniverse)
      throw std::invalid_argument("universe size must be in [1, 128], got " +
                                  std::to_string(universe_size));
  }

  ElementSet(int universe_size, std::initializer_list<int> elements)
      : ElementSet(universe_size) {
    for (int e : elements) *this = with(e);
  }

  ElementSet(int universe_size, const std::vector<int>& elements)
      : ElementSet(universe_size) {
    for (int e : elements) *this = with(e);
  }

  int universe_size() const noexcept { return n_; }

  int cardinality() const noexcept {
    return std::popcount(w_[0]) + std::popcount(w_[1]);
  }

  bool empty() const noexcept { return w_[0] == 0 && w_[1] == 0; }

  bool contains(int element) const {
    check_element(element);
    return (w_[word(element)] >> bit(element)) & 1u;
  }

  ElementSet with(int element) const {
    check_element(element);
    ElementSet r = *this;
    r.w_[word(element)] |= std::uint64_t{1} << bit(element);
    return r;
  }

  ElementSet without(int element) const {
    check_element(element);
    ElementSet r = *this;
    r.w_[word(element)] &= ~(std::uint64_t{1} << bit(element));
    return r;
  }

  int intersection_size(const ElementSet& other) const {
    check_same_universe(other);
    return std::popcount(w_[0] & other.w_[0]) +
           std::popcount(w_[1] & other.w_[1]);
  }

  bool subset_of(const ElementSet& other) const {
    check_same_universe(other);
    return (w_[0] & ~other.w_[0]) == 0 && (w_[1] & ~other.w_[1]) == 0;
  }

  ElementSet intersect(const ElementSet& other) const {
    check_same_universe(other);
    ElementSet r = *this;
    r.w_[0] &= other.w_[0];
    r.w_[1] &= other.w_[1];
    return r;
  }

  ElementSet unite(const ElementSet& other) const {
    check_same_universe(other);
    ElementSet r = *this;
    r.w_[0] |= other.w_[0];
    r.w_[1] |= other.w_[1];
    return r;
  }

  /// The set {1, ..., min(m, n)}. m past the universe is clamped.
  static ElementSet prefix(int universe_size, int m) {
    ElementSet r(universe_size);
    if (m > universe_size) m = universe_size;
    for (int e = 1; e <= m; ++e) r = r.with(e);
    return r;
  }

  ElementSet complement() const {
    ElementSet r(n_);
    r.w_[0] = ~w_[0];
    r.w_[1] = ~w_[1];
    // clear bits past n
    if (n_ < 64) {
      r.w_[0] &= (std::uint64_t{1} << n_) - 1;
      r.w_[1] = 0;
    } else if (n_ < 128) {
      r.w_[1] &= (std::uint64_t{1} << (n_ - 64)) - 1;
    }
    return r;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(cardinality()));
    for (int word_i = 0; word_i < 2; ++word_i) {
      std::uint64_t w = w_[word_i];
      while (w) {
        int b = std::countr_zero(w);
        out.push_back(word_i * 64 + b + 1);
        w &= w - 1;
      }
    }
    return out;
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

  bool operator==(const ElementSet& other) const {
    return n_ == other.n_ && w_ == other.w_;
  }

  friend std::strong_ordering canonical_order(const ElementSet& a,
                                              const ElementSet& b) {
    a.check_same_universe(b);
    int ca = a.cardinality(), cb = b.cardinality();
    if (ca != cb) return ca <=> cb;
    // Equal sizes: the set owning the smallest non-shared element sorts first,
    // which matches lexicographic order on the ascending element lists.
    for (int word_i = 0; word_i < 2; ++word_i) {
      std::uint64_t x = a.w_[word_i] ^ b.w_[word_i];
      if (x) {
        std::uint64_t low = x & (~x + 1);
        return (a.w_[word_i] & low) ? std::strong_ordering::less
                                    : std::strong_ordering::greater;
      }
    }
    return std::strong_ordering::equal;
  }

  friend bool canonical_less(const ElementSet& a, const ElementSet& b) {
    return canonical_order(a, b) == std::strong_ordering::less;
  }

private:
  static int word(int element) noexcept { return (element - 1) >> 6; }
  static int bit(int element) noexcept { return (element - 1) & 63; }

  void check_element(int element) const {
    if (element < 1 || element > n_)
      throw std::out_of_range("element " + std::to_string(element) +
                              " outside universe [1, " + std::to_string(n_) +
                              "]");
  }

  void check_same_universe(const ElementSet& other) const {
    if (n_ != other.n_)
      throw std::invalid_argument("universe mismatch: " + std::to_string(n_) +
                                  " vs " + std::to_string(other.n_));
  }

  int n_;
  std::array<std::uint64_t, 2> w_;
};

}
