#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypermod {

using Element = std::size_t;

/// A subset of a dense ground set {0, ..., n-1}, stored as a fixed-width
/// bitmask. The capacity bounds every matroid this library can hold.
class ElementSet {
 public:
  static constexpr std::size_t kWords = 4;
  static constexpr std::size_t kCapacity = kWords * 64;

  constexpr ElementSet() = default;

  ElementSet(std::initializer_list<Element> members) {
    for (Element e : members) insert(e);
  }

  template <typename Range>
  static ElementSet from_range(const Range& members) {
    ElementSet s;
    for (auto e : members) s.insert(static_cast<Element>(e));
    return s;
  }

  /// {0, ..., n-1}
  static ElementSet full(std::size_t n) {
    if (n > kCapacity) throw std::out_of_range("ElementSet: ground size exceeds capacity");
    ElementSet s;
    for (std::size_t w = 0; w < kWords; ++w) {
      const std::size_t lo = w * 64;
      if (n >= lo + 64) {
        s.words_[w] = ~std::uint64_t{0};
      } else if (n > lo) {
        s.words_[w] = (std::uint64_t{1} << (n - lo)) - 1;
      }
    }
    return s;
  }

  static ElementSet singleton(Element e) {
    ElementSet s;
    s.insert(e);
    return s;
  }

  void insert(Element e) {
    check_index(e);
    words_[e >> 6] |= bit(e);
  }

  void erase(Element e) {
    check_index(e);
    words_[e >> 6] &= ~bit(e);
  }

  [[nodiscard]] bool contains(Element e) const {
    return e < kCapacity && (words_[e >> 6] & bit(e)) != 0;
  }

  [[nodiscard]] std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  [[nodiscard]] bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  [[nodiscard]] bool is_subset_of(const ElementSet& other) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if ((words_[w] & ~other.words_[w]) != 0) return false;
    return true;
  }

  [[nodiscard]] bool is_proper_subset_of(const ElementSet& other) const {
    return is_subset_of(other) && *this != other;
  }

  [[nodiscard]] bool intersects(const ElementSet& other) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if ((words_[w] & other.words_[w]) != 0) return true;
    return false;
  }

  /// Largest member, or nothing for the empty set.
  [[nodiscard]] bool max_element(Element& out) const {
    for (std::size_t w = kWords; w-- > 0;) {
      if (words_[w] != 0) {
        out = w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[w]));
        return true;
      }
    }
    return false;
  }

  [[nodiscard]] bool all_below(std::size_t n) const {
    Element top = 0;
    return !max_element(top) || top < n;
  }

  [[nodiscard]] std::vector<Element> members() const {
    std::vector<Element> out;
    out.reserve(size());
    for_each([&](Element e) { out.push_back(e); });
    return out;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const auto tz = static_cast<std::size_t>(std::countr_zero(bits));
        fn(w * 64 + tz);
        bits &= bits - 1;
      }
    }
  }

  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  ElementSet& operator-=(const ElementSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  /// Lexicographic order on the ascending member sequences:
  /// {0,1} < {0,1,2} < {0,2} < {1}.
  friend bool operator<(const ElementSet& a, const ElementSet& b) {
    for (std::size_t w = 0; w < kWords; ++w) {
      const std::uint64_t diff = a.words_[w] ^ b.words_[w];
      if (diff == 0) continue;
      const auto pos = static_cast<std::size_t>(std::countr_zero(diff));
      const std::uint64_t at = std::uint64_t{1} << pos;
      // The sequences agree on every member below `first`.
      const Element first = w * 64 + pos;
      if ((a.words_[w] & at) != 0) return b.has_member_above(first);
      return !a.has_member_above(first);
    }
    return false;
  }
  friend bool operator>(const ElementSet& a, const ElementSet& b) { return b < a; }
  friend bool operator<=(const ElementSet& a, const ElementSet& b) { return !(b < a); }
  friend bool operator>=(const ElementSet& a, const ElementSet& b) { return !(a < b); }

  [[nodiscard]] std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

  /// "{0 3 7}"
  [[nodiscard]] std::string to_string() const;

 private:
  static constexpr std::uint64_t bit(Element e) { return std::uint64_t{1} << (e & 63); }

  static void check_index(Element e) {
    if (e >= kCapacity) throw std::out_of_range("ElementSet: element index exceeds capacity");
  }

  [[nodiscard]] bool has_member_above(Element e) const {
    Element top = 0;
    return max_element(top) && top > e;
  }

  std::array<std::uint64_t, kWords> words_{};
};

std::ostream& operator<<(std::ostream& os, const ElementSet& s);

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace hypermod

template <>
struct std::hash<hypermod::ElementSet> {
  std::size_t operator()(const hypermod::ElementSet& s) const noexcept { return s.hash(); }
};
