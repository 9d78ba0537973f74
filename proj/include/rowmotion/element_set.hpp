#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace rowmotion {

/// Fixed-capacity membership set over element indices [0, kCapacity).
///
/// All posets handled by the engine are small (E8 has 120 positive roots), so
/// a handful of machine words per set keeps ideal/antichain algebra to a few
/// bitwise instructions.
class ElementSet {
public:
  static constexpr std::size_t kWords = 4;
  static constexpr std::size_t kCapacity = kWords * 64;

  constexpr ElementSet() = default;
  ElementSet(std::initializer_list<std::size_t> members) {
    for (auto m : members)
      insert(m);
  }

  static ElementSet range(std::size_t n) {
    ElementSet s;
    for (std::size_t w = 0; w < kWords && n > 0; ++w) {
      std::size_t take = n < 64 ? n : 64;
      s.words_[w] = take == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << take) - 1);
      n -= take;
    }
    return s;
  }

  bool contains(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  bool empty() const {
    for (auto w : words_)
      if (w)
        return false;
    return true;
  }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_)
      c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool intersects(const ElementSet& o) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] & o.words_[w])
        return true;
    return false;
  }

  bool is_subset_of(const ElementSet& o) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] & ~o.words_[w])
        return false;
    return true;
  }

  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t w = 0; w < kWords; ++w)
      words_[w] |= o.words_[w];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t w = 0; w < kWords; ++w)
      words_[w] &= o.words_[w];
    return *this;
  }
  /// Set difference.
  ElementSet& operator-=(const ElementSet& o) {
    for (std::size_t w = 0; w < kWords; ++w)
      words_[w] &= ~o.words_[w];
    return *this;
  }

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  /// Lexicographic order on the sorted member lists (a proper prefix sorts
  /// first). This is the canonical antichain order.
  friend bool operator<(const ElementSet& a, const ElementSet& b) {
    for (std::size_t w = 0; w < kWords; ++w) {
      std::uint64_t diff = a.words_[w] ^ b.words_[w];
      if (!diff)
        continue;
      std::size_t bit = static_cast<std::size_t>(std::countr_zero(diff));
      std::size_t d = w * 64 + bit;
      // Members below d agree. The side owning d sorts first iff the other
      // side continues with something larger (otherwise it is a prefix).
      if (a.contains(d))
        return b.any_at_or_above(d + 1);
      return !a.any_at_or_above(d + 1);
    }
    return false;
  }

  /// Smallest member, or kCapacity when empty.
  std::size_t first() const { return next_at_or_above(0); }

  std::size_t next_at_or_above(std::size_t i) const {
    if (i >= kCapacity)
      return kCapacity;
    std::size_t w = i >> 6;
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (cur)
        return w * 64 + static_cast<std::size_t>(std::countr_zero(cur));
      if (++w == kWords)
        return kCapacity;
      cur = words_[w];
    }
  }

  bool any_at_or_above(std::size_t i) const { return next_at_or_above(i) != kCapacity; }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < kWords; ++w) {
      std::uint64_t cur = words_[w];
      while (cur) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(cur)));
        cur &= cur - 1;
      }
    }
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words_)
      h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
    return static_cast<std::size_t>(h);
  }

private:
  std::array<std::uint64_t, kWords> words_{};
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace rowmotion
