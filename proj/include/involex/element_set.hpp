#ifndef INVOLEX_ELEMENT_SET_HPP_
#define INVOLEX_ELEMENT_SET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace involex {

using Elem = std::uint32_t;

// Fixed-length bitset over the element indices of a group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t size)
      : size_(size), words_((size + 63) / 64, 0) {}

  static ElementSet full(std::size_t size) {
    ElementSet s(size);
    for (std::size_t i = 0; i < size; ++i) s.insert(static_cast<Elem>(i));
    return s;
  }

  std::size_t universe() const noexcept { return size_; }

  bool contains(Elem x) const noexcept {
    return (words_[x >> 6] >> (x & 63)) & 1u;
  }
  void insert(Elem x) noexcept { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void erase(Elem x) noexcept { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

  // Returns true if x was not already present.
  bool add(Elem x) noexcept {
    const std::uint64_t bit = std::uint64_t{1} << (x & 63);
    std::uint64_t& w = words_[x >> 6];
    if (w & bit) return false;
    w |= bit;
    return true;
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool is_subset_of(const ElementSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }

  ElementSet& operator&=(const ElementSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  // Members in increasing index order.
  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    out.reserve(count());
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        const int b = std::countr_zero(w);
        out.push_back(static_cast<Elem>(i * 64 + static_cast<std::size_t>(b)));
        w &= w - 1;
      }
    }
    return out;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace involex

#endif  // INVOLEX_ELEMENT_SET_HPP_
