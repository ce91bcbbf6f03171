#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace lsg {

/// Fixed-size dynamic bitset over 64-bit words. Used for dense adjacency of
/// induced subgraphs where popcount-driven intersection dominates the cost.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t word_count() const noexcept { return words_.size(); }

  void set(std::size_t i) noexcept { words_[i >> 6] |= bit(i); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~bit(i); }
  bool test(std::size_t i) const noexcept { return (words_[i >> 6] & bit(i)) != 0; }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  Bitset& operator&=(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) noexcept { return a &= b; }

  // popcount(a & b) without materializing the intersection
  static std::size_t intersection_count(const Bitset& a, const Bitset& b) noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i]));
    return c;
  }

  /// Calls f(i) for every set bit in increasing order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1;
      }
    }
  }

  std::uint64_t word(std::size_t i) const noexcept { return words_[i]; }
  std::uint64_t& word(std::size_t i) noexcept { return words_[i]; }

  bool operator==(const Bitset&) const = default;

 private:
  static std::uint64_t bit(std::size_t i) noexcept { return std::uint64_t{1} << (i & 63); }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace lsg
