#pragma once

#include <array>
#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "pomat/error.hpp"

namespace pomat {

/// Largest ground set any poset in this library may have.
inline constexpr std::size_t kMaxGroundSize = 512;

/// A subset of the ground set {0, ..., n-1} of some poset.
///
/// Storage is a fixed-size bitset so that subsets are cheap to copy and hash
/// in the exhaustive scans; only the words covering the ground size are ever
/// nonzero. Up-set-ness is a property checked against a poset, not a
/// structural guarantee of this type.
class GroundSubset {
 public:
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::size_t kWords = kMaxGroundSize / kWordBits;

  GroundSubset() = default;

  explicit GroundSubset(std::size_t ground_size) : size_(static_cast<std::uint32_t>(ground_size)) {
    if (ground_size > kMaxGroundSize)
      throw Error(Errc::GroundSetTooLarge,
                  "ground set of " + std::to_string(ground_size) + " exceeds capacity " +
                      std::to_string(kMaxGroundSize));
  }

  GroundSubset(std::size_t ground_size, std::initializer_list<std::size_t> members)
      : GroundSubset(ground_size) {
    for (auto m : members) insert(m);
  }

  static GroundSubset full(std::size_t ground_size) {
    GroundSubset s(ground_size);
    for (std::size_t w = 0; w < s.used_words(); ++w) s.words_[w] = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  /// Subset whose members are the set bits of `mask` (ground size at most 64).
  static GroundSubset from_mask(std::size_t ground_size, std::uint64_t mask) {
    GroundSubset s(ground_size);
    s.words_[0] = mask;
    s.trim();
    return s;
  }

  std::size_t ground_size() const noexcept { return size_; }

  bool contains(std::size_t x) const noexcept {
    return x < size_ && ((words_[x / kWordBits] >> (x % kWordBits)) & 1u);
  }

  void insert(std::size_t x) {
    check_member(x);
    words_[x / kWordBits] |= std::uint64_t{1} << (x % kWordBits);
  }

  void erase(std::size_t x) {
    check_member(x);
    words_[x / kWordBits] &= ~(std::uint64_t{1} << (x % kWordBits));
  }

  GroundSubset with(std::size_t x) const {
    GroundSubset s = *this;
    s.insert(x);
    return s;
  }

  GroundSubset without(std::size_t x) const {
    GroundSubset s = *this;
    s.erase(x);
    return s;
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (std::size_t w = 0; w < used_words(); ++w) c += static_cast<std::size_t>(std::popcount(words_[w]));
    return c;
  }

  bool empty() const noexcept {
    for (std::size_t w = 0; w < used_words(); ++w)
      if (words_[w]) return false;
    return true;
  }

  bool is_subset_of(const GroundSubset& other) const noexcept {
    assert(size_ == other.size_);
    for (std::size_t w = 0; w < used_words(); ++w)
      if (words_[w] & ~other.words_[w]) return false;
    return true;
  }

  bool intersects(const GroundSubset& other) const noexcept {
    assert(size_ == other.size_);
    for (std::size_t w = 0; w < used_words(); ++w)
      if (words_[w] & other.words_[w]) return true;
    return false;
  }

  GroundSubset& operator|=(const GroundSubset& o) noexcept {
    assert(size_ == o.size_);
    for (std::size_t w = 0; w < used_words(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  GroundSubset& operator&=(const GroundSubset& o) noexcept {
    assert(size_ == o.size_);
    for (std::size_t w = 0; w < used_words(); ++w) words_[w] &= o.words_[w];
    return *this;
  }
  GroundSubset& operator^=(const GroundSubset& o) noexcept {
    assert(size_ == o.size_);
    for (std::size_t w = 0; w < used_words(); ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  /// Set difference.
  GroundSubset& operator-=(const GroundSubset& o) noexcept {
    assert(size_ == o.size_);
    for (std::size_t w = 0; w < used_words(); ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend GroundSubset operator|(GroundSubset a, const GroundSubset& b) noexcept { return a |= b; }
  friend GroundSubset operator&(GroundSubset a, const GroundSubset& b) noexcept { return a &= b; }
  friend GroundSubset operator^(GroundSubset a, const GroundSubset& b) noexcept { return a ^= b; }
  friend GroundSubset operator-(GroundSubset a, const GroundSubset& b) noexcept { return a -= b; }

  friend bool operator==(const GroundSubset&, const GroundSubset&) = default;

  /// Numeric order: the subset read as a binary number with element 0 as the
  /// least significant bit. This is the "lexicographic" order used by every
  /// deterministic scan in the library.
  friend std::strong_ordering numeric_compare(const GroundSubset& a, const GroundSubset& b) noexcept {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    for (std::size_t w = a.used_words(); w-- > 0;)
      if (auto c = a.words_[w] <=> b.words_[w]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  /// Cardinality first, then numeric order.
  friend bool size_then_value_less(const GroundSubset& a, const GroundSubset& b) noexcept {
    const auto ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return numeric_compare(a, b) < 0;
  }

  /// Smallest member, or ground_size() when empty.
  std::size_t first() const noexcept {
    for (std::size_t w = 0; w < used_words(); ++w)
      if (words_[w]) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return size_;
  }

  /// Calls f(x) for every member in increasing order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < used_words(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const auto b = static_cast<std::size_t>(std::countr_zero(bits));
        f(w * kWordBits + b);
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t x) { out.push_back(x); });
    return out;
  }

  std::uint64_t low_word() const noexcept { return words_[0]; }

  std::size_t hash() const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ size_;
    for (std::size_t w = 0; w < used_words(); ++w) {
      h ^= words_[w] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

 private:
  std::size_t used_words() const noexcept { return (size_ + kWordBits - 1) / kWordBits; }

  void check_member(std::size_t x) const {
    if (x >= size_)
      throw Error(Errc::DomainMismatch,
                  "element " + std::to_string(x) + " outside ground set of size " + std::to_string(size_));
  }

  void trim() noexcept {
    const std::size_t tail = size_ % kWordBits;
    const std::size_t used = used_words();
    if (tail != 0) words_[used - 1] &= (std::uint64_t{1} << tail) - 1;
    for (std::size_t w = used; w < kWords; ++w) words_[w] = 0;
  }

  std::array<std::uint64_t, kWords> words_{};
  std::uint32_t size_ = 0;
};

std::strong_ordering numeric_compare(const GroundSubset& a, const GroundSubset& b) noexcept;
bool size_then_value_less(const GroundSubset& a, const GroundSubset& b) noexcept;

struct GroundSubsetHash {
  std::size_t operator()(const GroundSubset& s) const noexcept { return s.hash(); }
};

}  // namespace pomat
