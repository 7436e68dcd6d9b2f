#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace alex {

// Fixed-width bit vector over a carrier {0, ..., universe-1}.
//
// All binary operations require both operands to share the same universe.
// Ordering: by cardinality first, then the set holding the lowest differing
// element comes first. For equal cardinalities this coincides with the
// lexicographic order of the ascending member lists.
class PointSet {
public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  PointSet() = default;
  explicit PointSet(std::size_t universe)
      : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}
  PointSet(std::size_t universe, std::initializer_list<std::size_t> members);
  PointSet(std::size_t universe, const std::vector<std::size_t>& members);

  static PointSet full(std::size_t universe);
  static PointSet singleton(std::size_t universe, std::size_t x);

  std::size_t universe() const noexcept { return universe_; }

  bool contains(std::size_t x) const noexcept {
    return (words_[x / kWordBits] >> (x % kWordBits)) & 1U;
  }
  void insert(std::size_t x) noexcept { words_[x / kWordBits] |= Word{1} << (x % kWordBits); }
  void erase(std::size_t x) noexcept { words_[x / kWordBits] &= ~(Word{1} << (x % kWordBits)); }

  std::size_t count() const noexcept;
  bool empty() const noexcept;

  bool is_subset_of(const PointSet& other) const noexcept;
  bool intersects(const PointSet& other) const noexcept;

  PointSet& operator|=(const PointSet& other) noexcept;
  PointSet& operator&=(const PointSet& other) noexcept;
  PointSet& operator-=(const PointSet& other) noexcept;
  friend PointSet operator|(PointSet a, const PointSet& b) noexcept { return a |= b; }
  friend PointSet operator&(PointSet a, const PointSet& b) noexcept { return a &= b; }
  friend PointSet operator-(PointSet a, const PointSet& b) noexcept { return a -= b; }

  // Smallest member, or universe() when empty.
  std::size_t first() const noexcept;
  // Smallest member greater than x, or universe() when none.
  std::size_t next(std::size_t x) const noexcept;

  std::vector<std::size_t> members() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        f(w * kWordBits + bit);
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const noexcept;

  friend bool operator==(const PointSet& a, const PointSet& b) noexcept {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  friend std::strong_ordering operator<=>(const PointSet& a, const PointSet& b) noexcept;

private:
  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace alex

template <>
struct std::hash<alex::PointSet> {
  std::size_t operator()(const alex::PointSet& s) const noexcept { return s.hash(); }
};
