#include "alexandroff/point_set.hpp"

#include <algorithm>

namespace alex {

PointSet::PointSet(std::size_t universe, std::initializer_list<std::size_t> members)
    : PointSet(universe) {
  for (auto x : members) insert(x);
}

PointSet::PointSet(std::size_t universe, const std::vector<std::size_t>& members)
    : PointSet(universe) {
  for (auto x : members) insert(x);
}

PointSet PointSet::full(std::size_t universe) {
  PointSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
  if (const auto tail = universe % kWordBits; tail != 0) s.words_.back() = (Word{1} << tail) - 1;
  return s;
}

PointSet PointSet::singleton(std::size_t universe, std::size_t x) {
  PointSet s(universe);
  s.insert(x);
  return s;
}

std::size_t PointSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool PointSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

bool PointSet::is_subset_of(const PointSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

bool PointSet::intersects(const PointSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

PointSet& PointSet::operator|=(const PointSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

PointSet& PointSet::operator&=(const PointSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

PointSet& PointSet::operator-=(const PointSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::size_t PointSet::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return universe_;
}

std::size_t PointSet::next(std::size_t x) const noexcept {
  std::size_t start = x + 1;
  if (start >= universe_) return universe_;
  std::size_t w = start / kWordBits;
  Word bits = words_[w] & (~Word{0} << (start % kWordBits));
  while (true) {
    if (bits != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
    if (++w == words_.size()) return universe_;
    bits = words_[w];
  }
}

std::vector<std::size_t> PointSet::members() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t x) { out.push_back(x); });
  return out;
}

std::size_t PointSet::hash() const noexcept {
  // FNV-1a over the words
  std::uint64_t h = 0xcbf29ce484222325ULL ^ universe_;
  for (auto w : words_) {
    h ^= w;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const PointSet& a, const PointSet& b) noexcept {
  if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
  if (auto c = a.count() <=> b.count(); c != 0) return c;
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    const auto diff = a.words_[i] ^ b.words_[i];
    if (diff == 0) continue;
    const auto low = diff & (~diff + 1);
    return (a.words_[i] & low) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace alex
