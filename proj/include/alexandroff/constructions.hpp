#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "alexandroff/space.hpp"

namespace alex {

// Equivalence classes on a carrier. Class ids are dense and numbered in the
// order of their least members.
class Partition {
public:
  Partition() = default;

  // Normalizes arbitrary class tags: points with equal tags share a class.
  static Partition from_tags(const std::vector<std::size_t>& tags);
  // Explicit classes; points not listed become singleton classes. Classes must
  // be disjoint and non-empty.
  static Partition from_classes(std::size_t carrier_size, const std::vector<std::vector<std::size_t>>& classes);
  static Partition identity(std::size_t carrier_size);

  std::size_t carrier_size() const noexcept { return class_of_.size(); }
  std::size_t class_count() const noexcept { return classes_; }
  std::size_t class_of(std::size_t x) const { return class_of_.at(x); }
  const std::vector<std::size_t>& class_map() const noexcept { return class_of_; }
  PointSet members(std::size_t c) const;

  friend bool operator==(const Partition&, const Partition&) = default;

private:
  std::vector<std::size_t> class_of_;
  std::size_t classes_ = 0;
};

inline constexpr std::size_t kDefaultCarrierBound = 4096;

// Flat product ids are row-major, left factor most significant:
// (x, y) -> x * b.size() + y.
constexpr std::size_t product_id(std::size_t x, std::size_t y, std::size_t right_size) noexcept {
  return x * right_size + y;
}

// S((x, y)) = S(x) x S(y). Throws SizeOverflow past `bound` points.
Space product(const Space& a, const Space& b, std::size_t bound = kDefaultCarrierBound);

// Left fold of product; ids are mixed-radix with the first factor most
// significant. Throws InvalidArgument on an empty list.
Space product_n(const std::vector<Space>& spaces, std::size_t bound = kDefaultCarrierBound);

// S_A(p) = A ∩ S(p); points keep ascending original order and their labels.
Space subspace(const Space& space, const PointSet& a);

// S([c]) is read off the least open saturated superset of class c, found by
// alternating down-closure and saturation until stable. Throws
// PartitionMismatch when the partition is over a different carrier.
Space quotient(const Space& space, const Partition& p);

// Quotient by x ~ y iff S(x) = S(y).
std::pair<Space, Partition> t0_quotient(const Space& space);

// b's ids are shifted by a.size(); neighborhoods are unchanged.
Space disjoint_sum(const Space& a, const Space& b, std::size_t bound = kDefaultCarrierBound);

}  // namespace alex
