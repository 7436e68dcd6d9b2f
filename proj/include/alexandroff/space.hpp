#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alexandroff/point_set.hpp"

namespace alex {

class Space;

namespace detail {
// Builds a Space without re-checking the neighborhood invariants. Only for
// constructions whose output is valid by construction.
Space make_space_unchecked(std::vector<PointSet> nbhd, std::vector<std::string> labels = {});
}  // namespace detail

// A finite Alexandroff space, stored as its minimal open neighborhood map:
// nbhd(x) is the smallest open set containing x.
//
// Every Space satisfies
//   x in S(x)                          (reflexivity)
//   y in S(x)  implies  S(y) ⊆ S(x)     (basis minimality)
// so {S(x)} is a basis whose members are the minimal open sets. The
// specialization preorder is read as y <= x iff y in S(x).
//
// Labels are optional presentation data; equality compares structure only.
class Space {
public:
  Space() = default;

  std::size_t size() const noexcept { return nbhd_.size(); }
  const PointSet& nbhd(std::size_t x) const { return nbhd_.at(x); }
  const std::vector<PointSet>& neighborhoods() const noexcept { return nbhd_; }

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  // Stored label, or the decimal id when the space is unlabeled.
  std::string label(std::size_t x) const;
  std::optional<std::size_t> find(std::string_view label) const;

  // Returns a copy carrying the given labels (must be n unique strings, or empty).
  Space with_labels(std::vector<std::string> labels) const;

  // The subset S(x) ∪ ... ∪ S(z) for all x in s.
  PointSet closure_down(const PointSet& s) const;
  // {z : x in S(z)}: the points whose neighborhood contains x.
  PointSet up_set(std::size_t x) const;

  friend bool operator==(const Space& a, const Space& b) noexcept { return a.nbhd_ == b.nbhd_; }

private:
  friend Space detail::make_space_unchecked(std::vector<PointSet>, std::vector<std::string>);

  std::vector<PointSet> nbhd_;
  std::vector<std::string> labels_;
};

// A family of point sets over a fixed carrier, used as basis or open-set input.
struct SubsetFamily {
  std::size_t carrier_size = 0;
  std::vector<PointSet> sets;
};

// Validates both neighborhood invariants. Throws ReflexivityViolation(x) or
// MinimalityViolation(x, y).
Space from_neighborhoods(std::size_t n, std::vector<PointSet> nbhd,
                         std::vector<std::string> labels = {});

// S(x) = intersection of the family members containing x, which must itself be
// a member. Throws NotCovered(x) or NoMinimalSet(x).
Space from_basis(const SubsetFamily& family);

// The family must be the complete list of open sets of a topology.
// Throws NotATopology naming the missing set.
Space from_open_family(const SubsetFamily& family);

// `leq` holds pairs (y, x) meaning y <= x, i.e. y in S(x). The relation must
// already be reflexive and transitive. Throws NotReflexive(x) or
// NotTransitive(x, y, z).
Space from_preorder(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& leq);

// All pairs (y, x) with y in S(x), in ascending (x, y) order.
std::vector<std::pair<std::size_t, std::size_t>> specialization_pairs(const Space& space);

bool is_open(const Space& space, const PointSet& s);

inline constexpr std::size_t kDefaultOpenSetLimit = std::size_t{1} << 20;

// Every open set, ordered by cardinality then lexicographically. Throws
// TooManyOpenSets when more than `limit` exist.
std::vector<PointSet> open_sets(const Space& space, std::size_t limit = kDefaultOpenSetLimit);

// perm[x] is the new id of point x. Labels travel with their points.
Space relabel(const Space& space, const std::vector<std::size_t>& perm);

// Permutation taking `space` to its canonical form (see canonical_form).
std::vector<std::size_t> canonical_labeling(const Space& space);

// Relabeled copy with points ordered by |S(x)|, then the sorted sizes of the
// members of S(x), then iterated neighborhood fingerprints. Remaining ties are
// broken by a bounded search for the least neighborhood array, so equal
// canonical forms imply homeomorphic spaces; the converse holds whenever the
// search finishes within its budget.
Space canonical_form(const Space& space);

}  // namespace alex
