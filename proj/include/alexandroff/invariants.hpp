#pragma once

#include <cstddef>
#include <vector>

#include "alexandroff/space.hpp"

namespace alex {

// S(x) is irreducible when S(y) ⊆ S(x) forces S(y) = S(x).
bool is_irreducible(const Space& s, std::size_t x);

// S(x) is basic when both hold for all y, z:
//   S(x) ⊆ S(y) and S(z) ⊆ S(y)  imply  S(x) ⊆ S(z)
//   S(x) ⊄ S(y)                  implies S(x) ∩ S(y) = ∅
// Containment is read non-strictly throughout.
bool is_basic(const Space& s, std::size_t x);

struct MinCover {
  std::size_t count = 0;
  // The distinct inclusion-maximal neighborhoods, ordered by least member.
  std::vector<PointSet> cover;
};

// min(X): fewest minimal neighborhoods covering X. Every cover must contain
// each inclusion-maximal S(m), and those alone cover, so the answer is the
// number of distinct maximal neighborhoods. Throws EmptySpace.
MinCover min_of(const Space& s);

// index(X): number of distinct basic neighborhoods. Throws EmptySpace.
std::size_t index_of(const Space& s);

bool is_hausdorff(const Space& s);
bool is_discrete(const Space& s);
// All S(x) distinct.
bool is_t0(const Space& s);

struct InvariantReport {
  std::size_t n = 0;
  std::size_t distinct_neighborhoods = 0;
  std::size_t min_x = 0;
  std::size_t index_x = 0;
  std::vector<PointSet> maximal_nbhds;
  PointSet basic_points;        // least point of each basic neighborhood
  PointSet irreducible_points;  // every point with irreducible S(x)
  bool is_discrete = false;
  bool is_hausdorff = false;
  bool is_t0 = false;
};

// Throws EmptySpace; throws Internal if any report invariant fails.
InvariantReport report(const Space& s);

}  // namespace alex
