#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "alexandroff/space.hpp"

namespace alex {

inline constexpr std::size_t kCensusMaxPoints = 5;

// Calls `visit` once for every Alexandroff space on n labeled points, in a
// deterministic order. Spaces are grown one point at a time: the new point k
// gets a down-closed set D of points below it and an up-closed set U above it,
// with every member of D below every member of U. Throws TooLarge for n > 5.
void enumerate_spaces(std::size_t n, const std::function<void(const Space&)>& visit);
std::vector<Space> enumerate_spaces(std::size_t n);

struct CensusClass {
  Space representative;  // least canonical form in the class
  std::size_t size = 0;  // labeled spaces in the class
  std::size_t min_x = 0;
  std::size_t index_x = 0;
};

struct CensusRow {
  std::size_t n = 0;
  std::size_t total_labeled = 0;
  std::vector<CensusClass> classes;  // ordered by representative
};

// Homeomorphism classes of all spaces on n points. Throws TooLarge for n > 5.
CensusRow census(std::size_t n);

}  // namespace alex
