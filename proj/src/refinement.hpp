#pragma once

#include <cstddef>
#include <vector>

#include "alexandroff/space.hpp"

namespace alex::detail {

// Neighborhood fingerprint refinement. Colors are dense ranks; the first
// component of every signature is the previous color, so the color order
// refines (|S(x)|, sorted member sizes) and never reorders existing cells.
//
// Computed jointly over several spaces so that colors are comparable between
// them (used to prune homeomorphism search).
std::vector<std::vector<std::size_t>> refine_colors(const std::vector<const Space*>& spaces);

// Refines a given coloring of one space to a stable one.
std::vector<std::size_t> refine_colors(const Space& space, std::vector<std::size_t> colors);

// Initial coloring: rank of (|S(x)|, sorted sizes of S(y) for y in S(x)).
std::vector<std::size_t> initial_colors(const Space& space);

std::size_t count_colors(const std::vector<std::size_t>& colors);

}  // namespace alex::detail
