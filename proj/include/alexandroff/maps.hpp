#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "alexandroff/space.hpp"

namespace alex {

// A point function between two spaces. Holds copies of both spaces.
class SpaceMap {
public:
  // Throws InvalidArgument unless f has one entry per source point, each a
  // valid target id.
  SpaceMap(Space source, Space target, std::vector<std::size_t> f);

  const Space& source() const noexcept { return source_; }
  const Space& target() const noexcept { return target_; }
  const std::vector<std::size_t>& values() const noexcept { return f_; }
  std::size_t operator()(std::size_t x) const { return f_.at(x); }

  PointSet image(const PointSet& s) const;
  PointSet image() const;
  PointSet preimage(const PointSet& s) const;

private:
  Space source_;
  Space target_;
  std::vector<std::size_t> f_;
};

// Preimage of every S(y) open; cross-checked against f(S(x)) ⊆ S(f(x)).
bool is_continuous(const SpaceMap& m);

// f(S(x)) is open in the subspace f(X) of the target, for every x.
bool is_open_map(const SpaceMap& m);

// Bijective, continuous, with continuous inverse.
bool is_homeomorphism(const SpaceMap& m);

// The subspace f(X) of the target and the corestricted map onto it, with
// S(f(x)) = f(S(x)) verified. Throws NotContinuous or NotOpen with a witness.
std::pair<Space, SpaceMap> image_space(const SpaceMap& m);

struct HomeomorphismOptions {
  std::size_t max_points = 10;
  std::uint64_t node_budget = 10'000'000;
};

// Returns the homeomorphism with the lexicographically least value array, or
// nullopt when none exists. Throws TooLarge beyond options.max_points and
// SearchBudgetExceeded when the backtracking exceeds options.node_budget.
std::optional<SpaceMap> find_homeomorphism(const Space& a, const Space& b,
                                           const HomeomorphismOptions& options = {});

// One piece of gluing data: b(S(x_rep)) = S(y_rep), with the local map given
// as (point of S(x_rep), point of S(y_rep)) pairs.
struct GluePiece {
  std::size_t x_rep = 0;
  std::size_t y_rep = 0;
  std::vector<std::pair<std::size_t, std::size_t>> local;
};

struct GlueData {
  std::vector<GluePiece> pieces;
};

// Assembles h(x) = f_z(x) for x in S(z) from local homeomorphisms between
// matched minimal neighborhoods, and verifies the result is a homeomorphism.
//
// Checks, in order:
//   InvalidGlueData         pieces do not match the distinct neighborhoods
//                           one-to-one, or a local map is not a bijection
//                           S(x_rep) -> S(y_rep)
//   NotWellDefined(x)       two local maps send x to different points
//   OverlapMismatch(x1, x2) the common image of S(x1) ∩ S(x2) is not
//                           b(S(x1)) ∩ b(S(x2))
//   InvalidGlueData         a local map is not a homeomorphism of subspaces
//   ResultNotHomeomorphism  the assembled h fails final verification
SpaceMap glue(const Space& x, const Space& y, const GlueData& g);

}  // namespace alex
