#pragma once

#include <cstddef>
#include <cstdint>

#include "alexandroff/space.hpp"

namespace alex {

// Points 0..k-1 with S(i) = {0..i}: nested neighborhoods, the finite model of
// concentric closed balls on a disk.
Space chain(std::size_t k);

// b disjoint groups of m points; every point's neighborhood is its group.
// Models a line with the integers removed, one interval per group.
Space blocks(std::size_t b, std::size_t m);

// Points labeled 1..N, one per root-of-unity order; S(m) = divisors of m.
// With `with_top`, an extra point "top" whose neighborhood is everything
// (the points of infinite order on the circle).
Space divisor(std::size_t bound, bool with_top);

Space discrete(std::size_t n);
Space indiscrete(std::size_t n);

// Probability num/den, with num <= den and den > 0.
struct Density {
  std::uint64_t num = 1;
  std::uint64_t den = 2;
};

// Deterministic for fixed (n, seed, density): each pair i < j is related
// (i <= j) with the given probability, the relation is closed transitively, and
// points are shuffled by a seeded permutation. Uses the mt19937_64 raw stream
// only, so results are identical across platforms.
Space random_space(std::size_t n, std::uint64_t seed, Density density = {});

enum class GeneratorKind { Chain, Blocks, Divisor, Discrete, Indiscrete, Random };

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::Chain;
  std::size_t size = 1;        // chain length, block count, divisor bound, n
  std::size_t block_size = 1;  // blocks only
  bool with_top = false;       // divisor only
  std::uint64_t seed = 0;      // random only
  Density density{};           // random only
};

// Throws InvalidArgument when a size precondition fails.
Space generate(const GeneratorSpec& spec);

}  // namespace alex
