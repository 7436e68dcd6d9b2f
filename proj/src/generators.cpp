#include "alexandroff/generators.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "alexandroff/error.hpp"

namespace alex {
namespace {

void require_positive(std::size_t v, const char* what) {
  if (v == 0) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be at least 1");
}

__extension__ using Wide = unsigned __int128;

// Uniform value in [0, bound) from one raw 64-bit draw.
std::uint64_t scaled(std::uint64_t draw, std::uint64_t bound) {
  return static_cast<std::uint64_t>((static_cast<Wide>(draw) * bound) >> 64);
}

}  // namespace

Space chain(std::size_t k) {
  require_positive(k, "chain length");
  std::vector<PointSet> nbhd;
  nbhd.reserve(k);
  PointSet prefix(k);
  for (std::size_t i = 0; i < k; ++i) {
    prefix.insert(i);
    nbhd.push_back(prefix);
  }
  return detail::make_space_unchecked(std::move(nbhd));
}

Space blocks(std::size_t b, std::size_t m) {
  require_positive(b, "block count");
  require_positive(m, "block size");
  const auto n = b * m;
  std::vector<PointSet> nbhd;
  std::vector<std::string> labels;
  nbhd.reserve(n);
  for (std::size_t i = 0; i < b; ++i) {
    PointSet group(n);
    for (std::size_t j = 0; j < m; ++j) group.insert(i * m + j);
    for (std::size_t j = 0; j < m; ++j) {
      nbhd.push_back(group);
      labels.push_back(std::to_string(i) + "." + std::to_string(j));
    }
  }
  return detail::make_space_unchecked(std::move(nbhd), std::move(labels));
}

Space divisor(std::size_t bound, bool with_top) {
  require_positive(bound, "divisor bound");
  const auto n = bound + (with_top ? 1 : 0);
  std::vector<PointSet> nbhd;
  std::vector<std::string> labels;
  nbhd.reserve(n);
  // point id m-1 stands for order m; S(m) = {d : d | m}
  for (std::size_t m = 1; m <= bound; ++m) {
    PointSet s(n);
    for (std::size_t d = 1; d <= m; ++d)
      if (m % d == 0) s.insert(d - 1);
    nbhd.push_back(std::move(s));
    labels.push_back(std::to_string(m));
  }
  if (with_top) {
    nbhd.push_back(PointSet::full(n));
    labels.emplace_back("top");
  }
  return detail::make_space_unchecked(std::move(nbhd), std::move(labels));
}

Space discrete(std::size_t n) {
  std::vector<PointSet> nbhd;
  nbhd.reserve(n);
  for (std::size_t x = 0; x < n; ++x) nbhd.push_back(PointSet::singleton(n, x));
  return detail::make_space_unchecked(std::move(nbhd));
}

Space indiscrete(std::size_t n) {
  return detail::make_space_unchecked(std::vector<PointSet>(n, PointSet::full(n)));
}

Space random_space(std::size_t n, std::uint64_t seed, Density density) {
  if (density.den == 0 || density.num > density.den)
    throw Error(ErrorCode::InvalidArgument, "density must be a fraction in [0, 1]");
  std::mt19937_64 rng(seed);

  std::vector<std::vector<std::size_t>> above(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (scaled(rng(), density.den) < density.num) above[i].push_back(j);

  // edges only go upward in index, so closing from the top down is enough
  std::vector<PointSet> up(n, PointSet(n));
  for (std::size_t i = n; i-- > 0;) {
    up[i].insert(i);
    for (auto j : above[i]) up[i] |= up[j];
  }

  std::vector<std::size_t> perm(n);
  for (std::size_t x = 0; x < n; ++x) perm[x] = x;
  for (std::size_t i = n; i-- > 1;) std::swap(perm[i], perm[scaled(rng(), i + 1)]);

  std::vector<std::pair<std::size_t, std::size_t>> leq;
  for (std::size_t y = 0; y < n; ++y)
    up[y].for_each([&](std::size_t x) { leq.emplace_back(perm[y], perm[x]); });
  return from_preorder(n, leq);
}

Space generate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorKind::Chain: return chain(spec.size);
    case GeneratorKind::Blocks: return blocks(spec.size, spec.block_size);
    case GeneratorKind::Divisor: return divisor(spec.size, spec.with_top);
    case GeneratorKind::Discrete: return discrete(spec.size);
    case GeneratorKind::Indiscrete: return indiscrete(spec.size);
    case GeneratorKind::Random: return random_space(spec.size, spec.seed, spec.density);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown generator kind");
}

}  // namespace alex
