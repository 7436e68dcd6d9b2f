#include "alexandroff/constructions.hpp"
#include "alexandroff/generators.hpp"
#include "alexandroff/invariants.hpp"
#include "doctest.h"
#include "support/check.hpp"

using namespace alex;
using testing::set;

namespace {

Space revalidate(const Space& s) { return from_neighborhoods(s.size(), s.neighborhoods()); }

}  // namespace

TEST_CASE("chain") {
  CHECK(chain(1).size() == 1);
  CHECK(chain(3).nbhd(2) == set(3, {0, 1, 2}));
  for (std::size_t k = 1; k <= 10; ++k) {
    auto c = chain(k);
    CHECK(revalidate(c) == c);
    auto r = report(c);
    CHECK(r.min_x == 1);
    CHECK(r.index_x == 1);
    CHECK(r.irreducible_points == set(k, {0}));
    CHECK(r.basic_points == set(k, {0}));
  }
  CHECK_ERROR(chain(0), ErrorCode::InvalidArgument);
}

TEST_CASE("blocks") {
  CHECK(blocks(1, 1).size() == 1);
  auto b = blocks(3, 2);
  CHECK(min_of(b).count == 3);
  CHECK(index_of(b) == 3);
  CHECK(blocks(4, 1) == discrete(4));
  CHECK(b.label(3) == "1.1");
  for (std::size_t nb = 1; nb <= 4; ++nb)
    for (std::size_t m = 1; m <= 4; ++m) {
      auto s = blocks(nb, m);
      CHECK(revalidate(s) == s);
      CHECK(is_hausdorff(s) == (m == 1));
      for (std::size_t x = 0; x < s.size(); ++x) CHECK(is_basic(s, x));
    }
  CHECK_ERROR(blocks(0, 2), ErrorCode::InvalidArgument);
}

TEST_CASE("divisor") {
  CHECK(divisor(1, false).size() == 1);
  auto d6 = divisor(6, false);
  CHECK(d6.nbhd(5) == set(6, {0, 1, 2, 5}));
  auto m = min_of(d6);
  CHECK(m.count == 3);
  CHECK(m.cover == std::vector<PointSet>{d6.nbhd(3), d6.nbhd(4), d6.nbhd(5)});

  auto top = divisor(6, true);
  CHECK(min_of(top).count == 1);
  CHECK(index_of(top) == 1);
  CHECK(top.label(6) == "top");
  for (std::size_t n = 1; n <= 12; ++n) {
    auto t = divisor(n, true);
    CHECK(revalidate(t) == t);
    CHECK(min_of(t).cover == std::vector<PointSet>{PointSet::full(n + 1)});
  }
}

TEST_CASE("discrete and indiscrete") {
  CHECK(discrete(0).size() == 0);
  CHECK(is_hausdorff(discrete(5)));
  CHECK(t0_quotient(indiscrete(3)).first.size() == 1);
  CHECK(indiscrete(3).nbhd(1) == PointSet::full(3));
}

TEST_CASE("random spaces") {
  for (std::size_t n = 0; n <= 12; ++n) {
    CHECK(random_space(n, 99, {0, 1}) == discrete(n));
    // density 1 gives a total order, i.e. a chain after relabeling
    auto full = random_space(n, 99, {1, 1});
    if (n > 0) CHECK(canonical_form(full) == chain(n));
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto s = random_space(10, seed, {1, 3});
    CHECK(revalidate(s) == s);
    CHECK(random_space(10, seed, {1, 3}) == s);
  }
  CHECK(random_space(12, 1, {1, 2}) != random_space(12, 2, {1, 2}));
  CHECK_ERROR(random_space(3, 0, {2, 1}), ErrorCode::InvalidArgument);
  CHECK_ERROR(random_space(3, 0, {0, 0}), ErrorCode::InvalidArgument);
}

TEST_CASE("generate dispatches on kind") {
  CHECK(generate({GeneratorKind::Chain, 4}) == chain(4));
  GeneratorSpec b{GeneratorKind::Blocks, 2};
  b.block_size = 3;
  CHECK(generate(b) == blocks(2, 3));
  GeneratorSpec d{GeneratorKind::Divisor, 6};
  d.with_top = true;
  CHECK(generate(d) == divisor(6, true));
  GeneratorSpec r{GeneratorKind::Random, 8};
  r.seed = 5;
  r.density = {1, 4};
  CHECK(generate(r) == random_space(8, 5, {1, 4}));
}
