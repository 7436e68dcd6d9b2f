#include <algorithm>
#include <set>

#include "alexandroff/generators.hpp"
#include "alexandroff/space.hpp"
#include "doctest.h"
#include "support/check.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace alex;
using testing::set;

namespace {

Space sierpinski() { return from_neighborhoods(2, {set(2, {0}), set(2, {0, 1})}); }

void check_invariants(const Space& s) {
  for (std::size_t x = 0; x < s.size(); ++x) {
    REQUIRE(s.nbhd(x).contains(x));
    s.nbhd(x).for_each([&](std::size_t y) { REQUIRE(s.nbhd(y).is_subset_of(s.nbhd(x))); });
  }
}

}  // namespace

TEST_CASE("point set basics") {
  PointSet a(70, {0, 5, 64, 69});
  CHECK(a.count() == 4);
  CHECK(a.contains(64));
  CHECK_FALSE(a.contains(63));
  CHECK(a.first() == 0);
  CHECK(a.next(5) == 64);
  CHECK(a.next(69) == 70);
  CHECK(a.members() == std::vector<std::size_t>{0, 5, 64, 69});

  PointSet b(70, {5, 69});
  CHECK(b.is_subset_of(a));
  CHECK_FALSE(a.is_subset_of(b));
  CHECK((a & b) == b);
  CHECK((a - b).members() == std::vector<std::size_t>{0, 64});
  CHECK((b | PointSet(70, {1})).count() == 3);
  CHECK(a.intersects(b));
  CHECK_FALSE((a - b).intersects(b));

  PointSet e(70);
  CHECK(e.empty());
  CHECK(e.first() == 70);
  CHECK(PointSet::full(70).count() == 70);
}

TEST_CASE("point set ordering: size first, then lowest differing member") {
  const auto n = 4;
  CHECK(set(n, {3}) < set(n, {0, 1}));
  CHECK(set(n, {0, 3}) < set(n, {1, 2}));
  CHECK(set(n, {0, 1}) < set(n, {0, 2}));
  CHECK(PointSet(n) < set(n, {0}));
}

TEST_CASE("from_neighborhoods") {
  auto one = from_neighborhoods(1, {set(1, {0})});
  CHECK(one.size() == 1);

  auto chain3 = from_neighborhoods(3, {set(3, {0}), set(3, {0, 1}), set(3, {0, 1, 2})});
  CHECK(chain3 == chain(3));

  CHECK_NOTHROW(from_neighborhoods(2, {set(2, {0, 1}), set(2, {1})}));

  auto refl = testing::capture([] { from_neighborhoods(2, {set(2, {0, 1}), set(2, {0})}); });
  CHECK(refl.code() == ErrorCode::ReflexivityViolation);
  CHECK(refl.points() == std::vector<std::size_t>{1});

  auto minimality =
      testing::capture([] { from_neighborhoods(3, {set(3, {0, 1}), set(3, {1, 2}), set(3, {2})}); });
  CHECK(minimality.code() == ErrorCode::MinimalityViolation);
  CHECK(minimality.points() == std::vector<std::size_t>{0, 1});

  CHECK_ERROR(from_neighborhoods(2, {set(2, {0})}), ErrorCode::InvalidArgument);
}

TEST_CASE("from_basis") {
  auto s = from_basis({3, {set(3, {0}), set(3, {0, 1}), set(3, {0, 1, 2})}});
  CHECK(s.nbhd(1) == set(3, {0, 1}));
  CHECK(s == chain(3));

  auto ind = from_basis({2, {set(2, {0, 1})}});
  CHECK(ind == indiscrete(2));

  auto e = testing::capture([] { from_basis({3, {set(3, {0, 1}), set(3, {1, 2})}}); });
  CHECK(e.code() == ErrorCode::NoMinimalSet);
  CHECK(e.points() == std::vector<std::size_t>{1});

  auto nc = testing::capture([] { from_basis({3, {set(3, {0, 1})}}); });
  CHECK(nc.code() == ErrorCode::NotCovered);
  CHECK(nc.points() == std::vector<std::size_t>{2});
}

TEST_CASE("from_open_family") {
  auto s = from_open_family({2, {PointSet(2), set(2, {0}), set(2, {0, 1})}});
  CHECK(s == sierpinski());
  CHECK(from_open_family({1, {PointSet(1), set(1, {0})}}).size() == 1);
  CHECK_ERROR(from_open_family({2, {PointSet(2), set(2, {0}), set(2, {1})}}), ErrorCode::NotATopology);
  CHECK_ERROR(from_open_family({2, {set(2, {0}), set(2, {0, 1})}}), ErrorCode::NotATopology);
  CHECK_ERROR(from_open_family({3, {PointSet(3), set(3, {0, 1}), set(3, {1, 2}), PointSet::full(3)}}),
              ErrorCode::NotATopology);
}

TEST_CASE("from_preorder") {
  auto s = from_preorder(2, {{0, 0}, {1, 1}, {0, 1}});
  CHECK(s.nbhd(1) == set(2, {0, 1}));
  CHECK(s == sierpinski());
  CHECK(from_preorder(3, {{0, 0}, {1, 1}, {2, 2}}) == discrete(3));

  auto e = testing::capture([] { from_preorder(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}}); });
  CHECK(e.code() == ErrorCode::NotTransitive);
  CHECK(e.points() == std::vector<std::size_t>{0, 1, 2});

  auto r = testing::capture([] { from_preorder(2, {{0, 0}}); });
  CHECK(r.code() == ErrorCode::NotReflexive);
  CHECK(r.points() == std::vector<std::size_t>{1});
}

TEST_CASE("specialization pairs rebuild the space") {
  gen::Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    auto s = rng.space_up_to(10);
    CHECK(from_preorder(s.size(), specialization_pairs(s)) == s);
  }
}

TEST_CASE("is_open") {
  auto c = chain(3);
  CHECK(is_open(c, set(3, {0, 1})));
  CHECK_FALSE(is_open(c, set(3, {1, 2})));
  CHECK(is_open(c, PointSet(3)));
  CHECK(is_open(sierpinski(), PointSet(2)));
}

TEST_CASE("open_sets") {
  auto o = open_sets(sierpinski());
  CHECK(o == std::vector<PointSet>{PointSet(2), set(2, {0}), set(2, {0, 1})});
  CHECK(open_sets(discrete(2)).size() == 4);
  for (std::size_t k = 1; k <= 8; ++k) CHECK(open_sets(chain(k)).size() == k + 1);
  CHECK_ERROR(open_sets(discrete(12), 100), ErrorCode::TooManyOpenSets);
}

TEST_CASE("open_sets agrees with subset enumeration") {
  gen::Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    auto s = rng.space_up_to(10);
    auto expected = oracle::open_masks(oracle::matrix(s));
    std::set<std::uint64_t> got;
    for (const auto& o : open_sets(s)) {
      std::uint64_t mask = 0;
      o.for_each([&](std::size_t x) { mask |= std::uint64_t{1} << x; });
      got.insert(mask);
    }
    CHECK(got == std::set<std::uint64_t>(expected.begin(), expected.end()));
  }
}

TEST_CASE("open family round trip") {
  gen::Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    auto s = rng.space_up_to(9);
    CHECK(from_open_family({s.size(), open_sets(s)}) == s);
  }
}

TEST_CASE("basis sets that survive are open") {
  gen::Rng rng(14);
  for (int i = 0; i < 200; ++i) {
    const auto n = rng.between(1, 8);
    SubsetFamily f{n, {PointSet::full(n)}};
    for (std::size_t k = rng.below(6); k > 0; --k) f.sets.push_back(rng.subset(n));
    try {
      auto s = from_basis(f);
      check_invariants(s);
      for (std::size_t x = 0; x < n; ++x) CHECK(is_open(s, s.nbhd(x)));
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NoMinimalSet);
    }
  }
}

TEST_CASE("relabel preserves invariants and composes") {
  gen::Rng rng(15);
  for (int i = 0; i < 200; ++i) {
    auto s = rng.space_up_to(10);
    auto p = rng.permutation(s.size());
    auto r = relabel(s, p);
    check_invariants(r);
    for (std::size_t x = 0; x < s.size(); ++x)
      for (std::size_t y = 0; y < s.size(); ++y) CHECK(s.nbhd(x).contains(y) == r.nbhd(p[x]).contains(p[y]));
    std::vector<std::size_t> inv(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) inv[p[x]] = x;
    CHECK(relabel(r, inv) == s);
  }
}

TEST_CASE("labels") {
  auto s = sierpinski().with_labels({"a", "b"});
  CHECK(s.label(1) == "b");
  CHECK(s.find("a") == 0);
  CHECK_FALSE(s.find("c"));
  CHECK(sierpinski().label(1) == "1");
  CHECK_ERROR(sierpinski().with_labels({"a", "a"}), ErrorCode::InvalidArgument);
  CHECK(relabel(s, {1, 0}).label(0) == "b");
}

TEST_CASE("closure_down and up_set") {
  auto c = chain(4);
  CHECK(c.closure_down(set(4, {2})) == set(4, {0, 1, 2}));
  CHECK(c.up_set(1) == set(4, {1, 2, 3}));
}

TEST_CASE("canonical form") {
  CHECK(canonical_form(sierpinski()).nbhd(0).count() == 1);
  CHECK(canonical_form(discrete(5)) == discrete(5));
  CHECK(canonical_form(relabel(sierpinski(), {1, 0})) == sierpinski());

  gen::Rng rng(16);
  for (int i = 0; i < 300; ++i) {
    auto s = rng.space_up_to(12);
    auto c = canonical_form(s);
    check_invariants(c);
    CHECK(canonical_form(relabel(s, rng.permutation(s.size()))) == c);
    CHECK(canonical_form(c) == c);
    auto lab = canonical_labeling(s);
    CHECK(relabel(s, lab) == c);
  }
}

TEST_CASE("canonical forms separate non-homeomorphic spaces") {
  gen::Rng rng(17);
  std::vector<Space> pool;
  for (int i = 0; i < 60; ++i) pool.push_back(rng.space(6));
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j)
      CHECK((canonical_form(pool[i]) == canonical_form(pool[j])) == oracle::homeomorphic(pool[i], pool[j]));
}
