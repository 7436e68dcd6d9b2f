#include <set>

#include "alexandroff/census.hpp"
#include "alexandroff/invariants.hpp"
#include "alexandroff/maps.hpp"
#include "doctest.h"
#include "support/check.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace alex;

namespace {

std::vector<std::vector<PointSet>> keys(const std::vector<Space>& spaces) {
  std::vector<std::vector<PointSet>> out;
  for (const auto& s : spaces) out.push_back(s.neighborhoods());
  return out;
}

}  // namespace

TEST_CASE("labeled counts match the relation filter") {
  for (std::size_t n = 1; n <= 4; ++n) CHECK(enumerate_spaces(n).size() == oracle::count_preorders(n));
  CHECK(enumerate_spaces(0).size() == 1);
  CHECK(enumerate_spaces(5).size() == 6942);
  CHECK_ERROR(enumerate_spaces(6), ErrorCode::TooLarge);
  CHECK_ERROR(census(6), ErrorCode::TooLarge);
}

TEST_CASE("enumeration is duplicate free, valid, and closed under relabeling") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto all = enumerate_spaces(n);
    auto k = keys(all);
    std::set<std::vector<PointSet>> unique(k.begin(), k.end());
    CHECK(unique.size() == all.size());
    gen::Rng rng(50 + n);
    for (const auto& s : all) {
      CHECK(from_neighborhoods(n, s.neighborhoods()) == s);
      CHECK(unique.count(relabel(s, rng.permutation(n)).neighborhoods()) == 1);
    }
  }
}

TEST_CASE("enumeration order is deterministic") {
  CHECK(keys(enumerate_spaces(4)) == keys(enumerate_spaces(4)));
}

TEST_CASE("census examples") {
  auto c1 = census(1);
  REQUIRE(c1.classes.size() == 1);
  CHECK(c1.classes[0].min_x == 1);
  CHECK(c1.classes[0].index_x == 1);

  auto c2 = census(2);
  CHECK(c2.total_labeled == 4);
  REQUIRE(c2.classes.size() == 3);
  std::multiset<std::size_t> sizes;
  for (const auto& c : c2.classes) sizes.insert(c.size);
  CHECK(sizes == std::multiset<std::size_t>{1, 1, 2});

  // unlabeled topologies on 3, 4, 5 points
  CHECK(census(3).classes.size() == 9);
  CHECK(census(4).classes.size() == 33);
  CHECK(census(5).classes.size() == 139);
}

TEST_CASE("census classes are consistent") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto row = census(n);
    std::size_t total = 0;
    for (std::size_t i = 0; i < row.classes.size(); ++i) {
      const auto& c = row.classes[i];
      total += c.size;
      CHECK(c.index_x <= c.min_x);
      CHECK(c.min_x == min_of(c.representative).count);
      CHECK(c.index_x == index_of(c.representative));
      CHECK(canonical_form(c.representative) == c.representative);
      for (std::size_t j = i + 1; j < row.classes.size(); ++j)
        CHECK_FALSE(oracle::homeomorphic(c.representative, row.classes[j].representative));
    }
    CHECK(total == row.total_labeled);

    // every labeled space lands in exactly one class, with matching invariants
    std::vector<std::size_t> hits(row.classes.size(), 0);
    enumerate_spaces(n, [&](const Space& s) {
      std::size_t found = 0;
      for (std::size_t i = 0; i < row.classes.size(); ++i) {
        if (!oracle::homeomorphic(s, row.classes[i].representative)) continue;
        ++found;
        ++hits[i];
        CHECK(min_of(s).count == row.classes[i].min_x);
        CHECK(index_of(s) == row.classes[i].index_x);
      }
      CHECK(found == 1);
    });
    for (std::size_t i = 0; i < row.classes.size(); ++i) CHECK(hits[i] == row.classes[i].size);
  }
}
