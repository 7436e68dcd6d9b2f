#include "alexandroff/census.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>

#include "alexandroff/error.hpp"
#include "alexandroff/invariants.hpp"
#include "alexandroff/maps.hpp"

namespace alex {
namespace {

using Mask = std::uint32_t;

void require_small(std::size_t n) {
  if (n > kCensusMaxPoints)
    throw Error(ErrorCode::TooLarge, "census is limited to " + std::to_string(kCensusMaxPoints) +
                                         " points, got " + std::to_string(n));
}

bool contains(Mask m, std::size_t x) { return ((m >> x) & 1U) != 0; }

class Enumerator {
public:
  Enumerator(std::size_t n, const std::function<void(const Space&)>& visit)
      : n_(n), visit_(visit), down_(n, 0), up_(n, 0) {}

  void run() { extend(0); }

private:
  bool down_closed(Mask d) const {
    for (std::size_t x = 0; x < n_; ++x)
      if (contains(d, x) && (down_[x] & ~d) != 0) return false;
    return true;
  }

  bool up_closed(Mask u) const {
    for (std::size_t x = 0; x < n_; ++x)
      if (contains(u, x) && (up_[x] & ~u) != 0) return false;
    return true;
  }

  // every d in D is below every u in U
  bool linked(Mask d, Mask u) const {
    for (std::size_t x = 0; x < n_; ++x)
      if (contains(u, x) && (d & ~down_[x]) != 0) return false;
    return true;
  }

  void emit() const {
    std::vector<PointSet> nbhd;
    nbhd.reserve(n_);
    for (std::size_t x = 0; x < n_; ++x) {
      PointSet s(n_);
      for (std::size_t y = 0; y < n_; ++y)
        if (contains(down_[x], y)) s.insert(y);
      nbhd.push_back(std::move(s));
    }
    visit_(detail::make_space_unchecked(std::move(nbhd)));
  }

  void extend(std::size_t k) {
    if (k == n_) {
      emit();
      return;
    }
    const Mask all = (Mask{1} << k) - 1;
    const Mask bit = Mask{1} << k;
    for (Mask d = 0; d <= all; ++d) {
      if (!down_closed(d)) continue;
      for (Mask u = 0; u <= all; ++u) {
        if (!up_closed(u) || !linked(d, u)) continue;
        const auto saved_down = down_;
        const auto saved_up = up_;
        down_[k] = d | bit;
        up_[k] = u | bit;
        // D x U is already related, so only k itself joins the old sets
        for (std::size_t x = 0; x < k; ++x) {
          if (contains(u, x)) down_[x] |= bit;
          if (contains(d, x)) up_[x] |= bit;
        }
        extend(k + 1);
        down_ = saved_down;
        up_ = saved_up;
      }
    }
  }

  std::size_t n_;
  const std::function<void(const Space&)>& visit_;
  std::vector<Mask> down_, up_;
};

}  // namespace

void enumerate_spaces(std::size_t n, const std::function<void(const Space&)>& visit) {
  require_small(n);
  Enumerator(n, visit).run();
}

std::vector<Space> enumerate_spaces(std::size_t n) {
  std::vector<Space> out;
  enumerate_spaces(n, [&](const Space& s) { out.push_back(s); });
  return out;
}

CensusRow census(std::size_t n) {
  require_small(n);
  CensusRow row;
  row.n = n;

  // bucket by canonical form; identical forms are homeomorphic outright
  std::map<std::vector<PointSet>, std::size_t> buckets;
  enumerate_spaces(n, [&](const Space& s) {
    ++row.total_labeled;
    ++buckets[canonical_form(s).neighborhoods()];
  });

  // merge buckets the canonical search failed to identify
  struct Group {
    Space rep;
    std::size_t size;
  };
  std::vector<Group> groups;
  HomeomorphismOptions options;
  options.max_points = kCensusMaxPoints;
  for (auto& [nbhd, count] : buckets) {
    auto rep = from_neighborhoods(n, nbhd);
    auto same = std::find_if(groups.begin(), groups.end(),
                             [&](const Group& g) { return find_homeomorphism(g.rep, rep, options).has_value(); });
    if (same == groups.end()) {
      groups.push_back({std::move(rep), count});
    } else {
      // buckets are visited in ascending order, so the first stays least
      same->size += count;
    }
  }

  for (auto& g : groups) {
    CensusClass c;
    c.size = g.size;
    if (n > 0) {
      c.min_x = min_of(g.rep).count;
      c.index_x = index_of(g.rep);
    }
    c.representative = std::move(g.rep);
    row.classes.push_back(std::move(c));
  }
  return row;
}

}  // namespace alex
