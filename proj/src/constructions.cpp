#include "alexandroff/constructions.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_set>

#include "alexandroff/error.hpp"

namespace alex {
namespace {

bool all_unique(const std::vector<std::string>& labels) {
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) return false;
  return true;
}

void check_bound(std::size_t size, std::size_t bound, const char* what) {
  if (size > bound)
    throw Error(ErrorCode::SizeOverflow, std::string(what) + " would have " + std::to_string(size) +
                                             " points, above the bound of " + std::to_string(bound));
}

}  // namespace

Partition Partition::from_tags(const std::vector<std::size_t>& tags) {
  Partition p;
  p.class_of_.resize(tags.size());
  std::map<std::size_t, std::size_t> ids;
  for (std::size_t x = 0; x < tags.size(); ++x) {
    auto [it, fresh] = ids.emplace(tags[x], ids.size());
    p.class_of_[x] = it->second;
  }
  p.classes_ = ids.size();
  return p;
}

Partition Partition::from_classes(std::size_t carrier_size, const std::vector<std::vector<std::size_t>>& classes) {
  constexpr auto kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> tags(carrier_size, kUnassigned);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw Error(ErrorCode::InvalidArgument, "empty class");
    for (auto x : classes[c]) {
      if (x >= carrier_size)
        throw Error(ErrorCode::InvalidArgument, "point " + std::to_string(x) + " out of range");
      if (tags[x] != kUnassigned)
        throw Error(ErrorCode::InvalidArgument, "point " + std::to_string(x) + " listed twice", {x});
      tags[x] = c;
    }
  }
  // unlisted points: fresh singleton tags beyond the listed ones
  for (std::size_t x = 0; x < carrier_size; ++x)
    if (tags[x] == kUnassigned) tags[x] = classes.size() + x;
  return from_tags(tags);
}

Partition Partition::identity(std::size_t carrier_size) {
  std::vector<std::size_t> tags(carrier_size);
  for (std::size_t x = 0; x < carrier_size; ++x) tags[x] = x;
  return from_tags(tags);
}

PointSet Partition::members(std::size_t c) const {
  PointSet out(carrier_size());
  for (std::size_t x = 0; x < carrier_size(); ++x)
    if (class_of_[x] == c) out.insert(x);
  return out;
}

Space product(const Space& a, const Space& b, std::size_t bound) {
  const auto na = a.size();
  const auto nb = b.size();
  if (na != 0 && nb > bound / na) check_bound(bound + 1, bound, "product");
  const auto n = na * nb;
  check_bound(n, bound, "product");

  std::vector<PointSet> nbhd(n, PointSet(n));
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t y = 0; y < nb; ++y) {
      auto& s = nbhd[product_id(x, y, nb)];
      a.nbhd(x).for_each([&](std::size_t u) {
        b.nbhd(y).for_each([&](std::size_t v) { s.insert(product_id(u, v, nb)); });
      });
    }

  std::vector<std::string> labels;
  if (a.has_labels() || b.has_labels()) {
    labels.reserve(n);
    for (std::size_t x = 0; x < na; ++x)
      for (std::size_t y = 0; y < nb; ++y) labels.push_back(a.label(x) + "*" + b.label(y));
    if (!all_unique(labels)) labels.clear();
  }
  return detail::make_space_unchecked(std::move(nbhd), std::move(labels));
}

Space product_n(const std::vector<Space>& spaces, std::size_t bound) {
  if (spaces.empty()) throw Error(ErrorCode::InvalidArgument, "product of an empty list");
  Space acc = spaces.front();
  for (std::size_t i = 1; i < spaces.size(); ++i) acc = product(acc, spaces[i], bound);
  return acc;
}

Space subspace(const Space& space, const PointSet& a) {
  if (a.universe() != space.size())
    throw Error(ErrorCode::InvalidArgument, "subset is over a different carrier");
  const auto ids = a.members();
  std::vector<std::size_t> new_id(space.size(), 0);
  for (std::size_t i = 0; i < ids.size(); ++i) new_id[ids[i]] = i;

  std::vector<PointSet> nbhd;
  std::vector<std::string> labels;
  nbhd.reserve(ids.size());
  for (auto x : ids) {
    PointSet s(ids.size());
    (space.nbhd(x) & a).for_each([&](std::size_t y) { s.insert(new_id[y]); });
    nbhd.push_back(std::move(s));
    if (space.has_labels()) labels.push_back(space.labels()[x]);
  }
  return detail::make_space_unchecked(std::move(nbhd), std::move(labels));
}

Space quotient(const Space& space, const Partition& p) {
  if (p.carrier_size() != space.size())
    throw Error(ErrorCode::PartitionMismatch, "partition covers " + std::to_string(p.carrier_size()) +
                                                  " points but the space has " + std::to_string(space.size()));
  const auto k = p.class_count();
  std::vector<PointSet> classes;
  classes.reserve(k);
  for (std::size_t c = 0; c < k; ++c) classes.push_back(p.members(c));

  auto saturate = [&](const PointSet& w) {
    PointSet out(space.size());
    for (const auto& cls : classes)
      if (cls.intersects(w)) out |= cls;
    return out;
  };

  std::vector<PointSet> nbhd;
  nbhd.reserve(k);
  for (std::size_t c = 0; c < k; ++c) {
    PointSet w = classes[c];
    while (true) {
      auto grown = saturate(space.closure_down(w));
      if (grown == w) break;
      w = std::move(grown);
    }
    if (!is_open(space, w) || saturate(w) != w)
      throw Error(ErrorCode::Internal, "saturation fixpoint is not an open saturated set", {c});
    PointSet s(k);
    for (std::size_t d = 0; d < k; ++d)
      if (classes[d].is_subset_of(w)) s.insert(d);
    nbhd.push_back(std::move(s));
  }

  std::vector<std::string> labels;
  if (space.has_labels())
    for (const auto& cls : classes) labels.push_back(space.labels()[cls.first()]);
  return from_neighborhoods(k, std::move(nbhd), std::move(labels));
}

std::pair<Space, Partition> t0_quotient(const Space& space) {
  // tag each point by the least point sharing its neighborhood
  std::vector<std::size_t> tags(space.size());
  for (std::size_t x = 0; x < space.size(); ++x) {
    tags[x] = x;
    for (std::size_t y = 0; y < x; ++y)
      if (space.nbhd(y) == space.nbhd(x)) {
        tags[x] = y;
        break;
      }
  }
  auto p = Partition::from_tags(tags);
  return {quotient(space, p), std::move(p)};
}

Space disjoint_sum(const Space& a, const Space& b, std::size_t bound) {
  const auto na = a.size();
  const auto n = na + b.size();
  check_bound(n, bound, "disjoint sum");
  std::vector<PointSet> nbhd;
  nbhd.reserve(n);
  for (std::size_t x = 0; x < na; ++x) {
    PointSet s(n);
    a.nbhd(x).for_each([&](std::size_t y) { s.insert(y); });
    nbhd.push_back(std::move(s));
  }
  for (std::size_t x = 0; x < b.size(); ++x) {
    PointSet s(n);
    b.nbhd(x).for_each([&](std::size_t y) { s.insert(na + y); });
    nbhd.push_back(std::move(s));
  }

  std::vector<std::string> labels;
  if (a.has_labels() || b.has_labels()) {
    for (std::size_t x = 0; x < na; ++x) labels.push_back(a.label(x));
    for (std::size_t x = 0; x < b.size(); ++x) labels.push_back(b.label(x));
    if (!all_unique(labels)) {
      for (std::size_t x = 0; x < n; ++x) labels[x] = (x < na ? "l." : "r.") + labels[x];
      if (!all_unique(labels)) labels.clear();
    }
  }
  return detail::make_space_unchecked(std::move(nbhd), std::move(labels));
}

}  // namespace alex
