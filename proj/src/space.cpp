#include "alexandroff/space.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "alexandroff/error.hpp"
#include "refinement.hpp"

namespace alex {
namespace {

std::string describe(const PointSet& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  s.for_each([&](std::size_t x) {
    out << (first ? "" : ",") << x;
    first = false;
  });
  out << '}';
  return out.str();
}

void check_labels(std::size_t n, const std::vector<std::string>& labels) {
  if (labels.empty()) return;
  if (labels.size() != n)
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(n) + " labels, got " +
                                                std::to_string(labels.size()));
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw Error(ErrorCode::InvalidArgument, "duplicate label '" + l + "'");
}

void check_universe(const PointSet& s, std::size_t n) {
  if (s.universe() != n)
    throw Error(ErrorCode::InvalidArgument, "point set over " + std::to_string(s.universe()) +
                                                " points used with a carrier of " + std::to_string(n));
}

std::vector<PointSet> deduplicated(const SubsetFamily& family) {
  std::vector<PointSet> sets;
  std::unordered_set<PointSet> seen;
  for (const auto& s : family.sets) {
    check_universe(s, family.carrier_size);
    if (seen.insert(s).second) sets.push_back(s);
  }
  return sets;
}

}  // namespace

namespace detail {

Space make_space_unchecked(std::vector<PointSet> nbhd, std::vector<std::string> labels) {
  Space s;
  s.nbhd_ = std::move(nbhd);
  s.labels_ = std::move(labels);
  return s;
}

}  // namespace detail

std::string Space::label(std::size_t x) const {
  if (x >= size()) throw Error(ErrorCode::InvalidArgument, "point " + std::to_string(x) + " out of range");
  return labels_.empty() ? std::to_string(x) : labels_[x];
}

std::optional<std::size_t> Space::find(std::string_view label) const {
  for (std::size_t x = 0; x < size(); ++x)
    if (this->label(x) == label) return x;
  return std::nullopt;
}

Space Space::with_labels(std::vector<std::string> labels) const {
  check_labels(size(), labels);
  return detail::make_space_unchecked(nbhd_, std::move(labels));
}

PointSet Space::closure_down(const PointSet& s) const {
  PointSet out(size());
  s.for_each([&](std::size_t x) { out |= nbhd_[x]; });
  return out;
}

PointSet Space::up_set(std::size_t x) const {
  PointSet out(size());
  for (std::size_t z = 0; z < size(); ++z)
    if (nbhd_[z].contains(x)) out.insert(z);
  return out;
}

Space from_neighborhoods(std::size_t n, std::vector<PointSet> nbhd, std::vector<std::string> labels) {
  if (nbhd.size() != n)
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(n) + " neighborhoods, got " +
                                                std::to_string(nbhd.size()));
  for (const auto& s : nbhd) check_universe(s, n);
  check_labels(n, labels);
  for (std::size_t x = 0; x < n; ++x)
    if (!nbhd[x].contains(x))
      throw Error(ErrorCode::ReflexivityViolation,
                  "point " + std::to_string(x) + " is not in its own neighborhood", {x});
  for (std::size_t x = 0; x < n; ++x) {
    for (auto y = nbhd[x].first(); y < n; y = nbhd[x].next(y)) {
      if (!nbhd[y].is_subset_of(nbhd[x]))
        throw Error(ErrorCode::MinimalityViolation,
                    "point " + std::to_string(y) + " lies in S(" + std::to_string(x) + ") but S(" +
                        std::to_string(y) + ") is not contained in it",
                    {x, y});
    }
  }
  return detail::make_space_unchecked(std::move(nbhd), std::move(labels));
}

Space from_basis(const SubsetFamily& family) {
  const auto n = family.carrier_size;
  const auto sets = deduplicated(family);
  std::unordered_set<PointSet> members(sets.begin(), sets.end());
  std::vector<PointSet> nbhd;
  nbhd.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto m = PointSet::full(n);
    bool covered = false;
    for (const auto& s : sets) {
      if (!s.contains(x)) continue;
      m &= s;
      covered = true;
    }
    if (!covered)
      throw Error(ErrorCode::NotCovered, "no family member contains point " + std::to_string(x), {x});
    if (!members.contains(m))
      throw Error(ErrorCode::NoMinimalSet,
                  "the intersection " + describe(m) + " of the members containing point " +
                      std::to_string(x) + " is not a member",
                  {x});
    nbhd.push_back(std::move(m));
  }
  return from_neighborhoods(n, std::move(nbhd));
}

Space from_open_family(const SubsetFamily& family) {
  const auto n = family.carrier_size;
  const auto sets = deduplicated(family);
  std::unordered_set<PointSet> members(sets.begin(), sets.end());
  auto require = [&](const PointSet& s, const std::string& what) {
    if (!members.contains(s))
      throw Error(ErrorCode::NotATopology, "missing " + what + " " + describe(s), s.members());
  };
  require(PointSet(n), "empty set");
  require(PointSet::full(n), "full carrier");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      require(sets[i] | sets[j], "union of " + describe(sets[i]) + " and " + describe(sets[j]) + ":");
      require(sets[i] & sets[j],
              "intersection of " + describe(sets[i]) + " and " + describe(sets[j]) + ":");
    }
  }
  std::vector<PointSet> nbhd;
  nbhd.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto m = PointSet::full(n);
    for (const auto& s : sets)
      if (s.contains(x)) m &= s;
    nbhd.push_back(std::move(m));
  }
  return from_neighborhoods(n, std::move(nbhd));
}

Space from_preorder(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& leq) {
  std::vector<PointSet> down(n, PointSet(n));
  std::vector<PointSet> up(n, PointSet(n));
  for (auto [y, x] : leq) {
    if (y >= n || x >= n)
      throw Error(ErrorCode::InvalidArgument, "pair (" + std::to_string(y) + ", " + std::to_string(x) +
                                                  ") out of range");
    down[x].insert(y);
    up[y].insert(x);
  }
  for (std::size_t x = 0; x < n; ++x)
    if (!down[x].contains(x))
      throw Error(ErrorCode::NotReflexive, "missing pair (" + std::to_string(x) + ", " +
                                               std::to_string(x) + ")", {x});
  for (std::size_t x = 0; x < n; ++x) {
    for (auto y = up[x].first(); y < n; y = up[x].next(y)) {
      const auto missing = up[y] - up[x];
      if (const auto z = missing.first(); z < n)
        throw Error(ErrorCode::NotTransitive,
                    std::to_string(x) + " <= " + std::to_string(y) + " and " + std::to_string(y) +
                        " <= " + std::to_string(z) + " but not " + std::to_string(x) + " <= " +
                        std::to_string(z),
                    {x, y, z});
    }
  }
  return from_neighborhoods(n, std::move(down));
}

std::vector<std::pair<std::size_t, std::size_t>> specialization_pairs(const Space& space) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < space.size(); ++x)
    space.nbhd(x).for_each([&](std::size_t y) { out.emplace_back(y, x); });
  return out;
}

bool is_open(const Space& space, const PointSet& s) {
  check_universe(s, space.size());
  bool open = true;
  s.for_each([&](std::size_t x) { open = open && space.nbhd(x).is_subset_of(s); });
  return open;
}

std::vector<PointSet> open_sets(const Space& space, std::size_t limit) {
  const auto n = space.size();
  std::vector<PointSet> basis;
  {
    std::unordered_set<PointSet> seen;
    for (const auto& s : space.neighborhoods())
      if (seen.insert(s).second) basis.push_back(s);
  }
  std::vector<PointSet> out{PointSet(n)};
  std::unordered_set<PointSet> seen{out.front()};
  auto add = [&](PointSet s) {
    if (!seen.insert(s).second) return;
    if (out.size() == limit)
      throw Error(ErrorCode::TooManyOpenSets, "more than " + std::to_string(limit) + " open sets");
    out.push_back(std::move(s));
  };
  for (const auto& b : basis) {
    const auto existing = out.size();
    for (std::size_t i = 0; i < existing; ++i) add(out[i] | b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Space relabel(const Space& space, const std::vector<std::size_t>& perm) {
  const auto n = space.size();
  if (perm.size() != n) throw Error(ErrorCode::InvalidArgument, "permutation has the wrong length");
  std::vector<bool> hit(n, false);
  for (auto p : perm) {
    if (p >= n || hit[p]) throw Error(ErrorCode::InvalidArgument, "not a permutation");
    hit[p] = true;
  }
  std::vector<PointSet> nbhd(n, PointSet(n));
  std::vector<std::string> labels(space.has_labels() ? n : 0);
  for (std::size_t x = 0; x < n; ++x) {
    space.nbhd(x).for_each([&](std::size_t y) { nbhd[perm[x]].insert(perm[y]); });
    if (space.has_labels()) labels[perm[x]] = space.labels()[x];
  }
  return detail::make_space_unchecked(std::move(nbhd), std::move(labels));
}

namespace {

// Individualization-refinement over the fingerprint coloring, keeping the
// least relabeled neighborhood array found.
class CanonicalSearch {
public:
  static constexpr std::size_t kNodeBudget = std::size_t{1} << 14;

  explicit CanonicalSearch(const Space& space) : space_(space) {
    up_.reserve(space.size());
    for (std::size_t x = 0; x < space.size(); ++x) up_.push_back(space.up_set(x));
  }

  std::vector<std::size_t> run() {
    search(detail::refine_colors({&space_})[0]);
    return best_perm_;
  }

private:
  // Swapping x and y is an automorphism.
  bool twins(std::size_t x, std::size_t y) const {
    auto pair = PointSet(space_.size(), {x, y});
    if (space_.nbhd(x).contains(y) != space_.nbhd(y).contains(x)) return false;
    auto down_diff = (space_.nbhd(x) - space_.nbhd(y)) | (space_.nbhd(y) - space_.nbhd(x));
    auto up_diff = (up_[x] - up_[y]) | (up_[y] - up_[x]);
    return (down_diff - pair).empty() && (up_diff - pair).empty();
  }

  void search(const std::vector<std::size_t>& colors) {
    ++nodes_;
    const auto n = space_.size();
    if (detail::count_colors(colors) == n) {
      auto nbhd = relabel(space_, colors).neighborhoods();
      if (best_perm_.empty() || nbhd < best_nbhd_) {
        best_nbhd_ = std::move(nbhd);
        best_perm_ = colors;
      }
      return;
    }
    // first non-singleton cell
    std::vector<std::size_t> cell_size(n, 0);
    for (auto c : colors) ++cell_size[c];
    std::size_t target = 0;
    while (cell_size[target] < 2) ++target;

    std::vector<std::size_t> tried;
    for (std::size_t x = 0; x < n; ++x) {
      if (colors[x] != target) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](std::size_t t) { return twins(t, x); })) continue;
      if (!best_perm_.empty() && nodes_ >= kNodeBudget) return;
      tried.push_back(x);
      std::vector<std::size_t> split(n);
      for (std::size_t z = 0; z < n; ++z) split[z] = 2 * colors[z] + (colors[z] == target && z != x ? 1 : 0);
      search(detail::refine_colors(space_, std::move(split)));
    }
  }

  const Space& space_;
  std::vector<PointSet> up_;
  std::size_t nodes_ = 0;
  std::vector<std::size_t> best_perm_;
  std::vector<PointSet> best_nbhd_;
};

}  // namespace

std::vector<std::size_t> canonical_labeling(const Space& space) {
  if (space.size() == 0) return {};
  return CanonicalSearch(space).run();
}

Space canonical_form(const Space& space) {
  return relabel(space, canonical_labeling(space));
}

}  // namespace alex
