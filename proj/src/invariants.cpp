#include "alexandroff/invariants.hpp"

#include <string>
#include <unordered_set>

#include "alexandroff/error.hpp"

namespace alex {
namespace {

void require_points(const Space& s, std::size_t x) {
  if (x >= s.size())
    throw Error(ErrorCode::InvalidArgument, "point " + std::to_string(x) + " out of range", {x});
}

void require_nonempty(const Space& s, const char* what) {
  if (s.size() == 0) throw Error(ErrorCode::EmptySpace, std::string(what) + " of the empty space");
}

// Least point of each distinct neighborhood, ascending.
std::vector<std::size_t> representatives(const Space& s) {
  std::vector<std::size_t> reps;
  std::unordered_set<PointSet> seen;
  for (std::size_t x = 0; x < s.size(); ++x)
    if (seen.insert(s.nbhd(x)).second) reps.push_back(x);
  return reps;
}

}  // namespace

bool is_irreducible(const Space& s, std::size_t x) {
  require_points(s, x);
  // S(y) ⊆ S(x) exactly when y ∈ S(x)
  bool ok = true;
  s.nbhd(x).for_each([&](std::size_t y) { ok = ok && s.nbhd(y) == s.nbhd(x); });
  return ok;
}

bool is_basic(const Space& s, std::size_t x) {
  require_points(s, x);
  // With U = {y : x ∈ S(y)} = {y : S(x) ⊆ S(y)} the two clauses become
  //   every y in U has S(y) ⊆ U, and every y outside U has S(y) ∩ S(x) = ∅.
  const auto up = s.up_set(x);
  for (std::size_t y = 0; y < s.size(); ++y) {
    if (up.contains(y)) {
      if (!s.nbhd(y).is_subset_of(up)) return false;
    } else if (s.nbhd(y).intersects(s.nbhd(x))) {
      return false;
    }
  }
  return true;
}

MinCover min_of(const Space& s) {
  require_nonempty(s, "min");
  MinCover out;
  for (auto x : representatives(s)) {
    bool maximal = true;
    for (std::size_t y = 0; y < s.size() && maximal; ++y)
      maximal = !(s.nbhd(y).contains(x) && s.nbhd(y) != s.nbhd(x));
    if (maximal) out.cover.push_back(s.nbhd(x));
  }
  out.count = out.cover.size();
  return out;
}

std::size_t index_of(const Space& s) {
  require_nonempty(s, "index");
  std::size_t count = 0;
  for (auto x : representatives(s))
    if (is_basic(s, x)) ++count;
  return count;
}

bool is_hausdorff(const Space& s) {
  PointSet seen(s.size());
  for (const auto& nb : s.neighborhoods()) {
    if (nb.intersects(seen)) return false;
    seen |= nb;
  }
  return true;
}

bool is_discrete(const Space& s) {
  for (std::size_t x = 0; x < s.size(); ++x)
    if (s.nbhd(x).count() != 1) return false;
  return true;
}

bool is_t0(const Space& s) { return representatives(s).size() == s.size(); }

InvariantReport report(const Space& s) {
  require_nonempty(s, "report");
  InvariantReport r;
  r.n = s.size();
  const auto reps = representatives(s);
  r.distinct_neighborhoods = reps.size();
  auto cover = min_of(s);
  r.min_x = cover.count;
  r.maximal_nbhds = std::move(cover.cover);
  r.index_x = index_of(s);
  r.basic_points = PointSet(s.size());
  for (auto x : reps)
    if (is_basic(s, x)) r.basic_points.insert(x);
  r.irreducible_points = PointSet(s.size());
  for (std::size_t x = 0; x < s.size(); ++x)
    if (is_irreducible(s, x)) r.irreducible_points.insert(x);
  r.is_discrete = is_discrete(s);
  r.is_hausdorff = is_hausdorff(s);
  r.is_t0 = reps.size() == s.size();

  PointSet covered(s.size());
  for (const auto& m : r.maximal_nbhds) covered |= m;
  const bool consistent = r.index_x <= r.min_x && r.basic_points.is_subset_of(r.irreducible_points) &&
                          r.is_hausdorff == r.is_discrete && covered == PointSet::full(s.size()) &&
                          r.maximal_nbhds.size() == r.min_x;
  if (!consistent) throw Error(ErrorCode::Internal, "invariant report is inconsistent");
  return r;
}

}  // namespace alex
