#include "alexandroff/maps.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "alexandroff/constructions.hpp"
#include "alexandroff/error.hpp"
#include "refinement.hpp"

namespace alex {

SpaceMap::SpaceMap(Space source, Space target, std::vector<std::size_t> f)
    : source_(std::move(source)), target_(std::move(target)), f_(std::move(f)) {
  if (f_.size() != source_.size())
    throw Error(ErrorCode::InvalidArgument, "map has " + std::to_string(f_.size()) + " values for " +
                                                std::to_string(source_.size()) + " source points");
  for (std::size_t x = 0; x < f_.size(); ++x)
    if (f_[x] >= target_.size())
      throw Error(ErrorCode::InvalidArgument, "point " + std::to_string(x) + " maps outside the target", {x});
}

PointSet SpaceMap::image(const PointSet& s) const {
  PointSet out(target_.size());
  s.for_each([&](std::size_t x) { out.insert(f_[x]); });
  return out;
}

PointSet SpaceMap::image() const { return image(PointSet::full(source_.size())); }

PointSet SpaceMap::preimage(const PointSet& s) const {
  PointSet out(source_.size());
  for (std::size_t x = 0; x < f_.size(); ++x)
    if (s.contains(f_[x])) out.insert(x);
  return out;
}

namespace {

// First x with f(S(x)) ⊄ S(f(x)), or n when none.
std::size_t continuity_witness(const SpaceMap& m) {
  for (std::size_t x = 0; x < m.source().size(); ++x)
    if (!m.image(m.source().nbhd(x)).is_subset_of(m.target().nbhd(m(x)))) return x;
  return m.source().size();
}

std::size_t openness_witness(const SpaceMap& m) {
  const auto img = m.image();
  for (std::size_t x = 0; x < m.source().size(); ++x) {
    const auto fs = m.image(m.source().nbhd(x));
    bool open = true;
    fs.for_each([&](std::size_t y) { open = open && (m.target().nbhd(y) & img).is_subset_of(fs); });
    if (!open) return x;
  }
  return m.source().size();
}

}  // namespace

bool is_continuous(const SpaceMap& m) {
  bool preimages_open = true;
  for (std::size_t y = 0; y < m.target().size() && preimages_open; ++y)
    preimages_open = is_open(m.source(), m.preimage(m.target().nbhd(y)));
  const bool local = continuity_witness(m) == m.source().size();
  if (preimages_open != local)
    throw Error(ErrorCode::Internal, "continuity criteria disagree");
  return local;
}

bool is_open_map(const SpaceMap& m) { return openness_witness(m) == m.source().size(); }

bool is_homeomorphism(const SpaceMap& m) {
  const auto n = m.source().size();
  if (m.target().size() != n) return false;
  std::vector<std::size_t> inverse(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    if (inverse[m(x)] != n) return false;
    inverse[m(x)] = x;
  }
  return is_continuous(m) && is_continuous(SpaceMap(m.target(), m.source(), std::move(inverse)));
}

std::pair<Space, SpaceMap> image_space(const SpaceMap& m) {
  const auto n = m.source().size();
  if (auto x = continuity_witness(m); x < n)
    throw Error(ErrorCode::NotContinuous,
                "f(S(" + std::to_string(x) + ")) is not inside S(f(" + std::to_string(x) + "))", {x});
  if (auto x = openness_witness(m); x < n)
    throw Error(ErrorCode::NotOpen, "f(S(" + std::to_string(x) + ")) is not open in the image", {x});

  const auto img = m.image();
  auto sub = subspace(m.target(), img);
  std::vector<std::size_t> rank(m.target().size(), 0);
  std::size_t next = 0;
  img.for_each([&](std::size_t y) { rank[y] = next++; });
  std::vector<std::size_t> g(n);
  for (std::size_t x = 0; x < n; ++x) g[x] = rank[m(x)];
  SpaceMap onto(m.source(), sub, std::move(g));

  for (std::size_t x = 0; x < n; ++x)
    if (sub.nbhd(onto(x)) != onto.image(m.source().nbhd(x)))
      throw Error(ErrorCode::Internal, "S(f(x)) differs from f(S(x))", {x});
  return {std::move(sub), std::move(onto)};
}

namespace {

class HomeomorphismSearch {
public:
  HomeomorphismSearch(const Space& a, const Space& b, std::uint64_t budget)
      : a_(a), b_(b), budget_(budget), f_(a.size()), used_(b.size(), false) {
    auto colors = detail::refine_colors({&a, &b});
    color_a_ = std::move(colors[0]);
    color_b_ = std::move(colors[1]);
  }

  bool color_classes_match() const {
    auto ca = color_a_, cb = color_b_;
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    return ca == cb;
  }

  std::optional<std::vector<std::size_t>> run() {
    if (extend(0)) return f_;
    return std::nullopt;
  }

private:
  bool consistent(std::size_t x, std::size_t y) const {
    for (std::size_t p = 0; p < x; ++p) {
      const auto q = f_[p];
      if (a_.nbhd(x).contains(p) != b_.nbhd(y).contains(q)) return false;
      if (a_.nbhd(p).contains(x) != b_.nbhd(q).contains(y)) return false;
    }
    return a_.nbhd(x).contains(x) == b_.nbhd(y).contains(y);
  }

  bool extend(std::size_t x) {
    if (x == a_.size()) return true;
    for (std::size_t y = 0; y < b_.size(); ++y) {
      if (used_[y] || color_b_[y] != color_a_[x]) continue;
      if (++nodes_ > budget_)
        throw Error(ErrorCode::SearchBudgetExceeded,
                    "homeomorphism search exceeded " + std::to_string(budget_) + " nodes");
      if (!consistent(x, y)) continue;
      f_[x] = y;
      used_[y] = true;
      if (extend(x + 1)) return true;
      used_[y] = false;
    }
    return false;
  }

  const Space& a_;
  const Space& b_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> color_a_, color_b_;
  std::vector<std::size_t> f_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<SpaceMap> find_homeomorphism(const Space& a, const Space& b, const HomeomorphismOptions& options) {
  if (a.size() > options.max_points || b.size() > options.max_points)
    throw Error(ErrorCode::TooLarge, "homeomorphism search is limited to " +
                                         std::to_string(options.max_points) + " points");
  if (a.size() != b.size()) return std::nullopt;
  HomeomorphismSearch search(a, b, options.node_budget);
  if (!search.color_classes_match()) return std::nullopt;
  auto f = search.run();
  if (!f) return std::nullopt;
  SpaceMap h(a, b, std::move(*f));
  if (!is_homeomorphism(h)) throw Error(ErrorCode::Internal, "search returned a non-homeomorphism");
  return h;
}

SpaceMap glue(const Space& x, const Space& y, const GlueData& g) {
  const auto nx = x.size();
  const auto ny = y.size();
  auto invalid = [](const std::string& msg, std::vector<std::size_t> pts = {}) {
    return Error(ErrorCode::InvalidGlueData, msg, std::move(pts));
  };

  // (i): pieces match the distinct neighborhoods of X and of Y one-to-one
  std::unordered_map<PointSet, std::size_t> seen_x, seen_y;
  for (std::size_t i = 0; i < g.pieces.size(); ++i) {
    const auto& piece = g.pieces[i];
    if (piece.x_rep >= nx || piece.y_rep >= ny) throw invalid("piece " + std::to_string(i) + " names an unknown point");
    if (!seen_x.emplace(x.nbhd(piece.x_rep), i).second)
      throw invalid("S(" + x.label(piece.x_rep) + ") is listed twice", {piece.x_rep});
    if (!seen_y.emplace(y.nbhd(piece.y_rep), i).second)
      throw invalid("S(" + y.label(piece.y_rep) + ") is listed twice", {piece.y_rep});
  }
  for (std::size_t p = 0; p < nx; ++p)
    if (!seen_x.contains(x.nbhd(p))) throw invalid("S(" + x.label(p) + ") has no piece", {p});
  for (std::size_t q = 0; q < ny; ++q)
    if (!seen_y.contains(y.nbhd(q))) throw invalid("S(" + y.label(q) + ") is not matched", {q});

  // local maps are bijections S(x_rep) -> S(y_rep)
  std::vector<std::vector<std::size_t>> local(g.pieces.size(), std::vector<std::size_t>(nx, ny));
  for (std::size_t i = 0; i < g.pieces.size(); ++i) {
    const auto& piece = g.pieces[i];
    const auto& dom = x.nbhd(piece.x_rep);
    const auto& cod = y.nbhd(piece.y_rep);
    PointSet hit(ny);
    for (auto [p, q] : piece.local) {
      if (p >= nx || !dom.contains(p) || local[i][p] != ny)
        throw invalid("local map of piece " + std::to_string(i) + " has a bad entry for point " +
                      std::to_string(p), {p});
      if (q >= ny || !cod.contains(q) || hit.contains(q))
        throw invalid("local map of piece " + std::to_string(i) + " is not a bijection onto S(" +
                      y.label(piece.y_rep) + ")", {p});
      local[i][p] = q;
      hit.insert(q);
    }
    if (hit != cod || piece.local.size() != dom.count())
      throw invalid("local map of piece " + std::to_string(i) + " is not a bijection S(" +
                    x.label(piece.x_rep) + ") -> S(" + y.label(piece.y_rep) + ")", {piece.x_rep});
  }

  // pointwise agreement: h(p) = f_z(p) must not depend on z
  std::vector<std::size_t> h(nx, ny);
  for (std::size_t p = 0; p < nx; ++p) {
    for (std::size_t i = 0; i < g.pieces.size(); ++i) {
      if (local[i][p] == ny) continue;
      if (h[p] == ny) {
        h[p] = local[i][p];
      } else if (h[p] != local[i][p]) {
        throw Error(ErrorCode::NotWellDefined,
                    "local maps send " + x.label(p) + " to both " + y.label(h[p]) + " and " +
                        y.label(local[i][p]),
                    {p});
      }
    }
  }
  SpaceMap assembled(x, y, h);

  // (iii): overlaps go onto the overlaps of the matched neighborhoods
  for (std::size_t i = 0; i < g.pieces.size(); ++i)
    for (std::size_t j = i + 1; j < g.pieces.size(); ++j) {
      const auto& pi = g.pieces[i];
      const auto& pj = g.pieces[j];
      const auto overlap = x.nbhd(pi.x_rep) & x.nbhd(pj.x_rep);
      if (overlap.empty()) continue;
      if (assembled.image(overlap) != (y.nbhd(pi.y_rep) & y.nbhd(pj.y_rep)))
        throw Error(ErrorCode::OverlapMismatch,
                    "S(" + x.label(pi.x_rep) + ") ∩ S(" + x.label(pj.x_rep) +
                        ") is not carried onto the matching overlap",
                    {pi.x_rep, pj.x_rep});
    }

  // (ii): each local map is a homeomorphism of subspaces
  for (const auto& piece : g.pieces)
    x.nbhd(piece.x_rep).for_each([&](std::size_t p) {
      if (assembled.image(x.nbhd(p)) != y.nbhd(h[p]))
        throw invalid("local map at S(" + x.label(piece.x_rep) + ") is not a homeomorphism at " + x.label(p),
                      {piece.x_rep, p});
    });

  if (!is_homeomorphism(assembled))
    throw Error(ErrorCode::ResultNotHomeomorphism, "assembled map is not a homeomorphism");
  return assembled;
}

}  // namespace alex
