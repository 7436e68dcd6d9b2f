#include "refinement.hpp"

#include <algorithm>
#include <map>

namespace alex::detail {
namespace {

using Signature = std::vector<std::size_t>;

Signature initial_signature(const Space& s, std::size_t x) {
  Signature sig{s.nbhd(x).count()};
  std::vector<std::size_t> sizes;
  s.nbhd(x).for_each([&](std::size_t y) { sizes.push_back(s.nbhd(y).count()); });
  std::sort(sizes.begin(), sizes.end());
  sig.insert(sig.end(), sizes.begin(), sizes.end());
  return sig;
}

Signature refined_signature(const Space& s, const std::vector<std::size_t>& colors, std::size_t x) {
  std::vector<std::size_t> down, up;
  s.nbhd(x).for_each([&](std::size_t y) { down.push_back(colors[y]); });
  s.up_set(x).for_each([&](std::size_t z) { up.push_back(colors[z]); });
  std::sort(down.begin(), down.end());
  std::sort(up.begin(), up.end());
  // separator-free encoding is unambiguous because the down list length is
  // recorded before it
  Signature sig{colors[x], down.size()};
  sig.insert(sig.end(), down.begin(), down.end());
  sig.insert(sig.end(), up.begin(), up.end());
  return sig;
}

// Replaces every signature by its rank among all distinct signatures.
std::vector<std::vector<std::size_t>> rank(const std::vector<std::vector<Signature>>& sigs) {
  std::map<Signature, std::size_t> ids;
  for (const auto& per_space : sigs)
    for (const auto& sig : per_space) ids.emplace(sig, 0);
  std::size_t next = 0;
  for (auto& [sig, id] : ids) id = next++;
  std::vector<std::vector<std::size_t>> out(sigs.size());
  for (std::size_t i = 0; i < sigs.size(); ++i)
    for (const auto& sig : sigs[i]) out[i].push_back(ids.at(sig));
  return out;
}

std::size_t total_colors(const std::vector<std::vector<std::size_t>>& colors) {
  std::size_t m = 0;
  bool any = false;
  for (const auto& c : colors)
    for (auto v : c) {
      m = std::max(m, v);
      any = true;
    }
  return any ? m + 1 : 0;
}

std::vector<std::vector<std::size_t>> refine_all(const std::vector<const Space*>& spaces,
                                                 std::vector<std::vector<std::size_t>> colors) {
  std::size_t classes = total_colors(colors);
  while (true) {
    std::vector<std::vector<Signature>> sigs(spaces.size());
    for (std::size_t i = 0; i < spaces.size(); ++i)
      for (std::size_t x = 0; x < spaces[i]->size(); ++x)
        sigs[i].push_back(refined_signature(*spaces[i], colors[i], x));
    auto next = rank(sigs);
    const std::size_t next_classes = total_colors(next);
    colors = std::move(next);
    if (next_classes == classes) return colors;
    classes = next_classes;
  }
}

}  // namespace

std::vector<std::size_t> initial_colors(const Space& space) {
  std::vector<std::vector<Signature>> sigs(1);
  for (std::size_t x = 0; x < space.size(); ++x) sigs[0].push_back(initial_signature(space, x));
  return rank(sigs)[0];
}

std::vector<std::vector<std::size_t>> refine_colors(const std::vector<const Space*>& spaces) {
  std::vector<std::vector<Signature>> sigs(spaces.size());
  for (std::size_t i = 0; i < spaces.size(); ++i)
    for (std::size_t x = 0; x < spaces[i]->size(); ++x)
      sigs[i].push_back(initial_signature(*spaces[i], x));
  return refine_all(spaces, rank(sigs));
}

std::vector<std::size_t> refine_colors(const Space& space, std::vector<std::size_t> colors) {
  auto distinct = colors;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (auto& c : colors)
    c = static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), c) - distinct.begin());
  return refine_all({&space}, {std::move(colors)})[0];
}

std::size_t count_colors(const std::vector<std::size_t>& colors) {
  return total_colors({colors});
}

}  // namespace alex::detail
