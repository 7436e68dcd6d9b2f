#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "alexandroff/census.hpp"
#include "alexandroff/constructions.hpp"
#include "alexandroff/invariants.hpp"
#include "alexandroff/maps.hpp"
#include "alexandroff/space.hpp"

namespace alex {

// Text form of a space:
//
//   # comment
//   space NAME
//   points L1 L2 ...
//   nbhd L1: M1 M2 ...
//
// One record per line, tokens separated by spaces, one nbhd record per point.
// Labels are non-empty and may not contain whitespace or any of : , | # =
struct SpaceDocument {
  std::string name;
  std::vector<std::string> points;
  // neighborhoods[i] lists the members of S(points[i]), in point order.
  std::vector<std::vector<std::string>> neighborhoods;

  friend bool operator==(const SpaceDocument&, const SpaceDocument&) = default;
};

bool is_valid_label(std::string_view label);

// Throws SyntaxError; Error::points() holds {line, column}, both 1-based.
SpaceDocument parse_document(std::string_view text);
std::string serialize(const SpaceDocument& doc);

// Validates through from_neighborhoods; core failures are rethrown as
// ValidationError naming the offending labels.
Space to_space(const SpaceDocument& doc);
SpaceDocument to_document(const Space& space, std::string name);

// Directed graph of the specialization order: an edge y -> x for each cover
// y < x, a cycle through each group of points sharing one neighborhood, basic
// points double-circled.
std::string to_dot(const Space& space, std::string_view name);

// Right-aligned "key: value" lines.
std::string format_report(const Space& space, const InvariantReport& r, std::string_view name);
std::string format_census(const CensusRow& row);

// "a,b,c" -> the set of those points.
PointSet parse_point_list(const Space& space, std::string_view spec);
// "a,b|c|d,e" -> partition; unlisted points are singleton classes.
Partition parse_classes(const Space& space, std::string_view spec);
// "a:x,b:y" -> value array; every source point must appear exactly once.
std::vector<std::size_t> parse_map(const Space& source, const Space& target, std::string_view spec);
std::string format_map(const SpaceMap& m);

// Gluing data against two labeled spaces, one record per line:
//
//   piece XREP YREP: p1=q1 p2=q2 ...
//
// mapping each member of S(XREP) to a member of S(YREP).
GlueData parse_glue(const Space& x, const Space& y, std::string_view text);
std::string serialize_glue(const Space& x, const Space& y, const GlueData& g);

}  // namespace alex
