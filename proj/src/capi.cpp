#include "alexandroff/alexandroff.h"

#include <cstring>
#include <new>
#include <string>

#include "alexandroff/census.hpp"
#include "alexandroff/constructions.hpp"
#include "alexandroff/document.hpp"
#include "alexandroff/error.hpp"
#include "alexandroff/generators.hpp"
#include "alexandroff/invariants.hpp"
#include "alexandroff/maps.hpp"

struct alex_space {
  alex::Space space;
  std::string name;
};

namespace {

using alex::Error;
using alex::ErrorCode;

static_assert(static_cast<int>(ErrorCode::ReflexivityViolation) + 1 == ALEX_ERR_REFLEXIVITY_VIOLATION);
static_assert(static_cast<int>(ErrorCode::TooManyOpenSets) + 1 == ALEX_ERR_TOO_MANY_OPEN_SETS);
static_assert(static_cast<int>(ErrorCode::ResultNotHomeomorphism) + 1 == ALEX_ERR_RESULT_NOT_HOMEOMORPHISM);
static_assert(static_cast<int>(ErrorCode::SyntaxError) + 1 == ALEX_ERR_SYNTAX);
static_assert(static_cast<int>(ErrorCode::Internal) + 1 == ALEX_ERR_INTERNAL);

thread_local std::string last_error;

alex_status fail(alex_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename F>
alex_status guarded(F&& body) noexcept {
  try {
    body();
    return ALEX_OK;
  } catch (const Error& e) {
    return fail(static_cast<alex_status>(static_cast<int>(e.code()) + 1), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ALEX_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ALEX_ERR_INTERNAL, e.what());
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

char* duplicate(const std::string& s) {
  auto* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

alex_space* wrap(alex::Space space, std::string name) {
  return new alex_space{std::move(space), std::move(name)};
}

}  // namespace

extern "C" {

const char* alex_status_name(alex_status status) {
  if (status == ALEX_OK) return "Ok";
  if (status < ALEX_OK || status > ALEX_ERR_INTERNAL) return "Unknown";
  return alex::to_string(static_cast<ErrorCode>(static_cast<int>(status) - 1));
}

const char* alex_last_error(void) { return last_error.c_str(); }

void alex_string_free(char* text) { delete[] text; }

void alex_space_free(alex_space* space) { delete space; }

alex_status alex_space_parse(const char* text, alex_space** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    auto doc = alex::parse_document(text);
    auto space = alex::to_space(doc);
    *out = wrap(std::move(space), std::move(doc.name));
  });
}

alex_status alex_space_serialize(const alex_space* space, char** out) {
  return guarded([&] {
    require(space, "space");
    require(out, "out");
    *out = duplicate(alex::serialize(alex::to_document(space->space, space->name)));
  });
}

alex_status alex_space_from_neighborhoods(size_t n, const unsigned char* membership, alex_space** out) {
  return guarded([&] {
    require(out, "out");
    if (n > 0) require(membership, "membership");
    std::vector<alex::PointSet> nbhd(n, alex::PointSet(n));
    for (size_t x = 0; x < n; ++x)
      for (size_t y = 0; y < n; ++y)
        if (membership[x * n + y] != 0) nbhd[x].insert(y);
    *out = wrap(alex::from_neighborhoods(n, std::move(nbhd)), "space");
  });
}

size_t alex_space_size(const alex_space* space) { return space == nullptr ? 0 : space->space.size(); }

const char* alex_space_name(const alex_space* space) { return space == nullptr ? "" : space->name.c_str(); }

alex_status alex_space_set_name(alex_space* space, const char* name) {
  return guarded([&] {
    require(space, "space");
    require(name, "name");
    if (!alex::is_valid_label(name)) throw Error(ErrorCode::InvalidArgument, "invalid space name");
    space->name = name;
  });
}

int alex_space_in_neighborhood(const alex_space* space, size_t x, size_t y) {
  if (space == nullptr || x >= space->space.size() || y >= space->space.size()) return 0;
  return space->space.nbhd(x).contains(y) ? 1 : 0;
}

alex_status alex_space_to_dot(const alex_space* space, char** out) {
  return guarded([&] {
    require(space, "space");
    require(out, "out");
    *out = duplicate(alex::to_dot(space->space, space->name));
  });
}

alex_status alex_product(const alex_space* a, const alex_space* b, alex_space** out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = wrap(alex::product(a->space, b->space), a->name + "_x_" + b->name);
  });
}

alex_status alex_disjoint_sum(const alex_space* a, const alex_space* b, alex_space** out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = wrap(alex::disjoint_sum(a->space, b->space), a->name + "_plus_" + b->name);
  });
}

alex_status alex_subspace(const alex_space* space, const char* points, alex_space** out) {
  return guarded([&] {
    require(space, "space");
    require(points, "points");
    require(out, "out");
    auto subset = alex::parse_point_list(space->space, points);
    *out = wrap(alex::subspace(space->space, subset), space->name + "_sub");
  });
}

alex_status alex_quotient(const alex_space* space, const char* classes, alex_space** out) {
  return guarded([&] {
    require(space, "space");
    require(classes, "classes");
    require(out, "out");
    auto p = alex::parse_classes(space->space, classes);
    *out = wrap(alex::quotient(space->space, p), space->name + "_quot");
  });
}

alex_status alex_t0_quotient(const alex_space* space, alex_space** out) {
  return guarded([&] {
    require(space, "space");
    require(out, "out");
    *out = wrap(alex::t0_quotient(space->space).first, space->name + "_t0");
  });
}

alex_status alex_invariants_compute(const alex_space* space, alex_invariants* out) {
  return guarded([&] {
    require(space, "space");
    require(out, "out");
    const auto r = alex::report(space->space);
    *out = alex_invariants{r.n, r.distinct_neighborhoods, r.min_x, r.index_x,
                           r.is_discrete ? 1 : 0, r.is_hausdorff ? 1 : 0, r.is_t0 ? 1 : 0};
  });
}

alex_status alex_report_text(const alex_space* space, char** out) {
  return guarded([&] {
    require(space, "space");
    require(out, "out");
    *out = duplicate(alex::format_report(space->space, alex::report(space->space), space->name));
  });
}

alex_status alex_is_basic(const alex_space* space, size_t x, int* out) {
  return guarded([&] {
    require(space, "space");
    require(out, "out");
    *out = alex::is_basic(space->space, x) ? 1 : 0;
  });
}

alex_status alex_is_irreducible(const alex_space* space, size_t x, int* out) {
  return guarded([&] {
    require(space, "space");
    require(out, "out");
    *out = alex::is_irreducible(space->space, x) ? 1 : 0;
  });
}

alex_status alex_map_check(const alex_space* source, const alex_space* target, const char* map, int* continuous,
                           int* open) {
  return guarded([&] {
    require(source, "source");
    require(target, "target");
    require(map, "map");
    alex::SpaceMap m(source->space, target->space, alex::parse_map(source->space, target->space, map));
    const bool c = alex::is_continuous(m);
    const bool o = alex::is_open_map(m);
    if (continuous != nullptr) *continuous = c ? 1 : 0;
    if (open != nullptr) *open = o ? 1 : 0;
  });
}

alex_status alex_image_space(const alex_space* source, const alex_space* target, const char* map,
                             alex_space** out) {
  return guarded([&] {
    require(source, "source");
    require(target, "target");
    require(map, "map");
    require(out, "out");
    alex::SpaceMap m(source->space, target->space, alex::parse_map(source->space, target->space, map));
    *out = wrap(alex::image_space(m).first, target->name + "_image");
  });
}

alex_status alex_find_homeomorphism(const alex_space* a, const alex_space* b, size_t max_points, char** out_map) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out_map, "out_map");
    alex::HomeomorphismOptions options;
    if (max_points != 0) options.max_points = max_points;
    auto h = alex::find_homeomorphism(a->space, b->space, options);
    *out_map = h ? duplicate(alex::format_map(*h)) : nullptr;
  });
}

alex_status alex_glue(const alex_space* x, const alex_space* y, const char* glue_text, char** out_map) {
  return guarded([&] {
    require(x, "x");
    require(y, "y");
    require(glue_text, "glue_text");
    require(out_map, "out_map");
    auto h = alex::glue(x->space, y->space, alex::parse_glue(x->space, y->space, glue_text));
    *out_map = duplicate(alex::format_map(h));
  });
}

alex_status alex_generate(const alex_gen_spec* spec, alex_space** out) {
  return guarded([&] {
    require(spec, "spec");
    require(out, "out");
    alex::GeneratorSpec g;
    g.size = spec->size;
    g.block_size = spec->block_size;
    g.with_top = spec->with_top != 0;
    g.seed = spec->seed;
    g.density = {spec->density_num, spec->density_den};
    std::string name;
    const auto n = std::to_string(spec->size);
    switch (spec->kind) {
      case ALEX_GEN_CHAIN: g.kind = alex::GeneratorKind::Chain; name = "chain" + n; break;
      case ALEX_GEN_BLOCKS:
        g.kind = alex::GeneratorKind::Blocks;
        name = "blocks" + n + "x" + std::to_string(spec->block_size);
        break;
      case ALEX_GEN_DIVISOR:
        g.kind = alex::GeneratorKind::Divisor;
        name = "divisor" + n + (spec->with_top ? "top" : "");
        break;
      case ALEX_GEN_DISCRETE: g.kind = alex::GeneratorKind::Discrete; name = "discrete" + n; break;
      case ALEX_GEN_INDISCRETE: g.kind = alex::GeneratorKind::Indiscrete; name = "indiscrete" + n; break;
      case ALEX_GEN_RANDOM:
        g.kind = alex::GeneratorKind::Random;
        name = "random" + n + "s" + std::to_string(spec->seed);
        break;
      default: throw Error(ErrorCode::InvalidArgument, "unknown generator kind");
    }
    *out = wrap(alex::generate(g), std::move(name));
  });
}

alex_status alex_census_counts(size_t n, size_t* labeled, size_t* classes) {
  return guarded([&] {
    const auto row = alex::census(n);
    if (labeled != nullptr) *labeled = row.total_labeled;
    if (classes != nullptr) *classes = row.classes.size();
  });
}

alex_status alex_census_text(size_t n, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = duplicate(alex::format_census(alex::census(n)));
  });
}

}  // extern "C"
