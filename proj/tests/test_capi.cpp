#include <cstring>
#include <memory>
#include <string>

#include "alexandroff/alexandroff.h"
#include "doctest.h"

extern "C" int capi_c_smoke(void);

namespace {

struct SpaceDeleter {
  void operator()(alex_space* s) const { alex_space_free(s); }
};
using SpacePtr = std::unique_ptr<alex_space, SpaceDeleter>;

SpacePtr parse(const char* text) {
  alex_space* s = nullptr;
  REQUIRE(alex_space_parse(text, &s) == ALEX_OK);
  return SpacePtr(s);
}

std::string take(char* text) {
  std::string out = text ? text : "";
  alex_string_free(text);
  return out;
}

std::string serialized(const alex_space* s) {
  char* text = nullptr;
  REQUIRE(alex_space_serialize(s, &text) == ALEX_OK);
  return take(text);
}

constexpr const char* kSierpinski = "space S\npoints a b\nnbhd a: a\nnbhd b: a b\n";
constexpr const char* kDiscrete = "space D\npoints x y\nnbhd x: x\nnbhd y: y\n";

}  // namespace

TEST_CASE("header compiles as C") { CHECK(capi_c_smoke() == 1); }

TEST_CASE("parse, name and serialize") {
  auto s = parse(kSierpinski);
  CHECK(alex_space_size(s.get()) == 2);
  CHECK(std::string(alex_space_name(s.get())) == "S");
  CHECK(alex_space_in_neighborhood(s.get(), 1, 0) == 1);
  CHECK(alex_space_in_neighborhood(s.get(), 0, 1) == 0);
  CHECK(alex_space_in_neighborhood(s.get(), 5, 0) == 0);
  CHECK(serialized(s.get()) == kSierpinski);
  CHECK(alex_space_set_name(s.get(), "T") == ALEX_OK);
  CHECK(serialized(s.get()).rfind("space T\n", 0) == 0);
  CHECK(alex_space_set_name(s.get(), "bad name") == ALEX_ERR_INVALID_ARGUMENT);
}

TEST_CASE("errors are reported through status and last error") {
  alex_space* s = nullptr;
  CHECK(alex_space_parse("space S\npoints a\nnbhd a: b\n", &s) == ALEX_ERR_SYNTAX);
  CHECK(s == nullptr);
  CHECK(std::string(alex_last_error()).find("'b'") != std::string::npos);
  CHECK(alex_space_parse("space S\npoints a b\nnbhd a: a b\nnbhd b: a\n", &s) == ALEX_ERR_VALIDATION);
  CHECK(alex_space_parse(nullptr, &s) == ALEX_ERR_INVALID_ARGUMENT);
  CHECK(std::string(alex_status_name(ALEX_ERR_NOT_WELL_DEFINED)) == "NotWellDefined");
  CHECK(std::string(alex_status_name(ALEX_OK)) == "Ok");
}

TEST_CASE("from membership matrix") {
  const unsigned char chain[] = {1, 0, 0, 1, 1, 0, 1, 1, 1};
  alex_space* s = nullptr;
  REQUIRE(alex_space_from_neighborhoods(3, chain, &s) == ALEX_OK);
  SpacePtr owned(s);
  alex_invariants inv{};
  REQUIRE(alex_invariants_compute(s, &inv) == ALEX_OK);
  CHECK(inv.points == 3);
  CHECK(inv.min == 1);
  CHECK(inv.index == 1);
  CHECK(inv.t0 == 1);
  int basic = -1;
  CHECK(alex_is_basic(s, 0, &basic) == ALEX_OK);
  CHECK(basic == 1);
  CHECK(alex_is_irreducible(s, 2, &basic) == ALEX_OK);
  CHECK(basic == 0);
  CHECK(alex_is_basic(s, 7, &basic) == ALEX_ERR_INVALID_ARGUMENT);

  const unsigned char bad[] = {1, 1, 1, 0};
  alex_space* t = nullptr;
  CHECK(alex_space_from_neighborhoods(2, bad, &t) == ALEX_ERR_REFLEXIVITY_VIOLATION);
}

TEST_CASE("constructions") {
  auto a = parse(kSierpinski);
  auto b = parse(kDiscrete);
  alex_space* out = nullptr;

  REQUIRE(alex_product(a.get(), b.get(), &out) == ALEX_OK);
  SpacePtr prod(out);
  CHECK(alex_space_size(out) == 4);
  CHECK(std::string(alex_space_name(out)) == "S_x_D");

  REQUIRE(alex_disjoint_sum(a.get(), b.get(), &out) == ALEX_OK);
  SpacePtr sum(out);
  CHECK(serialized(out) == "space S_plus_D\npoints a b x y\nnbhd a: a\nnbhd b: a b\nnbhd x: x\nnbhd y: y\n");

  REQUIRE(alex_subspace(a.get(), "b", &out) == ALEX_OK);
  SpacePtr sub(out);
  CHECK(serialized(out) == "space S_sub\npoints b\nnbhd b: b\n");
  CHECK(alex_subspace(a.get(), "q", &out) == ALEX_ERR_SYNTAX);

  REQUIRE(alex_quotient(a.get(), "a,b", &out) == ALEX_OK);
  SpacePtr quot(out);
  CHECK(alex_space_size(out) == 1);

  REQUIRE(alex_t0_quotient(a.get(), &out) == ALEX_OK);
  SpacePtr t0(out);
  CHECK(alex_space_size(out) == 2);
}

TEST_CASE("maps") {
  auto a = parse(kSierpinski);
  auto d = parse(kDiscrete);
  int cont = -1, open = -1;
  REQUIRE(alex_map_check(d.get(), a.get(), "x:a,y:b", &cont, &open) == ALEX_OK);
  CHECK(cont == 1);
  CHECK(open == 0);
  REQUIRE(alex_map_check(a.get(), d.get(), "a:x,b:y", &cont, &open) == ALEX_OK);
  CHECK(cont == 0);
  CHECK(alex_map_check(a.get(), d.get(), "a:x", &cont, &open) == ALEX_ERR_SYNTAX);

  alex_space* img = nullptr;
  REQUIRE(alex_image_space(a.get(), d.get(), "a:x,b:x", &img) == ALEX_OK);
  SpacePtr owned(img);
  CHECK(alex_space_size(img) == 1);
  CHECK(alex_image_space(d.get(), a.get(), "x:a,y:b", &img) == ALEX_ERR_NOT_OPEN);

  char* map = nullptr;
  REQUIRE(alex_find_homeomorphism(a.get(), a.get(), 0, &map) == ALEX_OK);
  CHECK(take(map) == "a:a,b:b");
  REQUIRE(alex_find_homeomorphism(a.get(), d.get(), 0, &map) == ALEX_OK);
  CHECK(map == nullptr);
}

TEST_CASE("glue") {
  auto a = parse(kSierpinski);
  char* map = nullptr;
  REQUIRE(alex_glue(a.get(), a.get(), "piece a a: a=a\npiece b b: a=a b=b\n", &map) == ALEX_OK);
  CHECK(take(map) == "a:a,b:b");
  CHECK(alex_glue(a.get(), a.get(), "piece a a: a=a\npiece b b: a=b b=a\n", &map) == ALEX_ERR_NOT_WELL_DEFINED);
  CHECK(alex_glue(a.get(), a.get(), "piece b b: a=a b=b\n", &map) == ALEX_ERR_INVALID_GLUE_DATA);
}

TEST_CASE("generators and census") {
  alex_gen_spec spec{};
  spec.kind = ALEX_GEN_DIVISOR;
  spec.size = 6;
  spec.with_top = 1;
  alex_space* s = nullptr;
  REQUIRE(alex_generate(&spec, &s) == ALEX_OK);
  SpacePtr owned(s);
  CHECK(alex_space_size(s) == 7);
  CHECK(std::string(alex_space_name(s)) == "divisor6top");
  alex_invariants inv{};
  REQUIRE(alex_invariants_compute(s, &inv) == ALEX_OK);
  CHECK(inv.min == 1);
  CHECK(inv.index == 1);

  spec.kind = ALEX_GEN_RANDOM;
  spec.size = 5;
  spec.seed = 9;
  spec.density_num = 3;
  spec.density_den = 2;
  CHECK(alex_generate(&spec, &s) == ALEX_ERR_INVALID_ARGUMENT);
  spec.kind = ALEX_GEN_CHAIN;
  spec.size = 0;
  CHECK(alex_generate(&spec, &s) == ALEX_ERR_INVALID_ARGUMENT);

  size_t labeled = 0, classes = 0;
  REQUIRE(alex_census_counts(3, &labeled, &classes) == ALEX_OK);
  CHECK(labeled == 29);
  CHECK(classes == 9);
  CHECK(alex_census_counts(6, &labeled, &classes) == ALEX_ERR_TOO_LARGE);

  char* text = nullptr;
  REQUIRE(alex_census_text(2, &text) == ALEX_OK);
  CHECK(take(text).find("labeled: 4\n") != std::string::npos);

  REQUIRE(alex_report_text(owned.get(), &text) == ALEX_OK);
  CHECK(take(text).find("   min: 1\n") != std::string::npos);
  REQUIRE(alex_space_to_dot(owned.get(), &text) == ALEX_OK);
  CHECK(take(text).rfind("digraph \"divisor6top\"", 0) == 0);
}
