// Command-line front end over the alexandroff C API.
//
// Exit codes: 0 success, 1 negative answer (not continuous, not homeomorphic,
// gluing hypotheses fail), 2 input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "alexandroff/alexandroff.h"

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

bool verbose = false;

struct SpaceDeleter {
  void operator()(alex_space* s) const { alex_space_free(s); }
};
using SpacePtr = std::unique_ptr<alex_space, SpaceDeleter>;

struct StringDeleter {
  void operator()(char* s) const { alex_string_free(s); }
};
using TextPtr = std::unique_ptr<char, StringDeleter>;

// Thrown to unwind with an exit code after the message has been printed.
struct Exit {
  int code;
};

[[noreturn]] void fail(alex_status status, int code = kInputError) {
  std::cerr << "error: " << alex_last_error() << '\n';
  if (verbose) std::cerr << "status: " << alex_status_name(status) << '\n';
  throw Exit{code};
}

void check(alex_status status) {
  if (status != ALEX_OK) fail(status);
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << path << '\n';
    throw Exit{kInputError};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SpacePtr load(const std::string& path) {
  alex_space* raw = nullptr;
  check(alex_space_parse(read_input(path).c_str(), &raw));
  if (verbose) std::cerr << "loaded " << path << ": " << alex_space_size(raw) << " points\n";
  return SpacePtr(raw);
}

void print(char* raw) {
  TextPtr text(raw);
  std::cout << text.get();
}

void emit(const SpacePtr& space) {
  char* text = nullptr;
  check(alex_space_serialize(space.get(), &text));
  print(text);
}

template <typename F>
SpacePtr build(F&& f) {
  alex_space* raw = nullptr;
  check(f(&raw));
  return SpacePtr(raw);
}

std::optional<alex_gen_kind> generator_kind(const std::string& name) {
  if (name == "chain") return ALEX_GEN_CHAIN;
  if (name == "blocks") return ALEX_GEN_BLOCKS;
  if (name == "divisor") return ALEX_GEN_DIVISOR;
  if (name == "discrete") return ALEX_GEN_DISCRETE;
  if (name == "indiscrete") return ALEX_GEN_INDISCRETE;
  if (name == "random") return ALEX_GEN_RANDOM;
  return std::nullopt;
}

[[noreturn]] void usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << '\n';
  throw Exit{kInputError};
}

std::uint64_t parse_uint(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    if (s.empty() || s.front() == '-') throw std::invalid_argument(s);
    auto v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    usage_error(std::string("invalid ") + what + " '" + s + "'");
  }
}

// "p/q" or a decimal such as "0.25".
std::pair<std::uint64_t, std::uint64_t> parse_density(const std::string& s) {
  if (auto slash = s.find('/'); slash != std::string::npos)
    return {parse_uint(s.substr(0, slash), "density"), parse_uint(s.substr(slash + 1), "density")};
  auto dot = s.find('.');
  if (dot == std::string::npos) return {parse_uint(s, "density"), 1};
  const auto frac = s.substr(dot + 1);
  if (frac.empty() || frac.size() > 18) usage_error("invalid density '" + s + "'");
  std::uint64_t den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  const auto whole = dot == 0 ? 0 : parse_uint(s.substr(0, dot), "density");
  return {whole * den + parse_uint(frac, "density"), den};
}

int run_gen(const std::string& kind_name, const std::vector<std::string>& params, bool top,
            const std::string& density) {
  auto kind = generator_kind(kind_name);
  if (!kind) usage_error("unknown generator '" + kind_name + "'");
  alex_gen_spec spec{};
  spec.kind = *kind;
  auto need = [&](std::size_t count, const char* form) {
    if (params.size() != count) usage_error(std::string("usage: gen ") + form);
  };
  switch (*kind) {
    case ALEX_GEN_BLOCKS:
      need(2, "blocks COUNT SIZE");
      spec.size = parse_uint(params[0], "block count");
      spec.block_size = parse_uint(params[1], "block size");
      break;
    case ALEX_GEN_RANDOM:
      need(2, "random N SEED [--density P]");
      spec.size = parse_uint(params[0], "size");
      spec.seed = parse_uint(params[1], "seed");
      std::tie(spec.density_num, spec.density_den) = parse_density(density);
      break;
    default:
      need(1, (kind_name + " N").c_str());
      spec.size = parse_uint(params[0], "size");
      break;
  }
  spec.with_top = top ? 1 : 0;
  emit(build([&](alex_space** out) { return alex_generate(&spec, out); }));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Alexandroff spaces: constructions, invariants, maps, census", "alexandroff"};
  app.require_subcommand(1);
  app.add_flag("-v,--verbose", verbose, "Print diagnostics to standard error");

  std::string file_a, file_b, points, classes, map, glue_file, gen_kind, density = "1/2";
  std::vector<std::string> gen_params;
  bool top = false;
  std::size_t census_n = 0, max_points = 10;

  auto* validate = app.add_subcommand("validate", "Check a space file");
  validate->add_option("FILE", file_a)->required();
  auto* report = app.add_subcommand("report", "Print min, index and the other invariants");
  report->add_option("FILE", file_a)->required();
  auto* product = app.add_subcommand("product", "Product space");
  product->add_option("FILE", file_a)->required();
  product->add_option("FILE2", file_b)->required();
  auto* subspace = app.add_subcommand("subspace", "Subspace on the listed points");
  subspace->add_option("FILE", file_a)->required();
  subspace->add_option("--points", points, "Comma-separated labels")->required();
  auto* quotient = app.add_subcommand("quotient", "Quotient by a partition");
  quotient->add_option("FILE", file_a)->required();
  quotient->add_option("--classes", classes, "Classes like \"a,b|c|d,e\"; unlisted points stay alone")
      ->required();
  auto* t0 = app.add_subcommand("t0", "Identify points with equal neighborhoods");
  t0->add_option("FILE", file_a)->required();
  auto* sum = app.add_subcommand("sum", "Disjoint sum");
  sum->add_option("FILE", file_a)->required();
  sum->add_option("FILE2", file_b)->required();
  auto* continuous = app.add_subcommand("continuous", "Test a map for continuity and openness");
  continuous->add_option("SRC", file_a)->required();
  continuous->add_option("DST", file_b)->required();
  continuous->add_option("--map", map, "Point map like \"a:x,b:y\"")->required();
  auto* homeo = app.add_subcommand("homeo", "Search for a homeomorphism");
  homeo->add_option("FILE", file_a)->required();
  homeo->add_option("FILE2", file_b)->required();
  homeo->add_option("--max-points", max_points, "Largest carrier searched")->capture_default_str();
  auto* glue = app.add_subcommand("glue", "Assemble a homeomorphism from local maps");
  glue->add_option("FILE", file_a)->required();
  glue->add_option("FILE2", file_b)->required();
  glue->add_option("--data", glue_file, "Gluing data file")->required();
  auto* gen = app.add_subcommand("gen", "Generate a stock space");
  gen->add_option("KIND", gen_kind, "chain, blocks, divisor, discrete, indiscrete or random")->required();
  gen->add_option("PARAMS", gen_params, "Sizes (and seed for random)");
  gen->add_flag("--top", top, "divisor: adjoin a point whose neighborhood is everything");
  gen->add_option("--density", density, "random: relation probability, p/q or decimal")->capture_default_str();
  auto* census = app.add_subcommand("census", "Classify all spaces on N <= 5 points");
  census->add_option("N", census_n)->required();
  auto* dot = app.add_subcommand("dot", "Graphviz rendering of the specialization order");
  dot->add_option("FILE", file_a)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kInputError;
  }

  try {
    if (validate->parsed()) {
      auto s = load(file_a);
      const auto n = alex_space_size(s.get());
      std::cout << "valid: " << alex_space_name(s.get()) << " (" << n << (n == 1 ? " point)\n" : " points)\n");
    } else if (report->parsed()) {
      auto s = load(file_a);
      char* text = nullptr;
      check(alex_report_text(s.get(), &text));
      print(text);
    } else if (product->parsed()) {
      auto a = load(file_a);
      auto b = load(file_b);
      emit(build([&](alex_space** out) { return alex_product(a.get(), b.get(), out); }));
    } else if (subspace->parsed()) {
      auto s = load(file_a);
      emit(build([&](alex_space** out) { return alex_subspace(s.get(), points.c_str(), out); }));
    } else if (quotient->parsed()) {
      auto s = load(file_a);
      emit(build([&](alex_space** out) { return alex_quotient(s.get(), classes.c_str(), out); }));
    } else if (t0->parsed()) {
      auto s = load(file_a);
      emit(build([&](alex_space** out) { return alex_t0_quotient(s.get(), out); }));
    } else if (sum->parsed()) {
      auto a = load(file_a);
      auto b = load(file_b);
      emit(build([&](alex_space** out) { return alex_disjoint_sum(a.get(), b.get(), out); }));
    } else if (continuous->parsed()) {
      auto a = load(file_a);
      auto b = load(file_b);
      int is_cont = 0, is_open = 0;
      check(alex_map_check(a.get(), b.get(), map.c_str(), &is_cont, &is_open));
      std::cout << "continuous: " << (is_cont ? "yes" : "no") << '\n'
                << "open: " << (is_open ? "yes" : "no") << '\n';
      return is_cont ? kOk : kNegative;
    } else if (homeo->parsed()) {
      auto a = load(file_a);
      auto b = load(file_b);
      char* text = nullptr;
      check(alex_find_homeomorphism(a.get(), b.get(), max_points, &text));
      if (text == nullptr) {
        std::cout << "not homeomorphic\n";
        return kNegative;
      }
      print(text);
      std::cout << '\n';
    } else if (glue->parsed()) {
      auto a = load(file_a);
      auto b = load(file_b);
      char* text = nullptr;
      const auto status = alex_glue(a.get(), b.get(), read_input(glue_file).c_str(), &text);
      if (status == ALEX_ERR_NOT_WELL_DEFINED || status == ALEX_ERR_OVERLAP_MISMATCH ||
          status == ALEX_ERR_RESULT_NOT_HOMEOMORPHISM)
        fail(status, kNegative);
      check(status);
      print(text);
      std::cout << '\n';
    } else if (gen->parsed()) {
      return run_gen(gen_kind, gen_params, top, density);
    } else if (census->parsed()) {
      char* text = nullptr;
      check(alex_census_text(census_n, &text));
      print(text);
    } else if (dot->parsed()) {
      auto s = load(file_a);
      char* text = nullptr;
      check(alex_space_to_dot(s.get(), &text));
      print(text);
    }
  } catch (const Exit& e) {
    return e.code;
  }
  return kOk;
}
