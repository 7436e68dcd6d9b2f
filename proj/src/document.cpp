#include "alexandroff/document.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>
#include <unordered_map>

#include "alexandroff/error.hpp"

namespace alex {
namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

Error syntax_error(std::size_t line, std::size_t column, const std::string& msg) {
  return Error(ErrorCode::SyntaxError,
               "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg,
               {line, column});
}

// Non-blank, non-comment lines split on runs of spaces and tabs.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    auto end = text.find('\n');
    auto raw = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] == ' ' || raw[i] == '\t') {
        ++i;
        continue;
      }
      if (line.tokens.empty() && raw[i] == '#') break;
      auto j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') ++j;
      line.tokens.push_back({raw.substr(i, j - i), i + 1});
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

std::string in_quotes(std::string_view s) { return "'" + std::string(s) + "'"; }

std::string set_text(const Space& space, const PointSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t x) {
    if (!first) out += ',';
    out += space.label(x);
    first = false;
  });
  return out + "}";
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  while (true) {
    auto pos = s.find(sep);
    parts.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) return parts;
    s.remove_prefix(pos + 1);
  }
}

std::size_t lookup(const Space& space, std::string_view label, std::size_t column) {
  if (auto x = space.find(label)) return *x;
  throw syntax_error(1, column, "unknown point " + in_quotes(label));
}

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

bool is_valid_label(std::string_view label) {
  if (label.empty()) return false;
  return std::none_of(label.begin(), label.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ':' || c == ',' || c == '|' ||
           c == '#' || c == '=';
  });
}

SpaceDocument parse_document(std::string_view text) {
  SpaceDocument doc;
  bool have_name = false;
  bool have_points = false;
  std::size_t points_line = 0;
  std::unordered_map<std::string_view, std::size_t> ids;
  std::vector<bool> defined;

  for (const auto& line : tokenize(text)) {
    const auto& head = line.tokens.front();
    if (head.text == "space") {
      if (have_name) throw syntax_error(line.number, head.column, "duplicate space record");
      if (line.tokens.size() != 2) throw syntax_error(line.number, head.column, "expected 'space NAME'");
      doc.name = std::string(line.tokens[1].text);
      have_name = true;
    } else if (head.text == "points") {
      if (!have_name) throw syntax_error(line.number, head.column, "points record before space record");
      if (have_points) throw syntax_error(line.number, head.column, "duplicate points record");
      have_points = true;
      points_line = line.number;
      for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        const auto& t = line.tokens[i];
        if (!is_valid_label(t.text)) throw syntax_error(line.number, t.column, "invalid label " + in_quotes(t.text));
        if (!ids.emplace(t.text, doc.points.size()).second)
          throw syntax_error(line.number, t.column, "duplicate label " + in_quotes(t.text));
        doc.points.emplace_back(t.text);
      }
      doc.neighborhoods.assign(doc.points.size(), {});
      defined.assign(doc.points.size(), false);
    } else if (head.text == "nbhd") {
      if (!have_points) throw syntax_error(line.number, head.column, "nbhd record before points record");
      if (line.tokens.size() < 2 || line.tokens[1].text.size() < 2 || line.tokens[1].text.back() != ':')
        throw syntax_error(line.number, head.column, "expected 'nbhd LABEL: MEMBERS'");
      const auto& owner_tok = line.tokens[1];
      auto owner_label = owner_tok.text.substr(0, owner_tok.text.size() - 1);
      auto owner = ids.find(owner_label);
      if (owner == ids.end())
        throw syntax_error(line.number, owner_tok.column, "undeclared point " + in_quotes(owner_label));
      if (defined[owner->second])
        throw syntax_error(line.number, owner_tok.column, "second nbhd record for " + in_quotes(owner_label));
      defined[owner->second] = true;

      std::vector<bool> member(doc.points.size(), false);
      for (std::size_t i = 2; i < line.tokens.size(); ++i) {
        const auto& t = line.tokens[i];
        auto it = ids.find(t.text);
        if (it == ids.end()) throw syntax_error(line.number, t.column, "undeclared point " + in_quotes(t.text));
        if (member[it->second]) throw syntax_error(line.number, t.column, "repeated member " + in_quotes(t.text));
        member[it->second] = true;
      }
      auto& out = doc.neighborhoods[owner->second];
      for (std::size_t y = 0; y < member.size(); ++y)
        if (member[y]) out.push_back(doc.points[y]);
    } else {
      throw syntax_error(line.number, head.column, "unknown record " + in_quotes(head.text));
    }
  }
  if (!have_name) throw syntax_error(1, 1, "missing space record");
  if (!have_points) throw syntax_error(1, 1, "missing points record");
  for (std::size_t x = 0; x < defined.size(); ++x)
    if (!defined[x]) throw syntax_error(points_line, 1, "no nbhd record for " + in_quotes(doc.points[x]));
  return doc;
}

std::string serialize(const SpaceDocument& doc) {
  std::unordered_map<std::string_view, std::size_t> ids;
  for (std::size_t i = 0; i < doc.points.size(); ++i) ids.emplace(doc.points[i], i);

  std::string out = "space " + doc.name + "\npoints";
  for (const auto& p : doc.points) out += " " + p;
  out += '\n';
  for (std::size_t i = 0; i < doc.points.size(); ++i) {
    auto members = i < doc.neighborhoods.size() ? doc.neighborhoods[i] : std::vector<std::string>{};
    std::sort(members.begin(), members.end(), [&](const std::string& a, const std::string& b) {
      return ids.at(a) < ids.at(b);
    });
    out += "nbhd " + doc.points[i] + ":";
    for (const auto& m : members) out += " " + m;
    out += '\n';
  }
  return out;
}

Space to_space(const SpaceDocument& doc) {
  const auto n = doc.points.size();
  std::unordered_map<std::string_view, std::size_t> ids;
  for (std::size_t i = 0; i < n; ++i)
    if (!ids.emplace(doc.points[i], i).second)
      throw Error(ErrorCode::ValidationError, "duplicate label " + in_quotes(doc.points[i]));
  if (doc.neighborhoods.size() != n)
    throw Error(ErrorCode::ValidationError, "document has " + std::to_string(doc.neighborhoods.size()) +
                                                " neighborhoods for " + std::to_string(n) + " points");
  std::vector<PointSet> nbhd(n, PointSet(n));
  for (std::size_t x = 0; x < n; ++x)
    for (const auto& m : doc.neighborhoods[x]) {
      auto it = ids.find(m);
      if (it == ids.end()) throw Error(ErrorCode::ValidationError, "undeclared point " + in_quotes(m));
      nbhd[x].insert(it->second);
    }
  try {
    return from_neighborhoods(n, std::move(nbhd), doc.points);
  } catch (const Error& e) {
    const auto& pts = e.points();
    switch (e.code()) {
      case ErrorCode::ReflexivityViolation:
        throw Error(ErrorCode::ValidationError,
                    "ReflexivityViolation: " + in_quotes(doc.points[pts[0]]) + " is not in its own neighborhood", pts);
      case ErrorCode::MinimalityViolation:
        throw Error(ErrorCode::ValidationError,
                    "MinimalityViolation: " + in_quotes(doc.points[pts[1]]) + " lies in S(" + doc.points[pts[0]] +
                        ") but S(" + doc.points[pts[1]] + ") is not contained in it",
                    pts);
      default:
        throw Error(ErrorCode::ValidationError, e.what(), pts);
    }
  }
}

SpaceDocument to_document(const Space& space, std::string name) {
  SpaceDocument doc;
  doc.name = std::move(name);
  for (std::size_t x = 0; x < space.size(); ++x) doc.points.push_back(space.label(x));
  for (std::size_t x = 0; x < space.size(); ++x) {
    std::vector<std::string> members;
    space.nbhd(x).for_each([&](std::size_t y) { members.push_back(doc.points[y]); });
    doc.neighborhoods.push_back(std::move(members));
  }
  return doc;
}

std::string to_dot(const Space& space, std::string_view name) {
  const auto n = space.size();
  // least point sharing each neighborhood
  std::vector<std::size_t> rep(n);
  for (std::size_t x = 0; x < n; ++x) {
    rep[x] = x;
    for (std::size_t y = 0; y < x; ++y)
      if (space.nbhd(y) == space.nbhd(x)) {
        rep[x] = y;
        break;
      }
  }

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  // cycle through each group of equivalent points
  for (std::size_t x = 0; x < n; ++x) {
    if (rep[x] != x) continue;
    std::vector<std::size_t> group;
    for (std::size_t y = x; y < n; ++y)
      if (rep[y] == x) group.push_back(y);
    if (group.size() < 2) continue;
    for (std::size_t i = 0; i < group.size(); ++i) edges.emplace_back(group[i], group[(i + 1) % group.size()]);
  }
  // covers between groups: S(y) ⊊ S(x) with nothing strictly between
  for (std::size_t x = 0; x < n; ++x) {
    if (rep[x] != x) continue;
    for (std::size_t y = 0; y < n; ++y) {
      if (rep[y] != y || !space.nbhd(x).contains(y) || space.nbhd(y) == space.nbhd(x)) continue;
      bool cover = true;
      for (std::size_t z = 0; z < n && cover; ++z) {
        if (rep[z] != z || z == x || z == y) continue;
        if (space.nbhd(x).contains(z) && space.nbhd(z).contains(y) && space.nbhd(z) != space.nbhd(x) &&
            space.nbhd(z) != space.nbhd(y))
          cover = false;
      }
      if (cover) edges.emplace_back(y, x);
    }
  }
  std::sort(edges.begin(), edges.end());

  std::ostringstream out;
  out << "digraph \"" << dot_escape(name) << "\" {\n";
  out << "  rankdir=BT;\n";
  for (std::size_t x = 0; x < n; ++x)
    out << "  n" << x << " [label=\"" << dot_escape(space.label(x)) << "\\n|S|=" << space.nbhd(x).count()
        << "\", shape=" << (is_basic(space, x) ? "doublecircle" : "circle") << "];\n";
  for (auto [from, to] : edges) out << "  n" << from << " -> n" << to << ";\n";
  out << "}\n";
  return out.str();
}

std::string format_report(const Space& space, const InvariantReport& r, std::string_view name) {
  auto sets = [&](const std::vector<PointSet>& v) {
    std::string s;
    for (const auto& p : v) s += (s.empty() ? "" : " ") + set_text(space, p);
    return s;
  };
  auto yes_no = [](bool b) { return std::string(b ? "yes" : "no"); };
  const std::vector<std::pair<std::string, std::string>> rows = {
      {"name", std::string(name)},
      {"points", std::to_string(r.n)},
      {"distinct_neighborhoods", std::to_string(r.distinct_neighborhoods)},
      {"min", std::to_string(r.min_x)},
      {"index", std::to_string(r.index_x)},
      {"maximal_nbhds", sets(r.maximal_nbhds)},
      {"basic_points", set_text(space, r.basic_points)},
      {"irreducible_points", set_text(space, r.irreducible_points)},
      {"discrete", yes_no(r.is_discrete)},
      {"hausdorff", yes_no(r.is_hausdorff)},
      {"t0", yes_no(r.is_t0)},
  };
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::ostringstream out;
  for (const auto& [k, v] : rows) out << std::setw(static_cast<int>(width)) << k << ": " << v << '\n';
  return out.str();
}

std::string format_census(const CensusRow& row) {
  std::ostringstream out;
  out << "n: " << row.n << '\n';
  out << "labeled: " << row.total_labeled << '\n';
  out << "classes: " << row.classes.size() << '\n';
  out << "class size min index neighborhoods\n";
  for (std::size_t i = 0; i < row.classes.size(); ++i) {
    const auto& c = row.classes[i];
    out << i << ' ' << c.size << ' ' << c.min_x << ' ' << c.index_x << ' ';
    const auto& rep = c.representative;
    for (std::size_t x = 0; x < rep.size(); ++x) {
      if (x != 0) out << '|';
      bool first = true;
      rep.nbhd(x).for_each([&](std::size_t y) {
        out << (first ? "" : ",") << y;
        first = false;
      });
    }
    if (rep.size() == 0) out << '-';
    out << '\n';
  }
  return out.str();
}

PointSet parse_point_list(const Space& space, std::string_view spec) {
  PointSet out(space.size());
  if (spec.empty()) return out;
  std::size_t column = 1;
  for (auto part : split(spec, ',')) {
    const auto x = lookup(space, part, column);
    if (out.contains(x)) throw syntax_error(1, column, "repeated point " + in_quotes(part));
    out.insert(x);
    column += part.size() + 1;
  }
  return out;
}

Partition parse_classes(const Space& space, std::string_view spec) {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<bool> listed(space.size(), false);
  std::size_t column = 1;
  if (!spec.empty()) {
    for (auto cls : split(spec, '|')) {
      std::vector<std::size_t> members;
      for (auto part : split(cls, ',')) {
        const auto x = lookup(space, part, column);
        if (listed[x]) throw syntax_error(1, column, "point " + in_quotes(part) + " listed twice");
        listed[x] = true;
        members.push_back(x);
        column += part.size() + 1;
      }
      classes.push_back(std::move(members));
    }
  }
  return Partition::from_classes(space.size(), classes);
}

std::vector<std::size_t> parse_map(const Space& source, const Space& target, std::string_view spec) {
  const auto none = target.size();
  std::vector<std::size_t> f(source.size(), none);
  std::size_t column = 1;
  if (!spec.empty()) {
    for (auto part : split(spec, ',')) {
      const auto colon = part.find(':');
      if (colon == std::string_view::npos) throw syntax_error(1, column, "expected 'SOURCE:TARGET'");
      const auto x = lookup(source, part.substr(0, colon), column);
      const auto y = lookup(target, part.substr(colon + 1), column + colon + 1);
      if (f[x] != none) throw syntax_error(1, column, "point " + in_quotes(part.substr(0, colon)) + " mapped twice");
      f[x] = y;
      column += part.size() + 1;
    }
  }
  for (std::size_t x = 0; x < f.size(); ++x)
    if (f[x] == none) throw syntax_error(1, column, "point " + in_quotes(source.label(x)) + " is not mapped");
  return f;
}

std::string format_map(const SpaceMap& m) {
  std::string out;
  for (std::size_t x = 0; x < m.source().size(); ++x) {
    if (x != 0) out += ',';
    out += m.source().label(x) + ":" + m.target().label(m(x));
  }
  return out;
}

GlueData parse_glue(const Space& x, const Space& y, std::string_view text) {
  GlueData g;
  for (const auto& line : tokenize(text)) {
    const auto& head = line.tokens.front();
    if (head.text != "piece") throw syntax_error(line.number, head.column, "unknown record " + in_quotes(head.text));
    if (line.tokens.size() < 3 || line.tokens[2].text.size() < 2 || line.tokens[2].text.back() != ':')
      throw syntax_error(line.number, head.column, "expected 'piece XREP YREP: p=q ...'");
    auto find_in = [&](const Space& s, std::string_view label, std::size_t column) {
      if (auto p = s.find(label)) return *p;
      throw syntax_error(line.number, column, "unknown point " + in_quotes(label));
    };
    GluePiece piece;
    piece.x_rep = find_in(x, line.tokens[1].text, line.tokens[1].column);
    const auto& ytok = line.tokens[2];
    piece.y_rep = find_in(y, ytok.text.substr(0, ytok.text.size() - 1), ytok.column);
    for (std::size_t i = 3; i < line.tokens.size(); ++i) {
      const auto& t = line.tokens[i];
      const auto eq = t.text.find('=');
      if (eq == std::string_view::npos) throw syntax_error(line.number, t.column, "expected 'p=q'");
      piece.local.emplace_back(find_in(x, t.text.substr(0, eq), t.column),
                               find_in(y, t.text.substr(eq + 1), t.column + eq + 1));
    }
    g.pieces.push_back(std::move(piece));
  }
  return g;
}

std::string serialize_glue(const Space& x, const Space& y, const GlueData& g) {
  std::string out;
  for (const auto& piece : g.pieces) {
    out += "piece " + x.label(piece.x_rep) + " " + y.label(piece.y_rep) + ":";
    for (auto [p, q] : piece.local) out += " " + x.label(p) + "=" + y.label(q);
    out += '\n';
  }
  return out;
}

}  // namespace alex
