#include "hypermod/matio.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace hypermod {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(line == 0 ? message
                                   : "line " + std::to_string(line) +
                                         (column == 0 ? "" : ", column " + std::to_string(column)) +
                                         ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

/// Splits into non-blank lines of whitespace-separated tokens, comments
/// removed.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      const std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      if (i > start) line.tokens.push_back({raw.substr(start, i - start), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

std::int64_t parse_integer(const Line& line, const Token& tok) {
  std::int64_t value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line.number, tok.column, "expected an integer, got '" + std::string(tok.text) + "'");
  }
  return value;
}

std::size_t parse_count(const Line& line, const Token& tok) {
  const std::int64_t v = parse_integer(line, tok);
  if (v < 0) throw ParseError(line.number, tok.column, "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

/// "keyword <value>" header line.
const Line& header(const std::vector<Line>& lines, std::size_t index, std::string_view keyword) {
  if (index >= lines.size()) {
    throw ParseError(lines.empty() ? 1 : lines.back().number + 1, 0,
                     "missing '" + std::string(keyword) + "' line");
  }
  const Line& line = lines[index];
  if (line.tokens.front().text != keyword) {
    throw ParseError(line.number, line.tokens.front().column,
                     "expected '" + std::string(keyword) + "', got '" +
                         std::string(line.tokens.front().text) + "'");
  }
  if (line.tokens.size() != 2) {
    throw ParseError(line.number, 0, "'" + std::string(keyword) + "' takes exactly one value");
  }
  return line;
}

void check_name(const std::string& name) {
  if (name.empty() || name.find_first_of(" \t\r\n#") != std::string::npos) {
    throw std::invalid_argument("document name must be a single token without '#', got '" + name + "'");
  }
}

}  // namespace

MatroidDocument parse_matroid_document(std::string_view text, const ParseOptions& options) {
  const auto lines = tokenize(text);
  const std::string name(header(lines, 0, "matroid").tokens[1].text);
  const Line& ground_line = header(lines, 1, "ground");
  const std::size_t n = parse_count(ground_line, ground_line.tokens[1]);
  const Line& rank_line = header(lines, 2, "rank");
  const std::size_t r = parse_count(rank_line, rank_line.tokens[1]);
  if (n > ElementSet::kCapacity) {
    throw ParseError(ground_line.number, ground_line.tokens[1].column,
                     "ground size exceeds capacity " + std::to_string(ElementSet::kCapacity));
  }
  if (r > n) {
    throw ParseError(rank_line.number, rank_line.tokens[1].column, "rank exceeds ground size");
  }

  std::vector<std::vector<ElementSet>> graded(r + 1);
  std::set<ElementSet> seen;
  for (std::size_t i = 3; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const Token& key = line.tokens.front();
    if (key.text != "flat") {
      throw ParseError(line.number, key.column, "expected 'flat', got '" + std::string(key.text) + "'");
    }
    if (line.tokens.size() < 2 || line.tokens[1].text.empty() || line.tokens[1].text.back() != ':') {
      throw ParseError(line.number, line.tokens.size() < 2 ? 0 : line.tokens[1].column,
                       "expected 'flat <grade>:'");
    }
    Token grade_tok = line.tokens[1];
    grade_tok.text.remove_suffix(1);
    const std::size_t grade = parse_count(line, grade_tok);
    if (grade > r) {
      throw ParseError(line.number, grade_tok.column,
                       "grade " + std::to_string(grade) + " exceeds declared rank " + std::to_string(r));
    }
    ElementSet flat;
    for (std::size_t t = 2; t < line.tokens.size(); ++t) {
      const std::size_t e = parse_count(line, line.tokens[t]);
      if (e >= n) {
        throw ParseError(line.number, line.tokens[t].column,
                         "element " + std::to_string(e) + " outside ground set of size " + std::to_string(n));
      }
      if (flat.contains(e)) {
        throw ParseError(line.number, line.tokens[t].column, "element " + std::to_string(e) + " repeated");
      }
      flat.insert(e);
    }
    if (!seen.insert(flat).second) throw ParseError(line.number, 0, "flat " + flat.to_string() + " listed twice");
    graded[grade].push_back(flat);
  }

  const ElementSet full = ElementSet::full(n);
  const std::size_t end_line = lines.back().number;
  if (graded[r].size() != 1 || graded[r].front() != full) {
    throw ParseError(end_line, 0, "missing rank-" + std::to_string(r) + " flat E (exactly the ground set)");
  }
  if (graded[0].size() != 1) {
    throw ParseError(end_line, 0, "grade 0 must hold exactly one flat, found " + std::to_string(graded[0].size()));
  }

  std::optional<Matroid> matroid;
  try {
    matroid.emplace(n, std::move(graded));
  } catch (const std::exception& e) {
    throw ParseError(0, 0, e.what());
  }
  MatroidDocument doc{name, std::move(*matroid)};
  if (options.verify_axioms) {
    const AxiomReport report = verify_flat_axioms(doc.matroid);
    if (!report.passed()) {
      const auto& v = report.violations.front();
      std::string witnesses;
      for (const auto& w : v.witnesses) witnesses += " " + w.to_string();
      throw ParseError(0, 0,
                       "axiom failure " + v.axiom + ": " + v.explanation + " (witness" + witnesses + "); " +
                           std::to_string(report.total_violations) + " violation(s) in total");
    }
  }
  return doc;
}

Matroid parse_matroid(std::string_view text, const ParseOptions& options) {
  return parse_matroid_document(text, options).matroid;
}

std::string serialize_matroid(const Matroid& m, const std::string& name) {
  check_name(name);
  std::ostringstream os;
  os << "matroid " << name << '\n' << "ground " << m.ground_size() << '\n' << "rank " << m.rank() << '\n';
  for (int k = 0; k <= m.rank(); ++k) {
    for (const auto& f : m.flats_of_rank(k)) {
      os << "flat " << k << ':';
      f.for_each([&](Element e) { os << ' ' << e; });
      os << '\n';
    }
  }
  return os.str();
}

PointsDocument parse_points_document(std::string_view text) {
  const auto lines = tokenize(text);
  const std::string name(header(lines, 0, "points").tokens[1].text);
  const Line& field_line = header(lines, 1, "field");
  const std::int64_t prime = parse_integer(field_line, field_line.tokens[1]);
  if (!is_prime(prime)) {
    throw ParseError(field_line.number, field_line.tokens[1].column,
                     "field order " + std::to_string(prime) + " is not prime");
  }
  const Line& dim_line = header(lines, 2, "dim");
  const std::size_t dim = parse_count(dim_line, dim_line.tokens[1]);
  if (dim == 0) throw ParseError(dim_line.number, dim_line.tokens[1].column, "dimension must be positive");

  PointConfig cfg{prime, dim, {}};
  for (std::size_t i = 3; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.front().text != "point:") {
      throw ParseError(line.number, line.tokens.front().column,
                       "expected 'point:', got '" + std::string(line.tokens.front().text) + "'");
    }
    if (line.tokens.size() - 1 != dim) {
      throw ParseError(line.number, 0,
                       "point has " + std::to_string(line.tokens.size() - 1) + " coordinates, expected " +
                           std::to_string(dim));
    }
    PointVector v;
    bool nonzero = false;
    for (std::size_t t = 1; t < line.tokens.size(); ++t) {
      const std::int64_t c = parse_integer(line, line.tokens[t]);
      nonzero = nonzero || (c % prime) != 0;
      v.push_back(c);
    }
    if (!nonzero) throw ParseError(line.number, 0, "zero vector is not a point");
    cfg.points.push_back(std::move(v));
  }
  return {name, normalized(std::move(cfg))};
}

PointConfig parse_points(std::string_view text) { return parse_points_document(text).config; }

std::string serialize_points(const PointConfig& cfg, const std::string& name) {
  check_name(name);
  const PointConfig norm = normalized(cfg);
  std::ostringstream os;
  os << "points " << name << '\n' << "field " << norm.prime << '\n' << "dim " << norm.dim << '\n';
  for (const auto& v : norm.points) {
    os << "point:";
    for (auto c : v) os << ' ' << c;
    os << '\n';
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace hypermod
