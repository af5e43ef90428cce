#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hypermod/matroid.hpp"
#include "hypermod/realize.hpp"

namespace hypermod {

/// A malformed or rejected document. line and column are 1-based; column 0
/// means the whole line, line 0 the whole document.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct MatroidDocument {
  std::string name;
  Matroid matroid;
};

struct ParseOptions {
  /// Run verify_flat_axioms and reject the document on any violation.
  bool verify_axioms = true;
};

// Matroid documents (.mat), line oriented, '#' starts a comment:
//
//   matroid <name>
//   ground <n>
//   rank <r>
//   flat <k>: <i1> <i2> ...      one line per flat of every grade
//
// The empty flat is written "flat 0:".

MatroidDocument parse_matroid_document(std::string_view text, const ParseOptions& options = {});
Matroid parse_matroid(std::string_view text, const ParseOptions& options = {});

/// Canonical text: header, then flats by ascending grade, lexicographic
/// within a grade. Names must be a single non-empty token.
std::string serialize_matroid(const Matroid& m, const std::string& name = "M");

// Point configurations (.pts):
//
//   points <name>
//   field <p>
//   dim <d>
//   point: <c1> ... <cd>

struct PointsDocument {
  std::string name;
  PointConfig config;  // normalized
};

PointsDocument parse_points_document(std::string_view text);
PointConfig parse_points(std::string_view text);
std::string serialize_points(const PointConfig& cfg, const std::string& name = "P");

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace hypermod
