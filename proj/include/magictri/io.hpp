#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "magictri/triangle.hpp"

namespace magictri {

// Text format for one arrangement (".tri"): the first line is the level
// count n; the next n lines are the rows from the bottom row up, row k
// holding 2(n-k)+1 integers separated by spaces.

struct ParseError : std::runtime_error {
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line(line),
        column(column) {}

  /// The same error with the file path prefixed.
  ParseError(const std::string& path, const ParseError& inner)
      : std::runtime_error(path + ":" + inner.what()), line(inner.line), column(inner.column) {}

  int line;    // 1-based
  int column;  // 1-based byte offset in the line
};

/// Parses .tri text. Throws ParseError with the line and column of the
/// offending token; duplicate and missing entries are named by value.
TriangleArrangement parse_tri(std::string_view text);

TriangleArrangement read_tri_file(const std::string& path);

/// Renders .tri text; parse_tri(format_tri(t)) == t.
std::string format_tri(const TriangleArrangement& t);

}  // namespace magictri
