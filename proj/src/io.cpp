#include "magictri/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace magictri {

namespace {

struct Token {
  int line = 0;
  int column = 0;
  std::string_view text;
};

// Splits into whitespace-separated tokens, tracking 1-based line/column.
std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '\n') {
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++column;
      ++i;
      continue;
    }
    const int start_col = column;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) {
      ++j;
      ++column;
    }
    out.push_back(Token{line, start_col, text.substr(i, j - i)});
    i = j;
  }
  return out;
}

int parse_int(const Token& tok, const char* what) {
  int value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(tok.line, tok.column,
                     std::string("expected ") + what + ", got \"" + std::string(tok.text) + "\"");
  }
  return value;
}

}  // namespace

TriangleArrangement parse_tri(std::string_view text) {
  const auto tokens = tokenize(text);
  if (tokens.empty()) throw ParseError(1, 1, "empty input, expected a level count");

  const Token& head = tokens[0];
  const int levels = parse_int(head, "a level count");
  if (levels < 1) {
    throw ParseError(head.line, head.column,
                     "level count must be positive, got " + std::to_string(levels));
  }
  if (levels > 1290) {  // keeps n^2 and the magic constant in range
    throw ParseError(head.line, head.column, "level count too large: " + std::to_string(levels));
  }

  const int cells = levels * levels;
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(cells));
  std::vector<int> seen_at(static_cast<std::size_t>(cells) + 1, -1);

  if (tokens.size() > 1 && tokens[1].line == head.line) {
    throw ParseError(tokens[1].line, tokens[1].column,
                     "unexpected token after the level count; rows start on the next line");
  }

  // One row per non-empty line; blank lines between rows are fine.
  std::vector<std::vector<Token>> rows;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    if (rows.empty() || rows.back().back().line != tokens[i].line) rows.emplace_back();
    rows.back().push_back(tokens[i]);
  }

  for (int row = 1; row <= levels; ++row) {
    const int width = 2 * (levels - row) + 1;
    if (static_cast<std::size_t>(row) > rows.size()) {
      throw ParseError(head.line + row, 1,
                       "row " + std::to_string(row) + " has too few entries: expected " +
                           std::to_string(width) + ", got 0");
    }
    const auto& line = rows[static_cast<std::size_t>(row - 1)];
    if (line.size() != static_cast<std::size_t>(width)) {
      const char* how = line.size() < static_cast<std::size_t>(width) ? "few" : "many";
      const Token& at = line.size() > static_cast<std::size_t>(width)
                            ? line[static_cast<std::size_t>(width)]
                            : line.front();
      throw ParseError(at.line, at.column,
                       "row " + std::to_string(row) + " has too " + how + " entries: expected " +
                           std::to_string(width) + ", got " + std::to_string(line.size()));
    }
    for (const Token& tok : line) {
      const int value = parse_int(tok, "an entry");
      if (value < 1 || value > cells) {
        throw ParseError(tok.line, tok.column,
                         "entry " + std::to_string(value) + " out of range 1.." +
                             std::to_string(cells));
      }
      if (seen_at[static_cast<std::size_t>(value)] >= 0) {
        throw ParseError(tok.line, tok.column, "duplicate entry " + std::to_string(value));
      }
      seen_at[static_cast<std::size_t>(value)] = static_cast<int>(entries.size());
      entries.push_back(value);
    }
  }
  if (rows.size() > static_cast<std::size_t>(levels)) {
    const Token& tok = rows[static_cast<std::size_t>(levels)].front();
    throw ParseError(tok.line, tok.column,
                     "unexpected extra token \"" + std::string(tok.text) + "\"");
  }
  for (int v = 1; v <= cells; ++v) {
    if (seen_at[static_cast<std::size_t>(v)] < 0) {
      throw ParseError(head.line + levels, 1, "missing entry " + std::to_string(v));
    }
  }
  return TriangleArrangement::unchecked(levels, std::move(entries));
}

TriangleArrangement read_tri_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_tri(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path, e);
  }
}

std::string format_tri(const TriangleArrangement& t) {
  std::string out = std::to_string(t.levels());
  out.push_back('\n');
  int index = 1;
  for (int row = 1; row <= t.levels(); ++row) {
    const int width = row_width(t.levels(), row);
    for (int c = 1; c <= width; ++c, ++index) {
      if (c > 1) out.push_back(' ');
      out += std::to_string(t.value_at(index));
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace magictri
