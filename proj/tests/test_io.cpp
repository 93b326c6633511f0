#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "magictri/io.hpp"
#include "magictri/rng.hpp"

using namespace magictri;

namespace {

const std::string kP16Text = "4\n2 15 4 7 11 16 12\n14 9 3 8 13\n5 10 6\n1\n";

std::string error_of(const std::string& text) {
  try {
    parse_tri(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parses the worked 4-level triangle") {
  const TriangleArrangement t = parse_tri(kP16Text);
  CHECK(t.levels() == 4);
  CHECK(t.entries()[0] == 2);
  CHECK(t.entries()[15] == 1);
  CHECK(is_magic(t));
}

TEST_CASE("parses the 1-level triangle") {
  const TriangleArrangement t = parse_tri("1\n1\n");
  CHECK(t.levels() == 1);
  CHECK(t.value_at(1) == 1);
}

TEST_CASE("tolerates extra blank lines and spacing") {
  const TriangleArrangement t = parse_tri("  2\n\n1   2 3\n\n  4\n\n");
  CHECK(t.levels() == 2);
  CHECK(t.entries()[3] == 4);
}

TEST_CASE("format and parse round-trip") {
  CHECK(format_tri(parse_tri(kP16Text)) == kP16Text);
  Rng rng(7);
  for (int n = 1; n <= 9; ++n) {
    const TriangleArrangement t =
        TriangleArrangement::unchecked(n, rng.random_permutation(n * n));
    CHECK(parse_tri(format_tri(t)) == t);
  }
}

TEST_CASE("duplicate entries are reported with the value and position") {
  const std::string err = error_of("2\n1 2 2\n4\n");
  CHECK(err.find("duplicate") != std::string::npos);
  CHECK(err.find("2") != std::string::npos);
  CHECK(err.find("2:5") != std::string::npos);
}

TEST_CASE("out of range entries are rejected") {
  CHECK(error_of("2\n1 2 9\n4\n").find("range") != std::string::npos);
  CHECK(error_of("2\n1 2 0\n4\n").find("range") != std::string::npos);
  CHECK(error_of("2\n1 2 -3\n4\n").find("range") != std::string::npos);
}

TEST_CASE("row length errors name the row") {
  CHECK(error_of("2\n1 2\n3 4\n").find("row 1") != std::string::npos);
  CHECK(error_of("2\n1 2 3 4\n").find("row 1") != std::string::npos);
  CHECK(error_of("3\n1 2 3 4 5\n6 7 8 9\n").find("row 2") != std::string::npos);
}

TEST_CASE("each row sits on its own line") {
  CHECK_THROWS_AS(parse_tri("2 1 2 3 4\n"), ParseError);
  CHECK_THROWS_AS(parse_tri("2\n1 2 3 4"), ParseError);
  CHECK_THROWS_AS(parse_tri("2\n1 2 3\n4 junk\n"), ParseError);
  CHECK(parse_tri("2\n1 2 3\n4") == parse_tri("2\n1 2 3\n4\n"));
}

TEST_CASE("malformed headers and tokens") {
  CHECK_THROWS_AS(parse_tri(""), ParseError);
  CHECK_THROWS_AS(parse_tri("zero\n"), ParseError);
  CHECK_THROWS_AS(parse_tri("0\n"), ParseError);
  CHECK_THROWS_AS(parse_tri("-2\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_tri("2\n1 x 3\n4\n"), ParseError);
  CHECK_THROWS_AS(parse_tri("2\n1 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_tri("99999\n"), ParseError);
}

TEST_CASE("errors carry line and column positions") {
  const std::string err = error_of("2\n1 x 3\n4\n");
  CHECK(err.find("2:3") != std::string::npos);
}

TEST_CASE("reading files wraps errors with the path") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path();
  const fs::path good = dir / "magictri_io_good.tri";
  const fs::path bad = dir / "magictri_io_bad.tri";
  std::ofstream(good) << kP16Text;
  std::ofstream(bad) << "2\n1 2 2\n4\n";

  CHECK(read_tri_file(good.string()) == parse_tri(kP16Text));
  try {
    read_tri_file(bad.string());
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("magictri_io_bad.tri") != std::string::npos);
  }
  CHECK_THROWS_AS(read_tri_file((dir / "magictri_io_missing.tri").string()), std::runtime_error);
  fs::remove(good);
  fs::remove(bad);
}
