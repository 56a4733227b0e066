#include <catch2/catch_amalgamated.hpp>

#include <cstdio>

#include "malcev/division.hpp"
#include "malcev/io.hpp"
#include "malcev/zoo.hpp"
#include "support.hpp"

using namespace malcev;
using malcev::testing::corpus;
using malcev::testing::zoo_members;

namespace {

std::size_t error_line(std::string const& text) {
  try {
    parse_sgp(text);
  } catch (ParseError const& e) {
    return e.line();
  }
  FAIL("no parse error");
  return 0;
}

void require_same(FiniteSemigroup const& a, FiniteSemigroup const& b) {
  REQUIRE(a.order() == b.order());
  REQUIRE(std::equal(a.table().begin(), a.table().end(), b.table().begin()));
  REQUIRE(a.zero() == b.zero());
  REQUIRE(a.identity() == b.identity());
}

}  // namespace

TEST_CASE("cayley files round trip", "[io]") {
  for (auto const& s : corpus()) {
    auto back = parse_sgp(write_sgp(s));
    require_same(s, back);
    REQUIRE(back.names() == s.names());
  }
  for (auto const& z : zoo_members()) {
    auto back = parse_sgp(write_sgp(*z.semigroup));
    require_same(*z.semigroup, back);
    REQUIRE(back.names() == z.semigroup->names());
  }
  auto const& big = zoo::n2n(1).semigroup;
  auto path = std::string("/tmp/malcev_io_roundtrip.sgp");
  write_sgp_file(big, path);
  auto back = read_sgp(path);
  std::remove(path.c_str());
  require_same(big, back);
  REQUIRE(are_isomorphic(big, back));
}

TEST_CASE("cayley files with comments and metadata", "[io]") {
  auto s = parse_sgp(
      "# the two-element semilattice\n"
      "cayley 2   # header\n"
      "0 0\n"
      "\n"
      "0 1\n"
      "zero 0\n"
      "identity 1\n"
      "names z one\n");
  REQUIRE(s.order() == 2);
  REQUIRE(s.zero() == 0u);
  REQUIRE(s.identity() == 1u);
  REQUIRE(s.find("one") == 1u);
  // Parsing is deterministic in the numbering.
  auto text = write_sgp(zoo::f12().semigroup);
  require_same(parse_sgp(text), parse_sgp(text));
}

TEST_CASE("transformation and rees files", "[io]") {
  auto f7 = parse_sgp("transformations 2\n2 1\n1 0\n");
  REQUIRE(f7.order() == 7);
  REQUIRE(are_isomorphic(f7, zoo::f7().semigroup));

  auto b2 = parse_sgp("rees0 2 2\ngroup\ncayley 1\n0\n1 0\n0 1\n");
  REQUIRE(are_isomorphic(b2, from_rees(identity_rees_spec(2))));

  auto rect = parse_sgp("rees 2 1\ngroup\ncayley 2\n0 1\n1 0\n1 2\n");
  REQUIRE(rect.order() == 4);
  REQUIRE_FALSE(rect.zero().has_value());
}

TEST_CASE("malformed files report the offending line", "[io]") {
  REQUIRE(error_line("") == 1);
  REQUIRE(error_line("monoid 2\n") == 1);
  REQUIRE(error_line("cayley 2\n0 0\n0\n") == 3);
  REQUIRE(error_line("cayley 2\n0 0\n0 2\n") == 3);
  REQUIRE(error_line("cayley 2\n0 0\n0 x\n") == 3);
  REQUIRE(error_line("cayley 2\n0 0\n0 0\nzero 5\n") == 4);
  REQUIRE(error_line("cayley 2\n0 0\n0 0\nnames a a\n") == 4);
  REQUIRE(error_line("cayley 2\n0 0\n0 0\nextra\n") == 4);
  // Not associative: 0*1 = 1, 1*0 = 0, 1*1 = 0.
  REQUIRE(error_line("cayley 2\n0 1\n0 0\n") == 1);
  REQUIRE(error_line("cayley 2\n0 0\n0 0\nzero 1\n") == 1);
  REQUIRE(error_line("transformations 2\n2 3\n") == 2);
  REQUIRE(error_line("transformations 2\n") == 1);
  REQUIRE(error_line("rees 2 1\ngroup\ncayley 1\n0\n1 0\n") == 5);
  REQUIRE(error_line("rees0 1 1\ncayley 1\n0\n1\n") == 2);
  REQUIRE(error_line("rees0 1 1\ngroup\ncayley 1\n0\n2\n") == 5);
  REQUIRE_THROWS_AS(read_sgp("/nonexistent/file.sgp"), Error);
}
