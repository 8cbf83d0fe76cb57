#include <doctest.h>

#include <sstream>

#include "sfs/errors.hpp"
#include "sfs/family.hpp"

using namespace sfs;

TEST_SUITE("family") {

TEST_CASE("expressions") {
  Bindings v{{"m", 3}, {"n", 10}};
  CHECK(eval_expression("2m+1", v) == 7);
  CHECK(eval_expression("2*m + 1", v) == 7);
  CHECK(eval_expression("-m", v) == -3);
  CHECK(eval_expression("n - 2(m+1)", v) == 2);
  CHECK(eval_expression("n / 4", v) == 2);
  CHECK(eval_expression("-7 / 2", v) == -4);
  CHECK(eval_expression("-7 % 2", v) == 1);
  CHECK(eval_condition("n > 2m+1", v));
  CHECK_FALSE(eval_condition("n <= 2m+1", v));
  CHECK(eval_condition("n != m && m >= 3", v));
  CHECK(eval_condition("n == 10", v));
  CHECK_THROWS_AS(eval_expression("k + 1", v), ParseError);
  CHECK_THROWS_AS(eval_expression("2 +", v), ParseError);
  CHECK_THROWS_AS(eval_expression("(m", v), ParseError);
}

TEST_CASE("spec lines") {
  auto s = parse_family_line("S2((2,-1),({2m+1},{m}),({2n},1)) | m=1..3 | n=2m+2..2m+6 | if n>2m+1", 4);
  CHECK(s.template_text == "S2((2,-1),({2m+1},{m}),({2n},1))");
  REQUIRE(s.vars.size() == 2);
  CHECK(s.vars[0].name == "m");
  CHECK(s.vars[1].lo == "2m+2");
  CHECK(s.conditions.size() == 1);
  CHECK(s.line == 4);
  CHECK(instantiate(s, {{"m", 2}, {"n", 7}}) == "S2((2,-1),(5,2),(14,1))");

  auto t = parse_family_line("S2(({m},-1),(4,1),(6,1)) | m=2,3,5");
  REQUIRE(t.vars.size() == 1);
  CHECK(t.vars[0].values == std::vector<std::string>{"2", "3", "5"});
}

TEST_CASE("spec errors name the line") {
  auto text = "# comment\n\nS2((2,-1),(3,1),({2n},1)) | n=1..3\nS2((2,-1),(3,1),({2q},1)) | n=1..3\n";
  try {
    parse_family_file(text);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS_AS(parse_family_line("S2((2,-1),(3,1),({2n,1)) | n=1..3"), ParseError);
  CHECK_THROWS_AS(parse_family_line("S2((2,-1),(3,1),({2n},1)) | n"), ParseError);
  CHECK_THROWS_AS(parse_family_line("S2((2,-1),(3,1),({2n},1)) | n=1..3 | when n>1"), ParseError);
  CHECK(parse_family_file("# only comments\n").empty());
}

TEST_CASE("scan rows") {
  auto s = parse_family_line("S2((2,-1),({2m+1},{m}),({2n},1)) | m=1 | n=2..6 | if n>2m+1");
  std::ostringstream log;
  auto rows = family_scan(s, {}, &log);
  REQUIRE(rows.size() == 3);
  for (const auto& r : rows) {
    Int n = r.bindings.at("n");
    CHECK(r.result.min_genus == n - 1);
    CHECK(r.result.min_vertical == n + 1);
    CHECK(r.gap() == 2);
  }
  CHECK(log.str().find("n=2") != std::string::npos);
  CHECK(log.str().find("n=3") != std::string::npos);
}

TEST_CASE("instances that are not valid manifolds are skipped") {
  // n=6 is not small, n=7 has trivial H_2
  auto s = parse_family_line("S2((2,-1),(3,1),({n},1)) | n=6..8");
  std::ostringstream log;
  auto rows = family_scan(s, {}, &log);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].bindings.at("n") == 8);
  CHECK(log.str().find("not small") != std::string::npos);
}

TEST_CASE("empty grid") {
  auto s = parse_family_line("S2((2,-1),(3,1),({2n},1)) | n=5..4");
  CHECK(family_scan(s, {}, nullptr).empty());
}

}
