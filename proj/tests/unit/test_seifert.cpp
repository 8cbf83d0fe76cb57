#include <doctest.h>

#include "sfs/errors.hpp"
#include "sfs/seifert.hpp"

using namespace sfs;

namespace {

SeifertPresentation pres(Int a1, Int b1, Int a2, Int b2, Int a3, Int b3) {
  return SeifertPresentation::from_pairs({{{a1, b1}, {a2, b2}, {a3, b3}}});
}

}  // namespace

TEST_SUITE("seifert") {

TEST_CASE("complete_matrix matches the worked matrices") {
  CHECK(complete_matrix(2, -1) == FiberMatrix{2, -1, -1, 1});
  CHECK(complete_matrix(3, -1) == FiberMatrix{3, -1, -2, 1});
  CHECK(complete_matrix(4, 1) == FiberMatrix{4, 1, 3, 1});
  CHECK(complete_matrix(2, 1) == FiberMatrix{2, 1, 1, 1});
  for (Int m = 1; m <= 6; ++m) {
    CHECK(complete_matrix(2 * m + 1, m) == FiberMatrix{2 * m + 1, m, 2, 1});
    CHECK(complete_matrix(2 * m + 2, 1) == FiberMatrix{2 * m + 2, 1, 2 * m + 1, 1});
    CHECK(complete_matrix(m + 1, -1) == FiberMatrix{m + 1, -1, -m, 1});
  }
  for (Int a = 2; a <= 30; ++a)
    for (Int b = -40; b <= 40; ++b) {
      if (b == 0 || gcd(a, b) != 1) continue;
      auto f = complete_matrix(a, b);
      CHECK(f.det() == 1);
      CHECK(f.delta >= 1);
      CHECK(f.delta <= (b < 0 ? -b : b));
    }
}

TEST_CASE("presentation validation") {
  CHECK_NOTHROW(pres(2, -1, 3, 1, 8, 1));
  CHECK_THROWS_AS(pres(2, -1, 3, 1, -1, 6), InvalidInput);
  CHECK_THROWS_AS(pres(2, -1, 4, 2, 5, 1), InvalidInput);
  CHECK_THROWS_AS(pres(1, 0, 3, 1, 5, 1), InvalidInput);
  CHECK_THROWS_WITH_AS(pres(2, -1, 3, 1, 6, 1), doctest::Contains("not small"), InvalidInput);
  CHECK_THROWS_AS(SeifertPresentation({FiberMatrix{2, -1, -1, 2}, complete_matrix(3, 1), complete_matrix(8, 1)}),
                  InvalidInput);
}

TEST_CASE("parsing the three notations") {
  auto m = pres(2, -1, 3, 1, 8, 1);
  CHECK(parse_presentation("S2((2,-1),(3,1),(8,1))") == m);
  CHECK(parse_presentation("  S^2 ( (2, -1), (3,1), (8, 1) ) ") == m);
  CHECK(parse_presentation("M(+0,0; -1/2, 1/3, 1/8)") == m);
  CHECK(parse_presentation("[-1; (2,1),(3,1),(8,1)]") == m);
  CHECK(parse_presentation("[-1,(o1,0); (2,1),(3,1),(8,1)]") == m);
  CHECK(parse_presentation("S2((2,-1),(3,1),(8,1))", Notation::martelli) == m);
  CHECK_THROWS_AS(parse_presentation("S2((2,-1),(3,1),(8,1))", Notation::orlik), ParseError);
}

TEST_CASE("parse errors carry a position") {
  try {
    parse_presentation("S2((2,-1),(3,1),(8,1)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 21);
  }
  CHECK_THROWS_AS(parse_presentation(""), ParseError);
  CHECK_THROWS_AS(parse_presentation("S2((2,-1),(3,1))"), ParseError);
  CHECK_THROWS_AS(parse_presentation("S2((2,-1),(3,1),(8,1)) junk"), ParseError);
  CHECK_THROWS_AS(parse_presentation("X((2,-1))"), ParseError);
}

TEST_CASE("formatting and conversion") {
  auto m = pres(2, -1, 3, 1, 8, 1);
  CHECK(format_presentation(m, Notation::martelli) == "S2((2,-1),(3,1),(8,1))");
  CHECK(format_presentation(m, Notation::hatcher) == "M(+0,0; -1/2, 1/3, 1/8)");
  CHECK(format_presentation(m, Notation::orlik) == "[-1; (2,1),(3,1),(8,1)]");
  CHECK(canonical_key(m) == "[-1; (2,1),(3,1),(8,1)]");
  auto o = to_orlik_normal_form(m);
  CHECK(o.e == -1);
  CHECK(from_orlik(o) == pres(2, -1, 3, 1, 8, 1));
}

TEST_CASE("orlik normal form is invariant under fiber moves") {
  const std::array<FiberPair, 3> base{{{3, 1}, {5, 2}, {7, -3}}};
  auto key = canonical_key(SeifertPresentation::from_pairs(base));
  for (Int t = -3; t <= 3; ++t)
    for (Int s = -3; s <= 3; ++s) {
      auto p = base;
      p[0].second += t * 3;
      p[1].second += s * 5;
      p[2].second -= (t + s) * 7;
      auto m = SeifertPresentation::from_pairs(p);
      CHECK(canonical_key(m) == key);
      auto back = from_orlik(to_orlik_normal_form(m));
      CHECK(canonical_key(back) == key);
      CHECK(parse_presentation(format_presentation(m, Notation::hatcher)) == m);
    }
}

TEST_CASE("notation names") {
  CHECK(notation_from_name("martelli") == Notation::martelli);
  CHECK(notation_from_name("orlik") == Notation::orlik);
  CHECK_FALSE(notation_from_name("seifert").has_value());
  CHECK(notation_name(Notation::hatcher) == "hatcher");
}

TEST_CASE("homology structure by parity") {
  auto h = homology_structure(pres(3, 1, 5, 2, 7, 1));
  CHECK(h.case_tag == HomologyCase::cyclic_vertical);
  REQUIRE(h.nonzero_classes.size() == 1);
  CHECK(homology_structure(pres(3, 1, 5, 2, 7, 2)).case_tag == HomologyCase::trivial);
  CHECK(homology_structure(pres(2, -1, 3, 1, 5, 1)).case_tag == HomologyCase::trivial);

  h = homology_structure(pres(2, -1, 3, 1, 8, 1));
  CHECK(h.case_tag == HomologyCase::cyclic_two_even);
  REQUIRE(h.nonzero_classes.size() == 1);
  CHECK(h.nonzero_classes[0].parities == std::array<std::uint8_t, 3>{1, 0, 1});
  CHECK(h.nonzero_classes[0].label() == "V13");

  h = homology_structure(pres(2, -1, 2, 1, 6, 1));
  CHECK(h.case_tag == HomologyCase::klein_four);
  CHECK(h.nonzero_classes.size() == 3);
}

TEST_CASE("normalize_even_betas keeps the manifold") {
  auto m = pres(3, 2, 5, 4, 7, 2);
  auto n = normalize_even_betas(m);
  CHECK(canonical_key(n) == canonical_key(m));
  CHECK(n.euler_sum() == m.euler_sum());
}

TEST_CASE("permuting fibers") {
  auto m = pres(2, -1, 3, 1, 8, 1);
  auto p = permute(m, {2, 0, 1});
  CHECK(p.pairs()[0] == FiberPair{8, 1});
  CHECK(p.pairs()[1] == FiberPair{2, -1});
  Z2Class c{HomologyCase::cyclic_two_even, {1, 0, 1}};
  CHECK(permute(c, {2, 0, 1}).parities == std::array<std::uint8_t, 3>{1, 1, 0});
}

}
