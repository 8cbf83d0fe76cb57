#include <doctest.h>

#include <algorithm>
#include <map>

#include "sfs/errors.hpp"
#include "sfs/lens_norm.hpp"
#include "sfs/norm_search.hpp"
#include "sfs/surfaces.hpp"

using namespace sfs;

namespace {

SeifertPresentation pres(Int a1, Int b1, Int a2, Int b2, Int a3, Int b3) {
  return SeifertPresentation::from_pairs({{{a1, b1}, {a2, b2}, {a3, b3}}});
}

PHParams ph(Int l1, Int m1, Int l2, Int m2, Int l3, Int m3) { return PHParams::make({{{l1, m1}, {l2, m2}, {l3, m3}}}); }

}  // namespace

TEST_SUITE("surfaces") {

TEST_CASE("existence") {
  auto m = pres(2, -1, 3, 1, 8, 1);
  CHECK(ph_exists(m, ph(2, -1, 3, 1, 6, 1)));
  CHECK_FALSE(ph_exists(m, ph(2, -1, 3, 1, 8, 1)));
  CHECK(ph_exists(m, ph(2, -1, 3, 1, 7, 1)).reason == PHFailure::slope_sum_nonzero);
  CHECK(ph_exists(m, ph(2, -2, 3, 1, 6, 1)).reason == PHFailure::not_coprime);
  CHECK_THROWS_AS(ph(0, 1, 3, 1, 6, 1), InvalidInput);

  auto prism = pres(2, -1, 2, 1, 6, 1);
  for (Int l : {2, 4, 6, 8})
    for (Int a = -9; a <= 9; ++a)
      for (Int b = -9; b <= 9; ++b) CHECK_FALSE(ph_exists(prism, ph(l, a, l, b, l, -a - b)));
}

TEST_CASE("genus of the worked candidates") {
  CHECK(ph_genus(pres(2, -1, 3, 1, 8, 1), ph(2, -1, 3, 1, 6, 1)) == 3);
  CHECK(ph_genus(pres(2, -1, 3, 1, 4, 1), ph(2, -1, 3, 1, 6, 1)) == 3);
  CHECK(ph_genus(pres(3, -1, 4, 1, 14, 1), ph(3, -1, 4, 1, 12, 1)) == 7);
  CHECK_THROWS_AS(ph_genus(pres(2, -1, 3, 1, 8, 1), ph(2, -1, 3, 1, 8, 1)), InvalidInput);
}

TEST_CASE("family closed forms") {
  for (Int m = 1; m <= 4; ++m)
    for (Int n = 2 * m + 2; n <= 2 * m + 8; ++n)
      CHECK(ph_genus(pres(2, -1, 2 * m + 1, m, 2 * n, 1), ph(2, -1, 2 * m + 1, m, 4 * m + 2, 1)) == n - 1);
  for (Int n = 7; n <= 15; ++n)
    CHECK(ph_genus(pres(3, -1, 4, 1, 2 * n, 1), ph(3, -1, 4, 1, 12, 1)) == n);
  for (Int m = 2; m <= 4; ++m)
    for (Int a = m; a <= m + 4; ++a)
      for (Int b = m; b <= m + 4; ++b) {
        if (a + b <= 2 * m) continue;
        auto M = pres(m, -1, 2 * a, 1, 2 * b, 1);
        auto p = ph(m, -1, 2 * m, 1, 2 * m, 1);
        CHECK(ph_genus(M, p) == a + b - 2);
        CHECK(ph_class(M, p).parities == std::array<std::uint8_t, 3>{0, 1, 1});
      }
}

TEST_CASE("classes of horizontal surfaces") {
  auto m = pres(2, -1, 3, 1, 8, 1);
  CHECK(ph_class(m, ph(2, -1, 3, 1, 6, 1)).parities == std::array<std::uint8_t, 3>{1, 0, 1});

  auto k4 = pres(4, -1, 4, 1, 6, 1);
  auto classes = homology_structure(k4).nonzero_classes;
  for (const auto& p : enumerate_case4(k4)) {
    auto c = ph_class(k4, p);
    CHECK(std::find(classes.begin(), classes.end(), c) != classes.end());
    for (std::size_t i = 0; i < 3; ++i)
      CHECK(c.parities[i] == floor_mod(p.pairs[i].mu * (p.lam / p.pairs[i].lambda), 2));
  }
}

TEST_CASE("vertical surfaces") {
  auto v = vertical_surfaces(pres(2, -1, 2, 1, 6, 1));
  REQUIRE(v.size() == 3);
  std::map<std::string, Int> genus;
  for (const auto& r : v) genus[r.z2class.label()] = r.genus;
  CHECK(genus["V12"] == 2);
  CHECK(genus["V13"] == 4);
  CHECK(genus["V23"] == 4);

  v = vertical_surfaces(pres(2, -1, 3, 1, 8, 1));
  REQUIRE(v.size() == 1);
  CHECK(v[0].genus == 5);
  CHECK(v[0].norm_contribution == 3);
  CHECK(v[0].z2class.label() == "V13");

  CHECK(vertical_surfaces(pres(3, 2, 5, 2, 7, 4)).empty());
}

TEST_CASE("norm contribution") {
  auto r = make_report(VerticalSurface{0, 1}, 2, Z2Class{HomologyCase::klein_four, {1, 1, 0}});
  CHECK(r.norm_contribution == 0);
  r = make_report(VerticalSurface{0, 1}, 5, Z2Class{HomologyCase::klein_four, {1, 1, 0}});
  CHECK(r.norm_contribution == 3);
}

TEST_CASE("torus curves of realisable candidates are valid lens slopes") {
  auto m = pres(3, -1, 4, 1, 14, 1);
  auto p = ph(3, -1, 4, 1, 12, 1);
  REQUIRE(ph_exists(m, p));
  for (std::size_t i = 0; i < 3; ++i) {
    auto c = torus_curve(m.fiber(i), p.pairs[i]);
    CHECK(c.twok % 2 == 0);
    CHECK_NOTHROW(validate(c));
  }
}

TEST_CASE("relabelling") {
  auto m = pres(2, -1, 3, 1, 8, 1);
  auto p = ph(2, -1, 3, 1, 6, 1);
  std::array<std::size_t, 3> perm{2, 0, 1};
  auto r = horizontal_report(m, p);
  auto rp = horizontal_report(permute(m, perm), permute(p, perm));
  CHECK(rp.genus == r.genus);
  CHECK(rp == permute(r, perm));
}

}
