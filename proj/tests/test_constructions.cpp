#include <doctest.h>

#include <algorithm>
#include <array>

#include "tileprove/generators.hpp"
#include "tileprove/svg.hpp"
#include "tileprove/verify.hpp"

using namespace tileprove;

namespace {

const std::array<QuadExt, 3> kRightTile{QuadExt(9), QuadExt(16), QuadExt(25)};

}  // namespace

TEST_CASE("quadratic tilings") {
  for (int n : {1, 2, 3, 5}) {
    Tiling t = gen_quadratic(kRightTile, n);
    CHECK(t.tile_count() == n * n);
    VerifyReport rep = verify(t);
    CAPTURE(n);
    CHECK(rep.ok());
  }
  // an irrational tile shape works too: sides 1, 1, sqrt(3)
  Tiling iso = gen_quadratic({QuadExt(1), QuadExt(1), QuadExt(3)}, 3);
  CHECK(verify(iso).ok());
  // degenerate: 1 + 2 = 3 violates the strict triangle inequality
  CHECK_THROWS_AS(gen_quadratic({QuadExt(1), QuadExt(4), QuadExt(9)}, 2),
                  std::domain_error);
}

TEST_CASE("biquadratic tilings") {
  CHECK(gen_biquadratic(2, 1).tile_count() == 5);
  CHECK(gen_biquadratic(3, 2).tile_count() == 13);
  CHECK(gen_biquadratic(7, 5).tile_count() == 74);
  for (auto [e, f] : {std::pair{2, 1}, {3, 2}, {7, 5}}) {
    CAPTURE(e);
    CHECK(verify(gen_biquadratic(e, f)).ok());
  }
  CHECK_THROWS_AS(gen_biquadratic(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(gen_biquadratic(1, 2), std::invalid_argument);
}

TEST_CASE("doubling a right-angled tiling") {
  Tiling ten = gen_double(gen_biquadratic(2, 1));
  CHECK(ten.tile_count() == 10);
  CHECK(verify(ten).ok());

  Tiling fifty = gen_double(gen_quadratic(kRightTile, 5));
  CHECK(fifty.tile_count() == 50);
  CHECK(verify(fifty).ok());

  Tiling tsix = gen_double(gen_biquadratic(3, 2));
  CHECK(tsix.tile_count() == 26);
  CHECK(verify(tsix).ok());

  // no right angle: the 120-degree isosceles tile shape
  Tiling eq = gen_quadratic({QuadExt(1), QuadExt(1), QuadExt(3)}, 2);
  CHECK_THROWS_AS(gen_double(eq), std::domain_error);
}

TEST_CASE("pythagorean mixed tiling") {
  Tiling fifty = gen_pythagorean_mixed(3, 4, 5);
  CHECK(fifty.tile_count() == 50);
  CHECK(verify(fifty).ok());

  Tiling mirror = gen_pythagorean_mixed(4, 3, 5);
  CHECK(mirror.tile_count() == 50);
  CHECK(verify(mirror).ok());

  CHECK_THROWS_AS(gen_pythagorean_mixed(6, 8, 10), std::invalid_argument);
  CHECK_THROWS_AS(gen_pythagorean_mixed(2, 3, 4), std::invalid_argument);
}

TEST_CASE("hexagonal family") {
  CHECK(hexagonal_count(0) == 3);
  CHECK(hexagonal_count(2) == 27);
  CHECK(hexagonal_count(3) == 48);
  for (int k = 0; k <= 4; ++k) {
    Tiling t = gen_hexagonal(k);
    CAPTURE(k);
    CHECK(t.tile_count() == hexagonal_count(k));
    CHECK(t.field_d == 3);
    CHECK(verify(t).ok());
  }
  CHECK_THROWS_AS(gen_hexagonal(11), std::domain_error);
  CHECK_THROWS_AS(gen_hexagonal(-1), std::domain_error);
}

TEST_CASE("sixfold family") {
  for (int n : {1, 2, 4}) {
    Tiling t = gen_sixfold(n);
    CAPTURE(n);
    CHECK(t.tile_count() == 6 * n * n);
    CHECK(verify(t).ok());
  }
}

TEST_CASE("verify rejects tampering") {
  Tiling t = gen_quadratic(kRightTile, 3);
  REQUIRE(verify(t).ok());

  SUBCASE("vertex perturbation breaks congruence") {
    Tiling bad = t;
    // move a lattice-interior vertex by 1/1000 in basis coordinates
    int victim = bad.tiles[3][1];
    bad.points[victim][0] += QuadExt(Rational(1, 1000));
    VerifyReport rep = verify(bad);
    CHECK(!rep.congruent);
    CHECK(!rep.ok());
  }
  SUBCASE("duplicated tile overlaps") {
    Tiling bad = t;
    bad.tiles.push_back(bad.tiles[0]);
    VerifyReport rep = verify(bad);
    CHECK(!rep.disjoint);
  }
  SUBCASE("dropped tile leaves a gap") {
    Tiling bad = t;
    bad.tiles.pop_back();
    VerifyReport rep = verify(bad);
    CHECK(rep.disjoint);
    CHECK(!rep.covers);
  }
  SUBCASE("index out of range is malformed") {
    Tiling bad = t;
    bad.tiles[0][0] = 99999;
    CHECK(verify(bad).malformed);
  }
  SUBCASE("repeated point in a tile is malformed") {
    Tiling bad = t;
    bad.tiles[0][1] = bad.tiles[0][0];
    CHECK(verify(bad).malformed);
  }
}

TEST_CASE("verify is order-invariant") {
  Tiling t = gen_biquadratic(3, 2);
  Tiling shuffled = t;
  std::rotate(shuffled.tiles.begin(), shuffled.tiles.begin() + 5,
              shuffled.tiles.end());
  std::swap(shuffled.tiles[0], shuffled.tiles[7]);
  VerifyReport a = verify(t), b = verify(shuffled);
  CHECK(a.ok());
  CHECK(b.ok());
  CHECK(a.n == b.n);
}

TEST_CASE("tiling JSON round trip is exact") {
  for (const Tiling& t :
       {gen_quadratic({QuadExt(1), QuadExt(1), QuadExt(3)}, 2),
        gen_biquadratic(3, 2), gen_hexagonal(2)}) {
    Tiling back = tiling_from_json(tiling_to_json(t));
    CHECK(back.field_d == t.field_d);
    CHECK(back.gram == t.gram);
    CHECK(back.points == t.points);
    CHECK(back.outer == t.outer);
    CHECK(back.tiles == t.tiles);
    CHECK(back.tile_sq_lengths == t.tile_sq_lengths);
    CHECK(tiling_to_json(back) == tiling_to_json(t));
  }
}

TEST_CASE("coloring number of quadratic tilings is n") {
  for (int n = 1; n <= 6; ++n) {
    Tiling t = gen_quadratic(kRightTile, n);
    ColoringReport rep = coloring_number(t);
    CAPTURE(n);
    REQUIRE(rep.colorable);
    CHECK(rep.M == n);
    CHECK(rep.sign == 1);
  }
}

TEST_CASE("colorings that must fail") {
  // 120-degree-tile tilings have two tiles at A
  ColoringReport hex = coloring_number(gen_hexagonal(1));
  CHECK(!hex.colorable);
  CHECK(hex.violated == "one tile at vertex A");

  // the altitude foot of a biquadratic tiling is a boundary vertex where
  // exactly two tiles meet
  ColoringReport biq = coloring_number(gen_biquadratic(2, 1));
  CHECK(!biq.colorable);
  CHECK(biq.violated == "odd number of tiles at every boundary vertex");
}

TEST_CASE("svg emission") {
  Tiling t = gen_biquadratic(3, 2);
  std::string svg = svg_string(t, true);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(std::count(svg.begin(), svg.end(), '\n') >= t.tile_count());
  CHECK_THROWS_AS(to_svg(t, "", false), std::runtime_error);
}
