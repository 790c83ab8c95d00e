#include <doctest.h>

#include "tileprove/numbertheory.hpp"

using namespace tileprove;

TEST_CASE("sum of two squares with positive parts") {
  auto w13 = is_sum_of_two_squares(13);
  REQUIRE(w13);
  CHECK(*w13 == std::pair<long long, long long>{3, 2});

  CHECK(!is_sum_of_two_squares(7));
  CHECK(!is_sum_of_two_squares(4));  // only 2^2 + 0^2

  auto w50 = is_sum_of_two_squares(50);
  REQUIRE(w50);
  CHECK(*w50 == std::pair<long long, long long>{7, 1});  // largest e wins
}

TEST_CASE("forms_of") {
  auto f12 = forms_of(12);
  REQUIRE(f12.size() == 1);
  CHECK(f12[0].kind == NFormKind::ThriceSquare);
  CHECK(f12[0].e == 2);

  auto f50 = forms_of(50);
  REQUIRE(f50.size() == 2);
  CHECK(f50[0].kind == NFormKind::SumTwoSquares);
  CHECK(f50[0].e == 7);
  CHECK(f50[0].f == 1);
  CHECK(f50[1].kind == NFormKind::TwiceSquare);
  CHECK(f50[1].e == 5);

  CHECK(forms_of(7).empty());
  CHECK(forms_of(11).empty());
  CHECK(forms_of(14).empty());
  CHECK(forms_of(19).empty());
  CHECK(forms_of(31).empty());

  for (long long n : {4, 5, 9, 12, 13, 18, 50}) {
    auto fs = forms_of(n);
    REQUIRE(!fs.empty());
    for (const auto& f : fs) CHECK(f.reconstruct() == n);
  }

  auto f36 = forms_of(36);  // 6^2 and 6*6... only squares apply: 36 = 6^2
  bool has_square = false, has_six = false;
  for (const auto& f : f36) {
    if (f.kind == NFormKind::Square) has_square = f.e == 6;
    if (f.kind == NFormKind::SixTimesSquare) has_six = true;
  }
  CHECK(has_square);
  CHECK(!has_six);  // 36/6 = 6 is not a square

  CHECK_THROWS_AS(forms_of(0), std::invalid_argument);
}

TEST_CASE("every witness reconstructs n (n <= 2000)") {
  for (long long n = 1; n <= 2000; ++n)
    for (const auto& f : forms_of(n)) CHECK(f.reconstruct() == n);
}
