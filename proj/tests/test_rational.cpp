#include <doctest.h>

#include <algorithm>
#include <limits>
#include <vector>

#include "cubetile/rational.hpp"

using cubetile::Rational;

TEST_CASE("construction reduces to lowest terms with positive denominator") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4).num() == -1);
  CHECK(Rational(-2, 4).den() == 2);
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(0, 5).den() == 1);
  CHECK(Rational(7).is_integer());
  CHECK_FALSE(Rational(1, 2).is_integer());
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("field arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(1, 6) * 3 == Rational(1, 2));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK(Rational(1, 2) + Rational(-1, 2) == Rational(0));

  Rational acc(1, 4);
  acc += Rational(1, 4);
  CHECK(acc == Rational(1, 2));
  acc -= Rational(2);
  CHECK(acc == Rational(-3, 2));
}

TEST_CASE("ordering is the rational order") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(7, 3) > Rational(2));

  std::vector<Rational> v{Rational(1), Rational(-1, 2), Rational(1, 3), Rational(0)};
  std::sort(v.begin(), v.end());
  CHECK(v == std::vector<Rational>{Rational(-1, 2), Rational(0), Rational(1, 3), Rational(1)});
}

TEST_CASE("floor, frac and mod") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-1, 2).floor() == -1);
  CHECK(Rational(-3).floor() == -3);
  CHECK(Rational(5).floor() == 5);

  CHECK(Rational(7, 2).frac() == Rational(1, 2));
  CHECK(Rational(-1, 2).frac() == Rational(1, 2));
  CHECK(Rational(-3).frac() == Rational(0));

  CHECK(Rational(5, 2).mod(2) == Rational(1, 2));
  CHECK(Rational(-1, 2).mod(3) == Rational(5, 2));
  CHECK(Rational(7).mod(3) == Rational(1));
  CHECK(Rational(-7).mod(3) == Rational(2));
  CHECK_THROWS_AS(Rational(1).mod(0), std::invalid_argument);

  for (long long num = -9; num <= 9; ++num) {
    for (long long den = 1; den <= 4; ++den) {
      Rational r(num, den);
      CHECK(Rational(0) <= r.frac());
      CHECK(r.frac() < Rational(1));
      CHECK(r - r.frac() == Rational(r.floor()));
      for (long long m = 1; m <= 3; ++m) {
        Rational reduced = r.mod(m);
        CHECK(Rational(0) <= reduced);
        CHECK(reduced < Rational(m));
        CHECK((r - reduced).mod(m) == Rational(0));
      }
    }
  }
}

TEST_CASE("printing always carries the denominator") {
  CHECK(Rational(0).str() == "0/1");
  CHECK(Rational(-3, 2).str() == "-3/2");
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(5).str() == "5/1");
}

TEST_CASE("parsing accepts exactly the slashed form") {
  CHECK(cubetile::parse_rational("1/2") == Rational(1, 2));
  CHECK(cubetile::parse_rational("0/1") == Rational(0));
  CHECK(cubetile::parse_rational("-3/2") == Rational(-3, 2));
  CHECK(cubetile::parse_rational("2/4") == Rational(1, 2));

  for (const char* bad : {"3", "1/0", "1/-2", "a/2", "1/2x", "/2", "1/", ""}) {
    CHECK_THROWS_AS(cubetile::parse_rational(bad), std::invalid_argument);
  }
  CHECK_THROWS_WITH_AS(cubetile::parse_rational("3"), "bad fraction '3'",
                       std::invalid_argument);
}

TEST_CASE("round trip through text") {
  for (long long num = -7; num <= 7; ++num) {
    for (long long den = 1; den <= 5; ++den) {
      Rational r(num, den);
      CHECK(cubetile::parse_rational(r.str()) == r);
    }
  }
}

TEST_CASE("overflow is detected, never wrapped") {
  const long long big = std::numeric_limits<long long>::max();
  CHECK_THROWS_AS(Rational(big) + Rational(big), std::overflow_error);
  CHECK_THROWS_AS(Rational(big) * 2, std::overflow_error);
  CHECK_NOTHROW(Rational(big) - Rational(big));
}

TEST_CASE("lcm helper") {
  CHECK(cubetile::lcm_positive(4, 6) == 12);
  CHECK(cubetile::lcm_positive(1, 1) == 1);
  CHECK(cubetile::lcm_positive(3, 5) == 15);
  CHECK(cubetile::lcm_positive(6, 4) == 12);
}
