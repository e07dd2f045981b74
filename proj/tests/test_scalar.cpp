// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <limits>
#include <string>
#include <vector>

#include "lfrac/random.hpp"
#include "lfrac/scalar.hpp"

using lfrac::parse_rational;
using lfrac::Rational;

TEST_CASE("rational parsing: fractions") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-3/9") == Rational(-1, 3));
  CHECK(parse_rational("3/-6") == Rational(-1, 2));
  CHECK(parse_rational("0/5") == 0);
  CHECK(parse_rational("+7") == 7);
  CHECK(parse_rational("-12") == -12);
}

TEST_CASE("rational parsing: decimals are exact") {
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("-1.25") == Rational(-5, 4));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK(parse_rational("3.") == 3);
  CHECK(parse_rational("2.5e-1") == Rational(1, 4));
  CHECK(parse_rational("1e-2") == Rational(1, 100));
  CHECK(parse_rational("1.5E2") == 150);
  CHECK(parse_rational("0.1") == Rational(1, 10));
}

TEST_CASE("rational parsing: malformed inputs name the field") {
  CHECK_THROWS_AS(parse_rational("", "a"), lfrac::ParseError);
  CHECK_THROWS_AS(parse_rational("abc", "a"), lfrac::ParseError);
  CHECK_THROWS_AS(parse_rational("1/0", "l"), lfrac::ParseError);
  CHECK_THROWS_AS(parse_rational("1//2", "x"), lfrac::ParseError);
  CHECK_THROWS_AS(parse_rational("1.2.3", "x"), lfrac::ParseError);
  try {
    parse_rational("oops", "weights");
  } catch (const lfrac::ParseError& e) {
    CHECK(e.field == "weights");
    CHECK(std::string(e.what()).find("weights") != std::string::npos);
  }
}

TEST_CASE("serialization is canonical and round-trip idempotent") {
  CHECK(lfrac::to_string(parse_rational("2/4")) == "1/2");
  CHECK(lfrac::to_string(parse_rational("-2/4")) == "-1/2");
  CHECK(lfrac::to_string(parse_rational("8/4")) == "2");
  CHECK(lfrac::to_string(parse_rational("0/9")) == "0");

  lfrac::SeededRng rng(555);
  for (int trial = 0; trial < 200; ++trial) {
    Rational q = rng.rational(1000, 1000);
    std::string once = lfrac::to_string(q);
    CHECK(lfrac::to_string(parse_rational(once)) == once);
    CHECK(q.get_den() > 0);
  }
}

TEST_CASE("check_finite reports the first offending index") {
  std::vector<double> values{1.0, 2.0, std::numeric_limits<double>::infinity(), 4.0};
  try {
    lfrac::check_finite(std::span<const double>(values), "test");
    CHECK(false);
  } catch (const lfrac::OverflowError& e) {
    CHECK(e.index == 2);
  }
}
