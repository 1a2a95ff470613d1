// Copyright 2026 The panint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <catch2/catch_amalgamated.hpp>

#include <panint/numeric.hpp>

using panint::Rational;
using panint::format_rational;
using panint::parse_rational;

TEST_CASE("parse_rational reads decimals exactly") {
  CHECK(parse_rational("0.1") == Rational(1, 10));
  CHECK(parse_rational("-2.5") == Rational(-5, 2));
  CHECK(parse_rational("6.5") == Rational(13, 2));
  CHECK(parse_rational("1e-3") == Rational(1, 1000));
  CHECK(parse_rational("2.5E2") == Rational(250));
  CHECK(parse_rational("+7") == Rational(7));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("007.0090") == Rational(7009, 1000));
  CHECK(parse_rational("0") == 0);
  CHECK(parse_rational("010/08") == Rational(5, 4));
}

TEST_CASE("parse_rational reads fractions") {
  CHECK(parse_rational("1/3") == Rational(1, 3));
  CHECK(parse_rational("-4/6") == Rational(-2, 3));
}

TEST_CASE("parse_rational rejects junk") {
  for (const char* bad : {"", "abc", "1/0", "1.2.3", "--1", "1e", "0x10", "1/-2"}) {
    INFO(bad);
    CHECK_THROWS_AS(parse_rational(bad), panint::error);
  }
}

TEST_CASE("format_rational prefers terminating decimals") {
  CHECK(format_rational(Rational(0)) == "0");
  CHECK(format_rational(Rational(13, 2)) == "6.5");
  CHECK(format_rational(Rational(-1, 8)) == "-0.125");
  CHECK(format_rational(Rational(7, 20)) == "0.35");
  CHECK(format_rational(Rational(1, 3)) == "1/3");
  CHECK(format_rational(Rational(-22, 7)) == "-22/7");
}

TEST_CASE("format and parse round-trip") {
  for (const Rational& v : {Rational(3, 1024), Rational(-5, 3), Rational(123456789, 1000), Rational(1, 7)}) {
    CHECK(parse_rational(format_rational(v)) == v);
  }
}

TEST_CASE("double to Rational is exact") {
  const double d = 0.1;
  const Rational r = panint::scalar_cast<Rational>(d);
  CHECK(r != Rational(1, 10));
  CHECK(panint::to_double(r) == d);
  CHECK(panint::rational_from_literal(d) == Rational(1, 10));
  CHECK(panint::shortest_decimal(0.1) == "0.1");
}

TEST_CASE("float tolerances are relative above one and absolute below") {
  using panint::approx_equal;
  CHECK(approx_equal(1e6, 1e6 + 1e-4));
  CHECK_FALSE(approx_equal(1e6, 1e6 + 1e-2));
  CHECK(approx_equal(0.0, 5e-10));
  CHECK_FALSE(approx_equal(0.0, 5e-9));
  CHECK_FALSE(approx_equal(Rational(1), Rational(1) + Rational(1, 1000000000000LL)));
  CHECK(panint::approx_le(1.0 + 5e-10, 1.0));
  CHECK_FALSE(panint::approx_le(1.0 + 5e-9, 1.0));
}
