// Copyright 2026 The profitshare Authors
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

#include "doctest.h"
#include "profitshare/coalition.hpp"
#include "profitshare/errors.hpp"
#include "profitshare/rational.hpp"

using namespace profitshare;

TEST_CASE("rational literals parse exactly and print in lowest terms") {
  CHECK(parse_rational("1/3") == Rational(1, 3));
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational(" 5 ") == Rational(5));
  CHECK(parse_rational("1.414214") == Rational(707107, 500000));
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(Rational(8, 4)) == "2");
  CHECK(to_string(Rational(0)) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("abc"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational(""), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), InvalidArgument);
}

TEST_CASE("factorials") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == Rational("2432902008176640000"));
}

TEST_CASE("integer logarithm ceiling") {
  CHECK(ceil_log(Rational(2), Rational(1)) == 0);
  CHECK(ceil_log(Rational(2), Rational(8)) == 3);
  CHECK(ceil_log(Rational(2), Rational(9)) == 4);
  CHECK(ceil_log(Rational(5, 4), Rational(2)) == 4);  // (5/4)^3 < 2 <= (5/4)^4
  CHECK(ceil_log(Rational(3, 2), Rational(1, 2)) == 0);
}

TEST_CASE("scaled log ceiling uses a certified enclosure") {
  // 5 ln 10 = 11.51...
  CHECK(ceil_scaled_log_inverse(Rational(5), Rational(1, 10)) == 12);
  // ln 2 = 0.693...
  CHECK(ceil_scaled_log_inverse(Rational(1), Rational(1, 2)) == 1);
  // 100 ln 2 = 69.31...
  CHECK(ceil_scaled_log_inverse(Rational(100), Rational(1, 2)) == 70);
  // epsilon just below 1 still needs one step
  CHECK(ceil_scaled_log_inverse(Rational(1), Rational(999999, 1000000)) == 1);
  CHECK_THROWS_AS(ceil_scaled_log_inverse(Rational(1), Rational(1)), InvalidArgument);
  CHECK_THROWS_AS(ceil_scaled_log_inverse(Rational(1), Rational(0)), InvalidArgument);
}

TEST_CASE("coalitions are ascending sets over bit masks") {
  Coalition c = Coalition::of({3, 1});
  CHECK(c.mask() == 0b101);
  CHECK(c.members() == std::vector<int>{1, 3});
  CHECK(c.size() == 2);
  CHECK(c.contains(3));
  CHECK_FALSE(c.contains(2));
  CHECK(c.with(2).mask() == 0b111);
  CHECK(c.without(1) == Coalition::of({3}));
  CHECK(c.max_member() == 3);
  CHECK(Coalition::all(4).mask() == 0b1111);
  CHECK(to_string(c) == "{1,3}");
  CHECK(to_string(Coalition()) == "{}");
  CHECK(Coalition::of({1}).is_subset_of(c));
  int count = 0;
  for_each_submask(c.mask(), [&](Mask) { ++count; });
  CHECK(count == 4);
}
