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

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace profitshare {

// Exact arbitrary-precision rational. Every payoff, valuation entry and
// potential in the library is one of these; nothing is ever rounded.
//
// gmpxx uses expression templates, so never bind an arithmetic expression to
// `auto`; spell out `Rational`.
using Rational = mpq_class;

// Accepts "k", "-k", "p/q" and plain decimals such as "1.414214". The result
// is canonicalised. Throws InvalidArgument on anything else (including q = 0).
Rational parse_rational(std::string_view text);

// Canonical lowest-terms "p/q", or "k" for integers.
std::string to_string(const Rational& value);

// k! as a rational, k >= 0.
Rational factorial(int k);

// Smallest integer k >= 0 with base^k >= value. Requires base > 1.
std::uint64_t ceil_log(const Rational& base, const Rational& value);

// ceil(scale * ln(1 / epsilon)) for scale > 0 and epsilon in (0, 1).
//
// Evaluated with MPFR under directed rounding; precision is raised until the
// lower and upper enclosures agree on the ceiling. ln of a rational other
// than 1 is irrational, so the loop terminates.
std::uint64_t ceil_scaled_log_inverse(const Rational& scale,
                                      const Rational& epsilon);

// Nearest double, for human-readable summaries only.
double to_double(const Rational& value);

}  // namespace profitshare
