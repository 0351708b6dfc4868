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

#include "profitshare/rational.hpp"

#include <mpfr.h>

#include <cctype>
#include <string>

#include "profitshare/errors.hpp"

namespace profitshare {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw InvalidArgument("not a rational number: \"" + std::string(whole) +
                          "\"");
  }
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

// RAII holder for an mpfr_t.
class Real {
 public:
  explicit Real(mpfr_prec_t precision) { mpfr_init2(value_, precision); }
  ~Real() { mpfr_clear(value_); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
  mpfr_ptr get() { return value_; }

 private:
  mpfr_t value_;
};

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw InvalidArgument("empty rational literal");

  Rational result;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
      throw InvalidArgument("not a rational number: \"" + std::string(text) +
                            "\"");
    }
    mpz_class den(std::string(den_text), 10);
    if (den == 0) throw InvalidArgument("zero denominator in \"" +
                                        std::string(text) + "\"");
    result = Rational(num, den);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+'))
      whole.remove_prefix(1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) {
      throw InvalidArgument("not a rational number: \"" + std::string(text) +
                            "\"");
    }
    mpz_class num(std::string(whole.empty() ? "0" : whole) + std::string(frac),
                  10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    result = Rational(negative ? mpz_class(-num) : num, den);
  } else {
    result = Rational(parse_integer(text, text));
  }
  result.canonicalize();
  return result;
}

std::string to_string(const Rational& value) {
  Rational copy(value);
  copy.canonicalize();
  return copy.get_str(10);
}

Rational factorial(int k) {
  if (k < 0) throw InvalidArgument("factorial of a negative number");
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(z);
}

std::uint64_t ceil_log(const Rational& base, const Rational& value) {
  if (base <= 1) throw InvalidArgument("ceil_log requires base > 1");
  std::uint64_t k = 0;
  Rational power(1);
  while (power < value) {
    power *= base;
    ++k;
  }
  return k;
}

std::uint64_t ceil_scaled_log_inverse(const Rational& scale,
                                      const Rational& epsilon) {
  if (scale <= 0) throw InvalidArgument("scale must be positive");
  if (epsilon <= 0 || epsilon >= 1)
    throw InvalidArgument("epsilon must lie in (0, 1)");

  Rational inverse = 1 / epsilon;
  for (mpfr_prec_t precision = 128; precision <= (1 << 16); precision *= 2) {
    Real lo(precision), hi(precision), tmp(precision);

    // ln(1/eps) enclosure.
    mpfr_set_q(tmp.get(), inverse.get_mpq_t(), MPFR_RNDD);
    mpfr_log(lo.get(), tmp.get(), MPFR_RNDD);
    mpfr_set_q(tmp.get(), inverse.get_mpq_t(), MPFR_RNDU);
    mpfr_log(hi.get(), tmp.get(), MPFR_RNDU);

    // Both factors are positive, so directed rounding composes.
    mpfr_mul_q(lo.get(), lo.get(), scale.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(hi.get(), hi.get(), scale.get_mpq_t(), MPFR_RNDU);

    mpfr_ceil(lo.get(), lo.get());
    mpfr_ceil(hi.get(), hi.get());
    if (mpfr_equal_p(lo.get(), hi.get())) {
      return static_cast<std::uint64_t>(mpfr_get_ui(hi.get(), MPFR_RNDU));
    }
  }
  // Unreachable for rational inputs; report the conservative side anyway.
  Real hi(1 << 16), tmp(1 << 16);
  mpfr_set_q(tmp.get(), inverse.get_mpq_t(), MPFR_RNDU);
  mpfr_log(hi.get(), tmp.get(), MPFR_RNDU);
  mpfr_mul_q(hi.get(), hi.get(), scale.get_mpq_t(), MPFR_RNDU);
  mpfr_ceil(hi.get(), hi.get());
  return static_cast<std::uint64_t>(mpfr_get_ui(hi.get(), MPFR_RNDU)) + 1;
}

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace profitshare
