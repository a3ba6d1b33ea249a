// Copyright 2026 The shiftkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "shiftkit/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace shiftkit {
namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!is_digits(body)) {
    throw std::invalid_argument("not an integer literal: '" + std::string(s) + "'");
  }
  mpz_class out(std::string(body), 10);
  if (!s.empty() && s.front() == '-') out = -out;
  return out;
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text), 1);
  const std::string_view den_text = text.substr(slash + 1);
  if (!is_digits(den_text)) {
    throw std::invalid_argument("bad denominator in '" + std::string(text) + "'");
  }
  return Rational(parse_integer(text.substr(0, slash)), mpz_class(std::string(den_text), 10));
}

Rational Rational::parse_decimal(std::string_view text) {
  std::string_view mantissa = text;
  long exponent = 0;
  const auto epos = text.find_first_of("eE");
  if (epos != std::string_view::npos) {
    mantissa = text.substr(0, epos);
    const mpz_class e = parse_integer(text.substr(epos + 1));
    if (!e.fits_slong_p() || abs(e) > 100000) {
      throw std::invalid_argument("exponent out of range in '" + std::string(text) + "'");
    }
    exponent = e.get_si();
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long frac_digits = 0;
  const auto dot = mantissa.find('.');
  if (dot == std::string_view::npos) {
    digits = std::string(mantissa);
  } else {
    digits = std::string(mantissa.substr(0, dot));
    const std::string_view frac = mantissa.substr(dot + 1);
    digits += frac;
    frac_digits = static_cast<long>(frac.size());
  }
  if (!is_digits(digits)) {
    throw std::invalid_argument("not a decimal literal: '" + std::string(text) + "'");
  }
  mpz_class num(digits, 10);
  if (negative) num = -num;
  const long shift = exponent - frac_digits;
  if (shift >= 0) return Rational(num * pow10(static_cast<unsigned long>(shift)), 1);
  return Rational(num, pow10(static_cast<unsigned long>(-shift)));
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  value_ /= o.value_;
  return *this;
}

Rational Rational::limit_denominator(const mpz_class& max_den) const {
  if (max_den < 1) throw std::invalid_argument("denominator limit must be >= 1");
  if (den() <= max_den) return *this;
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  mpz_class n = num(), d = den();
  while (true) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    const mpz_class q2 = q0 + a * q1;
    if (q2 > max_den) break;
    const mpz_class p2 = p0 + a * p1;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const mpz_class rem = n - a * d;
    n = d;
    d = rem;
    if (d == 0) break;
  }
  mpz_class k;
  mpz_fdiv_q(k.get_mpz_t(), mpz_class(max_den - q0).get_mpz_t(), q1.get_mpz_t());
  const Rational bound1(p0 + k * p1, q0 + k * q1);
  const Rational bound2(p1, q1);
  const mpq_class e1 = abs(bound1.raw() - value_);
  const mpq_class e2 = abs(bound2.raw() - value_);
  return e2 <= e1 ? bound2 : bound1;
}

}  // namespace shiftkit
