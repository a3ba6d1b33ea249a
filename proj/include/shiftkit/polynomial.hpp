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

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "shiftkit/rational.hpp"

namespace shiftkit {

/// Univariate polynomial over the rationals. Coefficients are stored in
/// ascending degree with no trailing zeros; the empty sequence is zero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);
  Polynomial(std::initializer_list<Rational> ascending)
      : Polynomial(std::vector<Rational>(ascending)) {}

  static Polynomial monomial(std::size_t degree, const Rational& coeff = 1);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == Rational(1); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of lambda^k, zero past the degree.
  Rational coeff(std::size_t k) const;

  Rational evaluate(const Rational& x) const;
  Polynomial monic() const;
  Polynomial derivative() const;

  /// Division with remainder; throws std::domain_error for a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  std::vector<std::string> to_strings() const;
  /// Human-readable form in the variable "x", e.g. "x^2 - 2*x + 1".
  std::string pretty(const std::string& var = "x") const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace shiftkit
