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

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "shiftkit/polynomial.hpp"
#include "shiftkit/rational.hpp"

namespace shiftkit {

using RationalVector = std::vector<Rational>;

/// Dense square matrix of exact rationals, row-major.
class Matrix {
 public:
  /// n x n zero matrix; n must be >= 1.
  explicit Matrix(std::size_t n);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);
  static Matrix from_rows(const std::vector<RationalVector>& rows);
  static Matrix identity(std::size_t n);
  /// Inverse of vec(): entries given column by column.
  static Matrix from_vec(std::size_t n, std::span<const Rational> column_major);
  /// diag(blocks[0], blocks[1], ...).
  static Matrix block_diagonal(std::span<const Matrix> blocks);
  /// Companion matrix of a monic polynomial of degree >= 1: ones on the
  /// subdiagonal, negated low coefficients in the last column.
  static Matrix companion(const Polynomial& monic);

  std::size_t n() const { return n_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  std::span<const Rational> entries() const { return a_; }

  bool is_zero() const;
  Rational trace() const;
  Matrix transpose() const;
  /// Column-major stacking, the usual vec(.) convention.
  RationalVector vec() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Matrix& m);

  std::vector<std::vector<std::string>> to_strings() const;

 private:
  std::size_t n_;
  std::vector<Rational> a_;
};

/// Exact product; throws std::invalid_argument when dimensions differ.
Matrix mat_mul(const Matrix& a, const Matrix& b);

/// p(S) by Horner's rule over matrices.
Matrix evaluate(const Polynomial& p, const Matrix& s);

/// I, S, S^2, ..., S^(count-1).
std::vector<Matrix> powers(const Matrix& s, std::size_t count);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace shiftkit
