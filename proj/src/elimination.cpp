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

#include "shiftkit/elimination.hpp"

#include <algorithm>
#include <stdexcept>

namespace shiftkit {
namespace {

// Integer row proportional to the rational row (same null space).
std::vector<mpz_class> integer_row(const RationalVector& row) {
  mpz_class scale = 1;
  for (const auto& v : row) {
    if (!v.is_zero()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.den().get_mpz_t());
  }
  std::vector<mpz_class> out(row.size());
  mpz_class content = 0;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j].is_zero()) continue;
    out[j] = row[j].num() * (scale / row[j].den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[j].get_mpz_t());
  }
  if (content > 1) {
    for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
  }
  return out;
}

void check_width(std::span<const RationalVector> rows, std::size_t columns) {
  for (const auto& r : rows) {
    if (r.size() != columns) {
      throw std::invalid_argument("ragged system: row of length " + std::to_string(r.size()) +
                                  ", expected " + std::to_string(columns));
    }
  }
}

}  // namespace

EchelonForm::EchelonForm(std::span<const RationalVector> rows, std::size_t columns)
    : columns_(columns) {
  check_width(rows, columns);
  std::vector<std::vector<mpz_class>> a;
  a.reserve(rows.size());
  for (const auto& r : rows) {
    auto ir = integer_row(r);
    if (std::any_of(ir.begin(), ir.end(), [](const mpz_class& v) { return v != 0; })) {
      a.push_back(std::move(ir));
    }
  }
  const std::size_t m = a.size();
  std::size_t r = 0;
  mpz_class prev = 1;
  mpz_class t;
  for (std::size_t c = 0; c < columns_ && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    const mpz_class& piv = a[r][c];
    for (std::size_t i = r + 1; i < m; ++i) {
      const mpz_class f = a[i][c];
      if (f == 0) {
        // Row still has to be scaled by piv / prev to keep the invariant.
        for (std::size_t j = c + 1; j < columns_; ++j) {
          if (a[i][j] == 0) continue;
          a[i][j] *= piv;
          mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
        }
        continue;
      }
      for (std::size_t j = c + 1; j < columns_; ++j) {
        t = piv * a[i][j];
        t -= f * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = piv;
    pivots_.push_back(c);
    ++r;
  }
  a.resize(r);
  rows_ = std::move(a);
}

bool EchelonForm::is_pivot(std::size_t column) const {
  return std::binary_search(pivots_.begin(), pivots_.end(), column);
}

RationalVector EchelonForm::back_substitute(std::span<const Rational> free_values) const {
  if (free_values.size() != columns_ - rank()) {
    throw std::invalid_argument("back_substitute: wrong number of free values");
  }
  RationalVector x(columns_);
  std::size_t next_free = 0;
  for (std::size_t c = 0; c < columns_; ++c) {
    if (!is_pivot(c)) x[c] = free_values[next_free++];
  }
  for (std::size_t r = rank(); r-- > 0;) {
    const std::size_t p = pivots_[r];
    const auto& row = rows_[r];
    Rational s;
    for (std::size_t j = p + 1; j < columns_; ++j) {
      if (row[j] != 0 && !x[j].is_zero()) s += Rational(row[j], 1) * x[j];
    }
    x[p] = -s / Rational(row[p], 1);
  }
  return x;
}

NullBasis EchelonForm::null_basis() const {
  NullBasis out;
  const std::size_t free_count = columns_ - rank();
  out.dim = free_count;
  out.vectors.reserve(free_count);
  RationalVector free_values(free_count);
  for (std::size_t k = 0; k < free_count; ++k) {
    if (k > 0) free_values[k - 1] = 0;
    free_values[k] = 1;
    out.vectors.push_back(back_substitute(free_values));
  }
  return out;
}

NullBasis rref_nullspace(std::span<const RationalVector> rows) {
  if (rows.empty()) throw std::invalid_argument("rref_nullspace: no rows; pass a column count");
  return rref_nullspace(rows, rows.front().size());
}

NullBasis rref_nullspace(std::span<const RationalVector> rows, std::size_t columns) {
  if (columns == 0) throw std::invalid_argument("rref_nullspace: zero columns");
  return EchelonForm(rows, columns).null_basis();
}

std::size_t rank(std::span<const RationalVector> rows, std::size_t columns) {
  return EchelonForm(rows, columns).rank();
}

std::optional<RationalVector> solve_linear(std::span<const RationalVector> columns,
                                           const RationalVector& target) {
  const std::size_t k = columns.size();
  const std::size_t len = target.size();
  for (const auto& c : columns) {
    if (c.size() != len) throw std::invalid_argument("solve_linear: dimension mismatch");
  }
  std::vector<RationalVector> rows(len, RationalVector(k + 1));
  for (std::size_t r = 0; r < len; ++r) {
    for (std::size_t i = 0; i < k; ++i) rows[r][i] = columns[i][r];
    rows[r][k] = target[r];
  }
  const EchelonForm ef(rows, k + 1);
  if (ef.is_pivot(k)) return std::nullopt;
  // Augmented column is free; setting it to -1 solves A c - t = 0.
  RationalVector free_values(k + 1 - ef.rank());
  free_values.back() = -1;
  RationalVector x = ef.back_substitute(free_values);
  x.pop_back();
  return x;
}

std::optional<Matrix> invert(const Matrix& m) {
  const std::size_t n = m.n();
  std::vector<RationalVector> a(n, RationalVector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    const Rational inv = Rational(1) / a[c][c];
    for (auto& v : a[c]) v *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c].is_zero()) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < 2 * n; ++j) {
        if (!a[c][j].is_zero()) a[i][j] -= f * a[c][j];
      }
    }
  }
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a[i][n + j];
  }
  return out;
}

std::optional<RationalVector> IncrementalSpan::add(const RationalVector& v) {
  if (v.size() != length_) throw std::invalid_argument("IncrementalSpan: length mismatch");
  const std::size_t accepted = basis_.size();
  RationalVector w = v;
  // w == v - sum_k f[k] * basis_[k]
  RationalVector f(accepted);
  for (std::size_t k = 0; k < accepted; ++k) {
    const Rational coef = w[pivots_[k]];
    if (coef.is_zero()) continue;
    f[k] = coef;
    const auto& b = basis_[k];
    for (std::size_t j = 0; j < length_; ++j) {
      if (!b[j].is_zero()) w[j] -= coef * b[j];
    }
  }
  // Express sum_k f[k] * basis_[k] in terms of the accepted inputs.
  RationalVector through(accepted);
  for (std::size_t k = 0; k < accepted; ++k) {
    if (f[k].is_zero()) continue;
    for (std::size_t j = 0; j < combination_[k].size(); ++j) through[j] += f[k] * combination_[k][j];
  }
  const auto pivot = std::find_if(w.begin(), w.end(), [](const Rational& x) { return !x.is_zero(); });
  if (pivot == w.end()) return through;

  const Rational inv = Rational(1) / *pivot;
  for (auto& x : w) x *= inv;
  RationalVector comb(accepted + 1);
  for (std::size_t j = 0; j < accepted; ++j) comb[j] = -through[j] * inv;
  comb[accepted] = inv;
  pivots_.push_back(static_cast<std::size_t>(pivot - w.begin()));
  basis_.push_back(std::move(w));
  combination_.push_back(std::move(comb));
  return std::nullopt;
}

}  // namespace shiftkit
