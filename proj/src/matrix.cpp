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

#include "shiftkit/matrix.hpp"

#include <stdexcept>

namespace shiftkit {
namespace {

void require_same(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

Matrix::Matrix(std::size_t n) : n_(n), a_(n * n) {
  if (n == 0) throw std::invalid_argument("matrix dimension must be >= 1");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) : Matrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    require_same(row.size(), n_, "Matrix");
    std::size_t j = 0;
    for (const auto& v : row) (*this)(i, j++) = v;
    ++i;
  }
}

Matrix Matrix::from_rows(const std::vector<RationalVector>& rows) {
  Matrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_same(rows[i].size(), m.n_, "Matrix::from_rows");
    for (std::size_t j = 0; j < m.n_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_vec(std::size_t n, std::span<const Rational> column_major) {
  require_same(column_major.size(), n * n, "Matrix::from_vec");
  Matrix m(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) m(i, j) = column_major[j * n + i];
  }
  return m;
}

Matrix Matrix::block_diagonal(std::span<const Matrix> blocks) {
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.n();
  Matrix m(total);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.n(); ++i) {
      for (std::size_t j = 0; j < b.n(); ++j) m(off + i, off + j) = b(i, j);
    }
    off += b.n();
  }
  return m;
}

Matrix Matrix::companion(const Polynomial& monic) {
  if (!monic.is_monic() || monic.degree() < 1) {
    throw std::invalid_argument("companion matrix needs a monic polynomial of degree >= 1");
  }
  const auto n = static_cast<std::size_t>(monic.degree());
  Matrix m(n);
  for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = -monic.coeff(i);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& v : a_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

Rational Matrix::trace() const {
  Rational t;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::transpose() const {
  Matrix t(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

RationalVector Matrix::vec() const {
  RationalVector v;
  v.reserve(a_.size());
  for (std::size_t j = 0; j < n_; ++j) {
    for (std::size_t i = 0; i < n_; ++i) v.push_back((*this)(i, j));
  }
  return v;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_same(n_, o.n_, "Matrix +");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_same(n_, o.n_, "Matrix -");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& v : a_) v *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same(a.n_, b.n_, "mat_mul");
  const std::size_t n = a.n_;
  Matrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << "[";
  for (std::size_t i = 0; i < m.n_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.n_; ++j) os << (j ? ", " : "") << m(i, j);
    os << "]";
  }
  return os << "]";
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
  std::vector<std::vector<std::string>> rows(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    rows[i].reserve(n_);
    for (std::size_t j = 0; j < n_; ++j) rows[i].push_back((*this)(i, j).to_string());
  }
  return rows;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) { return a * b; }

Matrix evaluate(const Polynomial& p, const Matrix& s) {
  Matrix acc(s.n());
  const Matrix eye = Matrix::identity(s.n());
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * s + (*it) * eye;
  return acc;
}

std::vector<Matrix> powers(const Matrix& s, std::size_t count) {
  std::vector<Matrix> out;
  out.reserve(count);
  if (count == 0) return out;
  out.push_back(Matrix::identity(s.n()));
  while (out.size() < count) out.push_back(out.back() * s);
  return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  require_same(a.size(), b.size(), "dot");
  Rational acc;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!a[k].is_zero() && !b[k].is_zero()) acc += a[k] * b[k];
  }
  return acc;
}

}  // namespace shiftkit
