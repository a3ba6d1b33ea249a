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

#include "shiftkit/commutant.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "shiftkit/elimination.hpp"

namespace shiftkit {

std::vector<RationalVector> sylvester_rows(const Matrix& s) {
  const std::size_t n = s.n();
  const auto unknown = [n](std::size_t row, std::size_t col) { return col * n + row; };
  std::vector<RationalVector> rows;
  rows.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      RationalVector eq(n * n);
      for (std::size_t k = 0; k < n; ++k) {
        if (!s(k, j).is_zero()) eq[unknown(i, k)] += s(k, j);  // (XS)_ij
        if (!s(i, k).is_zero()) eq[unknown(k, j)] -= s(i, k);  // (SX)_ij
      }
      rows.push_back(std::move(eq));
    }
  }
  return rows;
}

CommutantBasis commutant_basis(const Matrix& s) {
  const std::size_t n = s.n();
  const auto rows = sylvester_rows(s);
  const NullBasis nb = rref_nullspace(rows, n * n);
  CommutantBasis out;
  out.n = n;
  out.dim = nb.dim;
  out.basis.reserve(nb.dim);
  for (const auto& v : nb.vectors) out.basis.push_back(Matrix::from_vec(n, v));
  return out;
}

std::size_t commutant_dimension(const Matrix& s) {
  const std::size_t n = s.n();
  return n * n - rank(sylvester_rows(s), n * n);
}

SpectralReport analyze_shift(const Matrix& s) {
  SpectralReport r = spectral_report(s);
  r.commutant_dim = commutant_dimension(s);
  return r;
}

void JordanSpec::validate() const {
  if (blocks.empty()) throw std::invalid_argument("JordanSpec: no blocks");
  for (const auto& b : blocks) {
    if (b.size == 0) throw std::invalid_argument("JordanSpec: block of size 0");
  }
}

std::size_t JordanSpec::dimension() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size;
  return n;
}

std::vector<std::size_t> JordanSpec::offsets() const {
  std::vector<std::size_t> off;
  off.reserve(blocks.size());
  std::size_t at = 0;
  for (const auto& b : blocks) {
    off.push_back(at);
    at += b.size;
  }
  return off;
}

Matrix JordanSpec::materialize() const {
  validate();
  Matrix j(dimension());
  const auto off = offsets();
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    for (std::size_t i = 0; i < blocks[k].size; ++i) {
      j(off[k] + i, off[k] + i) = blocks[k].eigenvalue;
      if (i + 1 < blocks[k].size) j(off[k] + i, off[k] + i + 1) = 1;
    }
  }
  return j;
}

std::size_t JordanSpec::commutant_dimension_formula() const {
  std::size_t total = 0;
  for (const auto& a : blocks) {
    for (const auto& b : blocks) {
      if (a.eigenvalue == b.eigenvalue) total += std::min(a.size, b.size);
    }
  }
  return total;
}

std::string JordanSpec::describe() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    os << (k ? "," : "") << "(" << blocks[k].eigenvalue << "," << blocks[k].size << ")";
  }
  os << "}";
  return os.str();
}

void Lemma2Report::throw_if_failed() const {
  if (first_violation) {
    const auto& v = *first_violation;
    std::ostringstream os;
    os << "commutant block pattern violated for " << spec.describe() << " at block (" << v.l << ","
       << v.m << "), basis element " << v.basis_index << ": " << v.reason;
    throw std::runtime_error(os.str());
  }
  if (commutant_dim != formula_dim) {
    throw std::runtime_error("commutant dimension " + std::to_string(commutant_dim) +
                             " != block count " + std::to_string(formula_dim) + " for " +
                             spec.describe());
  }
}

namespace {

// Checks one block against its expected shape; on success appends the
// Toeplitz parameters (first row of U) to params.
std::optional<std::string> check_block(const Matrix& x, std::size_t r0, std::size_t c0,
                                       std::size_t rows, std::size_t cols, BlockShape shape,
                                       RationalVector& params) {
  const auto at = [&](std::size_t p, std::size_t q) -> const Rational& { return x(r0 + p, c0 + q); };
  if (shape == BlockShape::Zero) {
    for (std::size_t p = 0; p < rows; ++p) {
      for (std::size_t q = 0; q < cols; ++q) {
        if (!at(p, q).is_zero()) return "nonzero entry across distinct eigenvalues";
      }
    }
    return std::nullopt;
  }
  const std::size_t u = std::min(rows, cols);
  // U occupies rows [ur, ur+u) and columns [uc, uc+u) of the block.
  const std::size_t ur = 0;
  const std::size_t uc = shape == BlockShape::Fat ? cols - u : 0;
  for (std::size_t p = 0; p < rows; ++p) {
    for (std::size_t q = 0; q < cols; ++q) {
      const bool inside = p >= ur && p < ur + u && q >= uc && q < uc + u;
      if (!inside) {
        if (!at(p, q).is_zero()) return "nonzero entry outside the Toeplitz square";
        continue;
      }
      const std::size_t pu = p - ur, qu = q - uc;
      if (qu < pu) {
        if (!at(p, q).is_zero()) return "nonzero entry below the diagonal of U";
      } else if (at(p, q) != at(ur, uc + (qu - pu))) {
        return "U is not constant along a diagonal";
      }
    }
  }
  params.clear();
  for (std::size_t t = 0; t < u; ++t) params.push_back(at(ur, uc + t));
  return std::nullopt;
}

}  // namespace

Lemma2Report validate_lemma2_pattern(const JordanSpec& spec) {
  spec.validate();
  Lemma2Report report;
  report.spec = spec;
  report.formula_dim = spec.commutant_dimension_formula();
  const Matrix j = spec.materialize();
  const CommutantBasis cb = commutant_basis(j);
  report.commutant_dim = cb.dim;
  const auto off = spec.offsets();
  const std::size_t k = spec.blocks.size();
  for (std::size_t l = 0; l < k; ++l) {
    for (std::size_t m = 0; m < k; ++m) {
      BlockPairCheck check;
      check.l = l;
      check.m = m;
      check.rows = spec.blocks[l].size;
      check.cols = spec.blocks[m].size;
      if (spec.blocks[l].eigenvalue != spec.blocks[m].eigenvalue) {
        check.expected = BlockShape::Zero;
      } else {
        check.expected = check.rows <= check.cols ? BlockShape::Fat : BlockShape::Thin;
        check.parameters = std::min(check.rows, check.cols);
      }
      std::vector<RationalVector> family;
      RationalVector params;
      for (std::size_t b = 0; b < cb.basis.size(); ++b) {
        const auto err = check_block(cb.basis[b], off[l], off[m], check.rows, check.cols,
                                     check.expected, params);
        if (err) {
          check.ok = false;
          if (!report.first_violation) report.first_violation = PatternViolation{l, m, b, *err};
          break;
        }
        if (check.expected != BlockShape::Zero) family.push_back(params);
      }
      if (check.ok && check.expected != BlockShape::Zero) {
        check.realized = rank(family, check.parameters);
        if (check.realized != check.parameters) {
          check.ok = false;
          if (!report.first_violation) {
            report.first_violation = PatternViolation{
                l, m, 0,
                "Toeplitz family has rank " + std::to_string(check.realized) + ", expected " +
                    std::to_string(check.parameters)};
          }
        }
      }
      report.pairs.push_back(check);
    }
  }
  return report;
}

std::vector<JordanSpec> enumerate_jordan_specs(std::size_t n, const std::vector<Rational>& eigenvalues) {
  // Partitions of every k <= n, parts in non-increasing order.
  std::vector<std::vector<std::vector<std::size_t>>> partitions(n + 1);
  partitions[0].push_back({});
  std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&, std::size_t)> part =
      [&](std::size_t total, std::size_t left, std::vector<std::size_t>& cur, std::size_t max_part) {
        if (left == 0) {
          partitions[total].push_back(cur);
          return;
        }
        for (std::size_t p = std::min(left, max_part); p >= 1; --p) {
          cur.push_back(p);
          part(total, left - p, cur, p);
          cur.pop_back();
        }
      };
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> cur;
    part(k, k, cur, k);
  }

  std::vector<JordanSpec> out;
  JordanSpec cur;
  std::function<void(std::size_t, std::size_t)> assign = [&](std::size_t e, std::size_t left) {
    if (e == eigenvalues.size()) {
      if (left == 0 && !cur.blocks.empty()) out.push_back(cur);
      return;
    }
    for (std::size_t k = 0; k <= left; ++k) {
      for (const auto& p : partitions[k]) {
        const std::size_t mark = cur.blocks.size();
        for (std::size_t size : p) cur.blocks.push_back({eigenvalues[e], size});
        assign(e + 1, left - k);
        cur.blocks.resize(mark);
      }
    }
  };
  assign(0, n);
  return out;
}

}  // namespace shiftkit
