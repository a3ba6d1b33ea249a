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
#include <optional>
#include <string>
#include <vector>

#include "shiftkit/matrix.hpp"
#include "shiftkit/spectra.hpp"

namespace shiftkit {

struct CommutantBasis {
  std::size_t n = 0;
  std::size_t dim = 0;
  std::vector<Matrix> basis;
};

/// Rows of the linear map X -> XS - SX acting on vec(X) (column-major
/// unknowns); one row per entry (i, j) of XS - SX in row-major order.
std::vector<RationalVector> sylvester_rows(const Matrix& s);

/// Canonical basis of {X : XS == SX}.
CommutantBasis commutant_basis(const Matrix& s);
std::size_t commutant_dimension(const Matrix& s);

/// spectral_report() plus the commutant dimension.
SpectralReport analyze_shift(const Matrix& s);

struct JordanBlock {
  Rational eigenvalue;
  std::size_t size = 1;
};

/// Block-diagonal Jordan matrix diag(J_1, ..., J_K), J_k = lambda_k I + N.
struct JordanSpec {
  std::vector<JordanBlock> blocks;

  /// Throws std::invalid_argument for an empty spec or a zero-sized block.
  void validate() const;
  std::size_t dimension() const;
  Matrix materialize() const;
  /// Row/column offset of each block.
  std::vector<std::size_t> offsets() const;
  /// sum over pairs (l, m) with lambda_l == lambda_m of min(n_l, n_m).
  std::size_t commutant_dimension_formula() const;
  std::string describe() const;
};

enum class BlockShape { Zero, Fat, Thin };

struct BlockPairCheck {
  std::size_t l = 0, m = 0;
  std::size_t rows = 0, cols = 0;
  BlockShape expected = BlockShape::Zero;
  /// Free parameters the shape allows: min(n_l, n_m), or 0 for Zero.
  std::size_t parameters = 0;
  /// Rank of the block family spanned by the commutant basis.
  std::size_t realized = 0;
  bool ok = true;
};

struct PatternViolation {
  std::size_t l = 0, m = 0, basis_index = 0;
  std::string reason;
};

struct Lemma2Report {
  JordanSpec spec;
  std::size_t commutant_dim = 0;
  std::size_t formula_dim = 0;
  std::vector<BlockPairCheck> pairs;
  std::optional<PatternViolation> first_violation;

  bool ok() const { return !first_violation.has_value() && commutant_dim == formula_dim; }
  /// Throws std::runtime_error naming the first violating (l, m, basis index).
  void throw_if_failed() const;
};

/// Builds J from the spec, computes its commutant directly and checks every
/// basis element block by block: zero across distinct eigenvalues, [0 U]
/// (n_l <= n_m) or [U; 0] (n_l > n_m) with U upper-triangular Toeplitz
/// when the eigenvalues agree.
Lemma2Report validate_lemma2_pattern(const JordanSpec& spec);

/// All multisets of Jordan blocks with total size n and eigenvalues drawn
/// from the given list, in a fixed order.
std::vector<JordanSpec> enumerate_jordan_specs(std::size_t n, const std::vector<Rational>& eigenvalues);

}  // namespace shiftkit
