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
#include <span>
#include <vector>

#include "shiftkit/matrix.hpp"

namespace shiftkit {

/// Basis of the solution space of a homogeneous system. One vector per
/// free variable (ascending column index): that variable is 1, the other
/// free variables are 0, pivot variables are back-substituted.
struct NullBasis {
  std::size_t dim = 0;
  std::vector<RationalVector> vectors;
};

/// Row echelon form produced by fraction-free (Bareiss) elimination of an
/// integer-scaled copy of the input rows. Pivots are taken as the first row
/// with a nonzero entry in the current column.
class EchelonForm {
 public:
  EchelonForm(std::span<const RationalVector> rows, std::size_t columns);

  std::size_t columns() const { return columns_; }
  std::size_t rank() const { return pivots_.size(); }
  const std::vector<std::size_t>& pivot_columns() const { return pivots_; }
  bool is_pivot(std::size_t column) const;

  /// Canonical null-space basis (see NullBasis).
  NullBasis null_basis() const;

  /// Solution of the homogeneous system with the given free-variable values;
  /// the span must have one value per non-pivot column, in ascending order.
  RationalVector back_substitute(std::span<const Rational> free_values) const;

 private:
  std::size_t columns_;
  std::vector<std::vector<mpz_class>> rows_;  // rank() rows, upper echelon
  std::vector<std::size_t> pivots_;
};

/// Null space of the system whose rows are given. Throws on ragged input.
NullBasis rref_nullspace(std::span<const RationalVector> rows);
/// Variant with an explicit column count, so an empty row set is allowed.
NullBasis rref_nullspace(std::span<const RationalVector> rows, std::size_t columns);

std::size_t rank(std::span<const RationalVector> rows, std::size_t columns);

/// Coefficients c with sum_i c_i * columns[i] == target, if any. Free
/// coefficients are set to zero, so the lowest-index columns are used.
std::optional<RationalVector> solve_linear(std::span<const RationalVector> columns,
                                           const RationalVector& target);

/// Exact inverse, absent when singular.
std::optional<Matrix> invert(const Matrix& m);

/// Incrementally grown set of independent vectors with exact membership
/// tests. Each stored vector remembers how it was formed from the inputs,
/// so a linear dependence among the inputs can be read back.
class IncrementalSpan {
 public:
  explicit IncrementalSpan(std::size_t length) : length_(length) {}

  std::size_t size() const { return basis_.size(); }

  /// Appends v if it is independent of the vectors added so far and returns
  /// std::nullopt. Otherwise leaves the span unchanged and returns the
  /// coefficients c (one per accepted vector, in insertion order) with
  /// v == sum_k c_k * accepted_k.
  std::optional<RationalVector> add(const RationalVector& v);

 private:
  std::size_t length_;
  std::vector<RationalVector> basis_;        // reduced, pivot entry 1
  std::vector<std::size_t> pivots_;
  std::vector<RationalVector> combination_;  // basis_[k] in terms of accepted inputs
};

}  // namespace shiftkit
