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
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "shiftkit/matrix.hpp"

namespace shiftkit {

using Signal = std::vector<double>;

struct Triplet {
  std::size_t row = 0;
  std::size_t col = 0;
  double value = 0.0;
};

/// Row-compressed sparse matrix of doubles. Within a row, entries are sorted
/// by column and carry no duplicates.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  /// Duplicate (row, col) entries are summed; explicit zeros are kept.
  static SparseMatrix from_triplets(std::size_t n, std::vector<Triplet> triplets);
  static SparseMatrix from_exact(const Matrix& m);
  /// Takes ownership of already compressed arrays; throws if they break
  /// the invariants above.
  SparseMatrix(std::size_t n, std::vector<std::size_t> row_offsets, std::vector<std::size_t> col_indices,
               std::vector<double> values);

  std::size_t n() const { return n_; }
  std::size_t nnz() const { return values_.size(); }
  std::span<const std::size_t> row_offsets() const { return row_offsets_; }
  std::span<const std::size_t> col_indices() const { return col_indices_; }
  std::span<const double> values() const { return values_; }

 private:
  void check_invariants() const;

  std::size_t n_ = 0;
  std::vector<std::size_t> row_offsets_{0};
  std::vector<std::size_t> col_indices_;
  std::vector<double> values_;
};

/// y = S x with a fixed per-row accumulation order. Rows may be split over
/// `threads` workers; the result does not depend on the split. Throws
/// std::invalid_argument on a size mismatch or a non-finite input entry.
Signal spmv(const SparseMatrix& s, std::span<const double> x, unsigned threads = 1);

/// Like spmv, also returning for each row the input indices it read.
Signal spmv_traced(const SparseMatrix& s, std::span<const double> x,
                   std::vector<std::vector<std::size_t>>& reads);

/// (h_0 I + h_1 S + ... + h_L S^L) x using L sparse products and two live
/// vectors: y <- S y + h_k x.
Signal apply_poly_horner(const SparseMatrix& s, std::span<const double> coeffs, std::span<const double> x,
                         unsigned threads = 1);

/// Reference: sum_l h_l (S^l x) with each power applied explicitly.
Signal apply_poly_unrolled(const SparseMatrix& s, std::span<const double> coeffs, std::span<const double> x);

/// Row-major dense h(S), built by Horner over dense x sparse products.
std::vector<double> materialize_dense(const SparseMatrix& s, std::span<const double> coeffs);

/// Materializes h(S) densely, then multiplies by x.
Signal apply_poly_dense(const SparseMatrix& s, std::span<const double> coeffs, std::span<const double> x);

enum class ApplyMethod { Horner, Dense };
std::string to_string(ApplyMethod m);

struct ApplyReport {
  ApplyMethod method = ApplyMethod::Horner;
  bool skipped = false;
  double wall_time = 0.0;  // seconds, best of the repeats
  double flops_estimate = 0.0;
  double max_abs_diff = 0.0;
  /// "dense" or "unrolled": what max_abs_diff was measured against.
  std::string reference;
};

struct BenchOptions {
  std::size_t repeats = 3;
  std::size_t dense_cap = 4096;
};

/// Times the Horner and dense paths on the same input. Above the dense cap
/// the dense path is skipped and Horner is compared with the unrolled
/// reference instead.
std::pair<ApplyReport, ApplyReport> bench_apply(const SparseMatrix& s, std::span<const double> coeffs,
                                                std::span<const double> x, const BenchOptions& options = {});

/// Random sparse matrix with about `per_row` entries in each row, values
/// uniform in [-1, 1].
SparseMatrix random_sparse(std::size_t n, std::size_t per_row, std::mt19937_64& rng);

double max_abs_diff(std::span<const double> a, std::span<const double> b);

}  // namespace shiftkit
