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

#include "shiftkit/filterbank.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace shiftkit {
namespace {

void check_signal(const SparseMatrix& s, std::span<const double> x) {
  if (x.size() != s.n()) {
    throw std::invalid_argument("signal length " + std::to_string(x.size()) + " does not match n = " +
                                std::to_string(s.n()));
  }
  for (double v : x) {
    if (!std::isfinite(v)) throw std::invalid_argument("signal contains a non-finite entry");
  }
}

void check_coeffs(std::span<const double> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("polynomial filter needs at least one coefficient");
}

void spmv_rows(const SparseMatrix& s, std::span<const double> x, std::span<double> y, std::size_t begin,
               std::size_t end) {
  const auto off = s.row_offsets();
  const auto col = s.col_indices();
  const auto val = s.values();
  for (std::size_t i = begin; i < end; ++i) {
    double acc = 0.0;
    for (std::size_t k = off[i]; k < off[i + 1]; ++k) acc += val[k] * x[col[k]];
    y[i] = acc;
  }
}

void spmv_into(const SparseMatrix& s, std::span<const double> x, std::span<double> y, unsigned threads) {
  const std::size_t n = s.n();
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n / 1024 + 1)));
  if (workers == 1) {
    spmv_rows(s, x, y, 0, n);
    return;
  }
  std::vector<std::jthread> pool;
  const std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t b = std::min(n, w * chunk), e = std::min(n, b + chunk);
    pool.emplace_back([&, b, e] { spmv_rows(s, x, y, b, e); });
  }
}

template <class F>
double best_time(std::size_t repeats, F&& run) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    run();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

}  // namespace

SparseMatrix::SparseMatrix(std::size_t n, std::vector<std::size_t> row_offsets,
                           std::vector<std::size_t> col_indices, std::vector<double> values)
    : n_(n), row_offsets_(std::move(row_offsets)), col_indices_(std::move(col_indices)), values_(std::move(values)) {
  check_invariants();
}

void SparseMatrix::check_invariants() const {
  if (row_offsets_.size() != n_ + 1 || row_offsets_.front() != 0 || row_offsets_.back() != values_.size() ||
      col_indices_.size() != values_.size()) {
    throw std::invalid_argument("sparse matrix: inconsistent array sizes");
  }
  for (std::size_t i = 0; i < n_; ++i) {
    if (row_offsets_[i] > row_offsets_[i + 1]) throw std::invalid_argument("sparse matrix: row offsets decrease");
    for (std::size_t k = row_offsets_[i]; k < row_offsets_[i + 1]; ++k) {
      if (col_indices_[k] >= n_) throw std::invalid_argument("sparse matrix: column index out of range");
      if (k > row_offsets_[i] && col_indices_[k] <= col_indices_[k - 1]) {
        throw std::invalid_argument("sparse matrix: row not strictly sorted by column");
      }
    }
  }
}

SparseMatrix SparseMatrix::from_triplets(std::size_t n, std::vector<Triplet> triplets) {
  for (const auto& t : triplets) {
    if (t.row >= n || t.col >= n) throw std::invalid_argument("sparse matrix: entry index out of range");
  }
  std::stable_sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  std::vector<std::size_t> off(n + 1, 0);
  std::vector<std::size_t> col;
  std::vector<double> val;
  for (std::size_t k = 0; k < triplets.size(); ++k) {
    const auto& t = triplets[k];
    if (k > 0 && triplets[k - 1].row == t.row && triplets[k - 1].col == t.col) {
      val.back() += t.value;
      continue;
    }
    col.push_back(t.col);
    val.push_back(t.value);
    ++off[t.row + 1];
  }
  for (std::size_t i = 0; i < n; ++i) off[i + 1] += off[i];
  return SparseMatrix(n, std::move(off), std::move(col), std::move(val));
}

SparseMatrix SparseMatrix::from_exact(const Matrix& m) {
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < m.n(); ++i) {
    for (std::size_t j = 0; j < m.n(); ++j) {
      if (!m(i, j).is_zero()) t.push_back({i, j, m(i, j).to_double()});
    }
  }
  return from_triplets(m.n(), std::move(t));
}

Signal spmv(const SparseMatrix& s, std::span<const double> x, unsigned threads) {
  check_signal(s, x);
  Signal y(s.n());
  spmv_into(s, x, y, threads);
  return y;
}

Signal spmv_traced(const SparseMatrix& s, std::span<const double> x, std::vector<std::vector<std::size_t>>& reads) {
  check_signal(s, x);
  const auto off = s.row_offsets();
  const auto col = s.col_indices();
  const auto val = s.values();
  Signal y(s.n());
  reads.assign(s.n(), {});
  for (std::size_t i = 0; i < s.n(); ++i) {
    double acc = 0.0;
    for (std::size_t k = off[i]; k < off[i + 1]; ++k) {
      reads[i].push_back(col[k]);
      acc += val[k] * x[col[k]];
    }
    y[i] = acc;
  }
  return y;
}

Signal apply_poly_horner(const SparseMatrix& s, std::span<const double> coeffs, std::span<const double> x,
                         unsigned threads) {
  check_coeffs(coeffs);
  check_signal(s, x);
  const std::size_t n = s.n();
  Signal y(n), tmp(n);
  const double lead = coeffs.back();
  for (std::size_t i = 0; i < n; ++i) y[i] = lead * x[i];
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
    spmv_into(s, y, tmp, threads);
    const double c = coeffs[k];
    for (std::size_t i = 0; i < n; ++i) tmp[i] += c * x[i];
    std::swap(y, tmp);
  }
  return y;
}

Signal apply_poly_unrolled(const SparseMatrix& s, std::span<const double> coeffs, std::span<const double> x) {
  check_coeffs(coeffs);
  check_signal(s, x);
  const std::size_t n = s.n();
  Signal power(x.begin(), x.end()), next(n), y(n, 0.0);
  for (std::size_t l = 0; l < coeffs.size(); ++l) {
    if (l > 0) {
      spmv_into(s, power, next, 1);
      std::swap(power, next);
    }
    for (std::size_t i = 0; i < n; ++i) y[i] += coeffs[l] * power[i];
  }
  return y;
}

std::vector<double> materialize_dense(const SparseMatrix& s, std::span<const double> coeffs) {
  check_coeffs(coeffs);
  const std::size_t n = s.n();
  const auto off = s.row_offsets();
  const auto col = s.col_indices();
  const auto val = s.values();
  std::vector<double> h(n * n, 0.0), next(n * n);
  for (std::size_t i = 0; i < n; ++i) h[i * n + i] = coeffs.back();
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
    std::fill(next.begin(), next.end(), 0.0);
    // next = h * S + c_k I
    for (std::size_t i = 0; i < n; ++i) {
      const double* hrow = &h[i * n];
      double* out = &next[i * n];
      for (std::size_t m = 0; m < n; ++m) {
        const double him = hrow[m];
        if (him == 0.0) continue;
        for (std::size_t e = off[m]; e < off[m + 1]; ++e) out[col[e]] += him * val[e];
      }
      out[i] += coeffs[k];
    }
    std::swap(h, next);
  }
  return h;
}

Signal apply_poly_dense(const SparseMatrix& s, std::span<const double> coeffs, std::span<const double> x) {
  check_signal(s, x);
  const std::size_t n = s.n();
  const auto h = materialize_dense(s, coeffs);
  Signal y(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += h[i * n + j] * x[j];
    y[i] = acc;
  }
  return y;
}

std::string to_string(ApplyMethod m) { return m == ApplyMethod::Horner ? "horner" : "dense"; }

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("max_abs_diff: length mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

std::pair<ApplyReport, ApplyReport> bench_apply(const SparseMatrix& s, std::span<const double> coeffs,
                                                std::span<const double> x, const BenchOptions& options) {
  if (options.repeats == 0) throw std::invalid_argument("bench_apply: repeats must be >= 1");
  check_coeffs(coeffs);
  check_signal(s, x);
  const double n = static_cast<double>(s.n());
  const double nnz = static_cast<double>(s.nnz());
  const double degree = static_cast<double>(coeffs.size() - 1);

  ApplyReport horner;
  horner.method = ApplyMethod::Horner;
  Signal y_horner;
  horner.wall_time = best_time(options.repeats, [&] { y_horner = apply_poly_horner(s, coeffs, x); });
  horner.flops_estimate = degree * (2.0 * nnz + 2.0 * n) + n;

  ApplyReport dense;
  dense.method = ApplyMethod::Dense;
  dense.flops_estimate = degree * (2.0 * n * nnz + n) + 2.0 * n * n;
  const Signal y_unrolled = apply_poly_unrolled(s, coeffs, x);
  if (s.n() > options.dense_cap) {
    dense.skipped = true;
    horner.reference = "unrolled";
    horner.max_abs_diff = max_abs_diff(y_horner, y_unrolled);
    return {horner, dense};
  }
  Signal y_dense;
  dense.wall_time = best_time(options.repeats, [&] { y_dense = apply_poly_dense(s, coeffs, x); });
  dense.reference = "unrolled";
  dense.max_abs_diff = max_abs_diff(y_dense, y_unrolled);
  horner.reference = "dense";
  horner.max_abs_diff = max_abs_diff(y_horner, y_dense);
  return {horner, dense};
}

SparseMatrix random_sparse(std::size_t n, std::size_t per_row, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  std::vector<Triplet> t;
  t.reserve(n * per_row);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < per_row; ++k) t.push_back({i, pick(rng), value(rng)});
  }
  return SparseMatrix::from_triplets(n, std::move(t));
}

}  // namespace shiftkit
