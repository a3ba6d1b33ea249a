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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "shiftkit/counterexample.hpp"
#include "shiftkit/filterbank.hpp"
#include "test_support.hpp"

using namespace shiftkit;
using shiftkit::testing::cyclic3;
using shiftkit::testing::Gen;

namespace {

// Exact h(S) x over Q, then rounded once.
Signal exact_apply(const Matrix& s, const std::vector<long>& coeffs, const std::vector<long>& x) {
  std::vector<Rational> c(coeffs.begin(), coeffs.end());
  const Matrix h = evaluate(Polynomial(c), s);
  Signal y(s.n());
  for (std::size_t i = 0; i < s.n(); ++i) {
    Rational acc;
    for (std::size_t j = 0; j < s.n(); ++j) acc += h(i, j) * Rational(x[j]);
    y[i] = acc.to_double();
  }
  return y;
}

}  // namespace

TEST(Spmv, Examples) {
  const SparseMatrix c = SparseMatrix::from_exact(cyclic3());
  EXPECT_EQ(spmv(c, Signal{1, 2, 3}), (Signal{3, 1, 2}));
  const SparseMatrix z = SparseMatrix::from_triplets(4, {});
  EXPECT_EQ(spmv(z, Signal{1, -2, 3, 5}), (Signal{0, 0, 0, 0}));
  const SparseMatrix s = SparseMatrix::from_exact(counterexample_shift());
  EXPECT_EQ(spmv(s, Signal{0, 1, 1}), (Signal{2, 0, 0}));
}

TEST(Spmv, Errors) {
  const SparseMatrix c = SparseMatrix::from_exact(cyclic3());
  EXPECT_THROW(spmv(c, Signal{1, 2}), std::invalid_argument);
  EXPECT_THROW(spmv(c, Signal{1, std::nan(""), 3}), std::invalid_argument);
  EXPECT_THROW(spmv(c, Signal{1, std::numeric_limits<double>::infinity(), 3}), std::invalid_argument);
  EXPECT_THROW(SparseMatrix(2, {0, 1, 1}, {2}, {1.0}), std::invalid_argument);
  EXPECT_THROW(SparseMatrix::from_triplets(2, {{0, 2, 1.0}}), std::invalid_argument);
}

TEST(Spmv, DuplicatesAreSummed) {
  const SparseMatrix m = SparseMatrix::from_triplets(2, {{0, 1, 1.5}, {1, 0, 1.0}, {0, 1, 2.0}});
  EXPECT_EQ(m.nnz(), 2u);
  EXPECT_EQ(spmv(m, Signal{1, 1}), (Signal{3.5, 1.0}));
}

TEST(Spmv, ReadsOnlyNeighbours) {
  Gen g(71);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = g.index(1, 40);
    const SparseMatrix s = random_sparse(n, 3, g.engine());
    Signal x(n);
    for (auto& v : x) v = static_cast<double>(g.integer(-9, 9));
    std::vector<std::vector<std::size_t>> reads;
    const Signal y = spmv_traced(s, x, reads);
    EXPECT_EQ(y, spmv(s, x));
    const auto off = s.row_offsets();
    const auto col = s.col_indices();
    for (std::size_t i = 0; i < n; ++i) {
      const std::vector<std::size_t> expect(col.begin() + off[i], col.begin() + off[i + 1]);
      EXPECT_EQ(reads[i], expect);
    }
  }
}

TEST(Spmv, ThreadCountDoesNotChangeBits) {
  Gen g(73);
  const SparseMatrix s = random_sparse(5000, 5, g.engine());
  Signal x(5000);
  for (auto& v : x) v = std::uniform_real_distribution<double>(-1, 1)(g.engine());
  const Signal one = spmv(s, x, 1);
  EXPECT_EQ(spmv(s, x, 3), one);
  EXPECT_EQ(spmv(s, x, 8), one);
}

TEST(Horner, Examples) {
  const SparseMatrix c = SparseMatrix::from_exact(cyclic3());
  EXPECT_EQ(apply_poly_horner(c, std::vector<double>{2.5}, Signal{1, 2, 3}), (Signal{2.5, 5, 7.5}));
  EXPECT_EQ(apply_poly_horner(c, std::vector<double>{0, 0, 1}, Signal{1, 2, 3}), (Signal{2, 3, 1}));
  const SparseMatrix s = SparseMatrix::from_exact(counterexample_shift());
  EXPECT_EQ(apply_poly_horner(s, std::vector<double>{1, 1}, Signal{0, 1, 1}), (Signal{2, 1, 1}));
  EXPECT_THROW(apply_poly_horner(s, std::vector<double>{}, Signal{0, 1, 1}), std::invalid_argument);
}

TEST(Horner, MatchesExactEvaluation) {
  Gen g(79);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = g.index(1, 8);
    const Matrix s = g.int_matrix(n, -8, 8);
    std::vector<long> c(g.index(1, 5)), x(n);
    for (auto& v : c) v = g.integer(-8, 8);
    for (auto& v : x) v = g.integer(-8, 8);
    const Signal expect = exact_apply(s, c, x);
    const std::vector<double> cd(c.begin(), c.end());
    const Signal xd(x.begin(), x.end());
    const SparseMatrix sp = SparseMatrix::from_exact(s);
    const Signal y = apply_poly_horner(sp, cd, xd);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(y[i], expect[i], 1e-9 * std::max(1.0, std::abs(expect[i])));
    // small integers: every path is exact in double precision
    EXPECT_EQ(apply_poly_unrolled(sp, cd, xd), y);
    EXPECT_EQ(apply_poly_dense(sp, cd, xd), y);
  }
}

TEST(Horner, LinearInSignalAndCoefficients) {
  Gen g(83);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = g.index(1, 30);
    const SparseMatrix s = random_sparse(n, 3, g.engine());
    std::uniform_real_distribution<double> u(-1, 1);
    std::vector<double> a(4), b(4);
    Signal x(n), z(n);
    for (auto& v : a) v = u(g.engine());
    for (auto& v : b) v = u(g.engine());
    for (auto& v : x) v = u(g.engine());
    for (auto& v : z) v = u(g.engine());
    std::vector<double> ab(4);
    for (std::size_t k = 0; k < 4; ++k) ab[k] = a[k] + b[k];
    Signal xz(n);
    for (std::size_t i = 0; i < n; ++i) xz[i] = x[i] + z[i];
    const Signal lhs1 = apply_poly_horner(s, ab, x);
    const Signal ya = apply_poly_horner(s, a, x), yb = apply_poly_horner(s, b, x);
    const Signal lhs2 = apply_poly_horner(s, a, xz);
    const Signal yx = ya, yz = apply_poly_horner(s, a, z);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_NEAR(lhs1[i], ya[i] + yb[i], 1e-12);
      EXPECT_NEAR(lhs2[i], yx[i] + yz[i], 1e-12);
    }
  }
}

TEST(Bench, ToyCaseAndIdentityFilter) {
  const SparseMatrix s = SparseMatrix::from_exact(counterexample_shift());
  const auto [h, d] = bench_apply(s, std::vector<double>{1, 2, 3}, Signal{1, 2, 3});
  EXPECT_FALSE(d.skipped);
  EXPECT_LT(h.max_abs_diff, 1e-12);
  EXPECT_LT(d.max_abs_diff, 1e-12);
  EXPECT_EQ(h.reference, "dense");
  const auto [h1, d1] = bench_apply(s, std::vector<double>{1}, Signal{4, 5, 6});
  EXPECT_EQ(h1.max_abs_diff, 0.0);
  EXPECT_EQ(d1.max_abs_diff, 0.0);
}

TEST(Bench, DenseSkippedAboveCap) {
  Gen g(89);
  const SparseMatrix s = random_sparse(300, 5, g.engine());
  Signal x(300, 1.0);
  BenchOptions o;
  o.dense_cap = 100;
  o.repeats = 1;
  const auto [h, d] = bench_apply(s, std::vector<double>{1, 0.5, 0.25}, x, o);
  EXPECT_TRUE(d.skipped);
  EXPECT_EQ(h.reference, "unrolled");
  EXPECT_LT(h.max_abs_diff, 1e-12);
  o.repeats = 0;
  EXPECT_THROW(bench_apply(s, std::vector<double>{1}, x, o), std::invalid_argument);
}
