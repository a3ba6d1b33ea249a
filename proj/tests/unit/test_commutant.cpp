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

#include "shiftkit/commutant.hpp"
#include "shiftkit/counterexample.hpp"
#include "shiftkit/spectra.hpp"
#include "test_support.hpp"

using namespace shiftkit;
using shiftkit::testing::cyclic3;
using shiftkit::testing::Gen;
using shiftkit::testing::kronecker_commutant_dim;

namespace {

JordanSpec spec(std::initializer_list<std::pair<long, std::size_t>> blocks) {
  JordanSpec j;
  for (const auto& [lambda, size] : blocks) j.blocks.push_back({Rational(lambda), size});
  return j;
}

}  // namespace

TEST(Commutant, CounterexampleHasDimensionFive) {
  const Matrix s = counterexample_shift();
  // X S = S X reduces to X21 = X31 = 0, X22 + X32 = X11, X23 + X33 = X11.
  EXPECT_EQ(kronecker_commutant_dim(s), 5u);
  const CommutantBasis b = commutant_basis(s);
  EXPECT_EQ(b.dim, 5u);
  ASSERT_EQ(b.basis.size(), 5u);
  for (const auto& x : b.basis) {
    EXPECT_EQ(x * s, s * x);
    EXPECT_TRUE(x(1, 0).is_zero());
    EXPECT_TRUE(x(2, 0).is_zero());
    EXPECT_EQ(x(1, 1) + x(2, 1), x(0, 0));
    EXPECT_EQ(x(1, 2) + x(2, 2), x(0, 0));
  }
}

TEST(Commutant, Examples) {
  EXPECT_EQ(kronecker_commutant_dim(cyclic3()), 3u);
  EXPECT_EQ(commutant_dimension(cyclic3()), 3u);
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(commutant_dimension(Matrix::identity(n)), n * n);
}

TEST(Commutant, SylvesterRowsEncodeCommutator) {
  Gen g(43);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = g.index(1, 4);
    const Matrix s = g.int_matrix(n, -2, 2), x = g.int_matrix(n, -2, 2);
    const auto rows = sylvester_rows(s);
    const Matrix c = x * s - s * x;
    const RationalVector v = x.vec();
    ASSERT_EQ(rows.size(), n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(dot(rows[i * n + j], v), c(i, j));
  }
}

TEST(Commutant, DimensionMatchesKroneckerOracleAndBoundsFromBelow) {
  Gen g(47);
  for (int t = 0; t < 150; ++t) {
    const Matrix s = t % 3 ? g.int_matrix(g.index(1, 4), -2, 2) : g.derogatory_spec(g.index(2, 4)).materialize();
    const CommutantBasis b = commutant_basis(s);
    EXPECT_EQ(b.dim, kronecker_commutant_dim(s));
    EXPECT_GE(b.dim, s.n());
    std::vector<RationalVector> vecs;
    for (const auto& x : b.basis) {
      EXPECT_EQ(x * s, s * x);
      vecs.push_back(x.vec());
    }
    EXPECT_EQ(shiftkit::testing::naive_rank(vecs), b.dim);
  }
}

TEST(Commutant, ClosedUnderProduct) {
  Gen g(53);
  for (int t = 0; t < 30; ++t) {
    const Matrix s = g.derogatory_spec(g.index(2, 4)).materialize();
    const CommutantBasis b = commutant_basis(s);
    const Matrix& x = b.basis[g.index(0, b.dim - 1)];
    const Matrix& y = b.basis[g.index(0, b.dim - 1)];
    EXPECT_EQ((x * y) * s, s * (x * y));
  }
}

TEST(JordanSpec, FormulaExamples) {
  EXPECT_EQ(spec({{0, 2}, {0, 1}}).commutant_dimension_formula(), 5u);
  EXPECT_EQ(spec({{0, 2}, {5, 1}}).commutant_dimension_formula(), 3u);
  EXPECT_EQ(spec({{1, 1}}).commutant_dimension_formula(), 1u);
  EXPECT_TRUE(is_shift_enabled(spec({{0, 2}, {5, 1}}).materialize()));
}

TEST(JordanSpec, MaterializeAndValidate) {
  const Matrix j = spec({{2, 2}, {3, 1}}).materialize();
  EXPECT_EQ(j, (Matrix{{2, 1, 0}, {0, 2, 0}, {0, 0, 3}}));
  EXPECT_THROW(JordanSpec{}.validate(), std::invalid_argument);
  EXPECT_THROW(spec({{1, 0}}).validate(), std::invalid_argument);
}

TEST(JordanSpec, CounterexampleSimilarToItsJordanForm) {
  // S = P J P^{-1} with J = J_2(0) + J_1(0)
  const JordanSpec js = spec({{0, 2}, {0, 1}});
  EXPECT_EQ(commutant_dimension(js.materialize()), commutant_dimension(counterexample_shift()));
  EXPECT_EQ(minpoly(js.materialize()), minpoly(counterexample_shift()));
}

TEST(BlockPattern, Examples) {
  const Lemma2Report a = validate_lemma2_pattern(spec({{0, 2}, {0, 1}}));
  EXPECT_TRUE(a.ok());
  ASSERT_EQ(a.pairs.size(), 4u);
  for (const auto& p : a.pairs) {
    if (p.l == 0 && p.m == 1) {
      EXPECT_EQ(p.expected, BlockShape::Thin);
      EXPECT_EQ(p.parameters, 1u);
    }
    if (p.l == 1 && p.m == 0) {
      EXPECT_EQ(p.expected, BlockShape::Fat);
      EXPECT_EQ(p.parameters, 1u);
    }
  }
  const Lemma2Report b = validate_lemma2_pattern(spec({{0, 1}, {1, 1}}));
  EXPECT_TRUE(b.ok());
  for (const auto& p : b.pairs)
    if (p.l != p.m) EXPECT_EQ(p.expected, BlockShape::Zero);
  const Lemma2Report c = validate_lemma2_pattern(spec({{2, 3}}));
  EXPECT_TRUE(c.ok());
  EXPECT_EQ(c.commutant_dim, 3u);
  EXPECT_NO_THROW(c.throw_if_failed());
}

TEST(BlockPattern, AllSpecsUpToFour) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& js : enumerate_jordan_specs(n, {0, 1})) {
      const Lemma2Report r = validate_lemma2_pattern(js);
      EXPECT_TRUE(r.ok()) << js.describe();
      EXPECT_EQ(r.commutant_dim, kronecker_commutant_dim(js.materialize())) << js.describe();
    }
  }
}

TEST(BlockPattern, EnumerationCountsPartitions) {
  // one eigenvalue: partitions of n
  EXPECT_EQ(enumerate_jordan_specs(4, {0}).size(), 5u);
  EXPECT_EQ(enumerate_jordan_specs(6, {0}).size(), 11u);
  // two eigenvalues, n = 2: {a2}, {a1,a1}, {b2}, {b1,b1}, {a1,b1}
  EXPECT_EQ(enumerate_jordan_specs(2, {0, 1}).size(), 5u);
}
