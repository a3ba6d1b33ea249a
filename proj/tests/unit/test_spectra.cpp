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

TEST(Charpoly, Examples) {
  EXPECT_EQ(charpoly(counterexample_shift()), (Polynomial{0, 0, 0, 1}));
  EXPECT_EQ(charpoly(Matrix::identity(2)), (Polynomial{1, -2, 1}));
  EXPECT_EQ(charpoly(cyclic3()), (Polynomial{-1, 0, 0, 1}));
}

TEST(Minpoly, Examples) {
  EXPECT_EQ(minpoly(counterexample_shift()), (Polynomial{0, 0, 1}));
  EXPECT_EQ(minpoly(Matrix::identity(2)), (Polynomial{-1, 1}));
  EXPECT_EQ(minpoly(cyclic3()), (Polynomial{-1, 0, 0, 1}));
}

TEST(ShiftEnabled, Examples) {
  EXPECT_FALSE(is_shift_enabled(counterexample_shift()));
  EXPECT_TRUE(is_shift_enabled(cyclic3()));
  EXPECT_FALSE(is_shift_enabled(Matrix::identity(2)));
  EXPECT_TRUE(is_shift_enabled(Matrix::identity(1)));
  EXPECT_TRUE(is_shift_enabled(Matrix(1)));
}

TEST(Charpoly, MatchesLaplaceExpansion) {
  Gen g(23);
  for (int t = 0; t < 150; ++t) {
    const Matrix s = g.int_matrix(g.index(1, 5), -3, 3);
    EXPECT_EQ(charpoly(s), shiftkit::testing::laplace_charpoly(s)) << s;
  }
}

TEST(Charpoly, RationalEntries) {
  Gen g(29);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = g.index(1, 4);
    Matrix s(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s(i, j) = Rational(g.integer(-3, 3), g.integer(1, 4));
    EXPECT_EQ(charpoly(s), shiftkit::testing::laplace_charpoly(s));
  }
}

TEST(Minpoly, AnnihilatesDividesCharpolyAndIsMinimal) {
  Gen g(31);
  for (int t = 0; t < 150; ++t) {
    // mix derogatory and generic matrices
    Matrix s = t % 2 ? g.int_matrix(g.index(1, 5), -2, 2) : g.derogatory_spec(g.index(2, 5)).materialize();
    const Polynomial m = minpoly(s), p = charpoly(s);
    EXPECT_TRUE(m.is_monic());
    EXPECT_TRUE(evaluate(m, s).is_zero());
    EXPECT_TRUE(p.divmod(m).second.is_zero());
    EXPECT_EQ(static_cast<std::size_t>(m.degree()), shiftkit::testing::naive_minpoly_degree(s));
    EXPECT_EQ(is_shift_enabled(s), m == p);
  }
}

TEST(Spectra, InvariantUnderUnimodularSimilarity) {
  Gen g(37);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = g.index(1, 5);
    const Matrix s = g.int_matrix(n, -2, 2);
    const auto [u, v] = g.unimodular(n, 5);
    const Matrix c = u * s * v;
    EXPECT_EQ(charpoly(c), charpoly(s));
    EXPECT_EQ(minpoly(c), minpoly(s));
  }
}

TEST(Spectra, CompanionMatricesAreShiftEnabled) {
  Gen g(41);
  for (int t = 0; t < 100; ++t) {
    const Polynomial p = g.monic_poly(g.index(1, 6), -3, 3);
    const Matrix c = Matrix::companion(p);
    EXPECT_EQ(charpoly(c), p);
    EXPECT_EQ(minpoly(c), p);
    EXPECT_TRUE(is_shift_enabled(c));
  }
}

TEST(Spectra, ReportFields) {
  const SpectralReport r = analyze_shift(counterexample_shift());
  EXPECT_EQ(r.n, 3u);
  EXPECT_EQ(r.poly_span_dim, 2u);
  EXPECT_FALSE(r.shift_enabled);
  EXPECT_EQ(r.commutant_dim, 5u);
  EXPECT_FALSE(spectral_report(cyclic3()).commutant_dim.has_value());
}
