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
#include "shiftkit/elimination.hpp"
#include "shiftkit/represent.hpp"
#include "shiftkit/spectra.hpp"
#include "test_support.hpp"

using namespace shiftkit;
using shiftkit::testing::cyclic3;
using shiftkit::testing::Gen;

namespace {

// circulant(a, b, c) = a I + b C + c C^2, written out entry by entry
Matrix circulant(long a, long b, long c) { return Matrix{{a, c, b}, {b, a, c}, {c, b, a}}; }

}  // namespace

TEST(Commutes, Examples) {
  EXPECT_TRUE(commutes(counterexample_filter(), counterexample_shift()));
  EXPECT_TRUE((counterexample_filter() * counterexample_shift()).is_zero());
  EXPECT_TRUE((counterexample_shift() * counterexample_filter()).is_zero());
  Gen g(59);
  EXPECT_TRUE(commutes(g.int_matrix(3, -5, 5), Matrix::identity(3)));
  EXPECT_FALSE(commutes(Matrix{{0, 1}, {0, 0}}, Matrix{{0, 0}, {1, 0}}));
  EXPECT_THROW(commutes(Matrix::identity(2), Matrix::identity(3)), std::invalid_argument);
}

TEST(Represent, CounterexampleIsNotRepresentable) {
  const Matrix s = counterexample_shift(), h = counterexample_filter();
  const RepresentResult r = represent_filter(h, s);
  EXPECT_EQ(r.verdict, Verdict::NotRepresentable);
  EXPECT_FALSE(r.coeffs.has_value());
  ASSERT_TRUE(r.witness_entry.has_value());
  EXPECT_EQ(r.witness_entry->row, 0u);
  EXPECT_EQ(r.witness_entry->col_a, 1u);
  EXPECT_EQ(r.witness_entry->col_b, 2u);
  ASSERT_TRUE(r.residual_certificate.has_value());
  EXPECT_TRUE(dot(*r.residual_certificate, Matrix::identity(3).vec()).is_zero());
  EXPECT_TRUE(dot(*r.residual_certificate, s.vec()).is_zero());
  EXPECT_FALSE(dot(*r.residual_certificate, h.vec()).is_zero());
  EXPECT_TRUE(verify_represent_result(r, h, s));
}

TEST(Represent, Examples) {
  const Matrix s = counterexample_shift();
  const RepresentResult self = represent_filter(s, s);
  EXPECT_EQ(self.verdict, Verdict::Representable);
  EXPECT_EQ(self.coeffs, (std::vector<Rational>{0, 1}));

  const Matrix circ = circulant(4, 5, 6);
  EXPECT_EQ(circ, Rational(4) * Matrix::identity(3) + Rational(5) * cyclic3() + Rational(6) * (cyclic3() * cyclic3()));
  const RepresentResult r = represent_filter(circ, cyclic3());
  EXPECT_EQ(r.verdict, Verdict::Representable);
  EXPECT_EQ(r.coeffs, (std::vector<Rational>{4, 5, 6}));

  const Matrix c = cyclic3();
  const std::vector<RationalVector> cols{Matrix::identity(3).vec(), c.vec(), (c * c).vec()};
  EXPECT_EQ(solve_linear(cols, circ.vec()), (RationalVector{4, 5, 6}));

  EXPECT_EQ(represent_filter(Matrix(3), cyclic3()).coeffs, (std::vector<Rational>{0}));
  EXPECT_EQ(represent_filter(Matrix{{0, 1}, {0, 0}}, Matrix{{0, 0}, {1, 0}}).verdict, Verdict::NotCommuting);
  EXPECT_THROW(represent_filter(Matrix::identity(2), s), std::invalid_argument);
}

TEST(Represent, PolynomialsInShiftRoundTrip) {
  Gen g(61);
  for (int t = 0; t < 100; ++t) {
    const Matrix s = t % 2 ? g.int_matrix(g.index(1, 5), -2, 2) : g.derogatory_spec(g.index(2, 5)).materialize();
    const Polynomial q = g.int_poly(g.index(0, 6), -3, 3);
    const Matrix h = evaluate(q, s);
    const RepresentResult r = represent_filter(h, s);
    ASSERT_EQ(r.verdict, Verdict::Representable);
    EXPECT_LT(r.coeffs->size(), static_cast<std::size_t>(minpoly(s).degree()) + 1);
    EXPECT_EQ(evaluate(Polynomial(*r.coeffs), s), h);
    // reduction modulo the minimal polynomial gives the same coefficients
    const Polynomial reduced = q.divmod(minpoly(s)).second;
    EXPECT_EQ(Polynomial(*r.coeffs), reduced);
  }
}

TEST(Represent, VerifierRejectsTamperedResults) {
  const Matrix s = counterexample_shift(), h = counterexample_filter();
  RepresentResult r = represent_filter(h, s);
  RepresentResult bad = r;
  bad.verdict = Verdict::Representable;
  bad.coeffs = std::vector<Rational>{0, 1};
  EXPECT_FALSE(verify_represent_result(bad, h, s));
  bad = r;
  (*bad.residual_certificate)[0] += 1;
  EXPECT_FALSE(verify_represent_result(bad, h, s));
  bad = r;
  bad.witness_entry->col_b = 0;
  EXPECT_FALSE(verify_represent_result(bad, h, s));
}

TEST(Witness, Examples) {
  const auto w = find_nonrepresentable_witness(counterexample_shift());
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(commutes(*w, counterexample_shift()));
  EXPECT_EQ(represent_filter(*w, counterexample_shift()).verdict, Verdict::NotRepresentable);

  EXPECT_FALSE(find_nonrepresentable_witness(cyclic3()).has_value());

  const auto w2 = find_nonrepresentable_witness(Matrix::identity(2));
  ASSERT_TRUE(w2.has_value());
  const std::vector<RationalVector> cols{Matrix::identity(2).vec()};
  EXPECT_FALSE(solve_linear(cols, w2->vec()).has_value());
}

TEST(Witness, CounterexampleHasThreeIndependentNonPolynomialDirections) {
  const Matrix s = counterexample_shift();
  std::vector<RationalVector> rows{Matrix::identity(3).vec(), s.vec()};
  for (const auto& x : commutant_basis(s).basis) rows.push_back(x.vec());
  EXPECT_EQ(shiftkit::testing::naive_rank(rows) - 2, 3u);
}

TEST(FilterClass, Examples) {
  const Matrix s = counterexample_shift(), h = counterexample_filter();
  const FilterClassSample a = filter_class_sample(0, Polynomial{0, 1}, h, s);
  EXPECT_EQ(a.materialized, s);
  EXPECT_EQ(represent_filter(a.materialized, s).verdict, Verdict::Representable);

  const FilterClassSample b = filter_class_sample(1, Polynomial{}, h, s);
  EXPECT_EQ(b.materialized, h);
  EXPECT_EQ(represent_filter(b.materialized, s).verdict, Verdict::NotRepresentable);

  const FilterClassSample c = filter_class_sample(2, Polynomial{3, 1}, h, s);
  EXPECT_EQ(c.materialized, (Matrix{{3, 3, 1}, {0, 3, 0}, {0, 0, 3}}));
  EXPECT_TRUE(c.commutes_with_shift);
  EXPECT_EQ(represent_filter(c.materialized, s).verdict, Verdict::NotRepresentable);

  // degree beyond n - 1 is allowed
  const FilterClassSample d = filter_class_sample(0, Polynomial{1, 0, 0, 0, 0, 7}, h, s);
  EXPECT_EQ(d.materialized, Matrix::identity(3));
}
