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

#include "shiftkit/conversion.hpp"
#include "shiftkit/counterexample.hpp"
#include "shiftkit/elimination.hpp"
#include "shiftkit/represent.hpp"
#include "shiftkit/spectra.hpp"
#include "test_support.hpp"

using namespace shiftkit;
using shiftkit::testing::cyclic3;
using shiftkit::testing::Gen;

namespace {

// Oracle: is S = r0 I + r1 T + r2 T^2 solvable? Eliminates by hand on the
// nine entry equations with the naive rank test (rank [A | b] vs rank A).
bool naive_feasible(const Matrix& t, const Matrix& s) {
  const Matrix t2 = t * t;
  std::vector<RationalVector> a, ab;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      a.push_back({Rational(i == j ? 1 : 0), t(i, j), t2(i, j)});
      ab.push_back({Rational(i == j ? 1 : 0), t(i, j), t2(i, j), s(i, j)});
    }
  return shiftkit::testing::naive_rank(a) == shiftkit::testing::naive_rank(ab);
}

}  // namespace

TEST(CaseChecks, EqualDiagonalExample) {
  const CaseCheck c = check_equal_diagonal_case({0, 0, 1, 1});
  EXPECT_EQ(c.family, 1);
  EXPECT_EQ(c.candidate, (Matrix{{0, 0, 1}, {0, 0, 0}, {0, 1, 0}}));
  EXPECT_TRUE(c.certificate_holds);
  EXPECT_TRUE(c.full_system_infeasible);
  EXPECT_TRUE(c.infeasible());
  EXPECT_NE(c.contradiction.find("e = 0"), std::string::npos);
  EXPECT_THROW(check_equal_diagonal_case({0, 0, 1, 0}), std::invalid_argument);
  EXPECT_THROW(check_equal_diagonal_case({0, 0, 0, 1}), std::invalid_argument);
}

TEST(CaseChecks, SplitDiagonalExamples) {
  const CaseCheck c = check_split_diagonal_case({0, 0, 1, 0, 1});
  EXPECT_EQ(c.family, 2);
  EXPECT_TRUE(c.infeasible());
  const CaseCheck z = check_split_diagonal_case({0, 5, 0, 3, 2});
  EXPECT_TRUE(z.infeasible());
  EXPECT_EQ(z.multipliers.size(), z.equations.size());
  EXPECT_NE(z.contradiction.find("0 = 1"), std::string::npos);
  EXPECT_THROW(check_split_diagonal_case({1, 0, 1, 0, 1}), std::invalid_argument);
}

TEST(CaseChecks, CandidatesCommuteWithFilter) {
  const CaseGrid grid = default_case_grid();
  const CaseReport r = check_commuting_family_cases(grid.equal, grid.split);
  EXPECT_EQ(r.equal_diagonal_count, 300u);
  EXPECT_EQ(r.split_diagonal_count, 320u);
  EXPECT_TRUE(r.all_infeasible());
  for (const auto& c : r.checks) {
    EXPECT_TRUE(commutes(counterexample_filter(), c.candidate));
    EXPECT_FALSE(naive_feasible(c.candidate, counterexample_shift()));
  }
}

TEST(CaseChecks, EveryCommutingShiftEnabledCandidateFitsAFamily) {
  // Any 3x3 T with HT = TH has T21 = T23 = T31 = 0 and T11 = T22. Sample
  // such T, keep the shift-enabled ones and confirm S is never r(T).
  Gen g(67);
  std::size_t enabled = 0;
  for (int t = 0; t < 2000; ++t) {
    const auto v = [&] { return Rational(g.integer(-3, 3), g.integer(1, 2)); };
    const Rational d = v();
    Matrix m{{d, v(), v()}, {0, d, 0}, {0, v(), v()}};
    if (!commutes(counterexample_filter(), m) || !is_shift_enabled(m)) continue;
    ++enabled;
    EXPECT_FALSE(naive_feasible(m, counterexample_shift())) << m;
  }
  EXPECT_GT(enabled, 500u);
}

TEST(Conversion, CounterexampleSearchFindsNothing) {
  const ConversionSearchReport r = conversion_search(counterexample_shift(), counterexample_filter(), 300, 42);
  EXPECT_EQ(r.samples_tried, 300u);
  EXPECT_TRUE(r.feasible_found.empty());
  EXPECT_EQ(r.passed_represents_filter, 0u);
  ASSERT_TRUE(r.case_checks.has_value());
  EXPECT_TRUE(r.case_checks->all_infeasible());
}

TEST(Conversion, ShiftEnabledShiftIsFoundWhenInPool) {
  EntryPool pool;
  pool.extra_candidates.push_back(cyclic3());
  const Matrix c = cyclic3();
  const ConversionSearchReport r = conversion_search(c, c * c, 10, 1, pool);
  ASSERT_FALSE(r.feasible_found.empty());
  const ConversionHit& hit = r.feasible_found.front();
  EXPECT_EQ(hit.candidate_index, 0u);
  EXPECT_EQ(hit.shift, c);
  EXPECT_TRUE(verify_conversion_hit(hit, c, c * c));
  EXPECT_FALSE(r.case_checks.has_value());
}

TEST(Conversion, DeterministicAcrossThreadCounts) {
  const Matrix s = counterexample_shift();
  const auto a = conversion_search(s, s, 120, 9, {}, 1);
  const auto b = conversion_search(s, s, 120, 9, {}, 4);
  EXPECT_EQ(a.passed_shift_enabled, b.passed_shift_enabled);
  EXPECT_EQ(a.passed_represents_shift, b.passed_represents_shift);
  EXPECT_EQ(a.feasible_found.size(), b.feasible_found.size());
  for (std::size_t k = 0; k < 50; ++k) EXPECT_EQ(conversion_candidate(3, 9, k, {}), conversion_candidate(3, 9, k, {}));
}

TEST(Conversion, AnyHitFoundIsGenuine) {
  const Matrix s = counterexample_shift();
  const auto r = conversion_search(s, s, 400, 5);
  for (const auto& hit : r.feasible_found) {
    EXPECT_TRUE(is_shift_enabled(hit.shift));
    EXPECT_EQ(evaluate(hit.r, hit.shift), s);
  }
}

TEST(Conversion, ForgedHitIsRejected) {
  const Matrix s = counterexample_shift(), h = counterexample_filter();
  ConversionSearchReport r;
  ConversionHit forged;
  forged.shift = cyclic3();
  forged.r = Polynomial{0, 1};
  forged.h = Polynomial{0, 0, 1};
  EXPECT_FALSE(r.admit(forged, s, h));
  EXPECT_TRUE(r.feasible_found.empty());
  EXPECT_EQ(r.rejected_hits, 1u);
  // a derogatory shift with correct polynomials is still refused
  ConversionHit derog;
  derog.shift = s;
  derog.r = Polynomial{0, 1};
  derog.h = Polynomial{0, 1};
  EXPECT_FALSE(r.admit(derog, s, s));
  EXPECT_EQ(r.rejected_hits, 2u);
}

TEST(Conversion, ZeroPoolRejected) {
  EntryPool pool;
  pool.num_min = pool.num_max = 0;
  EXPECT_THROW(conversion_search(counterexample_shift(), counterexample_filter(), 5, 1, pool), std::invalid_argument);
}

TEST(Counterexample, DefaultRunPasses) {
  const CounterexampleReport r = run_counterexample({});
  ASSERT_EQ(r.stages.size(), 5u);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.first_failure(), 5u);
}

TEST(Counterexample, TamperedFilterFailsAtRepresentStage) {
  CounterexampleOptions o;
  o.tamper_filter = true;
  o.samples = 10;
  const CounterexampleReport r = run_counterexample(o);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.first_failure(), 2u);
  EXPECT_EQ(r.stages[2].name, "represent");
}
