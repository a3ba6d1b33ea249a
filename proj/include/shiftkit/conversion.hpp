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
#include <optional>
#include <string>
#include <vector>

#include "shiftkit/matrix.hpp"
#include "shiftkit/polynomial.hpp"

namespace shiftkit {

// --- Exact infeasibility of S = r0 I + r1 T + r2 T^2 for the two families
// of 3x3 T that commute with the built-in filter H = E_12.

/// T = [[d, b, c], [0, d, 0], [0, e, d]] with c * e != 0.
struct EqualDiagonalCase {
  Rational d, b, c, e;
};

/// T = [[d, b, c], [0, d, 0], [0, e, f]] with d != f.
struct SplitDiagonalCase {
  Rational d, b, c, e, f;
};

struct CaseCheck {
  int family = 0;  // 1 = equal diagonal, 2 = split diagonal
  Matrix candidate{3};
  /// The selected equations in (r0, r1, r2), extracted from I, T, T^2:
  /// each row is {coef_r0, coef_r1, coef_r2, rhs}.
  std::vector<RationalVector> equations;
  std::vector<std::string> equation_labels;
  /// Multipliers y with y . coefficients == 0 and y . rhs != 0.
  RationalVector multipliers;
  bool certificate_holds = false;
  /// solve_linear on all nine entry equations found no solution.
  bool full_system_infeasible = false;
  bool candidate_shift_enabled = false;
  std::string contradiction;

  bool infeasible() const { return certificate_holds && full_system_infeasible; }
};

/// Throws std::invalid_argument if c * e == 0.
CaseCheck check_equal_diagonal_case(const EqualDiagonalCase& p);
/// Throws std::invalid_argument if d == f.
CaseCheck check_split_diagonal_case(const SplitDiagonalCase& p);

struct CaseReport {
  std::vector<CaseCheck> checks;
  std::size_t equal_diagonal_count = 0;
  std::size_t split_diagonal_count = 0;
  bool all_infeasible() const;
};

CaseReport check_commuting_family_cases(const std::vector<EqualDiagonalCase>& equal,
                                        const std::vector<SplitDiagonalCase>& split);

struct CaseGrid {
  std::vector<EqualDiagonalCase> equal;
  std::vector<SplitDiagonalCase> split;
};

/// Fixed grid over small rationals: 300 equal-diagonal and 320 split-diagonal cases.
CaseGrid default_case_grid();

// --- Seeded search for a shift-enabled T with S = r(T) and H = h(T).

struct EntryPool {
  long num_min = -3;
  long num_max = 3;
  std::vector<long> denominators{1, 2};
  /// Tried first, before any generated candidate.
  std::vector<Matrix> extra_candidates;
};

struct ConversionHit {
  std::size_t candidate_index = 0;
  Matrix shift{1};
  Polynomial r;
  Polynomial h;
};

/// Independent exact check: p_T == m_T, r(T) == S and h(T) == H.
bool verify_conversion_hit(const ConversionHit& hit, const Matrix& s, const Matrix& h);

struct ConversionSearchReport {
  std::size_t samples_tried = 0;
  std::uint64_t seed = 0;
  std::size_t passed_shift_enabled = 0;
  std::size_t passed_represents_shift = 0;
  std::size_t passed_represents_filter = 0;
  std::vector<ConversionHit> feasible_found;
  std::size_t rejected_hits = 0;
  std::optional<CaseReport> case_checks;

  /// Records the hit only if verify_conversion_hit accepts it.
  bool admit(ConversionHit hit, const Matrix& s, const Matrix& h);
};

/// Candidate number `index` of the search; depends only on (seed, index, pool).
Matrix conversion_candidate(std::size_t n, std::uint64_t seed, std::size_t index, const EntryPool& pool);

/// Tries `samples` generated candidates plus the pool's extra candidates.
/// Results are identical for any thread count. Case checks are attached
/// when (s, h) is the built-in counterexample.
ConversionSearchReport conversion_search(const Matrix& s, const Matrix& h, std::size_t samples,
                                         std::uint64_t seed, const EntryPool& pool = {},
                                         unsigned threads = 1);

}  // namespace shiftkit
