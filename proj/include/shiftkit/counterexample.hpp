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

#include <cstdint>
#include <string>
#include <vector>

#include "shiftkit/matrix.hpp"

namespace shiftkit {

/// S = [[0,1,1],[0,0,0],[0,0,0]]: p_S = x^3, m_S = x^2.
Matrix counterexample_shift();
/// H = [[0,1,0],[0,0,0],[0,0,0]]: HS = SH = 0, yet H is not a polynomial in S.
Matrix counterexample_filter();

struct StageResult {
  std::string name;
  std::string expected;
  std::string observed;
  bool pass = false;
};

struct CounterexampleReport {
  std::vector<StageResult> stages;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  bool ok() const;
  /// Index of the first failed stage, or stages.size().
  std::size_t first_failure() const;
};

struct CounterexampleOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
  /// Replace the built-in filter by S itself (harness self-test).
  bool tamper_filter = false;
  unsigned threads = 1;
};

/// Five stages: shift-enabled check, commutation, representability, the
/// commuting-family case grid, and the seeded conversion search.
CounterexampleReport run_counterexample(const CounterexampleOptions& options);

}  // namespace shiftkit
