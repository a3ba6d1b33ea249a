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

#include "shiftkit/matrix.hpp"
#include "shiftkit/polynomial.hpp"

namespace shiftkit {

/// Verdict on a single shift matrix.
struct SpectralReport {
  std::size_t n = 0;
  Polynomial charpoly;
  Polynomial minpoly;
  bool shift_enabled = false;
  std::size_t poly_span_dim = 0;              // == deg minpoly
  std::optional<std::size_t> commutant_dim;   // see analyze_shift()
};

/// det(lambda I - S) via the Faddeev-LeVerrier recurrence.
Polynomial charpoly(const Matrix& s);

/// Monic minimal polynomial, from the first linear dependence among
/// vec(I), vec(S), vec(S^2), ...
Polynomial minpoly(const Matrix& s);

/// charpoly == minpoly. A 1x1 matrix is always shift-enabled.
bool is_shift_enabled(const Matrix& s);

/// Charpoly, minpoly and the shift-enabled flag; commutant_dim left empty.
SpectralReport spectral_report(const Matrix& s);

}  // namespace shiftkit
