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
#include <string>
#include <vector>

#include "shiftkit/matrix.hpp"
#include "shiftkit/polynomial.hpp"

namespace shiftkit {

/// True iff HS == SH. Throws std::invalid_argument on a dimension mismatch.
bool commutes(const Matrix& h, const Matrix& s);

enum class Verdict { Representable, NotRepresentable, NotCommuting };
std::string to_string(Verdict v);

/// Two entries in one row, (row, col_a) and (row, col_b), zero-based, that
/// agree in every power of S but differ in H.
struct EntryWitness {
  std::size_t row = 0;
  std::size_t col_a = 0;
  std::size_t col_b = 0;
};

struct RepresentResult {
  Verdict verdict = Verdict::NotCommuting;
  /// h_0..h_L with L < deg minpoly, trailing zeros dropped (at least one
  /// entry). Present iff Representable.
  std::optional<std::vector<Rational>> coeffs;
  std::optional<EntryWitness> witness_entry;
  /// c with c . vec(S^l) == 0 for every l < deg minpoly and c . vec(H) != 0
  /// (column-major vec). Present iff NotRepresentable.
  std::optional<RationalVector> residual_certificate;
  std::size_t span_dim = 0;
};

RepresentResult represent_filter(const Matrix& h, const Matrix& s);

/// Re-checks a result against (h, s) from scratch: the coefficients must
/// rebuild H, the certificate must annihilate every power and not H, and
/// the entry witness must hold in every power.
bool verify_represent_result(const RepresentResult& r, const Matrix& h, const Matrix& s);

/// Some H* with H*S == SH* that is not a polynomial in S, or nothing when S
/// is shift-enabled. Picks the first commutant basis element outside the
/// span of the powers of S.
std::optional<Matrix> find_nonrepresentable_witness(const Matrix& s);

struct FilterClassSample {
  Rational alpha;
  Polynomial q;
  Matrix materialized;  // alpha * H + q(S)
  bool commutes_with_shift = false;
};

/// alpha * H + q(S). q may have any degree.
FilterClassSample filter_class_sample(const Rational& alpha, const Polynomial& q, const Matrix& h,
                                      const Matrix& s);

}  // namespace shiftkit
