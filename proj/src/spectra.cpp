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

#include "shiftkit/spectra.hpp"

#include <stdexcept>

#include "shiftkit/elimination.hpp"

namespace shiftkit {

Polynomial charpoly(const Matrix& s) {
  const std::size_t n = s.n();
  // M_0 = 0, c_n = 1; M_k = S M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(S M_k) / k.
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  const Matrix eye = Matrix::identity(n);
  Matrix m(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = s * m + c[n - k + 1] * eye;
    const Matrix sm = s * m;
    c[n - k] = -sm.trace() / Rational(static_cast<long>(k));
  }
  return Polynomial(std::move(c));
}

Polynomial minpoly(const Matrix& s) {
  const std::size_t n = s.n();
  IncrementalSpan span(n * n);
  Matrix power = Matrix::identity(n);
  for (std::size_t d = 0; d <= n; ++d) {
    if (auto dep = span.add(power.vec())) {
      // S^d = sum_l dep[l] S^l  =>  m(x) = x^d - sum_l dep[l] x^l
      std::vector<Rational> coeffs(d + 1);
      for (std::size_t l = 0; l < dep->size(); ++l) coeffs[l] = -(*dep)[l];
      coeffs[d] = 1;
      return Polynomial(std::move(coeffs));
    }
    power = power * s;
  }
  throw std::logic_error("minpoly: no dependence up to degree n (Cayley-Hamilton violated)");
}

bool is_shift_enabled(const Matrix& s) { return charpoly(s) == minpoly(s); }

SpectralReport spectral_report(const Matrix& s) {
  SpectralReport r;
  r.n = s.n();
  r.charpoly = charpoly(s);
  r.minpoly = minpoly(s);
  r.shift_enabled = r.charpoly == r.minpoly;
  r.poly_span_dim = static_cast<std::size_t>(r.minpoly.degree());
  return r;
}

}  // namespace shiftkit
