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

#include "shiftkit/represent.hpp"

#include <stdexcept>

#include "shiftkit/commutant.hpp"
#include "shiftkit/elimination.hpp"
#include "shiftkit/spectra.hpp"

namespace shiftkit {
namespace {

std::vector<RationalVector> power_vecs(const std::vector<Matrix>& pw) {
  std::vector<RationalVector> v;
  v.reserve(pw.size());
  for (const auto& p : pw) v.push_back(p.vec());
  return v;
}

std::optional<EntryWitness> find_entry_witness(const Matrix& h, const std::vector<Matrix>& pw) {
  const std::size_t n = h.n();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (h(i, a) == h(i, b)) continue;
        bool tied = true;
        for (const auto& p : pw) {
          if (p(i, a) != p(i, b)) {
            tied = false;
            break;
          }
        }
        if (tied) return EntryWitness{i, a, b};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

bool commutes(const Matrix& h, const Matrix& s) {
  if (h.n() != s.n()) throw std::invalid_argument("commutes: dimension mismatch");
  return h * s == s * h;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Representable: return "Representable";
    case Verdict::NotRepresentable: return "NotRepresentable";
    case Verdict::NotCommuting: return "NotCommuting";
  }
  return "?";
}

RepresentResult represent_filter(const Matrix& h, const Matrix& s) {
  if (h.n() != s.n()) throw std::invalid_argument("represent_filter: dimension mismatch");
  RepresentResult out;
  const std::size_t d = static_cast<std::size_t>(minpoly(s).degree());
  out.span_dim = d;
  if (!commutes(h, s)) {
    out.verdict = Verdict::NotCommuting;
    return out;
  }
  const auto pw = powers(s, d);
  const auto cols = power_vecs(pw);
  const RationalVector target = h.vec();
  if (auto sol = solve_linear(cols, target)) {
    while (sol->size() > 1 && sol->back().is_zero()) sol->pop_back();
    out.verdict = Verdict::Representable;
    out.coeffs = std::move(*sol);
  } else {
    out.verdict = Verdict::NotRepresentable;
    out.witness_entry = find_entry_witness(h, pw);
    const NullBasis annihilators = rref_nullspace(cols, h.n() * h.n());
    for (const auto& c : annihilators.vectors) {
      if (!dot(c, target).is_zero()) {
        out.residual_certificate = c;
        break;
      }
    }
  }
  if (!verify_represent_result(out, h, s)) {
    throw std::logic_error("represent_filter produced an unverifiable result");
  }
  return out;
}

bool verify_represent_result(const RepresentResult& r, const Matrix& h, const Matrix& s) {
  if (h.n() != s.n()) return false;
  const std::size_t d = static_cast<std::size_t>(minpoly(s).degree());
  const bool comm = commutes(h, s);
  switch (r.verdict) {
    case Verdict::NotCommuting:
      return !comm;
    case Verdict::Representable: {
      if (!comm || !r.coeffs || r.coeffs->empty() || r.coeffs->size() > d) return false;
      return evaluate(Polynomial(*r.coeffs), s) == h;
    }
    case Verdict::NotRepresentable: {
      if (!comm || !r.residual_certificate || r.coeffs) return false;
      const auto& c = *r.residual_certificate;
      if (c.size() != h.n() * h.n()) return false;
      const auto pw = powers(s, d);
      for (const auto& p : pw) {
        if (!dot(c, p.vec()).is_zero()) return false;
      }
      if (dot(c, h.vec()).is_zero()) return false;
      if (r.witness_entry) {
        const auto& w = *r.witness_entry;
        if (w.row >= h.n() || w.col_a >= h.n() || w.col_b >= h.n()) return false;
        if (h(w.row, w.col_a) == h(w.row, w.col_b)) return false;
        for (const auto& p : pw) {
          if (p(w.row, w.col_a) != p(w.row, w.col_b)) return false;
        }
      }
      return true;
    }
  }
  return false;
}

std::optional<Matrix> find_nonrepresentable_witness(const Matrix& s) {
  if (is_shift_enabled(s)) return std::nullopt;
  const std::size_t d = static_cast<std::size_t>(minpoly(s).degree());
  const auto cols = power_vecs(powers(s, d));
  const CommutantBasis cb = commutant_basis(s);
  for (const auto& x : cb.basis) {
    if (!solve_linear(cols, x.vec())) return x;
  }
  throw std::logic_error("derogatory matrix with no non-polynomial commutant element");
}

FilterClassSample filter_class_sample(const Rational& alpha, const Polynomial& q, const Matrix& h,
                                      const Matrix& s) {
  if (h.n() != s.n()) throw std::invalid_argument("filter_class_sample: dimension mismatch");
  FilterClassSample out{alpha, q, alpha * h + evaluate(q, s), false};
  out.commutes_with_shift = commutes(out.materialized, s);
  return out;
}

}  // namespace shiftkit
