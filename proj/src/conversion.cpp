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

#include "shiftkit/conversion.hpp"

#include <random>
#include <stdexcept>
#include <thread>

#include "shiftkit/counterexample.hpp"
#include "shiftkit/elimination.hpp"
#include "shiftkit/represent.hpp"
#include "shiftkit/spectra.hpp"

namespace shiftkit {
namespace {

// One row {coef_r0, coef_r1, coef_r2, rhs} of r0 I + r1 T + r2 T^2 = S.
RationalVector entry_equation(const Matrix& t, const Matrix& t2, const Matrix& s, std::size_t i,
                              std::size_t j) {
  return {Rational(i == j ? 1 : 0), t(i, j), t2(i, j), s(i, j)};
}

bool certify(CaseCheck& check) {
  Rational rhs;
  RationalVector combo(3);
  for (std::size_t k = 0; k < check.equations.size(); ++k) {
    for (std::size_t c = 0; c < 3; ++c) combo[c] += check.multipliers[k] * check.equations[k][c];
    rhs += check.multipliers[k] * check.equations[k][3];
  }
  return combo[0].is_zero() && combo[1].is_zero() && combo[2].is_zero() && !rhs.is_zero();
}

void finish(CaseCheck& check, const Matrix& s) {
  const Matrix& t = check.candidate;
  const std::vector<RationalVector> cols{Matrix::identity(3).vec(), t.vec(), (t * t).vec()};
  check.full_system_infeasible = !solve_linear(cols, s.vec()).has_value();
  check.certificate_holds = certify(check);
  check.candidate_shift_enabled = is_shift_enabled(t);
}

Rational draw(std::mt19937_64& rng, const EntryPool& pool) {
  std::uniform_int_distribution<long> num(pool.num_min, pool.num_max);
  std::uniform_int_distribution<std::size_t> den(0, pool.denominators.size() - 1);
  const long n = num(rng);
  return Rational(mpz_class(n), mpz_class(pool.denominators[den(rng)]));
}

Rational draw_nonzero(std::mt19937_64& rng, const EntryPool& pool) {
  if (pool.num_min == 0 && pool.num_max == 0) throw std::invalid_argument("entry pool has no nonzero values");
  for (;;) {
    Rational r = draw(rng, pool);
    if (!r.is_zero()) return r;
  }
}

std::mt19937_64 candidate_rng(std::uint64_t seed, std::size_t index, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    static_cast<std::uint32_t>(stream)};
  return std::mt19937_64(seq);
}

CaseGrid sample_case_grid(std::uint64_t seed, std::size_t per_family, const EntryPool& pool) {
  CaseGrid g;
  for (std::size_t k = 0; k < per_family; ++k) {
    auto rng = candidate_rng(seed, k, 1);
    g.equal.push_back({draw(rng, pool), draw(rng, pool), draw_nonzero(rng, pool), draw_nonzero(rng, pool)});
    const Rational d = draw(rng, pool);
    Rational f = draw(rng, pool);
    if (f == d) f = d + 1;
    g.split.push_back({d, draw(rng, pool), draw(rng, pool), draw(rng, pool), f});
  }
  return g;
}

struct CandidateOutcome {
  bool shift_enabled = false;
  bool represents_shift = false;
  bool represents_filter = false;
  std::optional<ConversionHit> hit;
};

CandidateOutcome evaluate_candidate(const Matrix& t, const Matrix& s, const Matrix& h, std::size_t index) {
  CandidateOutcome out;
  if (t.n() != s.n() || !is_shift_enabled(t)) return out;
  out.shift_enabled = true;
  const RepresentResult rs = represent_filter(s, t);
  if (rs.verdict != Verdict::Representable) return out;
  out.represents_shift = true;
  const RepresentResult rh = represent_filter(h, t);
  if (rh.verdict != Verdict::Representable) return out;
  out.represents_filter = true;
  out.hit = ConversionHit{index, t, Polynomial(*rs.coeffs), Polynomial(*rh.coeffs)};
  return out;
}

}  // namespace

CaseCheck check_equal_diagonal_case(const EqualDiagonalCase& p) {
  if ((p.c * p.e).is_zero()) {
    throw std::invalid_argument("equal-diagonal case needs c * e != 0 (T would not be shift-enabled)");
  }
  CaseCheck check;
  check.family = 1;
  check.candidate = Matrix{{p.d, p.b, p.c}, {0, p.d, 0}, {0, p.e, p.d}};
  const Matrix s = counterexample_shift();
  const Matrix& t = check.candidate;
  const Matrix t2 = t * t;
  check.equations = {entry_equation(t, t2, s, 0, 2), entry_equation(t, t2, s, 2, 1)};
  check.equation_labels = {"entry (1,3): c*(r1 + 2*r2*d) = 1", "entry (3,2): e*(r1 + 2*r2*d) = 0"};
  check.multipliers = {p.e, -p.c};
  check.contradiction = "e*(r1 + 2*r2*d) = 0 with c*(r1 + 2*r2*d) = 1 forces e = 0, contradicting c*e != 0";
  finish(check, s);
  return check;
}

CaseCheck check_split_diagonal_case(const SplitDiagonalCase& p) {
  if (p.d == p.f) throw std::invalid_argument("split-diagonal case needs d != f");
  CaseCheck check;
  check.family = 2;
  check.candidate = Matrix{{p.d, p.b, p.c}, {0, p.d, 0}, {0, p.e, p.f}};
  const Matrix s = counterexample_shift();
  const Matrix& t = check.candidate;
  const Matrix t2 = t * t;
  check.equations = {entry_equation(t, t2, s, 0, 0), entry_equation(t, t2, s, 2, 2),
                     entry_equation(t, t2, s, 0, 2)};
  check.equation_labels = {"entry (1,1): r0 + r1*d + r2*d^2 = 0", "entry (3,3): r0 + r1*f + r2*f^2 = 0",
                           "entry (1,3): c*(r1 + r2*(d + f)) = 1"};
  if (p.c.is_zero()) {
    check.multipliers = {0, 0, 1};
    check.contradiction = "c = 0, so the entry (1,3) equation reads 0 = 1";
  } else {
    const Rational gap = p.d - p.f;
    check.multipliers = {p.c / gap, -p.c / gap, -1};
    check.contradiction =
        "(1,1) minus (3,3) with d != f forces r1 + r2*(d + f) = 0, but entry (1,3) needs "
        "c*(r1 + r2*(d + f)) = 1";
  }
  finish(check, s);
  return check;
}

bool CaseReport::all_infeasible() const {
  for (const auto& c : checks) {
    if (!c.infeasible()) return false;
  }
  return true;
}

CaseReport check_commuting_family_cases(const std::vector<EqualDiagonalCase>& equal,
                                        const std::vector<SplitDiagonalCase>& split) {
  CaseReport r;
  for (const auto& p : equal) r.checks.push_back(check_equal_diagonal_case(p));
  for (const auto& p : split) r.checks.push_back(check_split_diagonal_case(p));
  r.equal_diagonal_count = equal.size();
  r.split_diagonal_count = split.size();
  return r;
}

CaseGrid default_case_grid() {
  CaseGrid g;
  const std::vector<Rational> nonzero{-2, -1, 1, 2};
  const std::vector<Rational> e_values{-2, -1, 1, 2, Rational(1, 2)};
  for (long d = -2; d <= 2; ++d) {
    for (long b = -1; b <= 1; ++b) {
      for (const auto& c : nonzero) {
        for (const auto& e : e_values) g.equal.push_back({d, b, c, e});
      }
    }
  }
  for (long d = -2; d <= 2; ++d) {
    for (long f = -2; f <= 2; ++f) {
      if (d == f) continue;
      for (long c = -1; c <= 2; ++c) {
        for (long b = 0; b <= 1; ++b) {
          for (long e = 0; e <= 1; ++e) g.split.push_back({d, b, c, e, f});
        }
      }
    }
  }
  return g;
}

bool verify_conversion_hit(const ConversionHit& hit, const Matrix& s, const Matrix& h) {
  const Matrix& t = hit.shift;
  if (t.n() != s.n() || h.n() != s.n()) return false;
  if (charpoly(t) != minpoly(t)) return false;
  return evaluate(hit.r, t) == s && evaluate(hit.h, t) == h;
}

bool ConversionSearchReport::admit(ConversionHit hit, const Matrix& s, const Matrix& h) {
  if (!verify_conversion_hit(hit, s, h)) {
    ++rejected_hits;
    return false;
  }
  feasible_found.push_back(std::move(hit));
  return true;
}

Matrix conversion_candidate(std::size_t n, std::uint64_t seed, std::size_t index, const EntryPool& pool) {
  if (pool.extra_candidates.size() > index) return pool.extra_candidates[index];
  if (pool.denominators.empty() || pool.num_min > pool.num_max) {
    throw std::invalid_argument("conversion search: empty entry pool");
  }
  const std::size_t g = index - pool.extra_candidates.size();
  auto rng = candidate_rng(seed, g, 0);
  switch (g % 4) {
    case 0: {  // companion matrix: always shift-enabled
      std::vector<Rational> c(n + 1);
      for (std::size_t k = 0; k < n; ++k) c[k] = draw(rng, pool);
      c[n] = 1;
      return Matrix::companion(Polynomial(std::move(c)));
    }
    case 1:
      if (n == 3) {  // the shape forced by commuting with E_12
        const Rational d = draw(rng, pool);
        return Matrix{{d, draw(rng, pool), draw(rng, pool)}, {0, d, 0}, {0, draw(rng, pool), draw(rng, pool)}};
      }
      [[fallthrough]];
    default: {
      Matrix t(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) t(i, j) = draw(rng, pool);
      }
      return t;
    }
  }
}

ConversionSearchReport conversion_search(const Matrix& s, const Matrix& h, std::size_t samples,
                                         std::uint64_t seed, const EntryPool& pool, unsigned threads) {
  if (samples == 0) throw std::invalid_argument("conversion search needs samples >= 1");
  if (h.n() != s.n()) throw std::invalid_argument("conversion search: dimension mismatch");
  const std::size_t total = samples + pool.extra_candidates.size();
  std::vector<CandidateOutcome> outcomes(total);
  const auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t k = first; k < total; k += stride) {
      outcomes[k] = evaluate_candidate(conversion_candidate(s.n(), seed, k, pool), s, h, k);
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(total)));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool_threads;
    for (unsigned w = 0; w < workers; ++w) pool_threads.emplace_back(work, w, workers);
  }

  ConversionSearchReport report;
  report.samples_tried = total;
  report.seed = seed;
  for (auto& o : outcomes) {
    report.passed_shift_enabled += o.shift_enabled;
    report.passed_represents_shift += o.represents_shift;
    report.passed_represents_filter += o.represents_filter;
    if (o.hit) report.admit(std::move(*o.hit), s, h);
  }
  if (s == counterexample_shift() && h == counterexample_filter()) {
    const CaseGrid g = sample_case_grid(seed, 100, pool);
    report.case_checks = check_commuting_family_cases(g.equal, g.split);
  }
  return report;
}

}  // namespace shiftkit
