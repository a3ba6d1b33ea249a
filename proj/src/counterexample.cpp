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

#include "shiftkit/counterexample.hpp"

#include "shiftkit/conversion.hpp"
#include "shiftkit/represent.hpp"
#include "shiftkit/spectra.hpp"

namespace shiftkit {

Matrix counterexample_shift() { return Matrix{{0, 1, 1}, {0, 0, 0}, {0, 0, 0}}; }

Matrix counterexample_filter() { return Matrix{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}; }

bool CounterexampleReport::ok() const { return first_failure() == stages.size(); }

std::size_t CounterexampleReport::first_failure() const {
  for (std::size_t k = 0; k < stages.size(); ++k) {
    if (!stages[k].pass) return k;
  }
  return stages.size();
}

CounterexampleReport run_counterexample(const CounterexampleOptions& options) {
  CounterexampleReport report;
  report.seed = options.seed;
  report.samples = options.samples;
  const Matrix s = counterexample_shift();
  const Matrix h = options.tamper_filter ? s : counterexample_filter();

  const SpectralReport spec = spectral_report(s);
  report.stages.push_back({"shift_enabled", "false (charpoly x^3, minpoly x^2)",
                           std::string(spec.shift_enabled ? "true" : "false") + " (charpoly " +
                               spec.charpoly.pretty() + ", minpoly " + spec.minpoly.pretty() + ")",
                           !spec.shift_enabled && spec.charpoly == Polynomial::monomial(3) &&
                               spec.minpoly == Polynomial::monomial(2)});

  const bool comm = commutes(h, s);
  report.stages.push_back({"commutes", "true (HS = SH = 0)",
                           std::string(comm ? "true" : "false") +
                               ((h * s).is_zero() && (s * h).is_zero() ? " (HS = SH = 0)" : ""),
                           comm});

  const RepresentResult rep = represent_filter(h, s);
  std::string observed = to_string(rep.verdict);
  if (rep.witness_entry) {
    const auto& w = *rep.witness_entry;
    observed += " witness (" + std::to_string(w.row + 1) + "," + std::to_string(w.col_a + 1) + ")/(" +
                std::to_string(w.row + 1) + "," + std::to_string(w.col_b + 1) + ")";
  }
  const bool witness_ok = rep.witness_entry && rep.witness_entry->row == 0 &&
                          rep.witness_entry->col_a == 1 && rep.witness_entry->col_b == 2;
  report.stages.push_back({"represent", "NotRepresentable witness (1,2)/(1,3)", observed,
                           rep.verdict == Verdict::NotRepresentable && witness_ok});

  const CaseGrid grid = default_case_grid();
  const CaseReport cases = check_commuting_family_cases(grid.equal, grid.split);
  std::size_t infeasible = 0;
  for (const auto& c : cases.checks) infeasible += c.infeasible();
  report.stages.push_back({"commuting_family_cases", "all infeasible",
                           std::to_string(infeasible) + "/" + std::to_string(cases.checks.size()) +
                               " infeasible",
                           cases.all_infeasible()});

  const ConversionSearchReport search =
      conversion_search(s, h, options.samples, options.seed, {}, options.threads);
  report.stages.push_back({"conversion_search", "no feasible candidate",
                           std::to_string(search.feasible_found.size()) + " feasible of " +
                               std::to_string(search.samples_tried),
                           search.feasible_found.empty() && search.rejected_hits == 0});
  return report;
}

}  // namespace shiftkit
