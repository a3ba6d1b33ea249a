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

#include "shiftkit/report.hpp"

namespace shiftkit {

Json report_header(std::uint64_t seed) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["tool_version"] = kToolVersion;
  j["seed"] = seed;
  return j;
}

void merge_into(Json& dst, const Json& src) {
  for (auto it = src.begin(); it != src.end(); ++it) dst[it.key()] = it.value();
}

Json to_json(const Polynomial& p) { return p.to_strings(); }

Json to_json(const Matrix& m) { return m.to_strings(); }

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

Json to_json(const SpectralReport& r) {
  Json j;
  j["n"] = r.n;
  j["charpoly"] = to_json(r.charpoly);
  j["minpoly"] = to_json(r.minpoly);
  j["shift_enabled"] = r.shift_enabled;
  j["commutant_dim"] = r.commutant_dim ? Json(*r.commutant_dim) : Json(nullptr);
  j["poly_span_dim"] = r.poly_span_dim;
  return j;
}

Json to_json(const CommutantBasis& b, bool with_basis) {
  Json j;
  j["n"] = b.n;
  j["commutant_dim"] = b.dim;
  if (with_basis) {
    Json arr = Json::array();
    for (const auto& m : b.basis) arr.push_back(to_json(m));
    j["basis"] = std::move(arr);
  }
  return j;
}

Json to_json(const EntryWitness& w) {
  Json j;
  j["zero_based"] = {{"first", {w.row, w.col_a}}, {"second", {w.row, w.col_b}}};
  j["one_based"] = {{"first", {w.row + 1, w.col_a + 1}}, {"second", {w.row + 1, w.col_b + 1}}};
  j["text"] = "(" + std::to_string(w.row + 1) + "," + std::to_string(w.col_a + 1) + ")/(" +
              std::to_string(w.row + 1) + "," + std::to_string(w.col_b + 1) + ")";
  return j;
}

Json to_json(const RepresentResult& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["span_dim"] = r.span_dim;
  j["coeffs"] = r.coeffs ? to_json(*r.coeffs) : Json(nullptr);
  j["witness_entry"] = r.witness_entry ? to_json(*r.witness_entry) : Json(nullptr);
  if (r.residual_certificate) {
    j["residual_certificate"] = {{"vec_order", "column-major"}, {"values", to_json(*r.residual_certificate)}};
  } else {
    j["residual_certificate"] = nullptr;
  }
  return j;
}

Json to_json(const CaseCheck& c) {
  Json j;
  j["family"] = c.family == 1 ? "equal-diagonal" : "split-diagonal";
  j["candidate"] = to_json(c.candidate);
  Json eqs = Json::array();
  for (std::size_t k = 0; k < c.equations.size(); ++k) {
    eqs.push_back({{"label", c.equation_labels[k]}, {"row", to_json(c.equations[k])}});
  }
  j["equations"] = std::move(eqs);
  j["multipliers"] = to_json(c.multipliers);
  j["infeasible"] = c.infeasible();
  j["contradiction"] = c.contradiction;
  return j;
}

Json to_json(const CaseReport& r, bool with_checks) {
  Json j;
  j["equal_diagonal_cases"] = r.equal_diagonal_count;
  j["split_diagonal_cases"] = r.split_diagonal_count;
  std::size_t infeasible = 0;
  for (const auto& c : r.checks) infeasible += c.infeasible();
  j["infeasible"] = infeasible;
  j["all_infeasible"] = r.all_infeasible();
  if (with_checks) {
    Json arr = Json::array();
    for (const auto& c : r.checks) arr.push_back(to_json(c));
    j["checks"] = std::move(arr);
  }
  return j;
}

Json to_json(const ConversionSearchReport& r) {
  Json j;
  j["samples_tried"] = r.samples_tried;
  j["seed"] = r.seed;
  j["passed_shift_enabled"] = r.passed_shift_enabled;
  j["passed_represents_shift"] = r.passed_represents_shift;
  j["passed_represents_filter"] = r.passed_represents_filter;
  Json hits = Json::array();
  for (const auto& h : r.feasible_found) {
    hits.push_back({{"candidate_index", h.candidate_index},
                    {"shift", to_json(h.shift)},
                    {"r_coeffs", to_json(h.r)},
                    {"h_coeffs", to_json(h.h)}});
  }
  j["feasible_found"] = std::move(hits);
  j["rejected_hits"] = r.rejected_hits;
  j["case_checks"] = r.case_checks ? to_json(*r.case_checks, false) : Json(nullptr);
  j["evidence_only"] = true;
  return j;
}

Json to_json(const CounterexampleReport& r) {
  Json j;
  j["samples"] = r.samples;
  Json stages = Json::array();
  for (const auto& s : r.stages) {
    stages.push_back({{"name", s.name}, {"expected", s.expected}, {"observed", s.observed}, {"pass", s.pass}});
  }
  j["stages"] = std::move(stages);
  j["ok"] = r.ok();
  return j;
}

Json to_json(const ApplyReport& r) {
  Json j;
  j["method"] = to_string(r.method);
  j["skipped"] = r.skipped;
  j["wall_time"] = r.wall_time;
  j["flops_estimate"] = r.flops_estimate;
  j["max_abs_diff"] = r.max_abs_diff;
  j["reference"] = r.reference;
  return j;
}

Json to_json(const Lemma2Report& r) {
  Json j;
  j["spec"] = r.spec.describe();
  j["commutant_dim"] = r.commutant_dim;
  j["formula_dim"] = r.formula_dim;
  j["ok"] = r.ok();
  Json pairs = Json::array();
  for (const auto& p : r.pairs) {
    const char* shape = p.expected == BlockShape::Zero ? "zero" : (p.expected == BlockShape::Fat ? "fat" : "thin");
    pairs.push_back({{"l", p.l}, {"m", p.m}, {"shape", shape}, {"parameters", p.parameters}, {"ok", p.ok}});
  }
  j["pairs"] = std::move(pairs);
  return j;
}

Json analysis_report(const SpectralReport& r, std::uint64_t seed, const std::string& source_format,
                     const std::optional<RepresentResult>& represent,
                     const std::optional<std::pair<ApplyReport, ApplyReport>>& bench) {
  Json j = report_header(seed);
  j["source_format"] = source_format;
  merge_into(j, to_json(r));
  if (represent) j["represent"] = to_json(*represent);
  if (bench) j["bench"] = {{"horner", to_json(bench->first)}, {"dense", to_json(bench->second)}};
  return j;
}

}  // namespace shiftkit
