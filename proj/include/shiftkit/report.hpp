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
#include <optional>
#include <utility>

#include <nlohmann/json.hpp>

#include "shiftkit/commutant.hpp"
#include "shiftkit/conversion.hpp"
#include "shiftkit/counterexample.hpp"
#include "shiftkit/filterbank.hpp"
#include "shiftkit/represent.hpp"
#include "shiftkit/spectra.hpp"

namespace shiftkit {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr std::uint64_t kDefaultSeed = 42;

/// {"schema": 1, "tool_version": ..., "seed": ...}; every report starts so.
Json report_header(std::uint64_t seed);

/// Copies every top-level key of src into dst, in src order.
void merge_into(Json& dst, const Json& src);

Json to_json(const Polynomial& p);
Json to_json(const Matrix& m);
Json to_json(const RationalVector& v);
Json to_json(const SpectralReport& r);
Json to_json(const CommutantBasis& b, bool with_basis);
Json to_json(const EntryWitness& w);
Json to_json(const RepresentResult& r);
Json to_json(const CaseCheck& c);
Json to_json(const CaseReport& r, bool with_checks);
Json to_json(const ConversionSearchReport& r);
Json to_json(const CounterexampleReport& r);
Json to_json(const ApplyReport& r);
Json to_json(const Lemma2Report& r);

/// Merged per-graph analysis: spectral verdict plus optional represent and
/// bench blocks.
Json analysis_report(const SpectralReport& r, std::uint64_t seed, const std::string& source_format,
                     const std::optional<RepresentResult>& represent = std::nullopt,
                     const std::optional<std::pair<ApplyReport, ApplyReport>>& bench = std::nullopt);

}  // namespace shiftkit
