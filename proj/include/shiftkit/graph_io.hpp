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
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "shiftkit/filterbank.hpp"
#include "shiftkit/matrix.hpp"

namespace shiftkit {

enum class SourceFormat { EdgeList, MatrixMarket, DenseText };
std::string to_string(SourceFormat f);
SourceFormat parse_source_format(std::string_view name);

/// Malformed input; line and column are 1-based (0 when not applicable).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

/// Well-formed input describing a 0 x 0 matrix.
class EmptyGraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParseOptions {
  std::optional<SourceFormat> format;  // guessed from extension/content when empty
  /// Exact mode builds the rational matrix and rejects decimal literals.
  bool exact = true;
  /// In exact mode, accept decimal literals and replace each by its best
  /// rational approximation with at most this denominator.
  std::optional<long> rationalize_denominator_limit;
};

/// A parsed shift matrix. Both views describe the same matrix; `exact` is
/// only built in exact mode.
struct GraphInput {
  std::size_t n = 0;
  SourceFormat format = SourceFormat::DenseText;
  std::optional<Matrix> exact;
  SparseMatrix numeric;
};

/// Formats:
///  - edge list: "src dst [weight]" per line, 0-indexed, weight defaults to 1,
///    '#' starts a comment, "# nodes N" fixes the dimension; duplicates summed.
///  - Matrix Market: coordinate integer/real/pattern general, 1-indexed;
///    duplicates summed.
///  - dense text: n lines of n tokens, '#' comments allowed.
/// Scalars are integers or "p/q"; decimals only outside exact mode or with a
/// denominator limit.
GraphInput parse_graph_text(std::string_view text, SourceFormat format, const ParseOptions& options = {},
                            const std::string& source = "<input>");
GraphInput read_graph(const std::filesystem::path& path, const ParseOptions& options = {});

SourceFormat guess_format(const std::filesystem::path& path, std::string_view content);

/// Comma or whitespace separated reals; "@path" reads them from a file.
std::vector<double> parse_real_list(std::string_view text);

/// Dense-text rendering (one row per line, rationals as p/q).
std::string to_dense_text(const Matrix& m);

}  // namespace shiftkit
