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

#include "shiftkit/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace shiftkit {
namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line, std::string_view separators = " \t\r") {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && separators.find(line[i]) != std::string_view::npos) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && separators.find(line[i]) == std::string_view::npos) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::string_view strip_comment(std::string_view line, char marker) {
  const auto p = line.find(marker);
  return p == std::string_view::npos ? line : line.substr(0, p);
}

bool looks_decimal(std::string_view t) {
  return t.find_first_of(".eE") != std::string_view::npos || t == "inf" || t == "nan";
}

class Reader {
 public:
  Reader(const std::string& source, const ParseOptions& options) : source_(source), options_(options) {}

  [[noreturn]] void fail(std::size_t line, std::size_t col, const std::string& msg) const {
    throw ParseError(source_, line, col, msg);
  }

  Rational exact_value(const Token& t, std::size_t line) const {
    try {
      if (!looks_decimal(t.text)) return Rational::parse(t.text);
      if (!options_.rationalize_denominator_limit) {
        fail(line, t.column,
             "decimal literal '" + std::string(t.text) +
                 "' in exact mode (use --rationalize-denominator-limit to opt in)");
      }
      return Rational::parse_decimal(t.text).limit_denominator(mpz_class(*options_.rationalize_denominator_limit));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      fail(line, t.column, "bad number '" + std::string(t.text) + "': " + e.what());
    }
  }

  double float_value(const Token& t, std::size_t line) const {
    if (t.text.find('/') != std::string_view::npos) {
      try {
        return Rational::parse(t.text).to_double();
      } catch (const std::exception& e) {
        fail(line, t.column, "bad number '" + std::string(t.text) + "': " + e.what());
      }
    }
    double v = 0.0;
    const auto* first = t.text.data();
    const auto* last = first + t.text.size();
    if (!t.text.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
      fail(line, t.column, "bad number '" + std::string(t.text) + "'");
    }
    return v;
  }

  std::size_t index_value(const Token& t, std::size_t line) const {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
      fail(line, t.column, "bad vertex index '" + std::string(t.text) + "'");
    }
    return v;
  }

  bool exact() const { return options_.exact; }

 private:
  const std::string& source_;
  const ParseOptions& options_;
};

// Shared tail for the coordinate formats.
struct Entries {
  std::map<std::pair<std::size_t, std::size_t>, Rational> exact;
  std::vector<Triplet> numeric;

  void add(bool exact_mode, std::size_t r, std::size_t c, const Rational* q, double x) {
    if (exact_mode) {
      exact[{r, c}] += *q;
    } else {
      numeric.push_back({r, c, x});
    }
  }

  GraphInput finish(std::size_t n, SourceFormat f, bool exact_mode) {
    if (n == 0) throw EmptyGraphError("graph has dimension 0");
    GraphInput g;
    g.n = n;
    g.format = f;
    if (exact_mode) {
      Matrix m(n);
      std::vector<Triplet> t;
      for (const auto& [rc, v] : exact) {
        m(rc.first, rc.second) = v;
        t.push_back({rc.first, rc.second, v.to_double()});
      }
      g.exact = std::move(m);
      g.numeric = SparseMatrix::from_triplets(n, std::move(t));
    } else {
      g.numeric = SparseMatrix::from_triplets(n, std::move(numeric));
    }
    return g;
  }
};

GraphInput parse_edge_list(std::string_view text, const Reader& rd) {
  Entries entries;
  std::size_t n = 0;
  std::optional<std::size_t> declared;
  const auto lines = split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::size_t line_no = ln + 1;
    const auto hash = lines[ln].find('#');
    if (hash != std::string_view::npos) {
      const auto directive = tokenize(lines[ln].substr(hash + 1));
      if (directive.size() == 2 && directive[0].text == "nodes") {
        declared = rd.index_value({directive[1].text, directive[1].column + hash + 1}, line_no);
      }
    }
    const auto tok = tokenize(strip_comment(lines[ln], '#'));
    if (tok.empty()) continue;
    if (tok.size() < 2 || tok.size() > 3) rd.fail(line_no, tok[0].column, "expected 'src dst [weight]'");
    const std::size_t r = rd.index_value(tok[0], line_no);
    const std::size_t c = rd.index_value(tok[1], line_no);
    n = std::max(n, std::max(r, c) + 1);
    if (rd.exact()) {
      const Rational w = tok.size() == 3 ? rd.exact_value(tok[2], line_no) : Rational(1);
      entries.add(true, r, c, &w, 0.0);
    } else {
      entries.add(false, r, c, nullptr, tok.size() == 3 ? rd.float_value(tok[2], line_no) : 1.0);
    }
  }
  if (declared) {
    if (*declared < n) rd.fail(0, 0, "vertex index exceeds the declared node count");
    n = *declared;
  }
  return entries.finish(n, SourceFormat::EdgeList, rd.exact());
}

GraphInput parse_matrix_market(std::string_view text, const Reader& rd) {
  const auto lines = split_lines(text);
  if (lines.empty()) rd.fail(1, 1, "empty Matrix Market file");
  const auto header = tokenize(lines[0]);
  if (header.size() < 5 || header[0].text != "%%MatrixMarket") rd.fail(1, 1, "missing %%MatrixMarket header");
  const auto lower = [](std::string_view s) {
    std::string out(s);
    for (auto& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return out;
  };
  if (lower(header[1].text) != "matrix" || lower(header[2].text) != "coordinate") {
    rd.fail(1, header[1].column, "only 'matrix coordinate' Matrix Market files are supported");
  }
  const std::string field = lower(header[3].text);
  if (field != "integer" && field != "real" && field != "pattern") {
    rd.fail(1, header[3].column, "unsupported field '" + field + "'");
  }
  if (lower(header[4].text) != "general") rd.fail(1, header[4].column, "only 'general' symmetry is supported");

  Entries entries;
  std::size_t n = 0, expected = 0, seen = 0;
  bool have_size = false;
  for (std::size_t ln = 1; ln < lines.size(); ++ln) {
    const std::size_t line_no = ln + 1;
    const auto tok = tokenize(strip_comment(lines[ln], '%'));
    if (tok.empty()) continue;
    if (!have_size) {
      if (tok.size() != 3) rd.fail(line_no, tok[0].column, "expected 'rows cols entries'");
      const std::size_t rows = rd.index_value(tok[0], line_no), cols = rd.index_value(tok[1], line_no);
      if (rows != cols) rd.fail(line_no, tok[1].column, "shift matrix must be square");
      n = rows;
      expected = rd.index_value(tok[2], line_no);
      have_size = true;
      continue;
    }
    const std::size_t want = field == "pattern" ? 2 : 3;
    if (tok.size() != want) rd.fail(line_no, tok[0].column, "expected " + std::to_string(want) + " fields");
    const std::size_t r = rd.index_value(tok[0], line_no), c = rd.index_value(tok[1], line_no);
    if (r < 1 || r > n) rd.fail(line_no, tok[0].column, "row index out of range");
    if (c < 1 || c > n) rd.fail(line_no, tok[1].column, "column index out of range");
    if (field == "integer" && want == 3 && tok[2].text.find_first_of("./eE") != std::string_view::npos) {
      rd.fail(line_no, tok[2].column, "non-integer value in an integer file");
    }
    if (rd.exact()) {
      const Rational v = want == 3 ? rd.exact_value(tok[2], line_no) : Rational(1);
      entries.add(true, r - 1, c - 1, &v, 0.0);
    } else {
      entries.add(false, r - 1, c - 1, nullptr, want == 3 ? rd.float_value(tok[2], line_no) : 1.0);
    }
    ++seen;
  }
  if (!have_size) rd.fail(lines.size(), 1, "missing size line");
  if (seen != expected) {
    rd.fail(lines.size(), 1, "expected " + std::to_string(expected) + " entries, found " + std::to_string(seen));
  }
  return entries.finish(n, SourceFormat::MatrixMarket, rd.exact());
}

GraphInput parse_dense(std::string_view text, const Reader& rd) {
  const auto lines = split_lines(text);
  std::vector<std::pair<std::size_t, std::vector<Token>>> rows;
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    auto tok = tokenize(strip_comment(lines[ln], '#'), " \t\r,");
    if (!tok.empty()) rows.emplace_back(ln + 1, std::move(tok));
  }
  const std::size_t n = rows.size();
  if (n == 0) throw EmptyGraphError("graph has dimension 0");
  for (const auto& [line_no, tok] : rows) {
    if (tok.size() != n) {
      const std::size_t col = tok.size() > n ? tok[n].column : tok.back().column + tok.back().text.size();
      rd.fail(line_no, col,
              "expected " + std::to_string(n) + " entries in this row, found " + std::to_string(tok.size()));
    }
  }
  GraphInput g;
  g.n = n;
  g.format = SourceFormat::DenseText;
  std::vector<Triplet> t;
  if (rd.exact()) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = rd.exact_value(rows[i].second[j], rows[i].first);
        if (!m(i, j).is_zero()) t.push_back({i, j, m(i, j).to_double()});
      }
    }
    g.exact = std::move(m);
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const double v = rd.float_value(rows[i].second[j], rows[i].first);
        if (v != 0.0) t.push_back({i, j, v});
      }
    }
  }
  g.numeric = SparseMatrix::from_triplets(n, std::move(t));
  return g;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string to_string(SourceFormat f) {
  switch (f) {
    case SourceFormat::EdgeList: return "edge-list";
    case SourceFormat::MatrixMarket: return "matrix-market";
    case SourceFormat::DenseText: return "dense-text";
  }
  return "?";
}

SourceFormat parse_source_format(std::string_view name) {
  if (name == "edge-list" || name == "edges") return SourceFormat::EdgeList;
  if (name == "matrix-market" || name == "mtx") return SourceFormat::MatrixMarket;
  if (name == "dense-text" || name == "dense") return SourceFormat::DenseText;
  throw std::invalid_argument("unknown graph format '" + std::string(name) + "'");
}

ParseError::ParseError(std::string source, std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

SourceFormat guess_format(const std::filesystem::path& path, std::string_view content) {
  const std::string ext = path.extension().string();
  if (ext == ".mtx") return SourceFormat::MatrixMarket;
  if (ext == ".edges" || ext == ".el" || ext == ".edgelist") return SourceFormat::EdgeList;
  if (content.starts_with("%%MatrixMarket")) return SourceFormat::MatrixMarket;
  return SourceFormat::DenseText;
}

GraphInput parse_graph_text(std::string_view text, SourceFormat format, const ParseOptions& options,
                            const std::string& source) {
  const Reader rd(source, options);
  switch (format) {
    case SourceFormat::EdgeList: return parse_edge_list(text, rd);
    case SourceFormat::MatrixMarket: return parse_matrix_market(text, rd);
    case SourceFormat::DenseText: return parse_dense(text, rd);
  }
  throw std::logic_error("unreachable");
}

GraphInput read_graph(const std::filesystem::path& path, const ParseOptions& options) {
  const std::string content = read_file(path);
  const SourceFormat f = options.format.value_or(guess_format(path, content));
  return parse_graph_text(content, f, options, path.string());
}

std::vector<double> parse_real_list(std::string_view text) {
  std::string owned;
  if (text.starts_with("@")) {
    owned = read_file(std::filesystem::path(std::string(text.substr(1))));
    text = owned;
  }
  std::vector<double> out;
  const ParseOptions opts{std::nullopt, false, std::nullopt};
  const std::string source = "<list>";
  const Reader rd(source, opts);
  std::size_t line_no = 1;
  for (const auto line : split_lines(text)) {
    for (const auto& tok : tokenize(strip_comment(line, '#'), " \t\r,")) out.push_back(rd.float_value(tok, line_no));
    ++line_no;
  }
  return out;
}

std::string to_dense_text(const Matrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.n(); ++i) {
    for (std::size_t j = 0; j < m.n(); ++j) os << (j ? " " : "") << m(i, j);
    os << "\n";
  }
  return os.str();
}

}  // namespace shiftkit
