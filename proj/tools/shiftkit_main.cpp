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

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "shiftkit/commutant.hpp"
#include "shiftkit/conversion.hpp"
#include "shiftkit/counterexample.hpp"
#include "shiftkit/filterbank.hpp"
#include "shiftkit/graph_io.hpp"
#include "shiftkit/report.hpp"
#include "shiftkit/represent.hpp"
#include "shiftkit/spectra.hpp"

namespace fs = std::filesystem;
using namespace shiftkit;

namespace {

namespace exit_code {
constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kParse = 2;
constexpr int kEmpty = 3;
constexpr int kDimension = 4;
constexpr int kNotRepresentable = 10;
constexpr int kNotCommuting = 11;
constexpr int kExpectation = 20;
constexpr int kUsage = 64;
}  // namespace exit_code

struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputFlags {
  std::string format;
  std::optional<long> denominator_limit;

  ParseOptions options(bool exact = true) const {
    ParseOptions o;
    if (!format.empty()) o.format = parse_source_format(format);
    o.exact = exact;
    o.rationalize_denominator_limit = denominator_limit;
    return o;
  }
};

void add_input_flags(CLI::App* cmd, InputFlags& flags) {
  cmd->add_option("--format", flags.format, "edge-list, matrix-market or dense-text (default: guess)")
      ->check(CLI::IsMember({"edge-list", "matrix-market", "dense-text"}));
  cmd->add_option("--rationalize-denominator-limit", flags.denominator_limit,
                  "accept decimal literals, rounding each to the best rational with this denominator bound")
      ->check(CLI::PositiveNumber);
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("SHIFTKIT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("SHIFTKIT_SEED is not an unsigned integer: '") + env + "'");
    }
  }
  return kDefaultSeed;
}

Matrix load_exact(const std::string& path, const InputFlags& flags) {
  GraphInput g = read_graph(path, flags.options(true));
  return std::move(*g.exact);
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

// Runs a command body and maps exceptions onto the exit-code contract.
template <class F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return exit_code::kParse;
  } catch (const EmptyGraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code::kEmpty;
  } catch (const DimensionMismatch& e) {
    std::cerr << "dimension mismatch: " << e.what() << "\n";
    return exit_code::kDimension;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code::kFailure;
  }
}

void require_same_n(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw DimensionMismatch(std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
}

Json analyze_file(const fs::path& path, const InputFlags& flags, std::uint64_t seed,
                  const std::string& filter_path, const std::vector<double>& bench_coeffs, bool* shift_enabled) {
  GraphInput g = read_graph(path, flags.options(true));
  const SpectralReport r = analyze_shift(*g.exact);
  if (shift_enabled) *shift_enabled = r.shift_enabled;
  std::optional<RepresentResult> rep;
  if (!filter_path.empty()) {
    const Matrix h = load_exact(filter_path, flags);
    require_same_n(h.n(), g.n, "filter vs graph");
    rep = represent_filter(h, *g.exact);
  }
  std::optional<std::pair<ApplyReport, ApplyReport>> bench;
  if (!bench_coeffs.empty()) {
    Signal x(g.n);
    for (std::size_t i = 0; i < g.n; ++i) x[i] = 1.0 + static_cast<double>(i % 7);
    bench = bench_apply(g.numeric, bench_coeffs, x);
  }
  return analysis_report(r, seed, to_string(g.format), rep, bench);
}

bool is_graph_file(const fs::path& p) {
  static const std::set<std::string> exts{".txt", ".mtx", ".edges", ".el", ".edgelist", ".dense", ".mat"};
  return fs::is_regular_file(p) && exts.count(p.extension().string()) > 0;
}

int run_scan(const fs::path& dir, unsigned jobs, const InputFlags& flags, std::uint64_t seed) {
  if (!fs::is_directory(dir)) throw std::runtime_error("not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (is_graph_file(entry.path())) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  enum class Outcome { Enabled, NotEnabled, Failed };
  std::vector<Outcome> outcome(files.size(), Outcome::Failed);
  std::vector<std::string> errors(files.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t k = next++; k < files.size(); k = next++) {
      try {
        bool enabled = false;
        const Json j = analyze_file(files[k], flags, seed, "", {}, &enabled);
        std::ofstream out(files[k].string() + ".report.json");
        out << j.dump(2) << "\n";
        if (!out) throw std::runtime_error("cannot write report");
        outcome[k] = enabled ? Outcome::Enabled : Outcome::NotEnabled;
      } catch (const std::exception& e) {
        errors[k] = e.what();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < std::max(1u, jobs); ++w) pool.emplace_back(worker);
  }
  std::size_t enabled = 0, not_enabled = 0, failed = 0;
  for (std::size_t k = 0; k < files.size(); ++k) {
    switch (outcome[k]) {
      case Outcome::Enabled: ++enabled; break;
      case Outcome::NotEnabled: ++not_enabled; break;
      case Outcome::Failed:
        ++failed;
        std::cerr << "FAILED " << files[k].string() << ": " << errors[k] << "\n";
        break;
    }
  }
  std::cout << "scanned " << files.size() << " files: " << enabled << " shift-enabled, " << not_enabled
            << " not shift-enabled, " << failed << " failed\n";
  return failed ? exit_code::kFailure : exit_code::kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shiftkit: shift-enabled graphs and polynomial graph filters"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  InputFlags flags;
  std::optional<std::uint64_t> seed_flag;
  int status = exit_code::kOk;

  std::string graph, filter;
  std::vector<double> bench_coeffs;
  auto* analyze = app.add_subcommand("analyze", "Spectral verdict and commutant dimension as JSON");
  analyze->add_option("graph", graph, "graph file")->required();
  analyze->add_option("--filter", filter, "also test this filter for representability");
  analyze->add_option("--bench-coeffs", bench_coeffs, "also benchmark the filter with these coefficients")
      ->delimiter(',');
  analyze->add_option("--seed", seed_flag, "seed echoed in the report");
  add_input_flags(analyze, flags);
  analyze->callback([&] {
    status = guarded([&] {
      print(analyze_file(graph, flags, resolve_seed(seed_flag), filter, bench_coeffs, nullptr));
      return exit_code::kOk;
    });
  });

  for (const char* which : {"charpoly", "minpoly"}) {
    auto* cmd = app.add_subcommand(which, std::string("Print the ") + which + " of a shift matrix");
    cmd->add_option("graph", graph, "graph file")->required();
    add_input_flags(cmd, flags);
    const std::string name = which;
    cmd->callback([&, name] {
      status = guarded([&] {
        const Matrix s = load_exact(graph, flags);
        const Polynomial p = name == "charpoly" ? charpoly(s) : minpoly(s);
        Json j = report_header(resolve_seed(seed_flag));
        j["n"] = s.n();
        j[name] = to_json(p);
        j["pretty"] = p.pretty();
        print(j);
        return exit_code::kOk;
      });
    });
  }

  bool with_basis = false;
  auto* commutant = app.add_subcommand("commutant", "Dimension (and optionally a basis) of {X : XS = SX}");
  commutant->add_option("graph", graph, "graph file")->required();
  commutant->add_flag("--basis", with_basis, "include the canonical basis");
  add_input_flags(commutant, flags);
  commutant->callback([&] {
    status = guarded([&] {
      const Matrix s = load_exact(graph, flags);
      Json j = report_header(resolve_seed(seed_flag));
      merge_into(j, to_json(commutant_basis(s), with_basis));
      print(j);
      return exit_code::kOk;
    });
  });

  auto* represent = app.add_subcommand("represent", "Is the filter a polynomial in the shift? (exit 0/10/11)");
  represent->add_option("graph", graph, "graph file")->required();
  represent->add_option("filter", filter, "filter matrix file")->required();
  add_input_flags(represent, flags);
  represent->callback([&] {
    status = guarded([&] {
      const Matrix s = load_exact(graph, flags);
      const Matrix h = load_exact(filter, flags);
      require_same_n(h.n(), s.n(), "filter vs graph");
      const RepresentResult r = represent_filter(h, s);
      Json j = report_header(resolve_seed(seed_flag));
      j["n"] = s.n();
      merge_into(j, to_json(r));
      print(j);
      if (r.witness_entry) std::cerr << "witness: entries " << j["witness_entry"]["text"].get<std::string>() << "\n";
      switch (r.verdict) {
        case Verdict::Representable: return exit_code::kOk;
        case Verdict::NotRepresentable: return exit_code::kNotRepresentable;
        case Verdict::NotCommuting: return exit_code::kNotCommuting;
      }
      return exit_code::kFailure;
    });
  });

  auto* witness = app.add_subcommand("witness", "A commuting filter that is not a polynomial in the shift");
  witness->add_option("graph", graph, "graph file")->required();
  add_input_flags(witness, flags);
  witness->callback([&] {
    status = guarded([&] {
      const Matrix s = load_exact(graph, flags);
      const auto w = find_nonrepresentable_witness(s);
      Json j = report_header(resolve_seed(seed_flag));
      j["n"] = s.n();
      j["shift_enabled"] = !w.has_value();
      j["witness"] = w ? to_json(*w) : Json(nullptr);
      j["represent"] = w ? to_json(represent_filter(*w, s)) : Json(nullptr);
      print(j);
      return exit_code::kOk;
    });
  });

  std::size_t samples = 1000;
  unsigned jobs = 1;
  bool tamper = false;
  auto* counter = app.add_subcommand("counterexample", "Reproduce the built-in non-shift-enabled counterexample");
  counter->add_option("--samples", samples, "conversion search samples")->check(CLI::PositiveNumber);
  counter->add_option("--seed", seed_flag, "search seed");
  counter->add_option("--jobs", jobs, "worker threads for the search")->check(CLI::PositiveNumber);
  counter->add_flag("--tamper", tamper, "replace the built-in filter by S (self-test; must fail)");
  counter->callback([&] {
    status = guarded([&] {
      CounterexampleOptions o;
      o.samples = samples;
      o.seed = resolve_seed(seed_flag);
      o.tamper_filter = tamper;
      o.threads = jobs;
      const CounterexampleReport r = run_counterexample(o);
      Json j = report_header(o.seed);
      merge_into(j, to_json(r));
      print(j);
      if (!r.ok()) {
        const auto& bad = r.stages[r.first_failure()];
        std::cerr << "expectation failed at stage " << (r.first_failure() + 1) << " (" << bad.name
                  << "): expected " << bad.expected << ", observed " << bad.observed << "\n";
        return exit_code::kExpectation;
      }
      return exit_code::kOk;
    });
  });

  std::vector<std::string> extra_candidates;
  auto* search = app.add_subcommand("search-conversion", "Seeded search for a shift-enabled T with S=r(T), H=h(T)");
  search->add_option("graph", graph, "graph file")->required();
  search->add_option("filter", filter, "filter matrix file")->required();
  search->add_option("--samples", samples, "generated candidates")->check(CLI::PositiveNumber);
  search->add_option("--seed", seed_flag, "search seed");
  search->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  search->add_option("--candidate", extra_candidates, "extra candidate matrix file (repeatable)");
  add_input_flags(search, flags);
  search->callback([&] {
    status = guarded([&] {
      const Matrix s = load_exact(graph, flags);
      const Matrix h = load_exact(filter, flags);
      require_same_n(h.n(), s.n(), "filter vs graph");
      EntryPool pool;
      for (const auto& c : extra_candidates) {
        pool.extra_candidates.push_back(load_exact(c, flags));
        require_same_n(pool.extra_candidates.back().n(), s.n(), "candidate vs graph");
      }
      const std::uint64_t seed = resolve_seed(seed_flag);
      const ConversionSearchReport r = conversion_search(s, h, samples, seed, pool, jobs);
      Json j = report_header(seed);
      merge_into(j, to_json(r));
      print(j);
      return exit_code::kOk;
    });
  });

  std::string coeffs_text, signal_text;
  bool bench = false;
  BenchOptions bench_opts;
  auto* apply = app.add_subcommand("apply", "Apply h(S) to a signal with sparse Horner products");
  apply->add_option("graph", graph, "graph file")->required();
  apply->add_option("--coeffs", coeffs_text, "h_0,h_1,...,h_L")->required();
  apply->add_option("--signal", signal_text, "x_0,...,x_{n-1} or @file")->required();
  apply->add_flag("--bench", bench, "also time Horner against dense materialization");
  apply->add_option("--repeats", bench_opts.repeats, "timing repeats")->check(CLI::PositiveNumber);
  apply->add_option("--dense-cap", bench_opts.dense_cap, "largest n for the dense path");
  add_input_flags(apply, flags);
  apply->callback([&] {
    status = guarded([&] {
      GraphInput g = read_graph(graph, flags.options(false));
      const std::vector<double> coeffs = parse_real_list(coeffs_text);
      const Signal x = parse_real_list(signal_text);
      if (coeffs.empty()) throw std::invalid_argument("--coeffs is empty");
      require_same_n(x.size(), g.n, "signal vs graph");
      const Signal y = apply_poly_horner(g.numeric, coeffs, x);
      Json j = report_header(resolve_seed(seed_flag));
      j["n"] = g.n;
      j["signal"] = y;
      if (bench) {
        const auto [h, d] = bench_apply(g.numeric, coeffs, x, bench_opts);
        j["bench"] = {{"horner", to_json(h)}, {"dense", to_json(d)}};
      }
      print(j);
      return exit_code::kOk;
    });
  });

  std::string dir;
  auto* scan = app.add_subcommand("scan", "Analyze every graph file in a directory");
  scan->add_option("dir", dir, "directory")->required();
  scan->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  add_input_flags(scan, flags);
  scan->callback([&] { status = guarded([&] { return run_scan(dir, jobs, flags, resolve_seed(seed_flag)); }); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_code::kOk : exit_code::kUsage;
  }
  return status;
}
