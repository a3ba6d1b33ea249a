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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "shiftkit/commutant.hpp"
#include "shiftkit/conversion.hpp"
#include "shiftkit/counterexample.hpp"
#include "shiftkit/filterbank.hpp"
#include "shiftkit/report.hpp"
#include "shiftkit/represent.hpp"
#include "shiftkit/spectra.hpp"

namespace py = pybind11;
using namespace shiftkit;

namespace {

using StringMatrix = std::vector<std::vector<std::string>>;

Matrix to_matrix(const StringMatrix& rows) {
  std::vector<RationalVector> r;
  r.reserve(rows.size());
  for (const auto& row : rows) {
    RationalVector v;
    v.reserve(row.size());
    for (const auto& s : row) v.push_back(Rational::parse(s));
    r.push_back(std::move(v));
  }
  return Matrix::from_rows(r);
}

Polynomial to_poly(const std::vector<std::string>& coeffs) {
  std::vector<Rational> c;
  for (const auto& s : coeffs) c.push_back(Rational::parse(s));
  return Polynomial(std::move(c));
}

SparseMatrix to_sparse(std::size_t n, std::vector<std::size_t> indptr, std::vector<std::size_t> indices,
                       std::vector<double> data) {
  return SparseMatrix(n, std::move(indptr), std::move(indices), std::move(data));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact shift-enabled graph analysis and sparse polynomial filters";
  m.attr("__version__") = kToolVersion;

  m.def("charpoly", [](const StringMatrix& s) { return charpoly(to_matrix(s)).to_strings(); });
  m.def("minpoly", [](const StringMatrix& s) { return minpoly(to_matrix(s)).to_strings(); });
  m.def("is_shift_enabled", [](const StringMatrix& s) { return is_shift_enabled(to_matrix(s)); });
  m.def("commutant_dimension", [](const StringMatrix& s) { return commutant_dimension(to_matrix(s)); });
  m.def("commutant_basis", [](const StringMatrix& s) {
    std::vector<StringMatrix> out;
    for (const auto& x : commutant_basis(to_matrix(s)).basis) out.push_back(x.to_strings());
    return out;
  });
  m.def("analyze_json", [](const StringMatrix& s) {
    return analysis_report(analyze_shift(to_matrix(s)), kDefaultSeed, "in-memory").dump();
  });
  m.def("represent_json", [](const StringMatrix& h, const StringMatrix& s) {
    return to_json(represent_filter(to_matrix(h), to_matrix(s))).dump();
  });
  m.def("commutes", [](const StringMatrix& h, const StringMatrix& s) { return commutes(to_matrix(h), to_matrix(s)); });
  m.def("find_nonrepresentable_witness", [](const StringMatrix& s) -> std::optional<StringMatrix> {
    if (auto w = find_nonrepresentable_witness(to_matrix(s))) return w->to_strings();
    return std::nullopt;
  });
  m.def("filter_class_sample",
        [](const std::string& alpha, const std::vector<std::string>& q, const StringMatrix& h, const StringMatrix& s) {
          return filter_class_sample(Rational::parse(alpha), to_poly(q), to_matrix(h), to_matrix(s))
              .materialized.to_strings();
        });
  m.def(
      "conversion_search_json",
      [](const StringMatrix& s, const StringMatrix& h, std::size_t samples, std::uint64_t seed, unsigned threads) {
        py::gil_scoped_release release;
        return to_json(conversion_search(to_matrix(s), to_matrix(h), samples, seed, {}, threads)).dump();
      },
      py::arg("s"), py::arg("h"), py::arg("samples") = 1000, py::arg("seed") = kDefaultSeed, py::arg("threads") = 1);
  m.def(
      "counterexample_json",
      [](std::size_t samples, std::uint64_t seed, bool tamper) {
        py::gil_scoped_release release;
        CounterexampleOptions o;
        o.samples = samples;
        o.seed = seed;
        o.tamper_filter = tamper;
        return to_json(run_counterexample(o)).dump();
      },
      py::arg("samples") = 1000, py::arg("seed") = kDefaultSeed, py::arg("tamper") = false);

  m.def(
      "spmv_csr",
      [](std::size_t n, std::vector<std::size_t> indptr, std::vector<std::size_t> indices, std::vector<double> data,
         const std::vector<double>& x) {
        return spmv(to_sparse(n, std::move(indptr), std::move(indices), std::move(data)), x);
      },
      py::arg("n"), py::arg("indptr"), py::arg("indices"), py::arg("data"), py::arg("x"));
  m.def(
      "apply_poly_horner_csr",
      [](std::size_t n, std::vector<std::size_t> indptr, std::vector<std::size_t> indices, std::vector<double> data,
         const std::vector<double>& coeffs, const std::vector<double>& x) {
        return apply_poly_horner(to_sparse(n, std::move(indptr), std::move(indices), std::move(data)), coeffs, x);
      },
      py::arg("n"), py::arg("indptr"), py::arg("indices"), py::arg("data"), py::arg("coeffs"), py::arg("x"));

  py::register_exception<std::invalid_argument>(m, "ShiftkitValueError", PyExc_ValueError);
}
