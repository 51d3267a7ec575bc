// Copyright 2026 The ouspec Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ouspec/censym_model.hpp"
#include "ouspec/cli.hpp"
#include "ouspec/errors.hpp"
#include "ouspec/harness.hpp"
#include "ouspec/json_io.hpp"
#include "ouspec/spectral.hpp"

namespace py = pybind11;
using namespace ouspec;

namespace {

SpacePtr make_space(const std::string& model, int n, const std::string& family) {
  if (model == "fn") return ModelSpace::fn(n);
  if (model == "jb") return ModelSpace::jb(n);
  if (model == "censym") return ModelSpace::censym(parse_family(family.empty() ? "lp:2" : family, n));
  throw Error(ErrorCode::ParseError, "unknown model '" + model + "'");
}

std::string check(const std::string& model, int n, const std::string& family, const std::vector<std::string>& suites,
                  int trials, std::uint64_t seed, int threads) {
  const SpacePtr s = make_space(model, n, family);
  std::vector<Report> reports;
  for (const auto& name : suites.empty() ? suites_for(*s) : suites)
    reports.push_back(run_suite(name, s, trials, seed, threads));
  return dump(report_to_json(merge_reports(reports)));
}

std::string spectral(const std::string& element, const std::vector<double>& grid, double mesh) {
  const AElem a = element_from_json(parse_json(element), Tol{});
  const auto base = default_base(a.space());
  const Reconstruction r = riemann_reconstruct(a, *base, mesh);
  return dump(spectral_to_json(spectral_resolution(a, *base, grid), r, mesh));
}

std::string decompose(const std::string& element) {
  const AElem a = element_from_json(parse_json(element), Tol{});
  const Decomposition d = orthogonal_decomposition(a, *default_base(a.space()));
  Json j{{"a", element_to_json(a)},
         {"p", element_to_json(d.p.elem())},
         {"pos", element_to_json(d.pos)},
         {"neg", element_to_json(d.neg)},
         {"abs", element_to_json(d.abs)}};
  return dump(j);
}

py::tuple cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int rc = run_cli(args, out, err);
  return py::make_tuple(rc, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_ouspec, m) {
  static py::exception<Error> exc(m, "OuspecError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = exc;
      err.attr("code") = std::string(to_string(e.code()));
      exc(e.what());
    }
  });
  m.attr("version") = kVersion;
  m.def("registered_suites", &registered_suites);
  m.def("check", &check, py::arg("model"), py::arg("n"), py::arg("family") = "", py::arg("suites") = std::vector<std::string>{},
        py::arg("trials") = 1000, py::arg("seed") = 1, py::arg("threads") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("spectral", &spectral, py::arg("element"), py::arg("grid"), py::arg("mesh") = 1e-2);
  m.def("decompose", &decompose, py::arg("element"));
  m.def("cli", &cli, py::arg("args"));
}
