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

#include "ouspec/report.hpp"

namespace ouspec {

void Report::tally() {
  summary = {};
  for (const CaseResult& c : cases) {
    if (c.skipped) {
      ++summary.skipped;
    } else if (c.pass) {
      ++summary.passed;
    } else {
      ++summary.failed;
    }
  }
}

void Report::add(CaseResult c) {
  if (c.pass) c.witness.reset();
  cases.push_back(std::move(c));
  tally();
}

std::map<std::string, double> tolerance_map(const Tol& tol) {
  return {{"eq_tol", tol.eq_tol},
          {"psd_tol", tol.psd_tol},
          {"eig_cut", tol.eig_cut},
          {"max_sweeps", static_cast<double>(tol.max_sweeps)}};
}

}  // namespace ouspec
