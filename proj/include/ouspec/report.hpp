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

#ifndef OUSPEC_REPORT_HPP_
#define OUSPEC_REPORT_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ouspec/space.hpp"
#include "ouspec/tolerance.hpp"

namespace ouspec {

inline constexpr const char* kVersion = "ouspec 0.1.0";

struct CaseResult {
  std::string suite;
  std::string check;
  std::string model;
  int trials = 0;
  std::uint64_t seed = 0;
  bool pass = true;
  bool skipped = false;
  std::optional<AElem> witness;
  std::map<std::string, double> tolerances;
  std::string note;
};

struct Summary {
  int passed = 0;
  int failed = 0;
  int skipped = 0;
};

struct Environment {
  Tol tolerances;
  std::vector<std::string> models;
  std::string version = kVersion;
};

struct Report {
  std::string suite;
  std::vector<CaseResult> cases;
  Summary summary;
  Environment environment;

  bool ok() const { return summary.failed == 0; }
  /// Recomputes `summary` from `cases`.
  void tally();
  void add(CaseResult c);
};

std::map<std::string, double> tolerance_map(const Tol& tol);

}  // namespace ouspec

#endif  // OUSPEC_REPORT_HPP_
