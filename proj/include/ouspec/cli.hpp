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

#ifndef OUSPEC_CLI_HPP_
#define OUSPEC_CLI_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ouspec {

struct CliConfig {
  std::string command;
  std::string model;
  std::optional<int> dim;
  std::string family;
  int trials = 1000;
  std::uint64_t seed = 1;
  double tol = 1e-9;
  double mesh = 1e-2;
  std::string input;
  std::string report;
  std::vector<double> grid;
  std::vector<std::string> suites;
  int threads = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

int cmd_check(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_spectral(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_classify(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_decompose(const CliConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ouspec

#endif  // OUSPEC_CLI_HPP_
