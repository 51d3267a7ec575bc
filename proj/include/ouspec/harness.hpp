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

#ifndef OUSPEC_HARNESS_HPP_
#define OUSPEC_HARNESS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "ouspec/compression_base.hpp"
#include "ouspec/report.hpp"

namespace ouspec {

/// core, compressions, spectral, fn-oracle, jb, censym.
const std::vector<std::string>& registered_suites();
/// The suites that apply to a model, in run order.
std::vector<std::string> suites_for(const ModelSpace& space);

/// The compression base the suites use for a model.  For centrally
/// symmetric spaces this is the atom base even when comparability fails.
BasePtr default_base(const SpacePtr& space);

/// Cases draw from independent streams keyed by (seed, case name), so the
/// thread count never changes the report.
Report run_suite(const std::string& name, const SpacePtr& space, int trials, std::uint64_t seed,
                 int threads = 1);

Report merge_reports(const std::vector<Report>& reports);

}  // namespace ouspec

#endif  // OUSPEC_HARNESS_HPP_
