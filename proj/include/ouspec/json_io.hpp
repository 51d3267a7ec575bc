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

#ifndef OUSPEC_JSON_IO_HPP_
#define OUSPEC_JSON_IO_HPP_

#include <optional>
#include <string>

#include "ouspec/report.hpp"
#include "ouspec/spectral.hpp"
#include "ouspec/vendor_json.hpp"

namespace ouspec {

using Json = nlohmann::json;

Json family_to_json(const NormFamily& fam);
/// Needs the dimension because the JSON descriptor does not carry it.
NormFamily family_from_json(const Json& j, int n);
/// "lp:1.5", "lp:inf", "stadium:1,1".
NormFamily parse_family(const std::string& text, int n);

Json element_to_json(const AElem& a);
/// Builds the space described by the document.
AElem element_from_json(const Json& j, const Tol& tol = {});
/// Parses into an existing space; throws ShapeMismatch on a model mismatch.
AElem element_from_json(const Json& j, const SpacePtr& space);

Json case_to_json(const CaseResult& c);
Json report_to_json(const Report& r);
Report report_from_json(const Json& j, const Tol& tol = {});

Json spectral_to_json(const SpectralData& d,
                      const std::optional<Reconstruction>& rec = std::nullopt,
                      std::optional<double> mesh = std::nullopt);
SpectralData spectral_from_json(const Json& j, const SpacePtr& space);

std::string dump(const Json& j);
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

}  // namespace ouspec

#endif  // OUSPEC_JSON_IO_HPP_
