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

#include "ouspec/errors.hpp"

namespace ouspec {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::InvalidDimension: return "InvalidDimension";
    case ErrorCode::NotAnEffect: return "NotAnEffect";
    case ErrorCode::NotAProjection: return "NotAProjection";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::NotFCompression: return "NotFCompression";
    case ErrorCode::NoComplementAvailable: return "NoComplementAvailable";
    case ErrorCode::UnknownProjection: return "UnknownProjection";
    case ErrorCode::NotEnumerable: return "NotEnumerable";
    case ErrorCode::ComparabilityUnavailable: return "ComparabilityUnavailable";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::ZeroFunctional: return "ZeroFunctional";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotSharpFocus: return "NotSharpFocus";
    case ErrorCode::NotNormAttaining: return "NotNormAttaining";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::VersionMismatch: return "VersionMismatch";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace ouspec
