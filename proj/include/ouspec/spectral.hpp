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

#ifndef OUSPEC_SPECTRAL_HPP_
#define OUSPEC_SPECTRAL_HPP_

#include <optional>
#include <string>
#include <vector>

#include "ouspec/compression_base.hpp"

namespace ouspec {

struct Decomposition {
  Proj p;
  AElem pos;
  AElem neg;
  AElem abs;
};

struct ResolutionPoint {
  double lambda;
  Proj p;
};

struct SpectralData {
  AElem a;
  Proj p_plus;
  AElem pos;
  AElem neg;
  AElem abs;
  /// Support of |a|: the projection cover for effects, 1 - a* in general.
  std::optional<Proj> cover;
  Proj rickart;
  std::vector<ResolutionPoint> resolution;
  double lower = 0.0;
  double upper = 0.0;
};

struct Reconstruction {
  AElem approx;
  double error = 0.0;
  int steps = 0;
};

struct JoinResult {
  Proj join;
  /// Largest distance between r_lambda for lambda in {1/4, 1/2, 3/4}.
  double residual = 0.0;
};

Proj p_pm(const AElem& a, const CompressionBase& b);
Decomposition orthogonal_decomposition(const AElem& a, const CompressionBase& b);
Proj projection_cover(const AElem& e, const CompressionBase& b);
Proj rickart_map(const AElem& a, const CompressionBase& b);

/// p_{a, lambda} for every grid point (grid ascending).
std::vector<ResolutionPoint> resolution(const AElem& a, const CompressionBase& b,
                                        const std::vector<double>& grid);
SpectralData spectral_resolution(const AElem& a, const CompressionBase& b,
                                 const std::vector<double>& grid);

Reconstruction riemann_reconstruct(const AElem& a, const CompressionBase& b, double mesh);
std::vector<AElem> simple_approximation(const AElem& a, const CompressionBase& b, int levels);

JoinResult oml_join(const AElem& p, const AElem& q, const CompressionBase& b);
Proj oml_meet(const AElem& p, const AElem& q, const CompressionBase& b);

CBlock c_block(const AElem& a, const CompressionBase& b);

/// Invariant violations of `d` (empty when consistent).
std::vector<std::string> verify_spectral_data(const SpectralData& d, const CompressionBase& b);

}  // namespace ouspec

#endif  // OUSPEC_SPECTRAL_HPP_
