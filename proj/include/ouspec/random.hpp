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

#ifndef OUSPEC_RANDOM_HPP_
#define OUSPEC_RANDOM_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <random>

#include "ouspec/space.hpp"

namespace ouspec {

/// Mixes (seed, stream) into an independent engine seed (splitmix64).
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream);

/// Deterministic random source.  Every (seed, stream) pair names its own
/// sequence, so cases and trials can be evaluated in any order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : engine_(stream_seed(seed, stream)) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  double normal() { return std::normal_distribution<double>()(engine_); }
  int index(int n) { return std::uniform_int_distribution<int>(0, n - 1)(engine_); }
  bool coin() { return index(2) == 1; }

  Eigen::VectorXd normal_vector(int n);
  /// Uniform direction on the Euclidean sphere.
  Eigen::VectorXd direction(int n);
  /// Haar-distributed orthogonal matrix.
  Eigen::MatrixXd orthonormal(int n);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Generic element: coordinates of moderate size (both cone and non-cone).
AElem random_element(const SpacePtr& space, Rng& rng);
/// Element of the unit interval E = [0, 1].
AElem random_effect(const SpacePtr& space, Rng& rng);
AElem random_positive(const SpacePtr& space, Rng& rng);
/// A point on an extreme ray of the cone.
AElem random_extreme_positive(const SpacePtr& space, Rng& rng);
/// Element of the state space K.
VElem random_state(const SpacePtr& space, Rng& rng);
/// Nonzero dual-space functional y normalized to ||y||* = 1 (CenSym only).
Eigen::VectorXd random_unit_functional(const NormFamily& fam, Rng& rng);
/// A sharp element: mask (Fn), random-frame projection (JB), or
/// (1/2, y) with ||y||* = 1/2 (CenSym).
Proj random_projection(const SpacePtr& space, Rng& rng);

}  // namespace ouspec

#endif  // OUSPEC_RANDOM_HPP_
