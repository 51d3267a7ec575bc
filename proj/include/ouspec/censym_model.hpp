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

#ifndef OUSPEC_CENSYM_MODEL_HPP_
#define OUSPEC_CENSYM_MODEL_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ouspec/compression.hpp"
#include "ouspec/compression_base.hpp"
#include "ouspec/norms.hpp"

namespace ouspec {

/// Sharp elements {0, 1} u {(1/2, y) : |y|* = 1/2, y extremal} with the
/// rank-one maps a -> <a, (1, x)> p, x the midpoint of the dual face of y.
class CenSymBase final : public CompressionBase {
 public:
  explicit CenSymBase(SpacePtr space);

  std::string describe() const override;
  bool contains(const AElem& p) const override;
  ProjectionSet projections(int count, std::uint64_t seed) const override;
  std::vector<Triple> orthogonal_triples(int count, std::uint64_t seed) const override;
  std::vector<std::pair<Proj, Proj>> normality_pairs(int count,
                                                     std::uint64_t seed) const override;
  bool has_comparability() const override;
  std::string comparability_certificate() const override;
  Proj cover(const AElem& e) const override;
  std::pair<double, double> bounds(const AElem& a) const override;
  ProjectionSet pc_set(const AElem& a) const override;
  ProjectionSet bicommutant(const AElem& a) const override;
  CBlock c_block(const AElem& a) const override;

  /// (1/2, w / (2 |w|*)).
  Proj atom_along(const Eigen::VectorXd& w) const;

 protected:
  CompMap make_compression(const Proj& p) const override;
  Proj make_comparability_projection(const AElem& a) const override;
};

/// J(a) = (a_0 + <x, w>) p for a sharp extremal focus p = (1/2, y), x in the
/// dual face of y.
CompMap build_retraction(const AElem& p, const Eigen::VectorXd& x);

enum class FocusKind { NotAFocus, RetractionOnly, FCompression, Compression };

std::string_view to_string(FocusKind k);

struct FocusClassification {
  FocusKind kind = FocusKind::NotAFocus;
  /// Maximisers of y on the unit ball.
  std::optional<DualityFace> dual;
  /// Representatives x of the dual face with their norming functionals.
  std::vector<Eigen::VectorXd> representatives;
  std::vector<DualityFace> primal;
  std::string reason;
};

FocusClassification classify_focus(const AElem& p);

struct FailingFocus {
  AElem focus;
  Eigen::VectorXd x;
  AxiomCheck check;
  std::string reason;
  /// True when the candidate map fails F3 with an explicit witness.
  bool verified = false;
};

struct SpectralBase {
  std::shared_ptr<const CenSymBase> base;  // null when unavailable
  std::optional<FailingFocus> certificate;

  bool available() const { return base != nullptr; }
};

SpectralBase build_spectral_base(const SpacePtr& space, int trials = 512,
                                 std::uint64_t seed = 1);

struct TwoCompressionWitness {
  AElem focus;
  Eigen::VectorXd x1;
  Eigen::VectorXd x2;
  double distance = 0.0;
  bool both_f_compressions = false;
  bool either_compression = false;
};

struct DualityDecision {
  bool holds = false;
  bool smooth = false;
  bool strictly_convex = false;
  std::optional<TwoCompressionWitness> witness;
  std::string reason;
};

DualityDecision decide_spectral_duality(const SpacePtr& space, int trials = 256,
                                        std::uint64_t seed = 1);

}  // namespace ouspec

#endif  // OUSPEC_CENSYM_MODEL_HPP_
