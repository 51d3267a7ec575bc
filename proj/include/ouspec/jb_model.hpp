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

#ifndef OUSPEC_JB_MODEL_HPP_
#define OUSPEC_JB_MODEL_HPP_

#include <optional>

#include "ouspec/compression_base.hpp"
#include "ouspec/jacobi.hpp"
#include "ouspec/report.hpp"

namespace ouspec {

/// U_p compressions on real symmetric matrices.  With a frame, the enumerated
/// projections are the coordinate projections of that orthonormal basis.
class JBBase final : public CompressionBase {
 public:
  explicit JBBase(SpacePtr space, std::optional<Eigen::MatrixXd> frame = std::nullopt);

  const std::optional<Eigen::MatrixXd>& frame() const { return frame_; }

  std::string describe() const override;
  bool contains(const AElem& p) const override;
  ProjectionSet projections(int count, std::uint64_t seed) const override;
  std::vector<Triple> orthogonal_triples(int count, std::uint64_t seed) const override;
  std::vector<std::pair<Proj, Proj>> normality_pairs(int count,
                                                     std::uint64_t seed) const override;
  Proj cover(const AElem& e) const override;
  std::pair<double, double> bounds(const AElem& a) const override;
  ProjectionSet pc_set(const AElem& a) const override;
  ProjectionSet bicommutant(const AElem& a) const override;
  CBlock c_block(const AElem& a) const override;

 protected:
  CompMap make_compression(const Proj& p) const override;
  Proj make_comparability_projection(const AElem& a) const override;

 private:
  Eigen::MatrixXd frame_or_random(std::uint64_t seed) const;

  std::optional<Eigen::MatrixXd> frame_;
};

SymmetricEigen eig(const AElem& a);

AElem jordan_product(const AElem& a, const AElem& b);
/// {abc} = (a o b) o c + (c o b) o a - (a o c) o b.
AElem triple_product(const AElem& a, const AElem& b, const AElem& c);

CompMap U_p_map(const AElem& p);

/// (U_p + U_{1-p})(a) = a.
bool operator_commute(const AElem& a, const AElem& p);

struct Peirce {
  AElem a1;
  AElem a2;
  AElem a3;
  /// max of |p o a1 - a1|, |p o a2 - a2 / 2|, |p o a3|.
  double residual = 0.0;
};

Peirce peirce_decompose(const AElem& a, const AElem& p);

Proj carrier(const AElem& a);

bool jb_orthogonal(const AElem& a, const AElem& b);

Report rickart_A1_check(const AElem& x, int trials, std::uint64_t seed);

/// |(a^2 o b) o a - a^2 o (b o a)|.
double jordan_identity_residual(const AElem& a, const AElem& b);

}  // namespace ouspec

#endif  // OUSPEC_JB_MODEL_HPP_
