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

#ifndef OUSPEC_COMPRESSION_HPP_
#define OUSPEC_COMPRESSION_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "ouspec/space.hpp"

namespace ouspec {

struct FnMult {
  Eigen::VectorXd mask;
};
struct JBUp {
  Eigen::MatrixXd p;
};
/// a -> <a, (1, x)> focus.
struct CSRank1 {
  Eigen::VectorXd x;
};
struct Trivial {
  bool identity = false;
};

using Action = std::variant<FnMult, JBUp, CSRank1, Trivial>;

/// A linear map on A with a closed-form action and its coordinate matrix.
class CompMap {
 public:
  static CompMap fn_mult(const SpacePtr& space, const Eigen::VectorXd& mask);
  static CompMap jb_up(const SpacePtr& space, const Eigen::MatrixXd& p);
  static CompMap cs_rank1(const AElem& focus, const Eigen::VectorXd& x);
  static CompMap zero(const SpacePtr& space);
  static CompMap identity(const SpacePtr& space);

  const SpacePtr& space() const { return space_; }
  const AElem& focus() const { return focus_; }
  const Action& action() const { return action_; }
  /// Matrix acting on AElem::coords().
  const Eigen::MatrixXd& matrix() const { return matrix_; }

  AElem apply(const AElem& a) const;
  VElem apply_dual(const VElem& v) const;

  /// Closed-form candidate with focus 1 - focus().
  CompMap complement() const;

  std::string describe() const;

 private:
  CompMap(SpacePtr space, AElem focus, Action action);
  AElem apply_closed(const AElem& a) const;

  SpacePtr space_;
  AElem focus_;
  Action action_;
  Eigen::MatrixXd matrix_;
};

/// Largest absolute entry of the difference of two coordinate matrices.
double matrix_distance(const CompMap& a, const CompMap& b);

struct AxiomCheck {
  bool f1 = false;
  bool positive = false;
  bool idempotent = false;
  bool f2 = false;
  bool f3 = false;
  bool retraction = false;
  bool f_compression = false;
  /// Name of the first failing property ("" when all hold).
  std::string failed;
  std::optional<AElem> witness;
  /// Kernel effect not below 1 - p, when one was found.
  std::optional<AElem> f3_witness;
};

AxiomCheck check_F_axioms(const CompMap& j, int trials, std::uint64_t seed);

bool are_complementary(const CompMap& j, const CompMap& j2, int trials = 64,
                       std::uint64_t seed = 1);

bool is_smooth(const CompMap& j, int trials, std::uint64_t seed);

bool is_compression(const CompMap& j, int trials = 64, std::uint64_t seed = 1);

}  // namespace ouspec

#endif  // OUSPEC_COMPRESSION_HPP_
