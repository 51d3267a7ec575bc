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

#ifndef OUSPEC_ORDER_UNIT_HPP_
#define OUSPEC_ORDER_UNIT_HPP_

#include <cstdint>
#include <optional>

#include "ouspec/space.hpp"

namespace ouspec {

/// Outcome of a predicate that may carry a counterexample.  For randomized
/// predicates `holds == true` only means no counterexample was found.
struct Verdict {
  bool holds = true;
  std::optional<AElem> witness;

  explicit operator bool() const { return holds; }
};

bool in_cone(const AElem& a);
/// Distance-like amount by which `a` misses the cone (0 inside it).
double cone_violation(const AElem& a);
/// a <= b in the cone order.
bool leq(const AElem& a, const AElem& b);

double order_unit_norm(const AElem& a);
double base_norm(const VElem& v);
double pairing(const AElem& a, const VElem& v);

/// ||a - b||_1 <= eq_tol * (1 + max(||a||_1, ||b||_1)).
bool approx_equal(const AElem& a, const AElem& b);

/// Smallest and largest eigenvalue of a symmetric matrix via Jacobi.
double min_eigenvalue(const Eigen::MatrixXd& m, const Tol& tol);

bool is_effect(const AElem& a);
/// Throws NotAnEffect.
bool is_sharp(const AElem& e);
/// Extreme point of E.  Exact for every model; the randomized search for
/// e +- d in E is run as an additional falsifier.  Throws NotAnEffect.
Verdict is_extremal(const AElem& e, int trials, std::uint64_t seed);
/// face(e) cap E == [0, e].  Randomized falsifier with exact shortcuts for
/// projections in the Fn and JB models.  Throws NotAnEffect.
Verdict is_principal(const AElem& e, int trials, std::uint64_t seed);

/// Largest t in [0, t_max] with base + t * dir in E, by bisection.  E is
/// convex and base is assumed in E.
double max_step_in_effects(const AElem& base, const AElem& dir, double t_max);

}  // namespace ouspec

#endif  // OUSPEC_ORDER_UNIT_HPP_
