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

#ifndef OUSPEC_NORMS_HPP_
#define OUSPEC_NORMS_HPP_

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace ouspec {

/// A finite-dimensional normed space X together with exact formulas for the
/// norm, its dual norm, and both duality maps.
///
/// Two families ship: l_p^n (1 <= p <= inf) and the planar "stadium", the
/// unit ball of which is the Minkowski sum of the segment [-s, s] e1 and the
/// disk of radius r.  The stadium is smooth but not strictly convex.
class NormFamily {
 public:
  enum class Kind { Lp, Stadium };

  static NormFamily lp(double p, int n);
  static NormFamily stadium(double s, double r);

  Kind kind() const { return kind_; }
  int dim() const { return n_; }
  /// Exponent of X (may be +inf).  Only meaningful for Lp.
  double p() const { return p_; }
  /// Conjugate exponent q = p / (p - 1).
  double q() const;
  double s() const { return s_; }
  double r() const { return r_; }

  bool smooth() const { return smooth_; }
  bool strictly_convex() const { return strictly_convex_; }

  /// Whether `y` (any nonzero functional) is an extreme point of the dual
  /// ball scaled to its own norm.
  bool dual_extremal(const Eigen::VectorXd& y, double tol) const;

  /// "lp:1.5", "lp:inf", "stadium:1,1".
  std::string describe() const;

  bool operator==(const NormFamily& other) const;

 private:
  NormFamily() = default;
  void certify();

  Kind kind_ = Kind::Lp;
  int n_ = 0;
  double p_ = 2.0;
  double s_ = 0.0;
  double r_ = 0.0;
  bool smooth_ = true;
  bool strictly_convex_ = true;
};

/// A face of a unit ball cut out by a supporting functional.
struct DualityFace {
  enum class Kind { Singleton, Segment, Polytope, Approximate };

  Kind kind = Kind::Singleton;
  /// Singleton: the point.  Segment: both endpoints.  Polytope: vertices.
  /// Approximate: a finite sample of the face.
  std::vector<Eigen::VectorXd> points;
  double diameter = 0.0;

  bool singleton() const { return kind == Kind::Singleton; }
  /// Barycentre of `points`; the deterministic representative of the face.
  Eigen::VectorXd midpoint() const;
};

double primal_norm(const NormFamily& fam, const Eigen::VectorXd& x);
double dual_norm(const NormFamily& fam, const Eigen::VectorXd& y);

/// Maximizers of <y, x> over the unit ball B of X.
DualityFace dual_face(const NormFamily& fam, const Eigen::VectorXd& y);

/// Norming functionals of x: maximizers of <y, x> over the dual ball B*.
DualityFace primal_face(const NormFamily& fam, const Eigen::VectorXd& x);

}  // namespace ouspec

#endif  // OUSPEC_NORMS_HPP_
