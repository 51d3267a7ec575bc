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

#ifndef OUSPEC_SPACE_HPP_
#define OUSPEC_SPACE_HPP_

#include <Eigen/Dense>
#include <memory>
#include <optional>
#include <string>

#include "ouspec/norms.hpp"
#include "ouspec/tolerance.hpp"

namespace ouspec {

enum class ModelKind { Fn, JB, CenSym };

std::string_view to_string(ModelKind kind);

class ModelSpace;
using SpacePtr = std::shared_ptr<const ModelSpace>;

/// An order unit space A in separating duality with a base norm space V.
///
///  - Fn:     A = V = R^n, pointwise order, unit (1, ..., 1).
///  - JB:     A = V = real symmetric n x n matrices, PSD order, trace pairing.
///  - CenSym: A = R x X*, V = R x X for a normed space X, with
///            A+ = {(a0, y) : ||y||* <= a0}.
class ModelSpace {
 public:
  static SpacePtr fn(int n, Tol tol = {});
  static SpacePtr jb(int n, Tol tol = {});
  static SpacePtr censym(const NormFamily& family, Tol tol = {});

  ModelKind kind() const { return kind_; }
  int n() const { return n_; }
  /// Linear dimension of A.
  int dim() const { return dim_; }
  /// Number of scalars in an element payload.
  int payload_size() const;
  const Tol& tol() const { return tol_; }
  /// Present iff kind() == CenSym.
  const NormFamily& family() const;

  std::string describe() const;
  bool same_as(const ModelSpace& other) const;

 private:
  ModelSpace(ModelKind kind, int n, Tol tol, std::optional<NormFamily> fam);

  ModelKind kind_;
  int n_;
  int dim_;
  Tol tol_;
  std::optional<NormFamily> family_;
};

/// Element of A.  The payload layout depends on the model: n values (Fn),
/// the full row-major n x n matrix (JB), or (a0, y1, ..., yn) (CenSym).
class AElem {
 public:
  AElem(SpacePtr space, Eigen::VectorXd payload);

  static AElem zero(const SpacePtr& space);
  static AElem unit(const SpacePtr& space);
  static AElem from_matrix(const SpacePtr& space, const Eigen::MatrixXd& m);
  static AElem from_pair(const SpacePtr& space, double a0,
                         const Eigen::VectorXd& y);
  /// Inverse of coords().
  static AElem from_coords(const SpacePtr& space, const Eigen::VectorXd& c);

  const SpacePtr& space() const { return space_; }
  const Eigen::VectorXd& payload() const { return data_; }

  /// Coordinates in a fixed basis of A (length space().dim()).  For JB the
  /// basis is E_ii followed by E_ij + E_ji (i < j).
  Eigen::VectorXd coords() const;

  Eigen::MatrixXd matrix() const;       // JB only
  double scalar() const;                // CenSym only: a0
  Eigen::VectorXd functional() const;   // CenSym only: y

  AElem& operator+=(const AElem& o);
  AElem& operator-=(const AElem& o);
  AElem& operator*=(double t);

 private:
  SpacePtr space_;
  Eigen::VectorXd data_;
};

AElem operator+(AElem a, const AElem& b);
AElem operator-(AElem a, const AElem& b);
AElem operator-(const AElem& a);
AElem operator*(double t, AElem a);
AElem operator*(AElem a, double t);

/// Element of the dual space V, same payload conventions as AElem with
/// (alpha, x) for CenSym.
class VElem {
 public:
  VElem(SpacePtr space, Eigen::VectorXd payload);

  static VElem from_pair(const SpacePtr& space, double alpha,
                         const Eigen::VectorXd& x);
  static VElem from_matrix(const SpacePtr& space, const Eigen::MatrixXd& m);
  static VElem from_coords(const SpacePtr& space, const Eigen::VectorXd& c);

  const SpacePtr& space() const { return space_; }
  const Eigen::VectorXd& payload() const { return data_; }
  /// Coordinates such that <a, v> = a.coords() . v.coords().
  Eigen::VectorXd coords() const;
  Eigen::MatrixXd matrix() const;

 private:
  SpacePtr space_;
  Eigen::VectorXd data_;
};

/// A projection: an element of the index set P of a compression base.  The
/// wrapper records intent; membership is checked by the base that issues it.
class Proj {
 public:
  explicit Proj(AElem e) : e_(std::move(e)) {}

  const AElem& elem() const { return e_; }
  operator const AElem&() const { return e_; }  // NOLINT
  const SpacePtr& space() const { return e_.space(); }

  /// 1 - p.
  Proj complement() const;

 private:
  AElem e_;
};

/// Throws ShapeMismatch unless both elements live in the same space.
void require_same_space(const ModelSpace& a, const ModelSpace& b);

}  // namespace ouspec

#endif  // OUSPEC_SPACE_HPP_
