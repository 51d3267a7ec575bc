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

#ifndef OUSPEC_JACOBI_HPP_
#define OUSPEC_JACOBI_HPP_

#include <Eigen/Dense>

#include "ouspec/tolerance.hpp"

namespace ouspec {

struct SymmetricEigen {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // orthonormal columns, matching `values`
  int sweeps = 0;
};

/// Cyclic Jacobi rotations on a dense symmetric matrix.  Stops once the
/// off-diagonal Frobenius mass is <= 1e-12 * ||a||_F; throws NoConvergence
/// after tol.max_sweeps sweeps.
SymmetricEigen jacobi_eig(const Eigen::MatrixXd& a, const Tol& tol = {});

/// Sum of v v^T over eigenvectors whose eigenvalue satisfies `keep`.
template <class Pred>
Eigen::MatrixXd spectral_projection(const SymmetricEigen& e, Pred keep) {
  const auto n = e.values.size();
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (keep(e.values(i))) p += e.vectors.col(i) * e.vectors.col(i).transpose();
  }
  return p;
}

}  // namespace ouspec

#endif  // OUSPEC_JACOBI_HPP_
