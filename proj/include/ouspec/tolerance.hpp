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

#ifndef OUSPEC_TOLERANCE_HPP_
#define OUSPEC_TOLERANCE_HPP_

namespace ouspec {

/// Numerical thresholds shared by every check.
struct Tol {
  double eq_tol = 1e-9;
  double psd_tol = 1e-10;
  /// Relative cut below which an eigenvalue counts as zero.
  double eig_cut = 1e-8;
  int max_sweeps = 100;

  bool valid() const {
    return eq_tol > 0 && psd_tol > 0 && eig_cut > 0 && max_sweeps > 0;
  }
};

}  // namespace ouspec

#endif  // OUSPEC_TOLERANCE_HPP_
