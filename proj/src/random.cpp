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

#include "ouspec/random.hpp"

#include <algorithm>
#include <cmath>

#include "ouspec/jacobi.hpp"
#include "ouspec/norms.hpp"

namespace ouspec {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Eigen::MatrixXd gaussian_symmetric(int n, Rng& rng) {
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.normal();
  return 0.5 * (g + g.transpose());
}

}  // namespace

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632BE59BD9B4E019ULL));
}

Eigen::VectorXd Rng::normal_vector(int n) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = normal();
  return v;
}

Eigen::VectorXd Rng::direction(int n) {
  Eigen::VectorXd v;
  do {
    v = normal_vector(n);
  } while (v.norm() < 1e-12);
  return v / v.norm();
}

Eigen::MatrixXd Rng::orthonormal(int n) {
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = normal();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR();
  for (int i = 0; i < n; ++i)
    if (r(i, i) < 0) q.col(i) *= -1.0;
  return q;
}

Eigen::VectorXd random_unit_functional(const NormFamily& fam, Rng& rng) {
  const Eigen::VectorXd d = rng.direction(fam.dim());
  return d / dual_norm(fam, d);
}

AElem random_element(const SpacePtr& space, Rng& rng) {
  const int n = space->n();
  switch (space->kind()) {
    case ModelKind::Fn: {
      Eigen::VectorXd v(n);
      for (int i = 0; i < n; ++i) v(i) = rng.uniform(-2.0, 2.0);
      return AElem(space, v);
    }
    case ModelKind::JB:
      return AElem::from_matrix(space, gaussian_symmetric(n, rng));
    case ModelKind::CenSym: {
      const double a0 = rng.uniform(-1.0, 1.0);
      const double len = rng.uniform(0.0, 2.0);
      return AElem::from_pair(space, a0, len * random_unit_functional(space->family(), rng));
    }
  }
  return AElem::zero(space);
}

AElem random_effect(const SpacePtr& space, Rng& rng) {
  const int n = space->n();
  switch (space->kind()) {
    case ModelKind::Fn: {
      Eigen::VectorXd v(n);
      for (int i = 0; i < n; ++i) v(i) = rng.uniform();
      return AElem(space, v);
    }
    case ModelKind::JB: {
      // Clamp the spectrum of a Gaussian symmetric matrix to [0, 1].
      const SymmetricEigen e = jacobi_eig(gaussian_symmetric(n, rng), space->tol());
      const Eigen::VectorXd clamped = e.values.cwiseMax(0.0).cwiseMin(1.0);
      return AElem::from_matrix(space, e.vectors * clamped.asDiagonal() * e.vectors.transpose());
    }
    case ModelKind::CenSym: {
      const double a0 = rng.uniform();
      const double len = rng.uniform(0.0, std::min(a0, 1.0 - a0));
      return AElem::from_pair(space, a0, len * random_unit_functional(space->family(), rng));
    }
  }
  return AElem::zero(space);
}

AElem random_positive(const SpacePtr& space, Rng& rng) {
  const int n = space->n();
  switch (space->kind()) {
    case ModelKind::Fn: {
      Eigen::VectorXd v(n);
      for (int i = 0; i < n; ++i) v(i) = rng.uniform(0.0, 2.0);
      return AElem(space, v);
    }
    case ModelKind::JB: {
      Eigen::MatrixXd g(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = rng.normal();
      return AElem::from_matrix(space, g * g.transpose() / n);
    }
    case ModelKind::CenSym: {
      const double a0 = rng.uniform(0.0, 2.0);
      const double len = rng.uniform(0.0, a0);
      return AElem::from_pair(space, a0, len * random_unit_functional(space->family(), rng));
    }
  }
  return AElem::zero(space);
}

AElem random_extreme_positive(const SpacePtr& space, Rng& rng) {
  const int n = space->n();
  switch (space->kind()) {
    case ModelKind::Fn: {
      Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
      v(rng.index(n)) = rng.uniform(0.1, 2.0);
      return AElem(space, v);
    }
    case ModelKind::JB: {
      const Eigen::VectorXd v = rng.direction(n);
      return AElem::from_matrix(space, rng.uniform(0.1, 2.0) * v * v.transpose());
    }
    case ModelKind::CenSym: {
      const double t = rng.uniform(0.1, 2.0);
      return AElem::from_pair(space, t, t * random_unit_functional(space->family(), rng));
    }
  }
  return AElem::zero(space);
}

VElem random_state(const SpacePtr& space, Rng& rng) {
  const int n = space->n();
  switch (space->kind()) {
    case ModelKind::Fn: {
      Eigen::VectorXd w(n);
      for (int i = 0; i < n; ++i) w(i) = -std::log(1.0 - rng.uniform());
      return VElem(space, w / w.sum());
    }
    case ModelKind::JB: {
      const int rank = 1 + rng.index(n);
      Eigen::MatrixXd g(n, rank);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < rank; ++j) g(i, j) = rng.normal();
      Eigen::MatrixXd rho = g * g.transpose();
      return VElem::from_matrix(space, rho / rho.trace());
    }
    case ModelKind::CenSym: {
      const NormFamily& fam = space->family();
      const Eigen::VectorXd d = rng.direction(n);
      const double len = rng.uniform();
      return VElem::from_pair(space, 1.0, len * d / primal_norm(fam, d));
    }
  }
  return VElem(space, Eigen::VectorXd::Zero(space->payload_size()));
}

Proj random_projection(const SpacePtr& space, Rng& rng) {
  const int n = space->n();
  switch (space->kind()) {
    case ModelKind::Fn: {
      Eigen::VectorXd v(n);
      for (int i = 0; i < n; ++i) v(i) = rng.coin() ? 1.0 : 0.0;
      return Proj(AElem(space, v));
    }
    case ModelKind::JB: {
      const Eigen::MatrixXd q = rng.orthonormal(n);
      Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
      for (int i = 0; i < n; ++i)
        if (rng.coin()) p += q.col(i) * q.col(i).transpose();
      return Proj(AElem::from_matrix(space, p));
    }
    case ModelKind::CenSym: {
      const int pick = rng.index(10);
      if (pick == 0) return Proj(AElem::zero(space));
      if (pick == 1) return Proj(AElem::unit(space));
      return Proj(AElem::from_pair(space, 0.5, 0.5 * random_unit_functional(space->family(), rng)));
    }
  }
  return Proj(AElem::zero(space));
}

}  // namespace ouspec
