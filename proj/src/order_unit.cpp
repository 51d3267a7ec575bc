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

#include "ouspec/order_unit.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ouspec/errors.hpp"
#include "ouspec/jacobi.hpp"
#include "ouspec/random.hpp"

namespace ouspec {

namespace {

const Tol& tol_of(const AElem& a) { return a.space()->tol(); }

void require_effect(const AElem& e) {
  if (!is_effect(e)) throw Error(ErrorCode::NotAnEffect, "element is not in [0, 1]");
}

double sign(double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); }

// Largest t in [0, t_max] such that base + t * dir stays in E.
double bisect_step(const AElem& base, const AElem& dir, double t_max) {
  if (is_effect(base + t_max * dir)) return t_max;
  double lo = 0.0;
  double hi = t_max;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    (is_effect(base + mid * dir) ? lo : hi) = mid;
  }
  return lo;
}

// Direction d != 0 with e +- d in E, or nullopt when the exact criterion says
// e is extremal.
std::optional<AElem> extremal_obstruction(const AElem& e) {
  const SpacePtr& s = e.space();
  const Tol& tol = s->tol();
  switch (s->kind()) {
    case ModelKind::Fn: {
      Eigen::VectorXd d = e.payload().cwiseMin((1.0 - e.payload().array()).matrix()).cwiseMax(0.0);
      if (d.maxCoeff() <= tol.eq_tol) return std::nullopt;
      return AElem(s, d);
    }
    case ModelKind::JB: {
      const SymmetricEigen eig = jacobi_eig(e.matrix(), tol);
      Eigen::VectorXd w(eig.values.size());
      for (Eigen::Index i = 0; i < w.size(); ++i)
        w(i) = std::max(0.0, std::min(eig.values(i), 1.0 - eig.values(i)));
      if (w.maxCoeff() <= tol.eq_tol) return std::nullopt;
      return AElem::from_matrix(s, eig.vectors * w.asDiagonal() * eig.vectors.transpose());
    }
    case ModelKind::CenSym: {
      const NormFamily& fam = s->family();
      const double a0 = e.scalar();
      const Eigen::VectorXd y = e.functional();
      const double ny = dual_norm(fam, y);
      const double room = std::min(a0, 1.0 - a0);
      if (ny < room - tol.eq_tol) {
        return AElem::from_pair(s, room - ny, Eigen::VectorXd::Zero(y.size()));
      }
      if (std::abs(a0 - 0.5) > tol.eq_tol) {
        if (room <= tol.eq_tol) return std::nullopt;  // 0 or 1
        // e or 1 - e is a proper multiple t * atom.
        const Eigen::VectorXd u = a0 < 0.5 ? y : Eigen::VectorXd(-y);
        const AElem atom = AElem::from_pair(s, 0.5, 0.5 * u / ny);
        const double t = 2.0 * room;
        return std::min(t, 1.0 - t) * atom;
      }
      if (fam.dual_extremal(y, tol.eq_tol)) return std::nullopt;
      // Sharp but y sits inside a face of the dual ball.
      Eigen::VectorXd v = Eigen::VectorXd::Zero(y.size());
      if (fam.q() == std::numeric_limits<double>::infinity()) {
        const double m = y.cwiseAbs().maxCoeff();
        for (Eigen::Index i = 0; i < y.size(); ++i) {
          if (std::abs(y(i)) < m - tol.eq_tol) {
            v(i) = m - std::abs(y(i));
            break;
          }
        }
      } else {
        Eigen::Index i = -1, j = -1;
        for (Eigen::Index k = 0; k < y.size(); ++k) {
          if (std::abs(y(k)) <= tol.eq_tol) continue;
          (i < 0 ? i : j) = k;
          if (j >= 0) break;
        }
        const double eps = std::min(std::abs(y(i)), std::abs(y(j)));
        v(i) = eps * sign(y(i));
        v(j) = -eps * sign(y(j));
      }
      return AElem::from_pair(s, 0.0, v);
    }
  }
  return std::nullopt;
}

}  // namespace

bool in_cone(const AElem& a) {
  const ModelSpace& s = *a.space();
  const Tol& tol = s.tol();
  switch (s.kind()) {
    case ModelKind::Fn:
      return a.payload().minCoeff() >= -tol.psd_tol;
    case ModelKind::JB: {
      const SymmetricEigen e = jacobi_eig(a.matrix(), tol);
      const double norm = std::max(std::abs(e.values(0)), std::abs(e.values(e.values.size() - 1)));
      return e.values(0) >= -tol.psd_tol * (1.0 + norm);
    }
    case ModelKind::CenSym:
      return dual_norm(s.family(), a.functional()) <= a.scalar() + tol.psd_tol;
  }
  return false;
}

double cone_violation(const AElem& a) {
  const ModelSpace& s = *a.space();
  switch (s.kind()) {
    case ModelKind::Fn:
      return std::max(0.0, -a.payload().minCoeff());
    case ModelKind::JB:
      return std::max(0.0, -jacobi_eig(a.matrix(), s.tol()).values(0));
    case ModelKind::CenSym:
      return std::max(0.0, dual_norm(s.family(), a.functional()) - a.scalar());
  }
  return 0.0;
}

bool leq(const AElem& a, const AElem& b) {
  require_same_space(*a.space(), *b.space());
  return in_cone(b - a);
}

double order_unit_norm(const AElem& a) {
  const ModelSpace& s = *a.space();
  switch (s.kind()) {
    case ModelKind::Fn:
      return a.payload().cwiseAbs().maxCoeff();
    case ModelKind::JB: {
      const SymmetricEigen e = jacobi_eig(a.matrix(), s.tol());
      return e.values.cwiseAbs().maxCoeff();
    }
    case ModelKind::CenSym:
      return dual_norm(s.family(), a.functional()) + std::abs(a.scalar());
  }
  return 0.0;
}

double base_norm(const VElem& v) {
  const ModelSpace& s = *v.space();
  switch (s.kind()) {
    case ModelKind::Fn:
      return v.payload().cwiseAbs().sum();
    case ModelKind::JB:
      return jacobi_eig(v.matrix(), s.tol()).values.cwiseAbs().sum();
    case ModelKind::CenSym: {
      const Eigen::VectorXd& d = v.payload();
      return std::max(std::abs(d(0)), primal_norm(s.family(), d.tail(d.size() - 1)));
    }
  }
  return 0.0;
}

double pairing(const AElem& a, const VElem& v) {
  require_same_space(*a.space(), *v.space());
  return a.payload().dot(v.payload());
}

bool approx_equal(const AElem& a, const AElem& b) {
  require_same_space(*a.space(), *b.space());
  const double scale = 1.0 + std::max(order_unit_norm(a), order_unit_norm(b));
  return order_unit_norm(a - b) <= tol_of(a).eq_tol * scale;
}

double min_eigenvalue(const Eigen::MatrixXd& m, const Tol& tol) {
  return jacobi_eig(m, tol).values(0);
}

bool is_effect(const AElem& a) {
  return in_cone(a) && in_cone(AElem::unit(a.space()) - a);
}

bool is_sharp(const AElem& e) {
  require_effect(e);
  const ModelSpace& s = *e.space();
  const double eq = s.tol().eq_tol;
  switch (s.kind()) {
    case ModelKind::Fn:
      for (Eigen::Index i = 0; i < e.payload().size(); ++i) {
        const double v = e.payload()(i);
        if (std::abs(v) > eq && std::abs(v - 1.0) > eq) return false;
      }
      return true;
    case ModelKind::JB: {
      const Eigen::MatrixXd m = e.matrix();
      return jacobi_eig(m * m - m, s.tol()).values.cwiseAbs().maxCoeff() <= eq;
    }
    case ModelKind::CenSym: {
      const double a0 = e.scalar();
      const double ny = dual_norm(s.family(), e.functional());
      if (ny <= eq && (std::abs(a0) <= eq || std::abs(a0 - 1.0) <= eq)) return true;
      return std::abs(a0 - 0.5) <= eq && std::abs(ny - 0.5) <= eq;
    }
  }
  return false;
}

double max_step_in_effects(const AElem& base, const AElem& dir, double t_max) {
  require_same_space(*base.space(), *dir.space());
  return bisect_step(base, dir, t_max);
}

Verdict is_extremal(const AElem& e, int trials, std::uint64_t seed) {
  require_effect(e);
  if (auto d = extremal_obstruction(e)) return {false, std::move(*d)};
  const SpacePtr& s = e.space();
  Rng rng(seed, 0x657874);
  for (int t = 0; t < trials; ++t) {
    AElem d = random_element(s, rng);
    const double nd = order_unit_norm(d);
    if (nd == 0.0) continue;
    d *= 1.0 / nd;
    const double step = std::min(bisect_step(e, d, 1.0), bisect_step(e, -d, 1.0));
    if (step > 1e-4) return {false, step * d};
  }
  return {true, std::nullopt};
}

Verdict is_principal(const AElem& e, int trials, std::uint64_t seed) {
  require_effect(e);
  const SpacePtr& s = e.space();
  if (s->kind() != ModelKind::CenSym && is_sharp(e)) return {true, std::nullopt};

  constexpr double kLambda = 10.0;
  const AElem one = AElem::unit(s);
  std::vector<AElem> candidates;
  switch (s->kind()) {
    case ModelKind::Fn:
      candidates.emplace_back(s, (kLambda * e.payload()).cwiseMin(1.0));
      break;
    case ModelKind::JB: {
      const SymmetricEigen eig = jacobi_eig(e.matrix(), s->tol());
      const Eigen::VectorXd w = (kLambda * eig.values).cwiseMin(1.0).cwiseMax(0.0);
      candidates.push_back(
          AElem::from_matrix(s, eig.vectors * w.asDiagonal() * eig.vectors.transpose()));
      break;
    }
    case ModelKind::CenSym: {
      const double ne = order_unit_norm(e);
      if (ne > 0.0) candidates.push_back(std::min(kLambda, 1.0 / ne) * e);
      candidates.push_back(one);
      const Eigen::VectorXd y = e.functional();
      const double ny = dual_norm(s->family(), y);
      if (ny > 0.0) candidates.push_back(AElem::from_pair(s, 0.5, 0.5 * y / ny));
      break;
    }
  }
  Rng rng(seed, 0x707269);
  for (int t = 0; t < trials; ++t) candidates.push_back(random_effect(s, rng));

  for (const AElem& b : candidates) {
    if (!in_cone(b) || !leq(b, one) || !leq(b, kLambda * e)) continue;
    if (!leq(b, e)) return {false, b};
  }
  return {true, std::nullopt};
}

}  // namespace ouspec
