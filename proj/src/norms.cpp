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

#include "ouspec/norms.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "ouspec/errors.hpp"

namespace ouspec {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Relative threshold for ties and zero coordinates in the polyhedral norms.
constexpr double kTie = 1e-12;

double sign(double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); }

double lp_norm(const Eigen::VectorXd& x, double p) {
  const double m = x.cwiseAbs().maxCoeff();
  if (m == 0.0) return 0.0;
  if (std::isinf(p)) return m;
  if (p == 1.0) return x.cwiseAbs().sum();
  double acc = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) acc += std::pow(std::abs(x(i)) / m, p);
  return m * std::pow(acc, 1.0 / p);
}

// Gradient of the l_p norm at x != 0, 1 < p < inf; it has unit dual norm.
Eigen::VectorXd lp_gradient(const Eigen::VectorXd& x, double p) {
  const double m = x.cwiseAbs().maxCoeff();
  Eigen::VectorXd t = x / m;
  const double nt = lp_norm(t, p);
  Eigen::VectorXd g(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    g(i) = sign(t(i)) * std::pow(std::abs(t(i)) / nt, p - 1.0);
  }
  return g;
}

double diameter_of(const std::vector<Eigen::VectorXd>& pts) {
  double d = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      d = std::max(d, (pts[i] - pts[j]).norm());
  return d;
}

DualityFace make_face(std::vector<Eigen::VectorXd> pts) {
  DualityFace f;
  f.kind = pts.size() == 1   ? DualityFace::Kind::Singleton
           : pts.size() == 2 ? DualityFace::Kind::Segment
                             : DualityFace::Kind::Polytope;
  f.diameter = diameter_of(pts);
  f.points = std::move(pts);
  return f;
}

// Vertices of the box {v : v_i = fixed_i for i not in free, |v_i| <= 1 else}.
std::vector<Eigen::VectorXd> box_vertices(const Eigen::VectorXd& fixed,
                                          const std::vector<int>& free) {
  std::vector<Eigen::VectorXd> out;
  const std::size_t count = std::size_t{1} << free.size();
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    Eigen::VectorXd v = fixed;
    for (std::size_t k = 0; k < free.size(); ++k) v(free[k]) = (mask >> k) & 1 ? 1.0 : -1.0;
    out.push_back(std::move(v));
  }
  return out;
}

// Signed unit vectors sign(v_i) e_i over the coordinates of maximal modulus.
std::vector<Eigen::VectorXd> argmax_vertices(const Eigen::VectorXd& v) {
  const double m = v.cwiseAbs().maxCoeff();
  std::vector<Eigen::VectorXd> out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) >= m * (1.0 - kTie)) {
      Eigen::VectorXd e = Eigen::VectorXd::Zero(v.size());
      e(i) = sign(v(i));
      out.push_back(std::move(e));
    }
  }
  return out;
}

// sign(v_i) on nonzero coordinates, both signs on (relative) zeros.
std::vector<Eigen::VectorXd> sign_box(const Eigen::VectorXd& v) {
  const double m = v.cwiseAbs().maxCoeff();
  Eigen::VectorXd fixed(v.size());
  std::vector<int> free;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) <= kTie * m) {
      fixed(i) = 0.0;
      free.push_back(static_cast<int>(i));
    } else {
      fixed(i) = sign(v(i));
    }
  }
  return box_vertices(fixed, free);
}

void require_dim(const NormFamily& fam, const Eigen::VectorXd& v) {
  if (v.size() != fam.dim()) {
    throw Error(ErrorCode::ShapeMismatch, "vector of length " + std::to_string(v.size()) +
                                              " for " + fam.describe());
  }
}

}  // namespace

NormFamily NormFamily::lp(double p, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidDimension, "lp family needs n >= 1");
  if (!(p >= 1.0)) throw Error(ErrorCode::InvalidDimension, "lp family needs p >= 1");
  NormFamily f;
  f.kind_ = Kind::Lp;
  f.p_ = p;
  f.n_ = n;
  f.certify();
  return f;
}

NormFamily NormFamily::stadium(double s, double r) {
  if (!(s > 0.0) || !(r > 0.0)) {
    throw Error(ErrorCode::InvalidDimension, "stadium needs s > 0 and r > 0");
  }
  NormFamily f;
  f.kind_ = Kind::Stadium;
  f.s_ = s;
  f.r_ = r;
  f.n_ = 2;
  f.certify();
  return f;
}

void NormFamily::certify() {
  if (kind_ == Kind::Stadium) {
    // No corners on the boundary; flat top and bottom edges.
    smooth_ = true;
    strictly_convex_ = false;
    return;
  }
  const bool interior = p_ > 1.0 && !std::isinf(p_);
  smooth_ = interior || n_ == 1;
  strictly_convex_ = interior || n_ == 1;
}

double NormFamily::q() const {
  if (p_ == 1.0) return kInf;
  if (std::isinf(p_)) return 1.0;
  return p_ / (p_ - 1.0);
}

bool NormFamily::dual_extremal(const Eigen::VectorXd& y, double tol) const {
  require_dim(*this, y);
  const double m = y.cwiseAbs().maxCoeff();
  if (m == 0.0) return false;
  // The dual ball is strictly convex whenever X is smooth.
  if (smooth_) return true;
  if (p_ == 1.0) {
    // Dual ball is a cube: vertices have all coordinates of equal modulus.
    for (Eigen::Index i = 0; i < y.size(); ++i)
      if (std::abs(y(i)) < m - tol) return false;
    return true;
  }
  // p = inf: dual ball is a cross-polytope, vertices are signed axes.
  int nonzero = 0;
  for (Eigen::Index i = 0; i < y.size(); ++i)
    if (std::abs(y(i)) > tol) ++nonzero;
  return nonzero == 1;
}

std::string NormFamily::describe() const {
  std::ostringstream os;
  if (kind_ == Kind::Stadium) {
    os << "stadium:" << s_ << "," << r_;
  } else if (std::isinf(p_)) {
    os << "lp:inf";
  } else {
    os << "lp:" << p_;
  }
  return os.str();
}

bool NormFamily::operator==(const NormFamily& o) const {
  return kind_ == o.kind_ && n_ == o.n_ && p_ == o.p_ && s_ == o.s_ && r_ == o.r_;
}

Eigen::VectorXd DualityFace::midpoint() const {
  Eigen::VectorXd m = Eigen::VectorXd::Zero(points.front().size());
  for (const auto& p : points) m += p;
  return m / static_cast<double>(points.size());
}

double primal_norm(const NormFamily& fam, const Eigen::VectorXd& x) {
  require_dim(fam, x);
  if (fam.kind() == NormFamily::Kind::Lp) return lp_norm(x, fam.p());
  const double ax = std::abs(x(0));
  const double ay = std::abs(x(1));
  if (ax == 0.0 && ay == 0.0) return 0.0;
  // Minkowski gauge of segment + disk: x is in tB iff the distance from x
  // to the segment [-ts, ts] e1 is at most tr.
  auto feasible = [&](double t) {
    const double dx = std::max(ax - t * fam.s(), 0.0);
    return std::hypot(dx, ay) <= t * fam.r();
  };
  double lo = 0.0;
  double hi = ax / fam.s() + ay / fam.r();
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (feasible(mid) ? hi : lo) = mid;
  }
  return hi;
}

double dual_norm(const NormFamily& fam, const Eigen::VectorXd& y) {
  require_dim(fam, y);
  if (fam.kind() == NormFamily::Kind::Lp) return lp_norm(y, fam.q());
  return fam.s() * std::abs(y(0)) + fam.r() * y.norm();
}

DualityFace dual_face(const NormFamily& fam, const Eigen::VectorXd& y) {
  require_dim(fam, y);
  if (y.cwiseAbs().maxCoeff() == 0.0) {
    throw Error(ErrorCode::ZeroFunctional, "dual face of the zero functional");
  }
  if (fam.kind() == NormFamily::Kind::Stadium) {
    const double m = y.cwiseAbs().maxCoeff();
    if (std::abs(y(0)) > kTie * m) {
      Eigen::VectorXd x = fam.r() * y / y.norm();
      x(0) += sign(y(0)) * fam.s();
      return make_face({x});
    }
    Eigen::VectorXd left(2), right(2);
    left << -fam.s(), fam.r() * sign(y(1));
    right << fam.s(), fam.r() * sign(y(1));
    return make_face({left, right});
  }
  if (fam.p() == 1.0) return make_face(argmax_vertices(y));
  if (std::isinf(fam.p())) return make_face(sign_box(y));
  if (fam.dim() == 1) return make_face({Eigen::VectorXd::Constant(1, sign(y(0)))});
  return make_face({lp_gradient(y, fam.q())});
}

DualityFace primal_face(const NormFamily& fam, const Eigen::VectorXd& x) {
  require_dim(fam, x);
  if (x.cwiseAbs().maxCoeff() == 0.0) {
    throw Error(ErrorCode::ZeroVector, "norming functionals of the zero vector");
  }
  if (fam.kind() == NormFamily::Kind::Stadium) {
    const Eigen::VectorXd u = x / primal_norm(fam, x);
    Eigen::VectorXd normal(2);
    if (std::abs(u(0)) <= fam.s()) {
      normal << 0.0, sign(u(1));
    } else {
      Eigen::VectorXd centre(2);
      centre << sign(u(0)) * fam.s(), 0.0;
      normal = (u - centre).normalized();
    }
    return make_face({normal / dual_norm(fam, normal)});
  }
  if (fam.p() == 1.0) return make_face(sign_box(x));
  if (std::isinf(fam.p())) return make_face(argmax_vertices(x));
  if (fam.dim() == 1) return make_face({Eigen::VectorXd::Constant(1, sign(x(0)))});
  return make_face({lp_gradient(x, fam.p())});
}

}  // namespace ouspec
