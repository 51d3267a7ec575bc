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

#include "ouspec/compression.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "ouspec/errors.hpp"
#include "ouspec/jacobi.hpp"
#include "ouspec/norms.hpp"
#include "ouspec/order_unit.hpp"
#include "ouspec/random.hpp"

namespace ouspec {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Violations smaller than this multiple of eq_tol are treated as round-off in
// the axiom checks; genuine counterexamples are of order one.
constexpr double kSlack = 1e3;

double max_abs(const Eigen::MatrixXd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

double norm_diff(const AElem& a, const AElem& b) { return order_unit_norm(a - b); }

Eigen::MatrixXd psd_sqrt(const Eigen::MatrixXd& m, const Tol& tol) {
  const SymmetricEigen e = jacobi_eig(m, tol);
  const Eigen::VectorXd r = e.values.cwiseMax(0.0).cwiseSqrt();
  return e.vectors * r.asDiagonal() * e.vectors.transpose();
}

bool is_atom(const AElem& p) {
  const ModelSpace& s = *p.space();
  const double eq = s.tol().eq_tol;
  return std::abs(p.scalar() - 0.5) <= eq &&
         std::abs(dual_norm(s.family(), p.functional()) - 0.5) <= eq;
}

// Samples of the interval [0, p] used to probe (F2).
std::vector<AElem> below_focus(const AElem& p, int trials, Rng& rng, std::uint64_t seed) {
  const SpacePtr& s = p.space();
  std::vector<AElem> out{p};
  if (auto ext = is_extremal(p, 0, seed); !ext.holds) {
    out.push_back(0.5 * (p + *ext.witness));
    out.push_back(0.5 * (p - *ext.witness));
  }
  const AElem one = AElem::unit(s);
  switch (s->kind()) {
    case ModelKind::Fn:
      for (int t = 0; t < trials; ++t) {
        out.emplace_back(s, random_effect(s, rng).payload().cwiseMin(p.payload()));
      }
      break;
    case ModelKind::JB: {
      const Eigen::MatrixXd r = psd_sqrt(p.matrix(), s->tol());
      for (int t = 0; t < trials; ++t) {
        out.push_back(AElem::from_matrix(s, r * random_effect(s, rng).matrix() * r));
      }
      break;
    }
    case ModelKind::CenSym:
      if (is_atom(p)) {
        for (int t = 0; t < trials; ++t) out.push_back(rng.uniform() * p);
      } else {
        for (int t = 0; t < trials; ++t) {
          AElem e = random_effect(s, rng);
          if (leq(e, p)) out.push_back(std::move(e));
        }
      }
      break;
  }
  return out;
}

// States assigning probability one to the focus.
std::vector<VElem> focus_states(const AElem& p, int trials, Rng& rng) {
  const SpacePtr& s = p.space();
  const double eq = s->tol().eq_tol;
  std::vector<VElem> out;
  switch (s->kind()) {
    case ModelKind::Fn: {
      std::vector<int> idx;
      for (int i = 0; i < s->n(); ++i)
        if (std::abs(p.payload()(i) - 1.0) <= eq) idx.push_back(i);
      for (int i : idx) {
        Eigen::VectorXd v = Eigen::VectorXd::Zero(s->n());
        v(i) = 1.0;
        out.emplace_back(s, v);
      }
      break;
    }
    case ModelKind::JB: {
      const SymmetricEigen e = jacobi_eig(p.matrix(), s->tol());
      std::vector<Eigen::Index> idx;
      for (Eigen::Index i = 0; i < e.values.size(); ++i)
        if (std::abs(e.values(i) - 1.0) <= eq) idx.push_back(i);
      if (idx.empty()) break;
      for (int t = 0; t < trials; ++t) {
        Eigen::VectorXd v = Eigen::VectorXd::Zero(s->n());
        for (Eigen::Index i : idx) v += rng.normal() * e.vectors.col(i);
        if (v.norm() < 1e-12) continue;
        v.normalize();
        out.push_back(VElem::from_matrix(s, v * v.transpose()));
      }
      break;
    }
    case ModelKind::CenSym: {
      const NormFamily& fam = s->family();
      const Eigen::VectorXd y = p.functional();
      const double ny = dual_norm(fam, y);
      if (ny <= eq) {
        if (std::abs(p.scalar() - 1.0) <= eq) {
          for (int t = 0; t < trials; ++t) out.push_back(random_state(s, rng));
        }
        break;
      }
      if (std::abs(p.scalar() + ny - 1.0) > eq) break;
      const DualityFace face = dual_face(fam, y);
      for (const auto& x : face.points) out.push_back(VElem::from_pair(s, 1.0, x));
      out.push_back(VElem::from_pair(s, 1.0, face.midpoint()));
      if (face.points.size() > 1) {
        for (int t = 0; t < trials; ++t) {
          Eigen::VectorXd w(face.points.size());
          for (Eigen::Index i = 0; i < w.size(); ++i) w(i) = rng.uniform();
          w /= w.sum();
          Eigen::VectorXd x = Eigen::VectorXd::Zero(y.size());
          for (Eigen::Index i = 0; i < w.size(); ++i) x += w(i) * face.points[i];
          out.push_back(VElem::from_pair(s, 1.0, x));
        }
      }
      break;
    }
  }
  return out;
}

void require_f_compression(const CompMap& j, std::uint64_t seed) {
  if (!check_F_axioms(j, 32, seed).f_compression) {
    throw Error(ErrorCode::NotFCompression, j.describe() + " is not an F-compression");
  }
}

}  // namespace

CompMap::CompMap(SpacePtr space, AElem focus, Action action)
    : space_(std::move(space)), focus_(std::move(focus)), action_(std::move(action)) {
  const int d = space_->dim();
  matrix_.resize(d, d);
  for (int k = 0; k < d; ++k) {
    const AElem b = AElem::from_coords(space_, Eigen::VectorXd::Unit(d, k));
    matrix_.col(k) = apply_closed(b).coords();
  }
}

CompMap CompMap::fn_mult(const SpacePtr& space, const Eigen::VectorXd& mask) {
  if (space->kind() != ModelKind::Fn) {
    throw Error(ErrorCode::ShapeMismatch, "multiplication map needs a function space");
  }
  AElem focus(space, mask);
  return CompMap(space, focus, FnMult{focus.payload()});
}

CompMap CompMap::jb_up(const SpacePtr& space, const Eigen::MatrixXd& p) {
  AElem focus = AElem::from_matrix(space, p);
  return CompMap(space, focus, JBUp{focus.matrix()});
}

CompMap CompMap::cs_rank1(const AElem& focus, const Eigen::VectorXd& x) {
  const SpacePtr& s = focus.space();
  if (s->kind() != ModelKind::CenSym || x.size() != s->n()) {
    throw Error(ErrorCode::ShapeMismatch, "rank-one map needs a matching centrally symmetric space");
  }
  return CompMap(s, focus, CSRank1{x});
}

CompMap CompMap::zero(const SpacePtr& space) {
  return CompMap(space, AElem::zero(space), Trivial{false});
}

CompMap CompMap::identity(const SpacePtr& space) {
  return CompMap(space, AElem::unit(space), Trivial{true});
}

AElem CompMap::apply_closed(const AElem& a) const {
  return std::visit(
      Overloaded{
          [&](const FnMult& f) { return AElem(space_, a.payload().cwiseProduct(f.mask)); },
          [&](const JBUp& u) { return AElem::from_matrix(space_, u.p * a.matrix() * u.p); },
          [&](const CSRank1& c) {
            return (a.scalar() + a.functional().dot(c.x)) * focus_;
          },
          [&](const Trivial& t) { return t.identity ? a : AElem::zero(space_); },
      },
      action_);
}

AElem CompMap::apply(const AElem& a) const {
  require_same_space(*space_, *a.space());
  return apply_closed(a);
}

VElem CompMap::apply_dual(const VElem& v) const {
  require_same_space(*space_, *v.space());
  return VElem::from_coords(space_, matrix_.transpose() * v.coords());
}

CompMap CompMap::complement() const {
  return std::visit(
      Overloaded{
          [&](const FnMult& f) {
            return fn_mult(space_, Eigen::VectorXd::Ones(f.mask.size()) - f.mask);
          },
          [&](const JBUp& u) {
            return jb_up(space_, Eigen::MatrixXd::Identity(u.p.rows(), u.p.cols()) - u.p);
          },
          [&](const CSRank1& c) {
            return cs_rank1(AElem::unit(space_) - focus_, Eigen::VectorXd(-c.x));
          },
          [&](const Trivial& t) { return t.identity ? zero(space_) : identity(space_); },
      },
      action_);
}

std::string CompMap::describe() const {
  std::ostringstream os;
  os.precision(6);
  std::visit(Overloaded{
                 [&](const FnMult& f) { os << "mult" << f.mask.transpose(); },
                 [&](const JBUp&) { os << "U_p(rank " << focus_.matrix().trace() << ")"; },
                 [&](const CSRank1& c) {
                   os << "rank1(focus " << focus_.payload().transpose() << "; x "
                      << c.x.transpose() << ")";
                 },
                 [&](const Trivial& t) { os << (t.identity ? "identity" : "zero"); },
             },
             action_);
  return os.str();
}

double matrix_distance(const CompMap& a, const CompMap& b) {
  require_same_space(*a.space(), *b.space());
  return max_abs(a.matrix() - b.matrix());
}

AxiomCheck check_F_axioms(const CompMap& j, int trials, std::uint64_t seed) {
  const SpacePtr& s = j.space();
  const Tol& tol = s->tol();
  const double slack = kSlack * tol.eq_tol;
  const AElem one = AElem::unit(s);
  const AElem& p = j.focus();
  Rng rng(seed, 0x4633);
  AxiomCheck out;

  auto fail = [&](const char* what, const AElem& w) {
    if (out.failed.empty()) {
      out.failed = what;
      out.witness = w;
    }
  };

  out.f1 = is_effect(p) && norm_diff(j.apply(one), p) <= slack;
  if (!out.f1) fail("F1", p);

  out.positive = true;
  for (int t = 0; t < trials; ++t) {
    const AElem b = t % 2 ? random_positive(s, rng) : random_extreme_positive(s, rng);
    if (cone_violation(j.apply(b)) > slack * (1.0 + order_unit_norm(b))) {
      out.positive = false;
      fail("positivity", b);
      break;
    }
  }

  const Eigen::MatrixXd& m = j.matrix();
  out.idempotent = max_abs(m * m - m) <= tol.eq_tol * (1.0 + max_abs(m));
  if (!out.idempotent) fail("idempotence", p);

  out.f2 = true;
  if (out.f1) {
    for (const AElem& e : below_focus(p, trials, rng, seed)) {
      if (norm_diff(j.apply(e), e) > slack) {
        out.f2 = false;
        fail("F2", e);
        break;
      }
    }
  } else {
    out.f2 = false;
  }
  out.retraction = out.f1 && out.positive && out.idempotent && out.f2;

  // (F3): effects in the kernel, pushed to the boundary of E.
  out.f3 = true;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const Eigen::VectorXd sv = svd.singularValues();
  const double cut = tol.eq_tol * std::max(1.0, sv.size() ? sv(0) : 0.0);
  std::vector<Eigen::VectorXd> kernel;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) <= cut) kernel.push_back(svd.matrixV().col(i));
  const AElem q = one - p;
  // Boundary effects are only positive up to psd_tol, which lets off-block
  // entries of size sqrt(psd_tol) survive.
  const double f3_slack = std::max(slack, 10.0 * std::sqrt(tol.psd_tol));
  const bool q_in_kernel = order_unit_norm(j.apply(q)) <= slack && is_effect(q);
  auto probe = [&](const AElem& e) {
    if (cone_violation(q - e) > f3_slack) {
      out.f3 = false;
      out.f3_witness = e;
      fail("F3", e);
      return false;
    }
    return true;
  };
  if (!kernel.empty()) {
    for (int t = 0; t < trials && out.f3; ++t) {
      Eigen::VectorXd k = Eigen::VectorXd::Zero(s->dim());
      for (const auto& v : kernel) k += rng.normal() * v;
      AElem dir = AElem::from_coords(s, k);
      const double nd = order_unit_norm(dir);
      if (nd <= 1e-12) continue;
      dir *= 1.0 / nd;
      const AElem base = q_in_kernel ? rng.uniform() * q : AElem::zero(s);
      for (double sgn : {1.0, -1.0}) {
        const double step = max_step_in_effects(base, sgn * dir, 4.0);
        if (step <= 0.0) continue;
        if (!probe(base + (step * sgn) * dir)) break;
        if (!probe(base + (0.5 * step * sgn) * dir)) break;
      }
    }
  }
  out.f_compression = out.retraction && out.f3;
  return out;
}

bool are_complementary(const CompMap& j, const CompMap& j2, int trials, std::uint64_t seed) {
  require_same_space(*j.space(), *j2.space());
  require_f_compression(j, seed);
  require_f_compression(j2, seed + 1);
  const SpacePtr& s = j.space();
  const double slack = kSlack * s->tol().eq_tol;
  if (norm_diff(j2.focus(), AElem::unit(s) - j.focus()) > s->tol().eq_tol) return false;
  Rng rng(seed, 0x636f6d);
  for (int t = 0; t < trials; ++t) {
    const AElem b = random_positive(s, rng);
    if (order_unit_norm(j.apply(j2.apply(b))) > slack) return false;
    if (order_unit_norm(j2.apply(j.apply(b))) > slack) return false;
  }
  return true;
}

bool is_smooth(const CompMap& j, int trials, std::uint64_t seed) {
  require_f_compression(j, seed);
  const SpacePtr& s = j.space();
  const double eq = s->tol().eq_tol;
  Rng rng(seed, 0x736d6f);
  for (const VElem& rho : focus_states(j.focus(), trials, rng)) {
    const VElem img = j.apply_dual(rho);
    const double scale = 1.0 + rho.coords().cwiseAbs().maxCoeff();
    if ((img.coords() - rho.coords()).cwiseAbs().maxCoeff() > eq * scale) return false;
  }
  return true;
}

bool is_compression(const CompMap& j, int trials, std::uint64_t seed) {
  const CompMap c = j.complement();
  if (!check_F_axioms(c, 32, seed).f_compression) return false;
  return is_smooth(j, trials, seed) && is_smooth(c, trials, seed + 1);
}

}  // namespace ouspec
