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

#include "ouspec/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>

#include "ouspec/censym_model.hpp"
#include "ouspec/errors.hpp"
#include "ouspec/fn_model.hpp"
#include "ouspec/jb_model.hpp"
#include "ouspec/order_unit.hpp"
#include "ouspec/random.hpp"
#include "ouspec/spectral.hpp"

namespace ouspec {

namespace {

struct Ctx {
  std::string suite;
  SpacePtr space;
  BasePtr base;
  int trials = 0;
  std::uint64_t seed = 0;
};

using Body = std::function<void(const Ctx&, CaseResult&, Rng&)>;

struct Case {
  std::string check;
  Body body;
};

std::uint64_t name_stream(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(3) << std::scientific << v;
  return os.str();
}

int cap(int trials, int limit) { return std::max(1, std::min(trials, limit)); }

void fail(CaseResult& c, const std::optional<AElem>& w, const std::string& note) {
  if (!c.pass) return;
  c.pass = false;
  c.witness = w;
  c.note = note;
}

void skip(CaseResult& c, const std::string& note) {
  c.skipped = true;
  c.note = note;
}

double dist(const AElem& a, const AElem& b) { return order_unit_norm(a - b); }

double rel(const AElem& a) { return 1.0 + order_unit_norm(a); }

bool trivial(const AElem& p) {
  const double t = p.space()->tol().eq_tol;
  return order_unit_norm(p) <= t || order_unit_norm(AElem::unit(p.space()) - p) <= t;
}

bool smooth_and_strict(const ModelSpace& s) {
  return s.kind() != ModelKind::CenSym || (s.family().smooth() && s.family().strictly_convex());
}

// Elements with kernels, ties and boundary cases, interleaved with generic
// ones so degenerate branches get exercised.
AElem structured_element(const SpacePtr& s, Rng& rng, int t) {
  if (t % 3 == 0) return random_element(s, rng);
  const int n = s->n();
  switch (s->kind()) {
    case ModelKind::Fn: {
      Eigen::VectorXd v(n);
      const double levels[] = {-1.0, 0.0, 0.0, 0.5, 1.0};
      for (int i = 0; i < n; ++i) v[i] = rng.coin() ? levels[rng.index(5)] : rng.normal();
      return AElem(s, v);
    }
    case ModelKind::JB: {
      const Eigen::MatrixXd q = rng.orthonormal(n);
      Eigen::VectorXd d(n);
      const double levels[] = {-1.0, 0.0, 0.0, 0.5, 1.0};
      for (int i = 0; i < n; ++i) d[i] = rng.coin() ? levels[rng.index(5)] : rng.normal();
      Eigen::MatrixXd m = q * d.asDiagonal() * q.transpose();
      return AElem::from_matrix(s, 0.5 * (m + m.transpose()));
    }
    case ModelKind::CenSym: {
      const Eigen::VectorXd w = rng.normal_vector(n);
      const double nw = dual_norm(s->family(), w);
      switch (rng.index(3)) {
        case 0: return AElem::from_pair(s, nw, w);
        case 1: return AElem::from_pair(s, -nw, w);
        default: return AElem::from_pair(s, rng.uniform(-0.5, 0.5) * nw, w);
      }
    }
  }
  return random_element(s, rng);
}

// Values at which the spectral family of `a` can jump.
std::vector<double> jump_points(const AElem& a, const CompressionBase& b) {
  std::vector<double> v;
  switch (a.space()->kind()) {
    case ModelKind::Fn:
      for (Eigen::Index i = 0; i < a.payload().size(); ++i) v.push_back(a.payload()[i]);
      break;
    case ModelKind::JB: {
      const auto e = eig(a);
      for (Eigen::Index i = 0; i < e.values.size(); ++i) v.push_back(e.values[i]);
      break;
    }
    case ModelKind::CenSym: {
      const auto [lo, hi] = b.bounds(a);
      v = {lo, hi};
      break;
    }
  }
  std::sort(v.begin(), v.end());
  return v;
}

// Points strictly between consecutive jumps plus one on either side.
std::vector<double> gap_grid(const AElem& a, const CompressionBase& b) {
  const auto v = jump_points(a, b);
  const double sep = 1e-6 * (1.0 + order_unit_norm(a));
  std::vector<double> g{v.front() - 1.0};
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] - v[i - 1] > sep) g.push_back(0.5 * (v[i] + v[i - 1]));
  g.push_back(v.back() + 1.0);
  return g;
}

std::vector<double> uniform_grid(const AElem& a, const CompressionBase& b, int k) {
  const auto [lo, hi] = b.bounds(a);
  std::vector<double> g;
  // The offset keeps grid points away from exact values of a.
  for (int i = 0; i <= k; ++i) g.push_back(lo - 0.25 + (hi - lo + 0.5) * (i + 0.3183) / (k + 1));
  return g;
}

std::vector<Proj> nontrivial_members(const Ctx& x, int count, Rng& rng) {
  std::vector<Proj> out;
  for (auto& p : x.base->projections(count, rng.engine()()).members)
    if (!trivial(p)) out.push_back(p);
  if (static_cast<int>(out.size()) > count) {
    std::shuffle(out.begin(), out.end(), rng.engine());
    out.erase(out.begin() + count, out.end());
  }
  return out;
}

// ---------------------------------------------------------------- core

void core_unit_pairing(const Ctx& x, CaseResult& c, Rng& rng) {
  const AElem one = AElem::unit(x.space);
  for (int t = 0; t < x.trials; ++t) {
    const VElem rho = random_state(x.space, rng);
    const double v = pairing(one, rho);
    if (std::abs(v - 1.0) > x.space->tol().eq_tol) {
      fail(c, std::nullopt, "state with <1, rho> = " + num(v));
      return;
    }
  }
}

// An extreme state at which |<a, rho>| reaches ||a||.
VElem norming_state(const AElem& a) {
  const SpacePtr& s = a.space();
  switch (s->kind()) {
    case ModelKind::Fn: {
      Eigen::Index i = 0;
      a.payload().cwiseAbs().maxCoeff(&i);
      Eigen::VectorXd d = Eigen::VectorXd::Zero(s->n());
      d[i] = 1.0;
      return VElem(s, d);
    }
    case ModelKind::JB: {
      const auto e = eig(a);
      const Eigen::Index i = std::abs(e.values[0]) >= std::abs(e.values[e.values.size() - 1])
                                 ? 0 : e.values.size() - 1;
      const Eigen::VectorXd v = e.vectors.col(i);
      return VElem::from_matrix(s, v * v.transpose());
    }
    case ModelKind::CenSym: break;
  }
  const Eigen::VectorXd w = a.functional();
  const double sign = a.scalar() >= 0 ? 1.0 : -1.0;
  if (w.norm() == 0.0) return VElem::from_pair(s, 1.0, Eigen::VectorXd::Zero(s->n()));
  return VElem::from_pair(s, 1.0, sign * dual_face(s->family(), w).midpoint());
}

void core_norm_duality(const Ctx& x, CaseResult& c, Rng& rng) {
  const double tol = x.space->tol().eq_tol;
  for (int t = 0; t < cap(x.trials, 400); ++t) {
    const AElem a = structured_element(x.space, rng, t);
    const double na = order_unit_norm(a);
    for (int k = 0; k < 8; ++k) {
      const double v = std::abs(pairing(a, random_state(x.space, rng)));
      if (v > na + tol * (1.0 + na)) {
        fail(c, a, "a state exceeds the order unit norm: " + num(v) + " > " + num(na));
        return;
      }
    }
    const double at = std::abs(pairing(a, norming_state(a)));
    if (std::abs(at - na) > 1e3 * tol * (1.0 + na)) {
      fail(c, a, "norm not attained at the extreme state: " + num(at) + " vs " + num(na));
      return;
    }
  }
}

void core_order_norm(const Ctx& x, CaseResult& c, Rng& rng) {
  const AElem one = AElem::unit(x.space);
  for (int t = 0; t < x.trials; ++t) {
    const AElem a = structured_element(x.space, rng, t);
    const double na = order_unit_norm(a);
    if (!leq(-na * one, a) || !leq(a, na * one)) {
      fail(c, a, "a is not inside [-||a||, ||a||]");
      return;
    }
    if (na > 1e-6 && leq(-0.999 * na * one, a) && leq(a, 0.999 * na * one)) {
      fail(c, a, "a smaller interval contains a");
      return;
    }
  }
}

void core_cone_antisymmetry(const Ctx& x, CaseResult& c, Rng& rng) {
  const double tol = x.space->tol().eq_tol;
  for (int t = 0; t < x.trials; ++t) {
    AElem a = random_positive(x.space, rng);
    if (t % 4 == 0) a *= 1e-13;
    if (in_cone(a) && in_cone(-a) && order_unit_norm(a) > 10 * tol) {
      fail(c, a, "a and -a are both positive");
      return;
    }
  }
  if (!in_cone(AElem::zero(x.space))) fail(c, AElem::zero(x.space), "0 is not positive");
}

void core_projections_sharp(const Ctx& x, CaseResult& c, Rng& rng) {
  const auto members = nontrivial_members(x, cap(x.trials, 200), rng);
  for (int t = 0; t < static_cast<int>(members.size()); ++t) {
    const Proj& p = members[t];
    if (!is_effect(p) || !is_sharp(p)) {
      fail(c, p.elem(), "a projection is not a sharp effect");
      return;
    }
    if (t < 32 && !is_extremal(p, 32, rng.engine()())) {
      fail(c, p.elem(), "a projection is not extremal in E");
      return;
    }
  }
}

void core_principal_sharp(const Ctx& x, CaseResult& c, Rng& rng) {
  int principal = 0;
  const int n = cap(x.trials, 48);
  for (int t = 0; t < n; ++t) {
    const AElem e = t % 2 == 0 ? random_effect(x.space, rng) : random_projection(x.space, rng).elem();
    if (is_principal(e, 12, rng.engine()())) {
      ++principal;
      if (!is_sharp(e)) {
        fail(c, e, "principal effect that is not sharp");
        return;
      }
    }
  }
  c.note = std::to_string(principal) + " principal effects of " + std::to_string(n);
}

bool comparability_or_skip(const Ctx& x, CaseResult& c) {
  if (x.base->has_comparability()) return true;
  skip(c, "no comparability: " + x.base->comparability_certificate());
  return false;
}

// -------------------------------------------------------- compressions


void comp_f_axioms(const Ctx& x, CaseResult& c, Rng& rng) {
  for (const Proj& p : nontrivial_members(x, cap(x.trials, 24), rng)) {
    const AxiomCheck ax = check_F_axioms(x.base->compression(p), 32, rng.engine()());
    if (!ax.f_compression) {
      fail(c, p.elem(), "J_p fails " + ax.failed);
      return;
    }
    if (!approx_equal(x.base->compression(p).focus(), p)) {
      fail(c, p.elem(), "J_p(1) != p");
      return;
    }
  }
}

void comp_complementary(const Ctx& x, CaseResult& c, Rng& rng) {
  for (const Proj& p : nontrivial_members(x, cap(x.trials, 24), rng)) {
    const CompMap j = x.base->compression(p);
    const CompMap k = x.base->compression(p.complement());
    if (!are_complementary(j, k, 32, rng.engine()())) {
      fail(c, p.elem(), "J_p and J_{1-p} are not complementary");
      return;
    }
  }
}

void comp_contractive(const Ctx& x, CaseResult& c, Rng& rng) {
  const auto ps = nontrivial_members(x, 16, rng);
  if (ps.empty()) return skip(c, "no nontrivial projections");
  for (int t = 0; t < x.trials; ++t) {
    const Proj& p = ps[t % ps.size()];
    const AElem a = random_element(x.space, rng);
    const double na = order_unit_norm(a);
    if (order_unit_norm(x.base->compression(p).apply(a)) > na + x.space->tol().eq_tol * (1.0 + na)) {
      fail(c, a, "||J_p(a)|| > ||a||");
      return;
    }
  }
}

void comp_compressions(const Ctx& x, CaseResult& c, Rng& rng) {
  const bool expect = smooth_and_strict(*x.space);
  int yes = 0, total = 0;
  for (const Proj& p : nontrivial_members(x, cap(x.trials, 12), rng)) {
    const CompMap j = x.base->compression(p);
    const bool comp = is_compression(j, 32, rng.engine()());
    ++total;
    yes += comp;
    if (expect && !comp) {
      fail(c, p.elem(), "member is not a compression");
      return;
    }
    if (comp && !check_F_axioms(j, 32, rng.engine()()).f_compression) {
      fail(c, p.elem(), "compression that is not an F-compression");
      return;
    }
  }
  c.note = std::to_string(yes) + "/" + std::to_string(total) + " members are compressions";
}

// Disjoint members of the block of a, greedily.
std::vector<Proj> orthogonal_family(const CBlock& blk, Rng& rng) {
  std::vector<Proj> pool;
  for (const auto& p : blk.block.members)
    if (!trivial(p)) pool.push_back(p);
  std::shuffle(pool.begin(), pool.end(), rng.engine());
  std::vector<Proj> out;
  if (pool.empty()) return out;
  AElem sum = AElem::zero(pool.front().space());
  const AElem one = AElem::unit(pool.front().space());
  for (const auto& p : pool) {
    if (leq(sum + p, one)) {
      sum += p;
      out.push_back(p);
    }
    if (out.size() >= 4) break;
  }
  return out;
}

void comp_orthogonal_sum(const Ctx& x, CaseResult& c, Rng& rng) {
  if (!comparability_or_skip(x, c)) return;
  for (int t = 0; t < cap(x.trials, 200); ++t) {
    const AElem a = structured_element(x.space, rng, t);
    const auto fam = orthogonal_family(x.base->c_block(a), rng);
    if (fam.empty()) continue;
    AElem sum = AElem::zero(x.space), parts = AElem::zero(x.space);
    for (const auto& p : fam) {
      sum += p;
      parts += x.base->compression(p).apply(a);
    }
    if (!x.base->contains(sum)) continue;
    if (dist(x.base->compression(sum).apply(a), parts) > 1e2 * x.space->tol().eq_tol * rel(a)) {
      fail(c, a, "J_{sum p_i}(a) != sum J_{p_i}(a)");
      return;
    }
  }
}

void comp_block(const Ctx& x, CaseResult& c, Rng& rng) {
  if (!comparability_or_skip(x, c)) return;
  for (int t = 0; t < cap(x.trials, 100); ++t) {
    const AElem a = structured_element(x.space, rng, t);
    const CBlock blk = x.base->c_block(a);
    for (const auto& p : blk.block.members) {
      if (!in_C(a, p, *x.base)) {
        fail(c, a, "block member not compatible with a");
        return;
      }
    }
    const int m = static_cast<int>(blk.block.members.size());
    for (int k = 0; k < std::min(m * m, 16); ++k) {
      const auto& p = blk.block.members[rng.index(m)];
      const auto& q = blk.block.members[rng.index(m)];
      if (!projections_compatible(p, q, *x.base).compatible) {
        fail(c, a, "two block members are not compatible");
        return;
      }
    }
    // a lies in the span of the block basis
    Eigen::MatrixXd basis(x.space->dim(), blk.basis.size());
    for (std::size_t i = 0; i < blk.basis.size(); ++i) basis.col(i) = blk.basis[i].coords();
    const Eigen::VectorXd ac = a.coords();
    const Eigen::VectorXd coef = basis.colPivHouseholderQr().solve(ac);
    if ((basis * coef - ac).cwiseAbs().maxCoeff() > 1e-8 * (1.0 + ac.cwiseAbs().maxCoeff())) {
      fail(c, a, "a is outside the span of its block");
      return;
    }
  }
}

void comp_meet_in_pc(const Ctx& x, CaseResult& c, Rng& rng) {
  if (!comparability_or_skip(x, c)) return;
  const AElem one = AElem::unit(x.space);
  int tested = 0;
  for (int t = 0; t < cap(x.trials, 60); ++t) {
    const AElem a = structured_element(x.space, rng, t);
    const ProjectionSet pc = x.base->pc_set(a);
    const int m = static_cast<int>(pc.members.size());
    for (int k = 0; k < 6 && m > 0; ++k) {
      const Proj& p = pc.members[rng.index(m)];
      const Proj& q = pc.members[rng.index(m)];
      const Compatibility cp = projections_compatible(p, q, *x.base);
      if (!cp.compatible || !cp.meet) continue;
      ++tested;
      const Proj join = projections_compatible(one - p.elem(), one - q.elem(), *x.base).meet.value().complement();
      if (!in_C(a, *cp.meet, *x.base) || !in_C(a, join, *x.base)) {
        fail(c, a, "meet or join of compatible members leaves PC(a)");
        return;
      }
    }
  }
  c.note = std::to_string(tested) + " compatible pairs";
}

// ------------------------------------------------------------ spectral


void spec_unavailable(const Ctx& x, CaseResult& c, Rng& rng) {
  if (x.base->has_comparability()) {
    c.note = "comparability holds";
    return;
  }
  // Expected negative: the spectral operations must refuse.
  const AElem a = random_element(x.space, rng);
  try {
    (void)p_pm(a, *x.base);
    fail(c, a, "p_pm succeeded without comparability");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ComparabilityUnavailable) fail(c, a, e.what());
    else c.note = "expected negative reproduced: " + x.base->comparability_certificate();
  }
}

void spec_pipeline(const Ctx& x, CaseResult& c, Rng& rng) {
  if (!comparability_or_skip(x, c)) return;
  for (int t = 0; t < cap(x.trials, 300); ++t) {
    const AElem a = structured_element(x.space, rng, t);
    const SpectralData d = spectral_resolution(a, *x.base, uniform_grid(a, *x.base, 16));
    const auto bad = verify_spectral_data(d, *x.base);
    if (!bad.empty()) {
      fail(c, a, bad.front());
      return;
    }
  }
}

void spec_unique(const Ctx& x, CaseResult& c, Rng& rng) {
  if (!comparability_or_skip(x, c)) return;
  const AElem one = AElem::unit(x.space);
  int alternatives = 0;
  for (int t = 0; t < cap(x.trials, 200); ++t) {
    const AElem a = structured_element(x.space, rng, t);
    const Decomposition d = orthogonal_decomposition(a, *x.base);
    std::vector<Proj> cand = x.base->pc_set(a).members;
    if (x.space->kind() != ModelKind::Fn) {
      auto bc = x.base->bicommutant(a).members;
      cand.insert(cand.end(), bc.begin(), bc.end());
    }
    const double eq = 1e-9 * rel(a);
    for (const Proj& q : cand) {
      if (!in_C(a, q, *x.base)) continue;
      const AElem pos = x.base->compression(q).apply(a);
      const AElem neg = -x.base->compression(q.complement()).apply(a);
      if (!in_cone(pos) || !in_cone(neg)) continue;
      ++alternatives;
      if (dist(pos, d.pos) > eq || dist(neg, d.neg) > eq) {
        fail(c, a, "alternative projection gives a different decomposition");
        return;
      }
      if (!leq(d.p, q)) {
        fail(c, a, "p_pm(a) is not below an alternative");
        return;
      }
    }
  }
  c.note = std::to_string(alternatives) + " alternatives";
}

void spec_rickart_cover(const Ctx& x, CaseResult& c, Rng& rng) {
  if (!comparability_or_skip(x, c)) return;
  const AElem one = AElem::unit(x.space);
  for (int t = 0; t < cap(x.trials, 300); ++t) {
    AElem e = random_effect(x.space, rng);
    if (t % 3 == 1) e = rng.uniform() * random_projection(x.space, rng).elem();
    const Proj r = rickart_map(e, *x.base);
    const Proj cv = projection_cover(e, *x.base);
    if (!same_projection(one - r.elem(), cv)) {
      fail(c, e, "1 - rickart(e) != cover(e)");
      return;
    }
    if (!approx_equal(x.base->compression(r).apply(e), AElem::zero(x.space))) {
      fail(c, e, "J_{a*}(a) != 0");
      return;
    }
  }
}

void spec_rickart_antitone(const Ctx& x, CaseResult& c, Rng& rng) {
  if (!comparability_or_skip(x, c)) return;
  for (int t = 0; t < cap(x.trials, 300); ++t) {
    AElem a = t % 2 == 0 ? random_positive(x.space, rng) : rng.uniform(0.1, 1.0) * random_projection(x.space, rng).elem();
    AElem b = a + (t % 3 == 0 ? random_positive(x.space, rng) : rng.uniform() * random_projection(x.space, rng).elem());
    const Proj ra = rickart_map(a, *x.base);
    const Proj rb = rickart_map(b, *x.base);
    if (!leq(rb, ra)) {
      fail(c, b, "0 <= a <= b but b* is not below a*");
      return;
    }
  }
}

void spec_riemann(const Ctx& x, CaseResult& c, Rng& rng) {
  if (!comparability_or_skip(x, c)) return;
  double worst = 0.0;
  for (int t = 0; t < cap(x.trials, 40); ++t) {
    const AElem a = structured_element(x.space, rng, t);
    for (double mesh : {0.1, 0.01}) {
      const Reconstruction r = riemann_reconstruct(a, *x.base, mesh);
      worst = std::max(worst, r.error / mesh);
      if (r.error > mesh) {
        fail(c, a, "error " + num(r.error) + " > mesh " + num(mesh));
        return;
      }
    }
  }
  c.note = "worst error/mesh " + num(worst);
}

void spec_simple(const Ctx& x, CaseResult& c, Rng& rng) {
  if (!comparability_or_skip(x, c)) return;
  const double tol = x.space->tol().eq_tol;
  for (int t = 0; t < cap(x.trials, 60); ++t) {
    const AElem a = structured_element(x.space, rng, t);
    const double na = order_unit_norm(a);
    const auto seq = simple_approximation(a, *x.base, 6);
    for (std::size_t k = 0; k < seq.size(); ++k) {
      const double bound = 2.0 * na / std::pow(2.0, static_cast<double>(k + 1));
      const double slack = 1e2 * tol * (1.0 + na);
      if (dist(a, seq[k]) > bound + slack || !leq(seq[k], a + slack * AElem::unit(x.space))) {
        fail(c, a, "level " + std::to_string(k + 1) + " approximation out of bounds");
        return;
      }
      if (k > 0 && !leq(seq[k - 1], seq[k] + slack * AElem::unit(x.space))) {
        fail(c, a, "approximations are not increasing");
        return;
      }
    }
  }
}

std::pair<Proj, Proj> projection_pair(const Ctx& x, Rng& rng) {
  return {random_projection(x.space, rng), random_projection(x.space, rng)};
}

void spec_oml_join(const Ctx& x, CaseResult& c, Rng& rng) {
  if (!comparability_or_skip(x, c)) return;
  double worst = 0.0;
  for (int t = 0; t < cap(x.trials, 500); ++t) {
    const auto [p, q] = projection_pair(x, rng);
    const JoinResult j = oml_join(p, q, *x.base);
    worst = std::max(worst, j.residual);
    if (j.residual > 1e-9) {
      fail(c, p.elem(), "join depends on lambda: " + num(j.residual));
      return;
    }
    if (!leq(p, j.join) || !leq(q, j.join)) {
      fail(c, p.elem(), "join is not an upper bound");
      return;
    }
  }
  c.note = "worst residual " + num(worst);
}

// Pairs p <= q.
std::vector<std::pair<Proj, Proj>> nested_pairs(const Ctx& x, Rng& rng, int count) {
  std::vector<std::pair<Proj, Proj>> out;
  const SpacePtr& s = x.space;
  const int n = s->n();
  switch (s->kind()) {
    case ModelKind::Fn: {
      if (n <= 4) {
        // every pair p <= q: each point is outside, in q only, or in both
        int total = 1;
        for (int i = 0; i < n; ++i) total *= 3;
        for (int code = 0; code < total; ++code) {
          Eigen::VectorXd p = Eigen::VectorXd::Zero(n), q = Eigen::VectorXd::Zero(n);
          for (int i = 0, k = code; i < n; ++i, k /= 3) {
            if (k % 3 >= 1) q[i] = 1.0;
            if (k % 3 == 2) p[i] = 1.0;
          }
          out.emplace_back(Proj(AElem(s, p)), Proj(AElem(s, q)));
        }
        return out;
      }
      for (int t = 0; t < count; ++t) {
        Eigen::VectorXd p = Eigen::VectorXd::Zero(n), q = Eigen::VectorXd::Zero(n);
        for (int i = 0; i < n; ++i) {
          const int k = rng.index(3);
          if (k >= 1) q[i] = 1.0;
          if (k == 2) p[i] = 1.0;
        }
        out.emplace_back(Proj(AElem(s, p)), Proj(AElem(s, q)));
      }
      return out;
    }
    case ModelKind::JB: {
      for (int t = 0; t < count; ++t) {
        const Eigen::MatrixXd f = rng.orthonormal(n);
        Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n), q = p;
        for (int i = 0; i < n; ++i) {
          const int k = rng.index(3);
          const Eigen::MatrixXd r = f.col(i) * f.col(i).transpose();
          if (k >= 1) q += r;
          if (k == 2) p += r;
        }
        out.emplace_back(Proj(AElem::from_matrix(s, p)), Proj(AElem::from_matrix(s, q)));
      }
      return out;
    }
    case ModelKind::CenSym: break;
  }
  const AElem zero = AElem::zero(s), one = AElem::unit(s);
  for (int t = 0; t < count; ++t) {
    const Proj p = random_projection(s, rng);
    out.emplace_back(Proj(zero), p);
    out.emplace_back(p, Proj(one));
    out.emplace_back(p, p);
  }
  return out;
}

void spec_orthomodular(const Ctx& x, CaseResult& c, Rng& rng) {
  if (!comparability_or_skip(x, c)) return;
  const AElem one = AElem::unit(x.space);
  const auto pairs = nested_pairs(x, rng, cap(x.trials, 200));
  for (const auto& [p, q] : pairs) {
    const Proj m = oml_meet(q, one - p.elem(), *x.base);
    const Proj j = oml_join(p, m, *x.base).join;
    if (!same_projection(j, q, 1e-9)) {
      fail(c, q.elem(), "q != p v (q ^ p')");
      return;
    }
  }
  c.note = std::to_string(pairs.size()) + " pairs";
}

void spec_compat_resolution(const Ctx& x, CaseResult& c, Rng& rng) {
  if (!comparability_or_skip(x, c)) return;
  int compatible = 0, total = 0;
  for (int t = 0; t < cap(x.trials, 100); ++t) {
    const AElem a = structured_element(x.space, rng, t);
    const auto res = resolution(a, *x.base, gap_grid(a, *x.base));
    std::vector<Proj> cand;
    if (x.space->kind() != ModelKind::Fn) {
      const auto bc = x.base->bicommutant(a).members;
      for (int k = 0; k < 3 && !bc.empty(); ++k) cand.push_back(bc[rng.index(static_cast<int>(bc.size()))]);
    }
    for (int k = 0; k < 3; ++k) cand.push_back(random_projection(x.space, rng));
    for (const Proj& p : cand) {
      const bool lhs = in_C(a, p, *x.base);
      bool rhs = true;
      for (const auto& pt : res) rhs = rhs && projections_compatible(pt.p, p, *x.base).compatible;
      ++total;
      compatible += lhs;
      if (lhs != rhs) {
        fail(c, a, std::string("p is ") + (lhs ? "" : "not ") + "compatible with a but " +
                       (rhs ? "is" : "is not") + " with its spectral family");
        return;
      }
    }
  }
  c.note = std::to_string(compatible) + "/" + std::to_string(total) + " compatible";
}

// ----------------------------------------------------------- fn-oracle

double payload_gap(const AElem& a, const AElem& b) {
  return (a.payload() - b.payload()).cwiseAbs().maxCoeff();
}

void fn_oracle(const Ctx& x, CaseResult& c, Rng& rng) {
  double worst = 0.0;
  for (int t = 0; t < x.trials; ++t) {
    AElem a = structured_element(x.space, rng, t);
    if (t % 4 == 3) a = random_effect(x.space, rng);
    const auto grid = uniform_grid(a, *x.base, 8);
    const SpectralData got = spectral_resolution(a, *x.base, grid);
    const SpectralData want = oracle_spectral(a, grid);
    double g = std::max({payload_gap(got.p_plus, want.p_plus), payload_gap(got.pos, want.pos),
                         payload_gap(got.neg, want.neg), payload_gap(got.abs, want.abs),
                         payload_gap(got.rickart, want.rickart)});
    if (got.cover.has_value() != want.cover.has_value()) g = 1.0;
    else if (got.cover) g = std::max(g, payload_gap(*got.cover, *want.cover));
    for (std::size_t i = 0; i < grid.size(); ++i) g = std::max(g, payload_gap(got.resolution[i].p, want.resolution[i].p));
    worst = std::max(worst, g);
    if (g > 1e-12) {
      fail(c, a, "library and oracle differ by " + num(g));
      return;
    }
  }
  c.note = "max deviation " + num(worst);
}

void fn_mackey(const Ctx& x, CaseResult& c, Rng& rng) {
  for (int t = 0; t < x.trials; ++t) {
    const AElem e = random_effect(x.space, rng), g = random_effect(x.space, rng);
    const MackeyWitness w = fn_mackey_witness(e, g);
    const AElem one = AElem::unit(x.space);
    if (!w.valid || !in_cone(w.c) || !in_cone(w.a1) || !in_cone(w.b1) || !leq(w.c + w.a1 + w.b1, one) ||
        !approx_equal(w.c + w.a1, e) || !approx_equal(w.c + w.b1, g)) {
      fail(c, e, "no Mackey decomposition");
      return;
    }
  }
}

void fn_single_block(const Ctx& x, CaseResult& c, Rng& rng) {
  const int n = x.space->n();
  for (int t = 0; t < cap(x.trials, 20); ++t) {
    const AElem a = random_element(x.space, rng);
    const CBlock b = x.base->c_block(a);
    if (static_cast<int>(b.basis.size()) != n) {
      fail(c, a, "block basis has " + std::to_string(b.basis.size()) + " elements");
      return;
    }
    if (n <= kFnExhaustivePoints && b.block.members.size() != (std::size_t{1} << n)) {
      fail(c, a, "block does not contain every mask");
      return;
    }
  }
}

// ------------------------------------------------------------------ jb

void jb_jordan(const Ctx& x, CaseResult& c, Rng& rng) {
  double worst = 0.0;
  for (int t = 0; t < x.trials; ++t) {
    const AElem a = random_element(x.space, rng), b = random_element(x.space, rng);
    const double scale = std::pow(rel(a), 3) * rel(b);
    const double r = jordan_identity_residual(a, b) / scale;
    worst = std::max(worst, r);
    if (r > 1e-10) {
      fail(c, a, "Jordan identity residual " + num(r));
      return;
    }
  }
  c.note = "worst scaled residual " + num(worst);
}

void jb_peirce(const Ctx& x, CaseResult& c, Rng& rng) {
  for (int t = 0; t < x.trials; ++t) {
    const AElem a = random_element(x.space, rng);
    const Proj p = random_projection(x.space, rng);
    const Peirce pd = peirce_decompose(a, p);
    const double eq = 1e-9 * rel(a);
    if (pd.residual > eq || dist(jordan_product(p, pd.a2), 0.5 * pd.a2) > eq ||
        dist(jordan_product(p, pd.a1), pd.a1) > eq || order_unit_norm(jordan_product(p, pd.a3)) > eq ||
        dist(pd.a1 + pd.a2 + pd.a3, a) > eq) {
      fail(c, a, "Peirce relations fail");
      return;
    }
  }
}

void jb_orthogonal_parts(const Ctx& x, CaseResult& c, Rng& rng) {
  for (int t = 0; t < x.trials; ++t) {
    const AElem a = structured_element(x.space, rng, t);
    const Decomposition d = orthogonal_decomposition(a, *x.base);
    if (!jb_orthogonal(d.pos, d.neg) || order_unit_norm(jordan_product(d.pos, d.neg)) > 1e-9 * rel(a) * rel(a)) {
      fail(c, a, "a+ and a- are not orthogonal");
      return;
    }
  }
}

void jb_rickart(const Ctx& x, CaseResult& c, Rng& rng) {
  for (int t = 0; t < x.trials; ++t) {
    AElem xe = random_positive(x.space, rng);
    if (t % 2 == 1) xe = x.base->compression(random_projection(x.space, rng)).apply(xe);
    const Report r = rickart_A1_check(xe, 4, rng.engine()());
    if (!r.ok()) {
      fail(c, xe, r.cases.front().note);
      return;
    }
  }
}

void jb_eigen(const Ctx& x, CaseResult& c, Rng& rng) {
  const int n = x.space->n();
  double worst = 0.0;
  for (int t = 0; t < cap(x.trials, 500); ++t) {
    const AElem a = structured_element(x.space, rng, t);
    const auto grid = gap_grid(a, *x.base);
    const auto res = resolution(a, *x.base, grid);
    const SymmetricEigen e = jacobi_eig(a.matrix(), x.space->tol());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double lam = grid[i];
      const Eigen::MatrixXd want = spectral_projection(e, [&](double v) { return v <= lam; });
      const double g = (res[i].p.elem().matrix() - want).cwiseAbs().maxCoeff();
      worst = std::max(worst, g);
      if (g > 1e-8) {
        fail(c, a, "resolution differs from cumulative eigenprojection by " + num(g));
        return;
      }
    }
    (void)n;
  }
  c.note = "max deviation " + num(worst);
}

void jb_ordering(const Ctx& x, CaseResult& c, Rng& rng) {
  const AElem one = AElem::unit(x.space);
  int below = 0;
  for (int t = 0; t < x.trials; ++t) {
    const Proj p = random_projection(x.space, rng);
    const CompMap up = U_p_map(p), uq = U_p_map(p.complement());
    AElem e = random_effect(x.space, rng);
    if (t % 2 == 0) e = up.apply(e);
    const double eq = 1e-9;
    const bool s1 = leq(e, p);
    const bool s2 = dist(up.apply(e), e) <= eq;
    const bool s3 = dist(jordan_product(e, p), e) <= eq;
    const bool s4 = order_unit_norm(uq.apply(e)) <= eq;
    below += s1;
    if (s1 != s2 || s2 != s3 || s3 != s4) {
      fail(c, e, "ordering characterisations disagree");
      return;
    }
  }
  c.note = std::to_string(below) + " effects below p";
}

void jb_carrier_orthogonality(const Ctx& x, CaseResult& c, Rng& rng) {
  for (int t = 0; t < x.trials; ++t) {
    AElem a = random_positive(x.space, rng), b = random_positive(x.space, rng);
    const Proj p = random_projection(x.space, rng);
    if (t % 2 == 0) {
      a = U_p_map(p).apply(a);
      b = U_p_map(p.complement()).apply(b);
    }
    const Proj s = carrier(a);
    const double na = order_unit_norm(a), nb = order_unit_norm(b);
    if (na < 1e-12) continue;
    const bool lhs = order_unit_norm(triple_product(a, b, a)) <= 1e-9 * na * na * nb;
    const bool rhs = order_unit_norm(triple_product(s, b, s)) <= 1e-9 * nb;
    if (lhs != rhs) {
      fail(c, a, "{aba} = 0 and {s(a) b s(a)} = 0 disagree");
      return;
    }
  }
}

void jb_up_compression(const Ctx& x, CaseResult& c, Rng& rng) {
  for (int t = 0; t < cap(x.trials, 12); ++t) {
    const Proj p = random_projection(x.space, rng);
    if (!is_compression(U_p_map(p), 32, rng.engine()())) {
      fail(c, p.elem(), "U_p is not a compression");
      return;
    }
  }
}

// -------------------------------------------------------------- censym

void cs_base_availability(const Ctx& x, CaseResult& c, Rng& rng) {
  const NormFamily& fam = x.space->family();
  const SpectralBase sb = build_spectral_base(x.space, cap(x.trials, 512), rng.engine()());
  if (fam.smooth()) {
    if (!sb.available()) fail(c, std::nullopt, "smooth family without a spectral base");
    else c.note = "available";
    return;
  }
  if (sb.available()) {
    fail(c, std::nullopt, "non-smooth family reported a spectral base");
  } else if (!sb.certificate || !sb.certificate->verified) {
    fail(c, std::nullopt, "unavailable without a verified failing focus");
  } else {
    c.note = "expected negative reproduced: " + sb.certificate->reason;
  }
}

void cs_sharp(const Ctx& x, CaseResult& c, Rng& rng) {
  const SpacePtr& s = x.space;
  const double tol = s->tol().eq_tol;
  int sharp = 0;
  for (int t = 0; t < x.trials; ++t) {
    AElem e = random_effect(s, rng);
    if (t % 3 == 1) {
      const Eigen::VectorXd w = rng.normal_vector(s->n());
      e = AElem::from_pair(s, 0.5, 0.5 * w / dual_norm(s->family(), w));
    } else if (t % 3 == 2) {
      const Eigen::VectorXd w = rng.normal_vector(s->n());
      e = AElem::from_pair(s, 0.5, rng.uniform(0.3, 0.49) * w / dual_norm(s->family(), w));
    }
    if (t == 0) e = AElem::zero(s);
    if (t == 1) e = AElem::unit(s);
    const AElem one = AElem::unit(s);
    const bool by_def = is_sharp(e);
    const bool by_norm = trivial(e) || (std::abs(order_unit_norm(e) - 1.0) <= 1e2 * tol &&
                                        std::abs(order_unit_norm(one - e) - 1.0) <= 1e2 * tol);
    const bool by_coords = trivial(e) || (std::abs(e.scalar() - 0.5) <= 1e2 * tol &&
                                          std::abs(dual_norm(s->family(), e.functional()) - 0.5) <= 1e2 * tol);
    sharp += by_def;
    if (by_def != by_norm || by_def != by_coords) {
      fail(c, e, "sharpness characterisations disagree");
      return;
    }
  }
  c.note = std::to_string(sharp) + " sharp effects";
}

void cs_one_dimensional(const Ctx& x, CaseResult& c, Rng& rng) {
  const auto atoms = nontrivial_members(x, 32, rng);
  const double tol = x.space->tol().eq_tol;
  int below = 0;
  for (int t = 0; t < x.trials; ++t) {
    const Proj& p = atoms[t % atoms.size()];
    AElem b = rng.uniform() * p.elem();
    if (t % 3 == 1) b += 1e-3 * random_element(x.space, rng);
    if (t % 3 == 2) b = random_effect(x.space, rng);
    if (!in_cone(b) || !leq(b, p)) continue;
    ++below;
    if (dist(b, 2.0 * b.scalar() * p.elem()) > 1e3 * tol) {
      fail(c, b, "0 <= b <= p but b is not a multiple of p");
      return;
    }
  }
  c.note = std::to_string(below) + " elements in [0, p]";
}

void cs_classification(const Ctx& x, CaseResult& c, Rng& rng) {
  const bool strict = smooth_and_strict(*x.space);
  int comps = 0, total = 0;
  for (const Proj& p : nontrivial_members(x, cap(x.trials, 24), rng)) {
    const FocusClassification fc = classify_focus(p);
    ++total;
    if (strict && fc.kind != FocusKind::Compression) {
      fail(c, p.elem(), "focus classified as " + std::string(to_string(fc.kind)));
      return;
    }
    if (fc.kind != FocusKind::Compression && fc.kind != FocusKind::FCompression) {
      fail(c, p.elem(), "extremal atom classified as " + std::string(to_string(fc.kind)));
      return;
    }
    if (!fc.dual) {
      fail(c, p.elem(), "classification without a dual face");
      return;
    }
    const CompMap j = build_retraction(p, fc.dual->midpoint());
    const bool comp = is_compression(j, 32, rng.engine()());
    if (comp != (fc.kind == FocusKind::Compression)) {
      fail(c, p.elem(), "classification disagrees with is_compression");
      return;
    }
    if (!check_F_axioms(j, 32, rng.engine()()).f_compression) {
      fail(c, p.elem(), "classified focus does not give an F-compression");
      return;
    }
    comps += comp;
  }
  c.note = std::to_string(comps) + "/" + std::to_string(total) + " compressions";
}

void cs_duality(const Ctx& x, CaseResult& c, Rng& rng) {
  const NormFamily& fam = x.space->family();
  const DualityDecision d = decide_spectral_duality(x.space, cap(x.trials, 256), rng.engine()());
  const bool expect = fam.smooth() && fam.strictly_convex();
  if (d.holds != expect) {
    fail(c, std::nullopt, std::string("spectral duality ") + (d.holds ? "holds" : "fails") + ": " + d.reason);
    return;
  }
  if (fam.smooth() && !fam.strictly_convex()) {
    if (!d.witness) {
      fail(c, std::nullopt, "no two-compression witness");
      return;
    }
    const auto& w = *d.witness;
    if (!w.both_f_compressions || w.either_compression || w.distance < 0.1) {
      fail(c, w.focus, "two-compression witness is not valid");
      return;
    }
    c.note = "two F-compressions at distance " + num(w.distance);
  } else {
    c.note = d.reason;
  }
}

void cs_pipeline(const Ctx& x, CaseResult& c, Rng& rng) {
  if (!comparability_or_skip(x, c)) return;
  for (int t = 0; t < cap(x.trials, 300); ++t) {
    const AElem a = structured_element(x.space, rng, t);
    const SpectralData d = spectral_resolution(a, *x.base, uniform_grid(a, *x.base, 8));
    const auto bad = verify_spectral_data(d, *x.base);
    if (!bad.empty()) {
      fail(c, a, bad.front());
      return;
    }
    if (t < 40) {
      const Reconstruction r = riemann_reconstruct(a, *x.base, 0.05);
      if (r.error > 0.05) {
        fail(c, a, "Riemann error " + num(r.error));
        return;
      }
    }
  }
}

void cs_faces(const Ctx& x, CaseResult& c, Rng& rng) {
  const NormFamily& fam = x.space->family();
  if (x.space->n() != 2) return skip(c, "boundary scan needs n = 2");
  constexpr int kSamples = 20000;
  std::vector<Eigen::VectorXd> boundary;
  boundary.reserve(kSamples);
  for (int k = 0; k < kSamples; ++k) {
    const double th = 2.0 * M_PI * k / kSamples;
    Eigen::Vector2d u(std::cos(th), std::sin(th));
    boundary.emplace_back(u / primal_norm(fam, u));
  }
  for (int t = 0; t < cap(x.trials, 50); ++t) {
    const Eigen::VectorXd y = rng.normal_vector(2);
    const double ny = dual_norm(fam, y);
    double best = -1e300;
    for (const auto& b : boundary) best = std::max(best, y.dot(b));
    const DualityFace f = dual_face(fam, y);
    const AElem wit = AElem::from_pair(x.space, ny, y);
    if (best > ny + 1e-9 * (1 + ny) || best < ny * (1 - 1e-3)) {
      fail(c, wit, "dual norm disagrees with the boundary scan");
      return;
    }
    for (const auto& p : f.points) {
      if (std::abs(primal_norm(fam, p) - 1.0) > 1e-9 || std::abs(y.dot(p) - ny) > 1e-9 * (1 + ny)) {
        fail(c, wit, "face point is not a norming unit vector");
        return;
      }
    }
  }
}

// ------------------------------------------------------------ registry

std::vector<Case> cases_for(const std::string& suite) {
  if (suite == "core") {
    return {{"core.unit_pairing", core_unit_pairing},
            {"core.norm_duality", core_norm_duality},
            {"core.order_unit_norm", core_order_norm},
            {"core.cone_antisymmetry", core_cone_antisymmetry},
            {"core.projections_sharp", core_projections_sharp},
            {"core.principal_implies_sharp", core_principal_sharp}};
  }
  if (suite == "compressions") {
    return {{"comp.members_f_axioms", comp_f_axioms},
            {"comp.complementary", comp_complementary},
            {"comp.contractive", comp_contractive},
            {"comp.members_compressions", comp_compressions},
            {"comp.orthogonal_sum", comp_orthogonal_sum},
            {"comp.block", comp_block},
            {"comp.meet_in_pc", comp_meet_in_pc}};
  }
  if (suite == "spectral") {
    return {{"spectral.comparability", spec_unavailable},
            {"spectral.pipeline", spec_pipeline},
            {"spectral.uniqueness_leastness", spec_unique},
            {"spectral.rickart_cover", spec_rickart_cover},
            {"spectral.rickart_antitone", spec_rickart_antitone},
            {"spectral.riemann_bound", spec_riemann},
            {"spectral.simple_approximation", spec_simple},
            {"spectral.oml_join", spec_oml_join},
            {"spectral.orthomodular", spec_orthomodular},
            {"spectral.compatibility_via_resolution", spec_compat_resolution}};
  }
  if (suite == "fn-oracle") {
    return {{"fn.oracle_equivalence", fn_oracle}, {"fn.mackey", fn_mackey}, {"fn.single_block", fn_single_block}};
  }
  if (suite == "jb") {
    return {{"jb.jordan_identity", jb_jordan},
            {"jb.peirce", jb_peirce},
            {"jb.orthogonal_parts", jb_orthogonal_parts},
            {"jb.rickart_A1", jb_rickart},
            {"jb.eigen_crosscheck", jb_eigen},
            {"jb.ordering", jb_ordering},
            {"jb.carrier_orthogonality", jb_carrier_orthogonality},
            {"jb.up_compression", jb_up_compression}};
  }
  if (suite == "censym") {
    return {{"cs.base_availability", cs_base_availability},
            {"cs.sharp", cs_sharp},
            {"cs.one_dimensional_faces", cs_one_dimensional},
            {"cs.classification", cs_classification},
            {"cs.spectral_duality", cs_duality},
            {"cs.pipeline", cs_pipeline},
            {"cs.face_scan", cs_faces}};
  }
  throw Error(ErrorCode::UnknownSuite, "no suite named '" + suite + "'");
}

bool applies(const std::string& suite, ModelKind k) {
  if (suite == "fn-oracle") return k == ModelKind::Fn;
  if (suite == "jb") return k == ModelKind::JB;
  if (suite == "censym") return k == ModelKind::CenSym;
  return true;
}

CaseResult run_case(const Case& cs, const Ctx& x) {
  CaseResult c;
  c.suite = x.suite;
  c.check = cs.check;
  c.model = x.space->describe();
  c.trials = x.trials;
  c.seed = x.seed;
  c.tolerances = tolerance_map(x.space->tol());
  Rng rng(x.seed, name_stream(cs.check));
  try {
    cs.body(x, c, rng);
  } catch (const std::exception& e) {
    fail(c, std::nullopt, std::string("exception: ") + e.what());
  }
  return c;
}

}  // namespace

const std::vector<std::string>& registered_suites() {
  static const std::vector<std::string> names{"core", "compressions", "spectral", "fn-oracle", "jb", "censym"};
  return names;
}

std::vector<std::string> suites_for(const ModelSpace& space) {
  std::vector<std::string> out;
  for (const auto& s : registered_suites())
    if (applies(s, space.kind())) out.push_back(s);
  return out;
}

BasePtr default_base(const SpacePtr& space) {
  switch (space->kind()) {
    case ModelKind::Fn: return std::make_shared<FnBase>(space);
    case ModelKind::JB: return std::make_shared<JBBase>(space);
    case ModelKind::CenSym: return std::make_shared<CenSymBase>(space);
  }
  throw Error(ErrorCode::InvalidDimension, "unknown model");
}

Report run_suite(const std::string& name, const SpacePtr& space, int trials, std::uint64_t seed, int threads) {
  const std::vector<Case> cases = cases_for(name);
  if (trials < 1) throw Error(ErrorCode::InvalidDimension, "trials must be positive");
  Report rep;
  rep.suite = name;
  rep.environment.tolerances = space->tol();
  rep.environment.models = {space->describe()};
  if (!applies(name, space->kind())) {
    CaseResult c;
    c.suite = name;
    c.check = name + ".applicable";
    c.model = space->describe();
    c.trials = 0;
    c.seed = seed;
    c.tolerances = tolerance_map(space->tol());
    skip(c, "suite does not apply to " + std::string(to_string(space->kind())));
    rep.add(std::move(c));
    return rep;
  }
  Ctx x{name, space, default_base(space), trials, seed};

  std::vector<CaseResult> results(cases.size());
  std::vector<std::size_t> order(cases.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(cases.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) results[i] = run_case(cases[i], x);
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  if (name == "compressions") {
    Report vb = validate_base(*x.base, std::min(trials, 256), seed);
    for (auto& c : vb.cases) {
      c.suite = name;
      rep.add(std::move(c));
    }
  }
  for (auto& c : results) rep.add(std::move(c));
  return rep;
}

Report merge_reports(const std::vector<Report>& reports) {
  Report out;
  if (reports.empty()) return out;
  if (reports.size() == 1) return reports.front();
  out.environment = reports.front().environment;
  out.environment.models.clear();
  std::vector<std::string> names;
  for (const auto& r : reports) {
    if (r.environment.version != out.environment.version) {
      throw Error(ErrorCode::VersionMismatch, r.environment.version + " vs " + out.environment.version);
    }
    names.push_back(r.suite);
    for (const auto& m : r.environment.models)
      if (std::find(out.environment.models.begin(), out.environment.models.end(), m) == out.environment.models.end())
        out.environment.models.push_back(m);
    out.cases.insert(out.cases.end(), r.cases.begin(), r.cases.end());
  }
  std::stable_sort(out.cases.begin(), out.cases.end(), [](const CaseResult& a, const CaseResult& b) {
    return std::tie(a.suite, a.check) < std::tie(b.suite, b.check);
  });
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  for (std::size_t i = 0; i < names.size(); ++i) out.suite += (i ? "+" : "") + names[i];
  out.tally();
  return out;
}

}  // namespace ouspec
