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

#include "ouspec/censym_model.hpp"

#include <cmath>
#include <sstream>

#include "ouspec/errors.hpp"
#include "ouspec/order_unit.hpp"
#include "ouspec/random.hpp"

namespace ouspec {

namespace {

void require_censym(const SpacePtr& s) {
  if (s->kind() != ModelKind::CenSym) {
    throw Error(ErrorCode::ShapeMismatch, "expected a centrally symmetric space");
  }
}

std::string vec_str(const Eigen::VectorXd& v) {
  std::ostringstream os;
  os.precision(6);
  os << "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v(i);
  os << ")";
  return os.str();
}

// Functional of dual norm 1/2 at an extreme point of the dual ball.
Eigen::VectorXd random_extremal_half(const NormFamily& fam, Rng& rng) {
  const int n = fam.dim();
  if (fam.smooth()) return 0.5 * random_unit_functional(fam, rng);
  Eigen::VectorXd y = Eigen::VectorXd::Zero(n);
  if (fam.p() == 1.0) {
    for (int i = 0; i < n; ++i) y(i) = rng.coin() ? 0.5 : -0.5;
  } else {
    y(rng.index(n)) = rng.coin() ? 0.5 : -0.5;
  }
  return y;
}

}  // namespace

std::string_view to_string(FocusKind k) {
  switch (k) {
    case FocusKind::NotAFocus: return "not_a_focus";
    case FocusKind::RetractionOnly: return "retraction_only";
    case FocusKind::FCompression: return "f_compression";
    case FocusKind::Compression: return "compression";
  }
  return "?";
}

CenSymBase::CenSymBase(SpacePtr space) : CompressionBase(std::move(space)) {
  require_censym(this->space());
}

std::string CenSymBase::describe() const { return space()->describe(); }

Proj CenSymBase::atom_along(const Eigen::VectorXd& w) const {
  const double nw = dual_norm(space()->family(), w);
  if (nw == 0.0) throw Error(ErrorCode::ZeroFunctional, "atom along the zero functional");
  return Proj(AElem::from_pair(space(), 0.5, 0.5 * w / nw));
}

bool CenSymBase::contains(const AElem& p) const {
  if (!p.space()->same_as(*space())) return false;
  const double eq = space()->tol().eq_tol;
  const NormFamily& fam = space()->family();
  const double a0 = p.scalar();
  const Eigen::VectorXd y = p.functional();
  const double ny = dual_norm(fam, y);
  if (ny <= eq) return std::abs(a0) <= eq || std::abs(a0 - 1.0) <= eq;
  return std::abs(a0 - 0.5) <= eq && std::abs(ny - 0.5) <= eq && fam.dual_extremal(y, eq);
}

CompMap CenSymBase::make_compression(const Proj& p) const {
  const AElem& e = p.elem();
  if (dual_norm(space()->family(), e.functional()) <= space()->tol().eq_tol) {
    return e.scalar() > 0.5 ? CompMap::identity(space()) : CompMap::zero(space());
  }
  return build_retraction(e, dual_face(space()->family(), e.functional()).midpoint());
}

ProjectionSet CenSymBase::projections(int count, std::uint64_t seed) const {
  Rng rng(seed, 0x61746f);
  ProjectionSet out;
  out.members.emplace_back(AElem::zero(space()));
  out.members.emplace_back(AElem::unit(space()));
  for (int t = 0; t < count; ++t) {
    Proj p(AElem::from_pair(space(), 0.5, random_extremal_half(space()->family(), rng)));
    out.members.push_back(p.complement());
    out.members.push_back(std::move(p));
  }
  out.exhaustive = false;
  out.description = "0, 1 and sampled atoms";
  return out;
}

std::vector<Triple> CenSymBase::orthogonal_triples(int count, std::uint64_t seed) const {
  Rng rng(seed, 0x747269);
  const AElem one = AElem::unit(space());
  std::vector<Triple> out;
  const int atoms = std::max(1, count / 8);
  for (int t = 0; t < atoms; ++t) {
    const AElem p = AElem::from_pair(space(), 0.5, random_extremal_half(space()->family(), rng));
    const std::vector<AElem> pool{AElem::zero(space()), p, one - p, one};
    for (const AElem& a : pool)
      for (const AElem& b : pool)
        for (const AElem& c : pool)
          if (leq(a + b + c, one)) out.push_back(Triple{Proj(a), Proj(b), Proj(c)});
  }
  return out;
}

std::vector<std::pair<Proj, Proj>> CenSymBase::normality_pairs(int count,
                                                               std::uint64_t seed) const {
  Rng rng(seed, 0x6e6f72);
  const AElem one = AElem::unit(space());
  std::vector<std::pair<Proj, Proj>> out;
  for (int t = 0; t < count; ++t) {
    const NormFamily& fam = space()->family();
    const AElem p = AElem::from_pair(space(), 0.5, random_extremal_half(fam, rng));
    const AElem q = AElem::from_pair(space(), 0.5, random_extremal_half(fam, rng));
    switch (t % 4) {
      case 0: out.emplace_back(Proj(p), Proj(q)); break;
      case 1: out.emplace_back(Proj(p), Proj(one - p)); break;
      case 2: out.emplace_back(Proj(p), Proj(p)); break;
      default: out.emplace_back(Proj(p), Proj(one)); break;
    }
  }
  return out;
}

bool CenSymBase::has_comparability() const { return space()->family().smooth(); }

std::string CenSymBase::comparability_certificate() const {
  if (has_comparability()) return {};
  return "family " + space()->family().describe() +
         " is not smooth: some sharp element is not extremal and focuses no F-compression";
}

Proj CenSymBase::make_comparability_projection(const AElem& a) const {
  const double a0 = a.scalar();
  const Eigen::VectorXd w = a.functional();
  const double nw = dual_norm(space()->family(), w);
  const double tol = space()->tol().eq_tol * (1.0 + nw + std::abs(a0));
  if (a0 <= tol - nw) return Proj(AElem::zero(space()));
  if (nw <= tol || nw < a0 - tol) return Proj(AElem::unit(space()));
  return atom_along(w);
}

Proj CenSymBase::cover(const AElem& e) const {
  const double e0 = e.scalar();
  const Eigen::VectorXd w = e.functional();
  const double nw = dual_norm(space()->family(), w);
  const double tol = space()->tol().eq_tol * (1.0 + nw + std::abs(e0));
  if (std::abs(e0) <= tol && nw <= tol) return Proj(AElem::zero(space()));
  if (nw > tol && nw >= e0 - tol) return atom_along(w);
  return Proj(AElem::unit(space()));
}

std::pair<double, double> CenSymBase::bounds(const AElem& a) const {
  const double nw = dual_norm(space()->family(), a.functional());
  return {a.scalar() - nw, a.scalar() + nw};
}

ProjectionSet CenSymBase::bicommutant(const AElem& a) const {
  ProjectionSet out;
  out.members.emplace_back(AElem::zero(space()));
  out.members.emplace_back(AElem::unit(space()));
  const Eigen::VectorXd w = a.functional();
  if (dual_norm(space()->family(), w) > space()->tol().eq_tol) {
    Proj p = atom_along(w);
    out.members.push_back(p.complement());
    out.members.push_back(std::move(p));
    out.description = "{0, 1, p, 1 - p} for the atom along w";
  } else {
    out.description = "{0, 1}: a is a multiple of the unit";
  }
  return out;
}

ProjectionSet CenSymBase::pc_set(const AElem& a) const {
  const Eigen::VectorXd w = a.functional();
  if (dual_norm(space()->family(), w) > space()->tol().eq_tol) {
    ProjectionSet out = bicommutant(a);
    out.description = "atoms parallel to w";
    return out;
  }
  ProjectionSet out = projections(16, 1);
  out.description = "every atom commutes with a multiple of the unit (sampled)";
  return out;
}

CBlock CenSymBase::c_block(const AElem& a) const {
  CBlock b;
  b.block = bicommutant(a);
  b.basis.push_back(AElem::unit(space()));
  if (b.block.members.size() == 4) b.basis.push_back(b.block.members.back().elem());
  return b;
}

CompMap build_retraction(const AElem& p, const Eigen::VectorXd& x) {
  const SpacePtr& s = p.space();
  require_censym(s);
  const NormFamily& fam = s->family();
  const double eq = s->tol().eq_tol;
  const Eigen::VectorXd y = p.functional();
  const double ny = dual_norm(fam, y);
  if (std::abs(p.scalar() - 0.5) > eq || std::abs(ny - 0.5) > eq) {
    throw Error(ErrorCode::NotSharpFocus, "focus must be (1/2, y) with |y|* = 1/2");
  }
  if (!fam.dual_extremal(y, eq)) {
    throw Error(ErrorCode::NotSharpFocus, "y = " + vec_str(y) + " is not extremal in B*/2");
  }
  if (x.size() != y.size() || primal_norm(fam, x) > 1.0 + eq || y.dot(x) < ny - eq) {
    throw Error(ErrorCode::NotNormAttaining, "x = " + vec_str(x) + " is not in the dual face of y");
  }
  return CompMap::cs_rank1(p, x);
}

FocusClassification classify_focus(const AElem& p) {
  const SpacePtr& s = p.space();
  require_censym(s);
  const NormFamily& fam = s->family();
  const double eq = s->tol().eq_tol;
  if (!is_effect(p) || !is_sharp(p)) {
    throw Error(ErrorCode::NotSharpFocus, "focus " + vec_str(p.payload()) + " is not sharp");
  }
  FocusClassification out;
  const Eigen::VectorXd y = p.functional();
  if (dual_norm(fam, y) <= eq) {
    out.kind = FocusKind::Compression;
    out.reason = "trivial focus";
    return out;
  }
  if (!fam.dual_extremal(y, eq)) {
    out.kind = FocusKind::NotAFocus;
    out.reason = "y is not extremal in B*/2, so no retraction has this focus";
    return out;
  }
  out.dual = dual_face(fam, y);
  out.representatives = out.dual->points;
  if (out.dual->points.size() > 1) out.representatives.push_back(out.dual->midpoint());
  bool any_f = false;
  for (const auto& x : out.representatives) {
    out.primal.push_back(primal_face(fam, x));
    const DualityFace& f = out.primal.back();
    if (f.singleton() && (f.points.front() - 2.0 * y).cwiseAbs().maxCoeff() <= 1e3 * eq) {
      any_f = true;
    }
  }
  const bool dual_single = out.dual->singleton();
  if (any_f && dual_single) {
    out.kind = FocusKind::Compression;
    out.reason = "both duality faces are singletons";
  } else if (any_f) {
    out.kind = FocusKind::FCompression;
    out.reason = "the dual face of y is not a singleton";
  } else {
    out.kind = FocusKind::RetractionOnly;
    out.reason = "no representative x has a unique norming functional";
  }
  return out;
}

SpectralBase build_spectral_base(const SpacePtr& space, int trials, std::uint64_t seed) {
  require_censym(space);
  const NormFamily& fam = space->family();
  if (fam.smooth()) return {std::make_shared<CenSymBase>(space), std::nullopt};

  const int n = fam.dim();
  Eigen::VectorXd y = Eigen::VectorXd::Zero(n);
  if (fam.p() == 1.0) {
    y(0) = 0.5;
    y(1) = 0.25;
  } else {
    y(0) = 0.25;
    y(1) = 0.25;
  }
  const AElem focus = AElem::from_pair(space, 0.5, y);
  const Eigen::VectorXd x = dual_face(fam, y).midpoint();
  AxiomCheck check = check_F_axioms(CompMap::cs_rank1(focus, x), trials, seed);
  const bool verified = !check.f_compression && check.f3_witness.has_value();
  std::string reason = "family " + fam.describe() + " is not smooth; sharp focus " +
                       vec_str(focus.payload()) + " is not extremal and the candidate map with x = " +
                       vec_str(x) + " fails " + (check.failed.empty() ? "nothing" : check.failed);
  return {nullptr, FailingFocus{focus, x, std::move(check), std::move(reason), verified}};
}

DualityDecision decide_spectral_duality(const SpacePtr& space, int trials, std::uint64_t seed) {
  require_censym(space);
  const NormFamily& fam = space->family();
  DualityDecision out;
  out.smooth = fam.smooth();
  out.strictly_convex = fam.strictly_convex();
  out.holds = out.smooth && out.strictly_convex;
  if (out.holds) {
    out.reason = "smooth and strictly convex";
    return out;
  }
  if (!out.smooth) {
    out.reason = "not smooth";
    return out;
  }
  // Smooth but not strictly convex: a flat piece of the unit ball gives a
  // focus with a segment of maximisers.
  Eigen::VectorXd y = Eigen::VectorXd::Zero(2);
  y(1) = 0.5 / fam.r();
  const AElem focus = AElem::from_pair(space, 0.5, y);
  const DualityFace face = dual_face(fam, y);
  const Eigen::VectorXd x1 = face.midpoint();
  const Eigen::VectorXd x2 = 0.5 * (x1 + face.points.back());
  const CompMap j1 = build_retraction(focus, x1);
  const CompMap j2 = build_retraction(focus, x2);
  TwoCompressionWitness w{focus, x1, x2, matrix_distance(j1, j2), false, false};
  w.both_f_compressions = check_F_axioms(j1, trials, seed).f_compression &&
                          check_F_axioms(j2, trials, seed + 1).f_compression;
  w.either_compression = is_compression(j1, trials, seed) || is_compression(j2, trials, seed);
  out.witness = std::move(w);
  out.reason = "smooth but not strictly convex: one focus carries two F-compressions";
  return out;
}

}  // namespace ouspec
