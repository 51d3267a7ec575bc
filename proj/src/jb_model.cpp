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

#include "ouspec/jb_model.hpp"

#include <algorithm>
#include <cmath>

#include "ouspec/errors.hpp"
#include "ouspec/order_unit.hpp"
#include "ouspec/random.hpp"

namespace ouspec {

namespace {

void require_jb(const AElem& a) {
  if (a.space()->kind() != ModelKind::JB) {
    throw Error(ErrorCode::ShapeMismatch, "expected a symmetric-matrix element");
  }
}

double spectral_radius(const Eigen::MatrixXd& m, const Tol& tol) {
  return jacobi_eig(m, tol).values.cwiseAbs().maxCoeff();
}

bool is_projection_matrix(const Eigen::MatrixXd& p, const Tol& tol) {
  return spectral_radius(p * p - p, tol) <= tol.eq_tol;
}

void require_projection(const AElem& p) {
  require_jb(p);
  if (!is_projection_matrix(p.matrix(), p.space()->tol())) {
    throw Error(ErrorCode::NotAProjection, "p^2 != p");
  }
}

Eigen::MatrixXd columns_projection(const Eigen::MatrixXd& v, const std::vector<int>& cols) {
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(v.rows(), v.rows());
  for (int c : cols) p += v.col(c) * v.col(c).transpose();
  return p;
}

// Eigenvalue clusters (ascending) with relative gap eig_cut.
std::vector<std::vector<int>> clusters(const SymmetricEigen& e, const Tol& tol) {
  const double scale = std::max(1.0, e.values.cwiseAbs().maxCoeff());
  std::vector<std::vector<int>> out;
  for (int i = 0; i < e.values.size(); ++i) {
    if (i == 0 || e.values(i) - e.values(i - 1) > tol.eig_cut * scale) out.emplace_back();
    out.back().push_back(i);
  }
  return out;
}

// Eigenvalues at or below this count as zero; the floor keeps rounding
// noise from producing spurious projections.
double zero_cut(double norm, const Tol& tol) { return std::max(tol.eig_cut * norm, tol.psd_tol); }

std::uint64_t pow4(int n) { return std::uint64_t{1} << (2 * n); }

}  // namespace

SymmetricEigen eig(const AElem& a) {
  require_jb(a);
  return jacobi_eig(a.matrix(), a.space()->tol());
}

JBBase::JBBase(SpacePtr space, std::optional<Eigen::MatrixXd> frame)
    : CompressionBase(std::move(space)), frame_(std::move(frame)) {
  if (this->space()->kind() != ModelKind::JB) {
    throw Error(ErrorCode::ShapeMismatch, "matrix base needs a symmetric-matrix space");
  }
  const int n = this->space()->n();
  if (frame_) {
    const Eigen::MatrixXd& q = *frame_;
    if (q.rows() != n || q.cols() != n ||
        (q.transpose() * q - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-9) {
      throw Error(ErrorCode::ShapeMismatch, "frame must be an orthogonal n x n matrix");
    }
  }
}

Eigen::MatrixXd JBBase::frame_or_random(std::uint64_t seed) const {
  if (frame_) return *frame_;
  Rng rng(seed, 0x6672616d);
  return rng.orthonormal(space()->n());
}

std::string JBBase::describe() const { return space()->describe(); }

bool JBBase::contains(const AElem& p) const {
  if (!p.space()->same_as(*space())) return false;
  return is_projection_matrix(p.matrix(), space()->tol());
}

CompMap JBBase::make_compression(const Proj& p) const { return U_p_map(p.elem()); }

ProjectionSet JBBase::projections(int count, std::uint64_t seed) const {
  const int n = space()->n();
  ProjectionSet out;
  if (n <= 10) {
    const Eigen::MatrixXd q = frame_or_random(seed);
    for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << n); ++sel) {
      std::vector<int> cols;
      for (int i = 0; i < n; ++i)
        if ((sel >> i) & 1U) cols.push_back(i);
      out.members.emplace_back(AElem::from_matrix(space(), columns_projection(q, cols)));
    }
    out.exhaustive = frame_.has_value();
    out.description = "coordinate projections of one orthonormal frame";
    return out;
  }
  Rng rng(seed, 0x70726f);
  out.members.emplace_back(AElem::zero(space()));
  out.members.emplace_back(AElem::unit(space()));
  for (int t = 0; t < count; ++t) {
    Proj p = random_projection(space(), rng);
    out.members.push_back(p.complement());
    out.members.push_back(std::move(p));
  }
  out.exhaustive = false;
  out.description = "sampled projections";
  return out;
}

std::vector<Triple> JBBase::orthogonal_triples(int count, std::uint64_t seed) const {
  const int n = space()->n();
  const Eigen::MatrixXd q = frame_or_random(seed);
  std::vector<Triple> out;
  auto build = [&](const std::vector<int>& label) {
    std::vector<int> p, r, s;
    for (int i = 0; i < n; ++i) {
      if (label[i] == 1) p.push_back(i);
      if (label[i] == 2) r.push_back(i);
      if (label[i] == 3) s.push_back(i);
    }
    out.push_back(Triple{Proj(AElem::from_matrix(space(), columns_projection(q, p))),
                         Proj(AElem::from_matrix(space(), columns_projection(q, r))),
                         Proj(AElem::from_matrix(space(), columns_projection(q, s)))});
  };
  if (pow4(n) <= std::max<std::uint64_t>(count, 256)) {
    for (std::uint64_t code = 0; code < pow4(n); ++code) {
      std::vector<int> label(n);
      for (int i = 0; i < n; ++i) label[i] = static_cast<int>((code >> (2 * i)) & 3U);
      build(label);
    }
    return out;
  }
  Rng rng(seed, 0x747269);
  for (int t = 0; t < count; ++t) {
    std::vector<int> label(n);
    for (int& l : label) l = rng.index(4);
    build(label);
  }
  return out;
}

std::vector<std::pair<Proj, Proj>> JBBase::normality_pairs(int count, std::uint64_t seed) const {
  const int n = space()->n();
  const Eigen::MatrixXd q = frame_or_random(seed);
  Rng rng(seed, 0x6e6f72);
  std::vector<std::pair<Proj, Proj>> out;
  for (int t = 0; t < count; ++t) {
    if (t % 2 == 0) {
      std::vector<int> a, b;
      for (int i = 0; i < n; ++i) {
        if (rng.coin()) a.push_back(i);
        if (rng.coin()) b.push_back(i);
      }
      out.emplace_back(Proj(AElem::from_matrix(space(), columns_projection(q, a))),
                       Proj(AElem::from_matrix(space(), columns_projection(q, b))));
    } else {
      Proj u = random_projection(space(), rng);
      Proj v = random_projection(space(), rng);
      out.emplace_back(std::move(u), std::move(v));
    }
  }
  return out;
}

Proj JBBase::make_comparability_projection(const AElem& a) const {
  const SymmetricEigen e = eig(a);
  const double cut = zero_cut(e.values.cwiseAbs().maxCoeff(), space()->tol());
  return Proj(AElem::from_matrix(space(), spectral_projection(e, [&](double l) { return l > cut; })));
}

Proj JBBase::cover(const AElem& e) const {
  const SymmetricEigen d = eig(e);
  const double norm = d.values.cwiseAbs().maxCoeff();
  if (norm == 0.0) return Proj(AElem::zero(space()));
  const double cut = zero_cut(norm, space()->tol());
  return Proj(AElem::from_matrix(space(), spectral_projection(d, [&](double l) { return l > cut; })));
}

std::pair<double, double> JBBase::bounds(const AElem& a) const {
  const SymmetricEigen e = eig(a);
  return {e.values(0), e.values(e.values.size() - 1)};
}

ProjectionSet JBBase::bicommutant(const AElem& a) const {
  const SymmetricEigen e = eig(a);
  const auto groups = clusters(e, space()->tol());
  const int k = static_cast<int>(groups.size());
  if (k > 12) throw Error(ErrorCode::NotEnumerable, std::to_string(k) + " eigenvalue clusters");
  ProjectionSet out;
  out.description = "Boolean algebra of " + std::to_string(k) + " spectral projections";
  for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << k); ++sel) {
    std::vector<int> cols;
    for (int g = 0; g < k; ++g)
      if ((sel >> g) & 1U) cols.insert(cols.end(), groups[g].begin(), groups[g].end());
    out.members.emplace_back(AElem::from_matrix(space(), columns_projection(e.vectors, cols)));
  }
  return out;
}

ProjectionSet JBBase::pc_set(const AElem& a) const {
  ProjectionSet out = bicommutant(a);
  const SymmetricEigen e = eig(a);
  const auto groups = clusters(e, space()->tol());
  Rng rng(1, 0x706373);
  bool split = false;
  for (const auto& g : groups) {
    const int m = static_cast<int>(g.size());
    if (m < 2) continue;
    split = true;
    Eigen::MatrixXd v(e.vectors.rows(), m);
    for (int j = 0; j < m; ++j) v.col(j) = e.vectors.col(g[j]);
    const Eigen::MatrixXd w = v * rng.orthonormal(m);
    for (int j = 1; j < m; ++j) {
      std::vector<int> cols(j);
      for (int c = 0; c < j; ++c) cols[c] = c;
      out.members.emplace_back(AElem::from_matrix(space(), columns_projection(w, cols)));
    }
  }
  out.exhaustive = !split;
  out.description = split ? "spectral projections plus witnesses inside degenerate eigenspaces"
                          : "spectral projections of a simple spectrum";
  return out;
}

CBlock JBBase::c_block(const AElem& a) const {
  const SymmetricEigen e = eig(a);
  const int n = space()->n();
  CBlock b;
  for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << n); ++sel) {
    std::vector<int> cols;
    for (int i = 0; i < n; ++i)
      if ((sel >> i) & 1U) cols.push_back(i);
    b.block.members.emplace_back(AElem::from_matrix(space(), columns_projection(e.vectors, cols)));
  }
  b.block.description = "diagonal projections in an eigenbasis of a";
  for (int i = 0; i < n; ++i) {
    b.basis.push_back(AElem::from_matrix(space(), columns_projection(e.vectors, {i})));
  }
  return b;
}

AElem jordan_product(const AElem& a, const AElem& b) {
  require_jb(a);
  require_same_space(*a.space(), *b.space());
  const Eigen::MatrixXd x = a.matrix();
  const Eigen::MatrixXd y = b.matrix();
  return AElem::from_matrix(a.space(), 0.5 * (x * y + y * x));
}

AElem triple_product(const AElem& a, const AElem& b, const AElem& c) {
  return jordan_product(jordan_product(a, b), c) + jordan_product(jordan_product(c, b), a) -
         jordan_product(jordan_product(a, c), b);
}

CompMap U_p_map(const AElem& p) {
  require_projection(p);
  return CompMap::jb_up(p.space(), p.matrix());
}

bool operator_commute(const AElem& a, const AElem& p) {
  require_projection(p);
  require_same_space(*a.space(), *p.space());
  const AElem one = AElem::unit(a.space());
  const AElem sum = U_p_map(p).apply(a) + U_p_map(one - p).apply(a);
  return order_unit_norm(sum - a) <= a.space()->tol().eq_tol * (1.0 + order_unit_norm(a));
}

Peirce peirce_decompose(const AElem& a, const AElem& p) {
  require_projection(p);
  require_same_space(*a.space(), *p.space());
  const AElem one = AElem::unit(a.space());
  AElem a1 = U_p_map(p).apply(a);
  AElem a3 = U_p_map(one - p).apply(a);
  AElem a2 = a - a1 - a3;
  const double r = std::max({order_unit_norm(jordan_product(p, a1) - a1),
                             order_unit_norm(jordan_product(p, a2) - 0.5 * a2),
                             order_unit_norm(jordan_product(p, a3))});
  return {std::move(a1), std::move(a2), std::move(a3), r};
}

Proj carrier(const AElem& a) {
  const SymmetricEigen e = eig(a);
  const double norm = e.values.cwiseAbs().maxCoeff();
  const double cut = zero_cut(norm, a.space()->tol());
  if (norm == 0.0) return Proj(AElem::zero(a.space()));
  return Proj(AElem::from_matrix(
      a.space(), spectral_projection(e, [&](double l) { return std::abs(l) > cut; })));
}

bool jb_orthogonal(const AElem& a, const AElem& b) {
  require_jb(a);
  require_same_space(*a.space(), *b.space());
  if (!in_cone(a) || !in_cone(b)) throw Error(ErrorCode::NotPositive, "orthogonality needs a, b >= 0");
  const double na = order_unit_norm(a);
  const double nb = order_unit_norm(b);
  const double scale = 1.0 + na * nb * std::max(na, nb);
  const double eq = a.space()->tol().eq_tol * scale;
  return order_unit_norm(triple_product(a, b, a)) <= eq &&
         order_unit_norm(triple_product(b, a, b)) <= eq;
}

double jordan_identity_residual(const AElem& a, const AElem& b) {
  const AElem a2 = jordan_product(a, a);
  return order_unit_norm(jordan_product(jordan_product(a2, b), a) -
                         jordan_product(a2, jordan_product(b, a)));
}

Report rickart_A1_check(const AElem& x, int trials, std::uint64_t seed) {
  require_jb(x);
  const SpacePtr& s = x.space();
  const Tol& tol = s->tol();
  Report rep;
  rep.suite = "jb";
  rep.environment.tolerances = tol;
  rep.environment.models = {s->describe()};
  CaseResult c;
  c.suite = "jb";
  c.check = "jb.rickart_A1";
  c.model = s->describe();
  c.trials = trials;
  c.seed = seed;
  c.tolerances = tolerance_map(tol);
  if (!in_cone(x)) {
    c.pass = false;
    c.witness = x;
    c.note = "x is not positive";
    rep.add(std::move(c));
    return rep;
  }
  const Proj p = carrier(x).complement();
  const CompMap up = U_p_map(p);
  const Eigen::MatrixXd xm = x.matrix();
  const double nx = order_unit_norm(x);
  Rng rng(seed, 0x726963);
  int annihilating = 0;
  for (int t = 0; t < trials; ++t) {
    AElem g = random_element(s, rng);
    // Half the samples are pushed into U_p(A) so both sides of the
    // equivalence are exercised.
    AElem a = t % 2 == 0 ? up.apply(g) : g;
    const Eigen::MatrixXd am = a.matrix();
    const double na = order_unit_norm(a);
    const double eq = tol.eq_tol * (1.0 + na) * (1.0 + na) * nx;
    const bool kills = spectral_radius(am * xm * am, tol) <= eq;
    const bool fixed = order_unit_norm(up.apply(a) - a) <= tol.eq_tol * (1.0 + na);
    annihilating += kills;
    if (kills != fixed) {
      c.pass = false;
      c.witness = a;
      break;
    }
  }
  c.note = std::to_string(annihilating) + " annihilating samples";
  rep.add(std::move(c));
  return rep;
}

}  // namespace ouspec
