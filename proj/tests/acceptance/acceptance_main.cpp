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

// Acceptance suite: one line per criterion, exit status 0 iff all pass.
// Every comparison goes against a reference computed here from first
// principles (coordinate formulas, Eigen's eigensolver, closed-form norms).

#include <Eigen/Eigenvalues>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ouspec/censym_model.hpp"
#include "ouspec/cli.hpp"
#include "ouspec/errors.hpp"
#include "ouspec/fn_model.hpp"
#include "ouspec/harness.hpp"
#include "ouspec/jb_model.hpp"
#include "ouspec/json_io.hpp"
#include "ouspec/order_unit.hpp"
#include "ouspec/random.hpp"
#include "ouspec/spectral.hpp"

using namespace ouspec;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

double maxabs(const Eigen::MatrixXd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

// ----------------------------------------------------------------- oracles

Eigen::VectorXd mask(const Eigen::VectorXd& v, const std::function<bool(double)>& f) {
  Eigen::VectorXd m(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) m[i] = f(v[i]) ? 1.0 : 0.0;
  return m;
}

Eigen::MatrixXd eigen_cumulative(const Eigen::MatrixXd& a, double lambda) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    if (es.eigenvalues()[i] <= lambda) p += es.eigenvectors().col(i) * es.eigenvectors().col(i).transpose();
  return p;
}

double eigen_spectral_norm(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (m + m.transpose()), Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

double eigen_min_eig(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (m + m.transpose()), Eigen::EigenvaluesOnly);
  return es.eigenvalues()[0];
}

// Range projection of a PSD matrix.
Eigen::MatrixXd eigen_range(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  const double cut = 1e-8 * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    if (es.eigenvalues()[i] > cut) p += es.eigenvectors().col(i) * es.eigenvectors().col(i).transpose();
  return p;
}

double lq_norm(const Eigen::VectorXd& y, double q) {
  if (std::isinf(q)) return y.cwiseAbs().maxCoeff();
  double s = 0;
  for (Eigen::Index i = 0; i < y.size(); ++i) s += std::pow(std::abs(y[i]), q);
  return std::pow(s, 1.0 / q);
}

// Element norm in the order unit norm of the model, computed directly.
double oracle_norm(const AElem& a) {
  const SpacePtr& s = a.space();
  switch (s->kind()) {
    case ModelKind::Fn: return a.payload().cwiseAbs().maxCoeff();
    case ModelKind::JB: return eigen_spectral_norm(a.matrix());
    case ModelKind::CenSym: break;
  }
  const NormFamily& f = s->family();
  const double q = f.kind() == NormFamily::Kind::Lp ? f.q() : 0.0;
  const Eigen::VectorXd w = a.functional();
  const double dn = f.kind() == NormFamily::Kind::Lp ? lq_norm(w, q)
                                                     : f.s() * std::abs(w[0]) + f.r() * w.norm();
  return std::abs(a.scalar()) + dn;
}

AElem sample(const SpacePtr& s, Rng& rng, int t) {
  const int n = s->n();
  const double levels[] = {-1.0, 0.0, 0.0, 0.5, 1.0};
  switch (s->kind()) {
    case ModelKind::Fn: {
      if (t % 4 == 3) return random_effect(s, rng);
      Eigen::VectorXd v(n);
      for (int i = 0; i < n; ++i) v[i] = (t % 2 == 1 && rng.coin()) ? levels[rng.index(5)] : rng.normal();
      return AElem(s, v);
    }
    case ModelKind::JB: {
      if (t % 2 == 0) return random_element(s, rng);
      const Eigen::MatrixXd q = rng.orthonormal(n);
      Eigen::VectorXd d(n);
      for (int i = 0; i < n; ++i) d[i] = rng.coin() ? levels[rng.index(5)] : rng.normal();
      Eigen::MatrixXd m = q * d.asDiagonal() * q.transpose();
      return AElem::from_matrix(s, 0.5 * (m + m.transpose()));
    }
    case ModelKind::CenSym: break;
  }
  const Eigen::VectorXd w = rng.normal_vector(n);
  const double nw = dual_norm(s->family(), w);
  switch (t % 4) {
    case 1: return AElem::from_pair(s, nw, w);
    case 2: return AElem::from_pair(s, -nw, w);
    default: return random_element(s, rng);
  }
}

// ---------------------------------------------------------------- criteria

Outcome criterion1() {
  Outcome o;
  double worst = 0.0;
  int count = 0;
  for (int n = 1; n <= 6; ++n) {
    const FnModel m = build_fn(n);
    Rng rng(1001, n);
    for (int t = 0; t < 1000; ++t) {
      const AElem a = sample(m.space, rng, t);
      const Eigen::VectorXd v = a.payload();
      // grid: between and around the distinct values, plus random points
      std::vector<double> vals(v.data(), v.data() + n);
      std::sort(vals.begin(), vals.end());
      std::vector<double> grid{vals.front() - 1.0};
      for (int i = 1; i < n; ++i)
        if (vals[i] - vals[i - 1] > 1e-6) grid.push_back(0.5 * (vals[i] + vals[i - 1]));
      grid.push_back(vals.back() + 1.0);
      std::sort(grid.begin(), grid.end());
      const SpectralData got = spectral_resolution(a, *m.base, grid);
      const SpectralData lib_oracle = oracle_spectral(a, grid);
      auto gap = [](const AElem& x, const Eigen::VectorXd& y) { return maxabs(x.payload() - y); };
      double g = 0.0;
      g = std::max(g, gap(got.p_plus, mask(v, [](double x) { return x > 0; })));
      g = std::max(g, gap(got.pos, v.cwiseMax(0.0)));
      g = std::max(g, gap(got.neg, (-v).cwiseMax(0.0)));
      g = std::max(g, gap(got.abs, v.cwiseAbs()));
      g = std::max(g, gap(*got.cover, mask(v, [](double x) { return x != 0; })));
      g = std::max(g, gap(got.rickart, mask(v, [](double x) { return x == 0; })));
      if (is_effect(a)) g = std::max(g, gap(projection_cover(a, *m.base), mask(v, [](double x) { return x != 0; })));
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const double l = grid[i];
        g = std::max(g, gap(got.resolution[i].p, mask(v, [l](double x) { return x <= l; })));
        g = std::max(g, gap(got.resolution[i].p, lib_oracle.resolution[i].p.elem().payload()));
      }
      g = std::max({g, gap(got.p_plus, lib_oracle.p_plus.elem().payload()),
                    gap(got.rickart, lib_oracle.rickart.elem().payload())});
      g = std::max(g, std::abs(got.lower - vals.front()) + std::abs(got.upper - vals.back()));
      worst = std::max(worst, g);
      ++count;
      if (g > 1e-12) o.fail("n=" + std::to_string(n) + " deviation " + fmt(g));
    }
  }
  if (o.pass) o.detail = std::to_string(count) + " elements, n=1..6, max deviation " + fmt(worst);
  return o;
}

Outcome criterion2() {
  Outcome o;
  double worst = 0.0;
  int runs = 0;
  auto run = [&](const SpacePtr& s, const CompressionBase& b, Rng& rng, int t) {
    const AElem a = sample(s, rng, t);
    for (double mesh : {0.1, 0.01, 0.001}) {
      const Reconstruction r = riemann_reconstruct(a, b, mesh);
      const double err = oracle_norm(a - r.approx);
      worst = std::max(worst, err / mesh);
      ++runs;
      if (err > mesh) o.fail(s->describe() + " mesh " + fmt(mesh) + " error " + fmt(err));
      if (std::abs(err - r.error) > 1e-9 * (1 + err)) o.fail("reported error disagrees with the oracle norm");
    }
  };
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + t % 8;
    const auto s = ModelSpace::jb(n);
    JBBase b(s);
    Rng rng(2002, t);
    run(s, b, rng, t);
  }
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + t % 12;
    const FnModel m = build_fn(n);
    Rng rng(2003, t);
    run(m.space, *m.base, rng, t);
  }
  if (o.pass) o.detail = std::to_string(runs) + " reconstructions, worst error/mesh " + fmt(worst);
  return o;
}

Outcome criterion3() {
  Outcome o;
  double worst = 0.0;
  for (int t = 0; t < 500; ++t) {
    const int n = 1 + t % 8;
    const auto s = ModelSpace::jb(n);
    JBBase b(s);
    Rng rng(3003, t);
    const AElem a = sample(s, rng, t);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a.matrix(), Eigen::EigenvaluesOnly);
    std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + n);
    std::vector<double> grid{ev.front() - 0.5};
    for (int i = 1; i < n; ++i)
      if (ev[i] - ev[i - 1] > 1e-6) grid.push_back(0.5 * (ev[i] + ev[i - 1]));
    for (int k = 0; k < 4; ++k) {
      const double l = rng.uniform(ev.front() - 0.5, ev.back() + 0.5);
      bool clear = true;
      for (double e : ev) clear = clear && std::abs(e - l) > 1e-6;
      if (clear) grid.push_back(l);
    }
    grid.push_back(ev.back() + 0.5);
    std::sort(grid.begin(), grid.end());
    const SpectralData d = spectral_resolution(a, b, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double g = maxabs(d.resolution[i].p.elem().matrix() - eigen_cumulative(a.matrix(), grid[i]));
      worst = std::max(worst, g);
      if (g > 1e-8) o.fail("n=" + std::to_string(n) + " deviation " + fmt(g));
    }
  }
  if (o.pass) o.detail = "500 elements, n=1..8, max deviation " + fmt(worst);
  return o;
}

Outcome criterion4() {
  Outcome o;
  double worst = 0.0;
  int pairs = 0;
  // (a) join independent of lambda, checked at 1/4, 1/2, 3/4 against a direct join
  auto join_checks = [&](const SpacePtr& s, const CompressionBase& b, int count, std::uint64_t seed) {
    Rng rng(seed);
    for (int t = 0; t < count; ++t) {
      const Proj p = random_projection(s, rng), q = random_projection(s, rng);
      const JoinResult j = oml_join(p, q, b);
      double r = j.residual;
      for (double l : {0.25, 0.5, 0.75}) r = std::max(r, oracle_norm(b.cover(l * p.elem() + (1 - l) * q.elem()).elem() - j.join.elem()));
      Eigen::VectorXd direct;
      if (s->kind() == ModelKind::Fn) {
        direct = p.elem().payload().cwiseMax(q.elem().payload());
      } else if (s->kind() == ModelKind::JB) {
        direct = AElem::from_matrix(s, eigen_range(p.elem().matrix() + q.elem().matrix())).payload();
      } else {
        const bool same = maxabs(p.elem().payload() - q.elem().payload()) < 1e-9;
        const bool p0 = maxabs(p.elem().payload()) < 1e-12, q0 = maxabs(q.elem().payload()) < 1e-12;
        direct = (same || q0) ? p.elem().payload() : p0 ? q.elem().payload() : AElem::unit(s).payload();
      }
      r = std::max(r, maxabs(j.join.elem().payload() - direct) * (s->kind() == ModelKind::CenSym ? 1.0 : 1e-1));
      worst = std::max(worst, r);
      ++pairs;
      if (r > 1e-9) o.fail(s->describe() + " join residual " + fmt(r));
    }
  };
  join_checks(ModelSpace::fn(5), FnBase(ModelSpace::fn(5)), 100, 41);
  for (int n : {2, 3, 4, 6}) {
    const auto s = ModelSpace::jb(n);
    join_checks(s, JBBase(s), 75, 42 + n);
  }
  for (const char* fam : {"lp:2", "stadium:1,1"}) {
    const auto s = ModelSpace::censym(parse_family(fam, 2));
    join_checks(s, CenSymBase(s), 50, 47);
  }
  // (b) orthomodular law, exhaustive on Fn n <= 4, commuting pairs on JB
  int oml = 0;
  auto law = [&](const CompressionBase& b, const AElem& p, const AElem& q) {
    const AElem one = AElem::unit(b.space());
    const Proj m = oml_meet(q, one - p, b);
    const Proj j = oml_join(p, m, b).join;
    ++oml;
    const double g = maxabs(j.elem().payload() - q.payload());
    if (g > 1e-9) o.fail(b.describe() + " orthomodular law off by " + fmt(g));
  };
  for (int n = 1; n <= 4; ++n) {
    const auto s = ModelSpace::fn(n);
    FnBase b(s);
    for (int pm = 0; pm < (1 << n); ++pm)
      for (int qm = 0; qm < (1 << n); ++qm) {
        if ((pm & qm) != pm) continue;
        Eigen::VectorXd p(n), q(n);
        for (int i = 0; i < n; ++i) {
          p[i] = (pm >> i) & 1;
          q[i] = (qm >> i) & 1;
        }
        law(b, AElem(s, p), AElem(s, q));
      }
  }
  for (int n = 1; n <= 6; ++n) {
    const auto s = ModelSpace::jb(n);
    JBBase b(s);
    Rng rng(44, n);
    const Eigen::MatrixXd f = rng.orthonormal(n);
    for (int pm = 0; pm < (1 << n); ++pm)
      for (int qm = 0; qm < (1 << n); ++qm) {
        if ((pm & qm) != pm) continue;
        Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n), q = p;
        for (int i = 0; i < n; ++i) {
          const Eigen::MatrixXd r = f.col(i) * f.col(i).transpose();
          if ((pm >> i) & 1) p += r;
          if ((qm >> i) & 1) q += r;
        }
        law(b, AElem::from_matrix(s, p), AElem::from_matrix(s, q));
      }
  }
  if (o.pass)
    o.detail = std::to_string(pairs) + " join pairs (worst residual " + fmt(worst) + "), " + std::to_string(oml) +
               " orthomodular pairs";
  return o;
}

Outcome criterion5() {
  Outcome o;
  int alternatives = 0, strict = 0, elements = 0;
  auto check = [&](const AElem& a, const CompressionBase& b, const std::vector<AElem>& cands) {
    const Decomposition d = orthogonal_decomposition(a, b);
    const double eq = 1e-9 * (1.0 + oracle_norm(a));
    ++elements;
    for (const AElem& q : cands) {
      if (!b.contains(q) || !in_C(a, q, b)) continue;
      const AElem pos = b.compression(q).apply(a);
      const AElem neg = -b.compression(AElem::unit(a.space()) - q).apply(a);
      if (!in_cone(pos) || !in_cone(neg)) continue;
      ++alternatives;
      if (maxabs(q.payload() - d.p.elem().payload()) > 1e-6) ++strict;
      if (oracle_norm(pos - d.pos) > eq || oracle_norm(neg - d.neg) > eq)
        o.fail(a.space()->describe() + ": alternative gives another decomposition");
      if (!leq(d.p, q)) o.fail(a.space()->describe() + ": p_pm not least");
    }
  };
  // Fn: every q with {a>0} <= q <= {a>=0}
  {
    const FnModel m = build_fn(6);
    Rng rng(5001);
    for (int t = 0; t < 500; ++t) {
      const AElem a = sample(m.space, rng, 2 * t + 1);
      const Eigen::VectorXd v = a.payload();
      std::vector<int> zeros;
      for (int i = 0; i < 6; ++i)
        if (v[i] == 0.0) zeros.push_back(i);
      std::vector<AElem> cands;
      for (int sel = 0; sel < (1 << zeros.size()); ++sel) {
        Eigen::VectorXd q = mask(v, [](double x) { return x > 0; });
        for (std::size_t k = 0; k < zeros.size(); ++k)
          if ((sel >> k) & 1) q[zeros[k]] = 1.0;
        cands.emplace_back(m.space, q);
      }
      check(a, *m.base, cands);
    }
  }
  // JB: positive eigenspace plus subspaces of the kernel
  for (int t = 0; t < 500; ++t) {
    const int n = 2 + t % 5;
    const auto s = ModelSpace::jb(n);
    JBBase b(s);
    Rng rng(5002, t);
    const AElem a = sample(s, rng, 2 * t + 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a.matrix());
    Eigen::MatrixXd pos = Eigen::MatrixXd::Zero(n, n);
    std::vector<Eigen::VectorXd> ker;
    for (int i = 0; i < n; ++i) {
      const Eigen::VectorXd v = es.eigenvectors().col(i);
      if (es.eigenvalues()[i] > 1e-8) pos += v * v.transpose();
      else if (es.eigenvalues()[i] >= -1e-8) ker.push_back(v);
    }
    std::vector<AElem> cands{AElem::from_matrix(s, pos)};
    if (!ker.empty()) {
      Eigen::MatrixXd kb(n, ker.size());
      for (std::size_t i = 0; i < ker.size(); ++i) kb.col(i) = ker[i];
      for (int k = 0; k < 4; ++k) {
        // random subspace of the kernel
        const Eigen::MatrixXd r = rng.orthonormal(static_cast<int>(ker.size()));
        const int dim = rng.index(static_cast<int>(ker.size()) + 1);
        Eigen::MatrixXd sub = kb * r.leftCols(dim);
        cands.push_back(AElem::from_matrix(s, pos + sub * sub.transpose()));
      }
    }
    check(a, b, cands);
  }
  // CenSym, smooth families: 0, 1 and the atom along w
  for (const char* fam : {"lp:2", "lp:3", "stadium:1,1"}) {
    const auto s = ModelSpace::censym(parse_family(fam, 2));
    CenSymBase b(s);
    Rng rng(5003);
    for (int t = 0; t < 500; ++t) {
      const AElem a = sample(s, rng, t);
      std::vector<AElem> cands{AElem::zero(s), AElem::unit(s)};
      if (a.functional().norm() > 0) cands.push_back(b.atom_along(a.functional()).elem());
      check(a, b, cands);
    }
  }
  if (strict == 0) o.fail("no alternative different from p_pm was exercised");
  if (o.pass)
    o.detail = std::to_string(elements) + " elements, " + std::to_string(alternatives) + " alternatives (" +
               std::to_string(strict) + " strictly above p_pm)";
  return o;
}

Outcome criterion6() {
  Outcome o;
  int triples = 0;
  double worst = 0.0;
  auto residuals = [&](const CompressionBase& b, const std::vector<Triple>& ts) {
    for (const auto& [p, q, r] : ts) {
      const AElem pr = p.elem() + r.elem(), qr = q.elem() + r.elem();
      const Eigen::MatrixXd lhs = b.compression(pr).matrix() * b.compression(qr).matrix();
      const double g = maxabs(lhs - b.compression(r).matrix());
      worst = std::max(worst, g);
      ++triples;
      if (g > 1e-9) o.fail(b.describe() + " composition residual " + fmt(g));
    }
  };
  for (int n = 1; n <= 4; ++n) {
    const auto s = ModelSpace::fn(n);
    FnBase b(s);
    const auto ts = b.orthogonal_triples(1 << (2 * n), 1);
    if (static_cast<int>(ts.size()) != (1 << (2 * n))) o.fail("Fn n=" + std::to_string(n) + " triples not exhaustive");
    residuals(b, ts);
    const Report r = validate_base(b, 256, 1);
    if (!r.ok()) o.fail("validate_base failed on " + s->describe());
  }
  for (int n = 2; n <= 6; ++n) {
    const auto s = ModelSpace::jb(n);
    Rng rng(6000 + n);
    JBBase b(s, rng.orthonormal(n));
    residuals(b, b.orthogonal_triples(256, 2));
    const Report r = validate_base(b, 128, 3);
    if (!r.ok()) o.fail("validate_base failed on " + s->describe());
    for (const auto& c : r.cases)
      if (c.check == "base.normality" && c.note.rfind("0 ", 0) == 0) o.fail("no normality spot-check ran");
  }
  if (o.pass) o.detail = std::to_string(triples) + " triples, max residual " + fmt(worst);
  return o;
}

bool oracle_in_cone(const AElem& a, double slack) {
  const NormFamily& f = a.space()->family();
  const Eigen::VectorXd w = a.functional();
  const double dn = f.kind() == NormFamily::Kind::Lp ? lq_norm(w, f.q()) : f.s() * std::abs(w[0]) + f.r() * w.norm();
  return a.scalar() >= dn - slack;
}

Outcome pipeline(const SpacePtr& s, const CompressionBase& b, int count, std::uint64_t seed) {
  Outcome o;
  Rng rng(seed);
  for (int t = 0; t < count; ++t) {
    const AElem a = sample(s, rng, t);
    const auto [lo, hi] = b.bounds(a);
    std::vector<double> grid;
    for (int k = 0; k <= 6; ++k) grid.push_back(lo - 0.2 + (hi - lo + 0.4) * (k + 0.37) / 7);
    const SpectralData d = spectral_resolution(a, b, grid);
    const auto bad = verify_spectral_data(d, b);
    if (!bad.empty()) o.fail(s->describe() + ": " + bad.front());
    if (!oracle_in_cone(d.pos, 1e-9) || !oracle_in_cone(d.neg, 1e-9)) o.fail(s->describe() + ": parts not positive");
    const Reconstruction r = riemann_reconstruct(a, b, 0.01);
    if (oracle_norm(a - r.approx) > 0.01) o.fail(s->describe() + ": Riemann bound");
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  int foci = 0, elements = 0;
  // (a) lp with 1 < p < inf
  for (double p : {1.5, 2.0, 3.0})
    for (int n : {2, 3}) {
      const auto s = ModelSpace::censym(NormFamily::lp(p, n));
      const SpectralBase sb = build_spectral_base(s);
      if (!sb.available()) {
        o.fail(s->describe() + " has no spectral base");
        continue;
      }
      const double q = p / (p - 1);
      Rng rng(7001, static_cast<std::uint64_t>(10 * p) + n);
      for (int t = 0; t < 200; ++t) {
        Eigen::VectorXd y = rng.normal_vector(n);
        y *= 0.5 / lq_norm(y, q);
        const AElem focus = AElem::from_pair(s, 0.5, y);
        const FocusClassification fc = classify_focus(focus);
        ++foci;
        if (fc.kind != FocusKind::Compression) o.fail(s->describe() + " focus classified " + std::string(to_string(fc.kind)));
        // Hoelder: the unique norming point of y
        Eigen::VectorXd x(n);
        for (int i = 0; i < n; ++i) x[i] = (y[i] > 0 ? 1 : -1) * std::pow(std::abs(y[i]) / 0.5, q - 1);
        if (!fc.dual || maxabs(fc.dual->midpoint() - x) > 1e-6) o.fail(s->describe() + " dual face differs from Hoelder");
      }
      const Outcome pl = pipeline(s, *sb.base, 1000, 7002);
      elements += 1000;
      if (!pl.pass) o.fail(pl.detail);
      // closed-form decomposition on a few elements
      Rng r2(7003);
      for (int t = 0; t < 50; ++t) {
        const AElem a = random_element(s, r2);
        const Eigen::VectorXd w = a.functional();
        const double nw = lq_norm(w, q);
        if (std::abs(a.scalar()) >= nw) continue;
        const Decomposition d = orthogonal_decomposition(a, *sb.base);
        const AElem atom = AElem::from_pair(s, 0.5, w / (2 * nw));
        if (maxabs((d.pos - (a.scalar() + nw) * atom).payload()) > 1e-9) o.fail(s->describe() + " a+ differs from closed form");
      }
    }
  // (b) l1 and l_inf: no spectral base, verified failing focus
  std::string neg;
  for (const char* fam : {"lp:1", "lp:inf"}) {
    const auto s = ModelSpace::censym(parse_family(fam, 2));
    const SpectralBase sb = build_spectral_base(s);
    if (sb.available() || !sb.certificate || !sb.certificate->verified) {
      o.fail(std::string(fam) + ": expected Unavailable with a verified certificate");
      continue;
    }
    const FailingFocus& ff = *sb.certificate;
    const AElem one = AElem::unit(s);
    const CompMap j = CompMap::cs_rank1(ff.focus, ff.x);
    if (!ff.check.f3_witness) {
      o.fail(std::string(fam) + ": certificate has no F3 witness");
      continue;
    }
    const AElem e = *ff.check.f3_witness;
    // oracle: e is an effect with J(e) = 0 but e is not below 1 - J(1)
    const bool effect = oracle_in_cone(e, 1e-9) && oracle_in_cone(one - e, 1e-9);
    const bool killed = maxabs(j.apply(e).payload()) <= 1e-9;
    const bool below = oracle_in_cone(one - j.focus() - e, 1e-6);
    if (!effect || !killed || below) o.fail(std::string(fam) + ": F3 witness does not verify");
    neg += std::string(neg.empty() ? "" : ", ") + fam + " unavailable";
  }
  // (c) stadium(1,1)
  {
    const auto s = ModelSpace::censym(NormFamily::stadium(1.0, 1.0));
    const SpectralBase sb = build_spectral_base(s);
    if (!sb.available()) o.fail("stadium has no spectral base");
    else {
      const Outcome pl = pipeline(s, *sb.base, 1000, 7004);
      elements += 1000;
      if (!pl.pass) o.fail(pl.detail);
    }
    const AElem focus = AElem::from_pair(s, 0.5, Eigen::Vector2d(0.0, 0.5));
    // two points of the flat top of the stadium ball, both norming (0, 1/2)
    const Eigen::Vector2d x1(0.0, 1.0), x2(0.5, 1.0);
    for (const auto& x : {x1, x2})
      if (std::abs(primal_norm(s->family(), x) - 1.0) > 1e-12) o.fail("stadium: chosen point off the unit sphere");
    const CompMap j1 = build_retraction(focus, x1), j2 = build_retraction(focus, x2);
    const double dist = maxabs(j1.matrix() - j2.matrix());
    const bool f1 = check_F_axioms(j1, 64, 1).f_compression, f2 = check_F_axioms(j2, 64, 2).f_compression;
    const bool c1 = is_compression(j1), c2 = is_compression(j2);
    if (dist < 0.1 || !f1 || !f2 || c1 || c2) o.fail("stadium: two-compression witness fails");
    const DualityDecision dd = decide_spectral_duality(s);
    if (dd.holds || !dd.witness || dd.witness->distance < 0.1 || !dd.witness->both_f_compressions ||
        dd.witness->either_compression)
      o.fail("stadium: decide_spectral_duality did not separate");
    if (o.pass)
      neg += "; stadium available, focus (1/2,(0,1/2)) has two F-compressions at distance " + fmt(dist) +
             ", neither a compression";
  }
  if (o.pass) o.detail = std::to_string(foci) + " lp foci, " + std::to_string(elements) + " pipeline elements; " + neg;
  return o;
}

Outcome criterion8() {
  Outcome o;
  double jw = 0, pw = 0;
  for (int t = 0; t < 1000; ++t) {
    const int n = 1 + t % 6;
    const auto s = ModelSpace::jb(n);
    JBBase b(s);
    Rng rng(8001, t);
    const AElem a = random_element(s, rng), c = random_element(s, rng);
    const Eigen::MatrixXd A = a.matrix(), C = c.matrix();
    auto jp = [](const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) { Eigen::MatrixXd r = 0.5 * (x * y + y * x); return r; };
    // (a^2 o b) o a = a^2 o (b o a), directly and through the library
    const Eigen::MatrixXd A2 = A * A;
    const double direct = maxabs(jp(jp(A2, C), A) - jp(A2, jp(C, A)));
    const double lib = jordan_identity_residual(a, c);
    const double scale = std::pow(1 + oracle_norm(a), 3) * (1 + oracle_norm(c));
    jw = std::max({jw, direct / scale, lib / scale});
    if (direct / scale > 1e-10 || lib / scale > 1e-10) o.fail("Jordan identity residual " + fmt(lib / scale));
    if (maxabs(jordan_product(a, c).matrix() - jp(A, C)) > 1e-12 * scale) o.fail("Jordan product differs");
    // Peirce
    const Proj p = random_projection(s, rng);
    const Eigen::MatrixXd P = p.elem().matrix(), Q = Eigen::MatrixXd::Identity(n, n) - P;
    const Peirce pd = peirce_decompose(a, p);
    const Eigen::MatrixXd a1 = P * A * P, a3 = Q * A * Q, a2 = A - a1 - a3;
    const double pr = std::max({maxabs(pd.a1.matrix() - a1), maxabs(pd.a2.matrix() - a2), maxabs(pd.a3.matrix() - a3),
                                maxabs(jp(P, a2) - 0.5 * a2), maxabs(jp(P, a1) - a1), maxabs(jp(P, a3))});
    pw = std::max(pw, pr);
    if (pr > 1e-9 * (1 + oracle_norm(a))) o.fail("Peirce residual " + fmt(pr));
    // a+ and a- orthogonal: a+ a- = 0
    const Decomposition d = orthogonal_decomposition(a, b);
    if (maxabs(d.pos.matrix() * d.neg.matrix()) > 1e-9 * (1 + oracle_norm(a)) * (1 + oracle_norm(a)) || !jb_orthogonal(d.pos, d.neg))
      o.fail("a+ and a- not orthogonal");
    if (eigen_min_eig(d.pos.matrix()) < -1e-9 || eigen_min_eig(d.neg.matrix()) < -1e-9) o.fail("parts not positive");
    // Rickart A1
    AElem x = random_positive(s, rng);
    if (t % 2) x = U_p_map(random_projection(s, rng)).apply(x);
    const Report rr = rickart_A1_check(x, 8, t);
    if (!rr.ok()) o.fail("rickart_A1_check: " + rr.cases.front().note);
  }
  if (o.pass) o.detail = "1000 trials n=1..6, Jordan residual " + fmt(jw) + ", Peirce residual " + fmt(pw);
  return o;
}

Outcome criterion9() {
  Outcome o;
  int compared = 0;
  struct Cfg {
    std::string suite;
    SpacePtr space;
  };
  const std::vector<Cfg> cfgs{{"fn-oracle", ModelSpace::fn(5)},
                              {"spectral", ModelSpace::jb(3)},
                              {"compressions", ModelSpace::jb(3)},
                              {"censym", ModelSpace::censym(NormFamily::lp(1.0, 2))},
                              {"censym", ModelSpace::censym(NormFamily::stadium(1.0, 1.0))},
                              {"core", ModelSpace::censym(NormFamily::lp(2.0, 3))}};
  for (const auto& c : cfgs) {
    const std::string r1 = dump(report_to_json(run_suite(c.suite, c.space, 60, 9, 1)));
    const std::string r2 = dump(report_to_json(run_suite(c.suite, c.space, 60, 9, 1)));
    const std::string r3 = dump(report_to_json(run_suite(c.suite, c.space, 60, 9, 4)));
    compared += 3;
    if (r1 != r2 || r1 != r3) o.fail(c.suite + " on " + c.space->describe() + " is not reproducible");
  }
  std::ostringstream a, b, e1, e2;
  run_cli({"check", "--model", "fn", "--dim", "4", "--trials", "80", "--threads", "1"}, a, e1);
  run_cli({"check", "--model", "fn", "--dim", "4", "--trials", "80", "--threads", "3"}, b, e2);
  ++compared;
  if (a.str() != b.str() || a.str().empty()) o.fail("CLI check output differs between runs");
  if (o.pass) o.detail = std::to_string(compared) + " repeated runs byte-identical";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"oracle equivalence (fn)", criterion1},
      {"Riemann bound", criterion2},
      {"eigen cross-check (jb)", criterion3},
      {"OML structure", criterion4},
      {"uniqueness and leastness", criterion5},
      {"compression-base axioms", criterion6},
      {"centrally symmetric dichotomy", criterion7},
      {"JB-algebra laws", criterion8},
      {"determinism", criterion9}};
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::printf("criterion %zu %s: %s (%s) [%.1fs]\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
