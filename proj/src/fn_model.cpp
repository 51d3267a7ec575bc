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

#include "ouspec/fn_model.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "ouspec/errors.hpp"
#include "ouspec/order_unit.hpp"
#include "ouspec/random.hpp"

namespace ouspec {

namespace {

constexpr int kSampledMasks = 4096;

std::uint64_t pow4(int n) { return std::uint64_t{1} << (2 * n); }

// Groups of indices whose values agree up to `gap`, in ascending value order.
std::vector<std::vector<int>> level_sets(const Eigen::VectorXd& v, double gap) {
  std::vector<int> order(static_cast<std::size_t>(v.size()));
  for (int i = 0; i < v.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return v(a) < v(b); });
  std::vector<std::vector<int>> groups;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k == 0 || v(order[k]) - v(order[k - 1]) > gap) groups.emplace_back();
    groups.back().push_back(order[k]);
  }
  return groups;
}

}  // namespace

FnBase::FnBase(SpacePtr space, std::uint64_t sample_seed)
    : CompressionBase(std::move(space)), exhaustive_(this->space()->n() <= kFnExhaustivePoints) {
  if (this->space()->kind() != ModelKind::Fn) {
    throw Error(ErrorCode::ShapeMismatch, "function base needs a function space");
  }
  if (exhaustive_) return;
  const int n = this->space()->n();
  Rng rng(sample_seed, 0x6d61736b);
  std::set<std::vector<int>> seen;
  auto push = [&](std::vector<int> bits) {
    if (!seen.insert(bits).second) return;
    sampled_.push_back(mask(bits));
  };
  push(std::vector<int>(n, 0));
  push(std::vector<int>(n, 1));
  while (static_cast<int>(sampled_.size()) < kSampledMasks) {
    std::vector<int> bits(n);
    for (int& b : bits) b = rng.coin();
    std::vector<int> comp(n);
    for (int i = 0; i < n; ++i) comp[i] = 1 - bits[i];
    push(bits);
    push(comp);
  }
}

Proj FnBase::mask(const std::vector<int>& bits) const {
  Eigen::VectorXd v(static_cast<Eigen::Index>(bits.size()));
  for (std::size_t i = 0; i < bits.size(); ++i) v(i) = bits[i];
  return Proj(AElem(space(), v));
}

Proj FnBase::mask_of_index(std::uint64_t bits) const {
  const int n = space()->n();
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = static_cast<double>((bits >> i) & 1U);
  return Proj(AElem(space(), v));
}

std::string FnBase::describe() const { return space()->describe(); }

bool FnBase::contains(const AElem& p) const {
  if (!p.space()->same_as(*space())) return false;
  const double eq = space()->tol().eq_tol;
  for (Eigen::Index i = 0; i < p.payload().size(); ++i) {
    const double v = p.payload()(i);
    if (std::abs(v) > eq && std::abs(v - 1.0) > eq) return false;
  }
  return true;
}

CompMap FnBase::make_compression(const Proj& p) const {
  Eigen::VectorXd m = p.elem().payload();
  for (Eigen::Index i = 0; i < m.size(); ++i) m(i) = m(i) > 0.5 ? 1.0 : 0.0;
  return CompMap::fn_mult(space(), m);
}

ProjectionSet FnBase::projections(int, std::uint64_t) const {
  ProjectionSet out;
  if (!exhaustive_) {
    out.members = sampled_;
    out.exhaustive = false;
    out.description = "sampled masks";
    return out;
  }
  const std::uint64_t count = std::uint64_t{1} << space()->n();
  out.members.reserve(count);
  for (std::uint64_t m = 0; m < count; ++m) out.members.push_back(mask_of_index(m));
  out.description = "all masks";
  return out;
}

std::vector<Triple> FnBase::orthogonal_triples(int count, std::uint64_t seed) const {
  const int n = space()->n();
  std::vector<Triple> out;
  auto build = [&](const std::vector<int>& label) {
    std::vector<int> p(n), q(n), r(n);
    for (int i = 0; i < n; ++i) {
      p[i] = label[i] == 1;
      q[i] = label[i] == 2;
      r[i] = label[i] == 3;
    }
    out.push_back(Triple{mask(p), mask(q), mask(r)});
  };
  if (n <= 12 && pow4(n) <= std::max<std::uint64_t>(count, 256)) {
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

std::vector<std::pair<Proj, Proj>> FnBase::normality_pairs(int count, std::uint64_t seed) const {
  const int n = space()->n();
  std::vector<std::pair<Proj, Proj>> out;
  if (n <= 12 && pow4(n) <= std::max<std::uint64_t>(count, 256)) {
    const std::uint64_t m = std::uint64_t{1} << n;
    for (std::uint64_t u = 0; u < m; ++u)
      for (std::uint64_t v = 0; v < m; ++v) out.emplace_back(mask_of_index(u), mask_of_index(v));
    return out;
  }
  Rng rng(seed, 0x6e6f72);
  for (int t = 0; t < count; ++t) {
    std::vector<int> a(n), b(n);
    for (int i = 0; i < n; ++i) {
      a[i] = rng.coin();
      b[i] = rng.coin();
    }
    out.emplace_back(mask(a), mask(b));
  }
  return out;
}

Proj FnBase::make_comparability_projection(const AElem& a) const {
  const double eq = space()->tol().eq_tol;
  Eigen::VectorXd m(a.payload().size());
  for (Eigen::Index i = 0; i < m.size(); ++i) m(i) = a.payload()(i) > eq ? 1.0 : 0.0;
  return Proj(AElem(space(), m));
}

Proj FnBase::cover(const AElem& e) const {
  const double eq = space()->tol().eq_tol;
  Eigen::VectorXd m(e.payload().size());
  for (Eigen::Index i = 0; i < m.size(); ++i) m(i) = e.payload()(i) > eq ? 1.0 : 0.0;
  return Proj(AElem(space(), m));
}

std::pair<double, double> FnBase::bounds(const AElem& a) const {
  return {a.payload().minCoeff(), a.payload().maxCoeff()};
}

ProjectionSet FnBase::pc_set(const AElem&) const {
  ProjectionSet s = projections(0, 0);
  s.description = exhaustive_ ? "every mask commutes" : "sampled masks (every mask commutes)";
  return s;
}

ProjectionSet FnBase::bicommutant(const AElem& a) const {
  const double gap = space()->tol().eq_tol * (1.0 + order_unit_norm(a));
  const auto groups = level_sets(a.payload(), gap);
  const int k = static_cast<int>(groups.size());
  if (k > 16) {
    throw Error(ErrorCode::NotEnumerable, std::to_string(k) + " distinct level sets");
  }
  ProjectionSet out;
  out.description = "Boolean algebra of " + std::to_string(k) + " level sets";
  const int n = space()->n();
  for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << k); ++sel) {
    std::vector<int> bits(n, 0);
    for (int g = 0; g < k; ++g)
      if ((sel >> g) & 1U)
        for (int i : groups[g]) bits[i] = 1;
    out.members.push_back(mask(bits));
  }
  return out;
}

CBlock FnBase::c_block(const AElem&) const {
  CBlock b;
  b.block = projections(0, 0);
  b.block.description = "the whole space is one block";
  const int n = space()->n();
  for (int i = 0; i < n; ++i) b.basis.emplace_back(space(), Eigen::VectorXd::Unit(n, i));
  return b;
}

FnModel build_fn(int n, Tol tol) {
  if (n < 1 || n > kFnMaxPoints) {
    throw Error(ErrorCode::SizeLimit,
                "function model supports 1 <= n <= " + std::to_string(kFnMaxPoints));
  }
  FnModel m;
  m.n = n;
  m.space = ModelSpace::fn(n, tol);
  m.base = std::make_shared<FnBase>(m.space);
  m.exhaustive = m.base->exhaustive();
  return m;
}

SpectralData oracle_spectral(const AElem& f, const std::vector<double>& grid) {
  const SpacePtr& s = f.space();
  if (s->kind() != ModelKind::Fn) {
    throw Error(ErrorCode::ShapeMismatch, "oracle needs a function-space element");
  }
  const Eigen::VectorXd& v = f.payload();
  const Eigen::Index n = v.size();
  auto indicator = [&](auto pred) {
    Eigen::VectorXd m(n);
    for (Eigen::Index i = 0; i < n; ++i) m(i) = pred(v(i)) ? 1.0 : 0.0;
    return Proj(AElem(s, m));
  };
  const AElem pos(s, v.cwiseMax(0.0));
  const AElem neg(s, (-v).cwiseMax(0.0));
  const AElem abs(s, v.cwiseAbs());
  std::optional<Proj> cover = indicator([](double x) { return x != 0.0; });
  std::vector<ResolutionPoint> res;
  for (double l : grid) res.push_back({l, indicator([l](double x) { return x <= l; })});
  return SpectralData{f,
                      indicator([](double x) { return x > 0.0; }),
                      pos,
                      neg,
                      abs,
                      cover,
                      indicator([](double x) { return x == 0.0; }),
                      std::move(res),
                      v.minCoeff(),
                      v.maxCoeff()};
}

MackeyWitness fn_mackey_witness(const AElem& e, const AElem& g) {
  require_same_space(*e.space(), *g.space());
  const SpacePtr& s = e.space();
  const Eigen::VectorXd c = (e.payload() + g.payload()).array() - 1.0;
  AElem cc(s, c.cwiseMax(0.0));
  AElem a1 = e - cc;
  AElem b1 = g - cc;
  const bool valid = in_cone(cc) && in_cone(a1) && in_cone(b1) && leq(cc + a1 + b1, AElem::unit(s));
  return {std::move(cc), std::move(a1), std::move(b1), valid};
}

}  // namespace ouspec
