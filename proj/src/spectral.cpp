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

#include "ouspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "ouspec/errors.hpp"
#include "ouspec/order_unit.hpp"

namespace ouspec {

namespace {

void require_comparability(const CompressionBase& b) {
  if (!b.has_comparability()) {
    throw Error(ErrorCode::ComparabilityUnavailable, b.comparability_certificate());
  }
}

AElem positive_part(const AElem& a, const CompressionBase& b) {
  return b.compression(p_pm(a, b)).apply(a);
}

// sum_i xi_i (P_i - P_{i-1}) over a partition l_0 < ... < l_N of [-|a|, |a|],
// with P_0 = 0 and P_N = 1 and P_i = p_{a, l_i} in between.
AElem riemann_sum(const AElem& a, const CompressionBase& b, const std::vector<double>& lambdas,
                  bool midpoint) {
  const SpacePtr& s = a.space();
  const std::size_t n = lambdas.size() - 1;
  const std::vector<double> interior(lambdas.begin() + 1, lambdas.end() - 1);
  std::vector<ResolutionPoint> res = resolution(a, b, interior);
  AElem approx = AElem::zero(s);
  AElem prev = AElem::zero(s);
  for (std::size_t i = 1; i <= n; ++i) {
    const AElem cur = i == n ? AElem::unit(s) : res[i - 1].p.elem();
    if (!same_projection(cur, prev)) {
      const double xi = midpoint ? 0.5 * (lambdas[i - 1] + lambdas[i]) : lambdas[i - 1];
      approx += xi * (cur - prev);
    }
    prev = cur;
  }
  return approx;
}

std::vector<double> uniform_partition(double half_width, int steps) {
  std::vector<double> l(static_cast<std::size_t>(steps) + 1);
  for (int i = 0; i <= steps; ++i) l[i] = -half_width + 2.0 * half_width * i / steps;
  l.back() = half_width;
  return l;
}

}  // namespace

Proj p_pm(const AElem& a, const CompressionBase& b) { return b.comparability_projection(a); }

Decomposition orthogonal_decomposition(const AElem& a, const CompressionBase& b) {
  Proj p = p_pm(a, b);
  AElem pos = b.compression(p).apply(a);
  AElem neg = -b.compression(p.complement()).apply(a);
  AElem abs = pos + neg;
  return {std::move(p), std::move(pos), std::move(neg), std::move(abs)};
}

Proj projection_cover(const AElem& e, const CompressionBase& b) {
  require_same_space(*b.space(), *e.space());
  if (!is_effect(e)) throw Error(ErrorCode::NotAnEffect, "projection cover needs an effect");
  return b.cover(e);
}

Proj rickart_map(const AElem& a, const CompressionBase& b) {
  const SpacePtr& s = a.space();
  if (a.payload().cwiseAbs().maxCoeff() == 0.0) return Proj(AElem::unit(s));
  const Decomposition d = orthogonal_decomposition(a, b);
  const double n = order_unit_norm(d.abs);
  if (n == 0.0) return Proj(AElem::unit(s));
  return b.cover((1.0 / n) * d.abs).complement();
}

std::vector<ResolutionPoint> resolution(const AElem& a, const CompressionBase& b,
                                        const std::vector<double>& grid) {
  require_comparability(b);
  if (!std::is_sorted(grid.begin(), grid.end())) {
    throw Error(ErrorCode::InvalidDimension, "resolution grid must be ascending");
  }
  const SpacePtr& s = a.space();
  const AElem one = AElem::unit(s);
  std::vector<std::optional<Proj>> ps(grid.size());
  auto at = [&](std::size_t i) -> const Proj& {
    if (!ps[i]) ps[i] = rickart_map(positive_part(a - grid[i] * one, b), b);
    return *ps[i];
  };
  // The resolution is monotone in lambda, so equal endpoints fix everything
  // in between.
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t lo, std::size_t hi) {
    if (hi <= lo + 1) {
      at(lo);
      at(hi);
      return;
    }
    if (same_projection(at(lo), at(hi))) {
      for (std::size_t i = lo + 1; i < hi; ++i) ps[i] = *ps[lo];
      return;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    fill(lo, mid);
    fill(mid, hi);
  };
  if (!grid.empty()) fill(0, grid.size() - 1);
  std::vector<ResolutionPoint> out;
  out.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) out.push_back({grid[i], *ps[i]});
  return out;
}

SpectralData spectral_resolution(const AElem& a, const CompressionBase& b,
                                 const std::vector<double>& grid) {
  require_comparability(b);
  Decomposition d = orthogonal_decomposition(a, b);
  Proj rick = rickart_map(a, b);
  std::optional<Proj> cover = is_effect(a) ? b.cover(a) : rick.complement();
  const auto [lo, hi] = b.bounds(a);
  return SpectralData{a,         std::move(d.p),    std::move(d.pos), std::move(d.neg),
                      std::move(d.abs), std::move(cover), std::move(rick),
                      resolution(a, b, grid), lo, hi};
}

Reconstruction riemann_reconstruct(const AElem& a, const CompressionBase& b, double mesh) {
  require_comparability(b);
  if (!(mesh > 0.0)) throw Error(ErrorCode::InvalidDimension, "mesh must be positive");
  const double na = order_unit_norm(a);
  if (na == 0.0) return {AElem::zero(a.space()), 0.0, 0};
  const int steps = static_cast<int>(std::ceil(2.0 * na / mesh));
  const AElem approx = riemann_sum(a, b, uniform_partition(na, steps), true);
  const double err = order_unit_norm(a - approx);
  return {approx, err, steps};
}

std::vector<AElem> simple_approximation(const AElem& a, const CompressionBase& b, int levels) {
  require_comparability(b);
  if (levels < 1) throw Error(ErrorCode::InvalidDimension, "levels must be at least 1");
  const double na = order_unit_norm(a);
  std::vector<AElem> out;
  for (int k = 1; k <= levels; ++k) {
    if (na == 0.0) {
      out.push_back(AElem::zero(a.space()));
      continue;
    }
    out.push_back(riemann_sum(a, b, uniform_partition(na, 1 << k), false));
  }
  return out;
}

JoinResult oml_join(const AElem& p, const AElem& q, const CompressionBase& b) {
  Proj r = b.cover(0.5 * p + 0.5 * q);
  double residual = 0.0;
  for (double l : {0.25, 0.75}) {
    const Proj rl = b.cover(l * p + (1.0 - l) * q);
    residual = std::max(residual, order_unit_norm(rl.elem() - r.elem()));
  }
  return {std::move(r), residual};
}

Proj oml_meet(const AElem& p, const AElem& q, const CompressionBase& b) {
  const AElem one = AElem::unit(b.space());
  return oml_join(one - p, one - q, b).join.complement();
}

CBlock c_block(const AElem& a, const CompressionBase& b) {
  require_comparability(b);
  return b.c_block(a);
}

std::vector<std::string> verify_spectral_data(const SpectralData& d, const CompressionBase& b) {
  std::vector<std::string> bad;
  const AElem& a = d.a;
  const double na = order_unit_norm(a);
  const double eq = b.space()->tol().eq_tol * (1.0 + na);
  if (order_unit_norm(a - (d.pos - d.neg)) > eq) bad.emplace_back("a != pos - neg");
  if (!in_cone(d.pos)) bad.emplace_back("pos not positive");
  if (!in_cone(d.neg)) bad.emplace_back("neg not positive");
  if (order_unit_norm(d.abs - (d.pos + d.neg)) > eq) bad.emplace_back("abs != pos + neg");
  if (!b.contains(d.p_plus)) {
    bad.emplace_back("p_plus not a projection");
  } else {
    const CompMap j = b.compression(d.p_plus);
    if (order_unit_norm(j.apply(d.pos) - d.pos) > eq) bad.emplace_back("J_p(pos) != pos");
    if (order_unit_norm(j.apply(d.neg)) > eq) bad.emplace_back("J_p(neg) != 0");
  }
  if (!b.contains(d.rickart)) bad.emplace_back("rickart image not a projection");
  if (d.cover) {
    if (!leq(d.abs, na * d.cover->elem())) bad.emplace_back("|a| not below its support");
    if (!same_projection(*d.cover, d.rickart.complement())) bad.emplace_back("cover != 1 - rickart");
  }
  if (d.lower > d.upper) bad.emplace_back("L > U");
  const double margin = 1e-6 * (1.0 + na);
  for (std::size_t i = 0; i < d.resolution.size(); ++i) {
    const auto& r = d.resolution[i];
    if (!b.contains(r.p)) bad.emplace_back("resolution member not a projection");
    if (i > 0 && !leq(d.resolution[i - 1].p, r.p)) bad.emplace_back("resolution not monotone");
    if (r.lambda < d.lower - margin && order_unit_norm(r.p.elem()) > eq) {
      bad.emplace_back("p_{a,lambda} != 0 below L");
    }
    if (r.lambda >= d.upper + margin &&
        order_unit_norm(r.p.elem() - AElem::unit(a.space())) > eq) {
      bad.emplace_back("p_{a,lambda} != 1 above U");
    }
  }
  return bad;
}

}  // namespace ouspec
