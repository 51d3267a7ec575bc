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

#include "ouspec/compression_base.hpp"

#include <cmath>
#include <sstream>

#include "ouspec/errors.hpp"
#include "ouspec/order_unit.hpp"
#include "ouspec/random.hpp"

namespace ouspec {

namespace {

double max_abs(const Eigen::MatrixXd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

CaseResult make_case(const CompressionBase& b, std::string check, int trials,
                     std::uint64_t seed) {
  CaseResult c;
  c.suite = "compressions";
  c.check = std::move(check);
  c.model = b.describe();
  c.trials = trials;
  c.seed = seed;
  c.tolerances = tolerance_map(b.space()->tol());
  return c;
}

Proj meet_of(const AElem& p, const AElem& q, const CompressionBase& b) {
  const AElem one = AElem::unit(b.space());
  const Proj join = b.cover(0.5 * (one - p) + 0.5 * (one - q));
  return join.complement();
}

}  // namespace

CompMap CompressionBase::compression(const AElem& p) const {
  require_same_space(*space_, *p.space());
  if (!contains(p)) {
    throw Error(ErrorCode::UnknownProjection, "focus is not a projection of " + describe());
  }
  return make_compression(Proj(p));
}

Proj CompressionBase::comparability_projection(const AElem& a) const {
  require_same_space(*space_, *a.space());
  if (!has_comparability()) {
    throw Error(ErrorCode::ComparabilityUnavailable, comparability_certificate());
  }
  return make_comparability_projection(a);
}

bool same_projection(const AElem& p, const AElem& q, double tol) {
  require_same_space(*p.space(), *q.space());
  return (p.payload() - q.payload()).cwiseAbs().maxCoeff() <= tol;
}

bool in_C(const AElem& a, const AElem& p, const CompressionBase& b) {
  const CompMap jp = b.compression(p);
  const CompMap jq = b.compression(AElem::unit(b.space()) - p);
  const double na = order_unit_norm(a);
  return order_unit_norm(a - jp.apply(a) - jq.apply(a)) <= b.space()->tol().eq_tol * (1.0 + na);
}

Compatibility projections_compatible(const AElem& p, const AElem& q, const CompressionBase& b) {
  const CompMap jp = b.compression(p);
  const CompMap jq = b.compression(q);
  const double eq = b.space()->tol().eq_tol;
  const Eigen::MatrixXd pq = jp.matrix() * jq.matrix();
  const Eigen::MatrixXd qp = jq.matrix() * jp.matrix();
  if (max_abs(pq - qp) > eq * (1.0 + max_abs(pq))) return {};
  Proj m = meet_of(p, q, b);
  if (!b.contains(m)) return {};
  if (max_abs(b.compression(m).matrix() - pq) > eq * (1.0 + max_abs(pq))) return {};
  return {true, std::move(m)};
}

ProjectionSet PC_set(const AElem& a, const CompressionBase& b) {
  ProjectionSet s = b.pc_set(a);
  for (const Proj& p : s.members) {
    if (!in_C(a, p, b)) {
      throw Error(ErrorCode::NotEnumerable, "generated commutant member is not compatible");
    }
  }
  return s;
}

ProjectionSet P_of(const AElem& a, const CompressionBase& b) { return b.bicommutant(a); }

Report validate_base(const CompressionBase& b, int trials, std::uint64_t seed) {
  const SpacePtr& s = b.space();
  const Tol& tol = s->tol();
  const AElem one = AElem::unit(s);
  const AElem zero = AElem::zero(s);
  Report rep;
  rep.suite = "compressions";
  rep.environment.tolerances = tol;
  rep.environment.models = {b.describe()};

  {
    CaseResult c = make_case(b, "base.zero_and_identity", 2, seed);
    const double d0 = max_abs(b.compression(zero).matrix());
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(s->dim(), s->dim());
    const double d1 = max_abs(b.compression(one).matrix() - id);
    c.pass = d0 <= tol.eq_tol && d1 <= tol.eq_tol;
    rep.add(std::move(c));
  }

  const ProjectionSet ps = b.projections(trials, seed);
  {
    CaseResult c = make_case(b, "base.complement_closed", static_cast<int>(ps.members.size()), seed);
    for (const Proj& p : ps.members) {
      if (!b.contains(one - p)) {
        c.pass = false;
        c.witness = p.elem();
        break;
      }
    }
    c.note = ps.exhaustive ? "exhaustive" : "sampled";
    rep.add(std::move(c));
  }

  {
    const std::vector<Triple> triples = b.orthogonal_triples(trials, seed);
    CaseResult c = make_case(b, "base.composition", static_cast<int>(triples.size()), seed);
    double worst = 0.0;
    for (const Triple& t : triples) {
      const AElem& p = t[0];
      const AElem& q = t[1];
      const AElem& r = t[2];
      const Eigen::MatrixXd lhs =
          b.compression(p + r).matrix() * b.compression(q + r).matrix();
      const double res = max_abs(lhs - b.compression(r).matrix());
      worst = std::max(worst, res);
      if (res > tol.eq_tol && c.pass) {
        c.pass = false;
        c.witness = r;
      }
    }
    std::ostringstream os;
    os << triples.size() << " triples, max residual " << worst;
    c.note = os.str();
    rep.add(std::move(c));
  }

  {
    const auto pairs = b.normality_pairs(trials, seed + 1);
    CaseResult c = make_case(b, "base.normality", static_cast<int>(pairs.size()), seed + 1);
    Rng rng(seed, 0x6e6f72);
    int valid = 0;
    for (const auto& [u, v] : pairs) {
      const Proj w = meet_of(u, v, b);
      std::vector<AElem> cands{w.elem(), 0.5 * w.elem(), zero};
      cands.push_back(random_effect(s, rng));
      for (const AElem& d : cands) {
        if (!is_effect(d) || !in_cone(u.elem() - d) || !in_cone(v.elem() - d)) continue;
        if (!leq(u.elem() + v.elem() - d, one)) continue;
        ++valid;
        if (!b.contains(d) && c.pass) {
          c.pass = false;
          c.witness = d;
        }
      }
    }
    c.note = std::to_string(valid) + " admissible decompositions";
    rep.add(std::move(c));
  }

  {
    const int count = std::min<int>(static_cast<int>(ps.members.size()), 16);
    CaseResult c = make_case(b, "base.members_are_f_compressions", count, seed);
    for (int i = 0; i < count; ++i) {
      const AxiomCheck ax = check_F_axioms(b.compression(ps.members[i]), 16, seed + i);
      if (!ax.f_compression) {
        c.pass = false;
        c.witness = ps.members[i].elem();
        c.note = "fails " + ax.failed;
        break;
      }
    }
    rep.add(std::move(c));
  }
  return rep;
}

}  // namespace ouspec
