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

#include "doctest.h"
#include "ouspec/censym_model.hpp"
#include "ouspec/compression.hpp"
#include "ouspec/compression_base.hpp"
#include "ouspec/errors.hpp"
#include "ouspec/fn_model.hpp"
#include "ouspec/jb_model.hpp"
#include "ouspec/random.hpp"

using namespace ouspec;

TEST_CASE("fn multiplication maps") {
  const auto s = ModelSpace::fn(3);
  const CompMap j = CompMap::fn_mult(s, Eigen::Vector3d(1, 0, 1));
  const AElem a(s, Eigen::Vector3d(2, 5, -1));
  CHECK(j.apply(a).payload() == Eigen::Vector3d(2, 0, -1));
  CHECK(j.complement().apply(a).payload() == Eigen::Vector3d(0, 5, 0));
  const AxiomCheck ax = check_F_axioms(j, 64, 1);
  CHECK(ax.f_compression);
  CHECK(is_compression(j));
  CHECK(are_complementary(j, j.complement()));
}

TEST_CASE("U_p on matrices") {
  const auto s = ModelSpace::jb(3);
  Rng rng(2);
  const Proj p = random_projection(s, rng);
  const CompMap u = U_p_map(p.elem());
  const AElem a = random_element(s, rng);
  const Eigen::MatrixXd P = p.elem().matrix();
  CHECK((u.apply(a).matrix() - P * a.matrix() * P).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(check_F_axioms(u, 64, 3).f_compression);
  CHECK(matrix_distance(u, u) == doctest::Approx(0.0));
}

TEST_CASE("l1 candidate map fails F3 with a witness") {
  const auto s = ModelSpace::censym(NormFamily::lp(1.0, 2));
  const AElem focus = AElem::from_pair(s, 0.5, Eigen::Vector2d(0.5, 0.25));
  const CompMap j = CompMap::cs_rank1(focus, Eigen::Vector2d(1.0, 0.0));
  const AxiomCheck ax = check_F_axioms(j, 128, 1);
  CHECK_FALSE(ax.f_compression);
  CHECK(ax.f3_witness.has_value());
}

TEST_CASE("compression bases validate") {
  const FnModel fm = build_fn(3);
  CHECK(validate_base(*fm.base, 64, 1).ok());
  const auto js = ModelSpace::jb(2);
  CHECK(validate_base(JBBase(js), 64, 1).ok());
  const auto cs = ModelSpace::censym(NormFamily::lp(2.0, 2));
  CHECK(validate_base(CenSymBase(cs), 64, 1).ok());
}

TEST_CASE("unknown projections are rejected") {
  const FnModel fm = build_fn(2);
  const AElem half(fm.space, Eigen::Vector2d(0.5, 1.0));
  CHECK_FALSE(fm.base->contains(half));
  CHECK_THROWS_AS(fm.base->compression(half), Error);
}

TEST_CASE("focus classification") {
  const auto l4 = ModelSpace::censym(NormFamily::lp(4.0, 2));
  CHECK(classify_focus(AElem::from_pair(l4, 0.5, Eigen::Vector2d(0.5, 0.0))).kind == FocusKind::Compression);
  const auto st = ModelSpace::censym(NormFamily::stadium(1.0, 1.0));
  CHECK(classify_focus(AElem::from_pair(st, 0.5, Eigen::Vector2d(0.0, 0.5))).kind == FocusKind::FCompression);
  const auto l2 = ModelSpace::censym(NormFamily::lp(2.0, 2));
  CHECK_THROWS_AS(classify_focus(AElem::from_pair(l2, 0.5, Eigen::Vector2d(0.1, 0.0))), Error);
  const auto li = ModelSpace::censym(NormFamily::lp(INFINITY, 2));
  CHECK(classify_focus(AElem::from_pair(li, 0.5, Eigen::Vector2d(0.25, 0.25))).kind == FocusKind::NotAFocus);
}

TEST_CASE("spectral bases and duality") {
  CHECK(build_spectral_base(ModelSpace::censym(NormFamily::lp(3.0, 3))).available());
  const SpectralBase l1 = build_spectral_base(ModelSpace::censym(NormFamily::lp(1.0, 2)));
  CHECK_FALSE(l1.available());
  REQUIRE(l1.certificate);
  CHECK(l1.certificate->verified);
  const DualityDecision d = decide_spectral_duality(ModelSpace::censym(NormFamily::stadium(1.0, 1.0)));
  CHECK_FALSE(d.holds);
  REQUIRE(d.witness);
  CHECK(d.witness->both_f_compressions);
  CHECK_FALSE(d.witness->either_compression);
  CHECK(decide_spectral_duality(ModelSpace::censym(NormFamily::lp(2.0, 2))).holds);
}
