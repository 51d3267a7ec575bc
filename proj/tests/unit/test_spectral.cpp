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

#include <cmath>

#include "doctest.h"
#include "ouspec/censym_model.hpp"
#include "ouspec/errors.hpp"
#include "ouspec/fn_model.hpp"
#include "ouspec/jb_model.hpp"
#include "ouspec/order_unit.hpp"
#include "ouspec/random.hpp"
#include "ouspec/spectral.hpp"

using namespace ouspec;

TEST_CASE("fn decomposition of (2, 0, -1)") {
  const FnModel m = build_fn(3);
  const AElem a(m.space, Eigen::Vector3d(2, 0, -1));
  const SpectralData d = spectral_resolution(a, *m.base, {-2.0, -0.5, 0.5, 3.0});
  CHECK(d.p_plus.elem().payload() == Eigen::Vector3d(1, 0, 0));
  CHECK(d.pos.payload() == Eigen::Vector3d(2, 0, 0));
  CHECK(d.neg.payload() == Eigen::Vector3d(0, 0, 1));
  REQUIRE(d.cover);
  CHECK(d.cover->elem().payload() == Eigen::Vector3d(1, 0, 1));
  CHECK(d.rickart.elem().payload() == Eigen::Vector3d(0, 1, 0));
  CHECK(d.lower == -1.0);
  CHECK(d.upper == 2.0);
  CHECK(d.resolution[0].p.elem().payload() == Eigen::Vector3d(0, 0, 0));
  CHECK(d.resolution[1].p.elem().payload() == Eigen::Vector3d(0, 0, 1));
  CHECK(d.resolution[2].p.elem().payload() == Eigen::Vector3d(0, 1, 1));
  CHECK(d.resolution[3].p.elem().payload() == Eigen::Vector3d(1, 1, 1));
  CHECK(verify_spectral_data(d, *m.base).empty());
}

TEST_CASE("jb riemann reconstruction of diag(1, -1)") {
  const auto s = ModelSpace::jb(2);
  JBBase b(s);
  const AElem a = AElem::from_matrix(s, Eigen::Vector2d(1, -1).asDiagonal().toDenseMatrix());
  const Reconstruction r = riemann_reconstruct(a, b, 0.1);
  CHECK(r.error <= 0.1);
  CHECK(r.error == doctest::Approx(0.05));
}

TEST_CASE("simple approximations increase towards a") {
  const FnModel m = build_fn(4);
  Rng rng(12);
  const AElem a = random_element(m.space, rng);
  const auto approx = simple_approximation(a, *m.base, 6);
  REQUIRE(approx.size() == 6);
  for (std::size_t k = 1; k < approx.size(); ++k) CHECK(leq(approx[k - 1], approx[k]));
  CHECK(order_unit_norm(a - approx.back()) <= 2.0 * order_unit_norm(a) / 64 + 1e-12);
}

TEST_CASE("joins and meets in the matrix model") {
  const auto s = ModelSpace::jb(3);
  JBBase b(s);
  const AElem p = AElem::from_matrix(s, Eigen::Vector3d(1, 0, 0).asDiagonal().toDenseMatrix());
  const AElem q = AElem::from_matrix(s, Eigen::Vector3d(0, 1, 0).asDiagonal().toDenseMatrix());
  const JoinResult j = oml_join(p, q, b);
  CHECK(j.residual < 1e-12);
  CHECK((j.join.elem().payload() - (p + q).payload()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(oml_meet(p, q, b).elem().payload().cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("lp elements decompose along the atom") {
  const auto s = ModelSpace::censym(NormFamily::lp(2.0, 2));
  CenSymBase b(s);
  const AElem a = AElem::from_pair(s, 1.0, Eigen::Vector2d(3.0, 4.0));
  const Decomposition d = orthogonal_decomposition(a, b);
  // |y| = 5, so a+ = 6 * (1/2, y/10) and a- = 4 * (1/2, -y/10); |a| = (5, y/5)
  CHECK(d.pos.scalar() == doctest::Approx(3.0));
  CHECK(d.neg.scalar() == doctest::Approx(2.0));
  CHECK(d.pos.functional()[0] == doctest::Approx(1.8));
  CHECK(order_unit_norm(d.abs) == doctest::Approx(6.0));
}

TEST_CASE("non-smooth families refuse comparability") {
  const auto s = ModelSpace::censym(NormFamily::lp(1.0, 2));
  CenSymBase b(s);
  CHECK_FALSE(b.has_comparability());
  const AElem a = AElem::from_pair(s, 0.2, Eigen::Vector2d(0.3, 0.1));
  try {
    p_pm(a, b);
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ComparabilityUnavailable);
  }
}
