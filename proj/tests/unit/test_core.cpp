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
#include "ouspec/errors.hpp"
#include "ouspec/jacobi.hpp"
#include "ouspec/norms.hpp"
#include "ouspec/order_unit.hpp"
#include "ouspec/random.hpp"
#include "ouspec/space.hpp"

using namespace ouspec;

TEST_CASE("spaces reject bad dimensions") {
  CHECK_THROWS_AS(ModelSpace::fn(0), Error);
  CHECK_THROWS_AS(ModelSpace::jb(-1), Error);
  CHECK_THROWS_AS(NormFamily::lp(0.5, 2), Error);
  const auto s = ModelSpace::jb(3);
  CHECK(s->payload_size() == 9);
  CHECK(s->dim() == 6);
}

TEST_CASE("order unit norm and pairing") {
  const auto f = ModelSpace::fn(3);
  const AElem a(f, Eigen::Vector3d(2, 0, -1));
  CHECK(order_unit_norm(a) == doctest::Approx(2.0));
  CHECK(in_cone(AElem::unit(f)));
  CHECK_FALSE(in_cone(a));
  CHECK(leq(AElem::zero(f), AElem::unit(f)));

  const auto j = ModelSpace::jb(2);
  Eigen::Matrix2d m;
  m << 1, 2, 2, 1;
  CHECK(order_unit_norm(AElem::from_matrix(j, m)) == doctest::Approx(3.0));

  const auto c = ModelSpace::censym(NormFamily::lp(2.0, 2));
  const AElem e = AElem::from_pair(c, 0.5, Eigen::Vector2d(0.3, 0.4));
  CHECK(is_effect(e));
  CHECK(is_sharp(e));
  const VElem st = VElem::from_pair(c, 1.0, Eigen::Vector2d(0.6, 0.8));
  CHECK(pairing(AElem::unit(c), st) == doctest::Approx(1.0));
  CHECK(pairing(e, st) == doctest::Approx(1.0));
}

TEST_CASE("norm families") {
  const auto l1 = NormFamily::lp(1.0, 2);
  CHECK_FALSE(l1.smooth());
  CHECK(std::isinf(l1.q()));
  CHECK(primal_norm(l1, Eigen::Vector2d(1, -2)) == doctest::Approx(3.0));
  CHECK(dual_norm(l1, Eigen::Vector2d(1, -2)) == doctest::Approx(2.0));
  const auto st = NormFamily::stadium(1.0, 1.0);
  CHECK(st.smooth());
  CHECK_FALSE(st.strictly_convex());
  CHECK(dual_norm(st, Eigen::Vector2d(0, 0.5)) == doctest::Approx(0.5));
  CHECK_FALSE(dual_face(st, Eigen::Vector2d(0, 0.5)).singleton());
  const auto l3 = NormFamily::lp(3.0, 3);
  Rng rng(4);
  const Eigen::VectorXd y = rng.normal_vector(3);
  const DualityFace face = dual_face(l3, y);
  REQUIRE(face.singleton());
  CHECK(primal_norm(l3, face.points[0]) == doctest::Approx(1.0));
  CHECK(y.dot(face.points[0]) == doctest::Approx(dual_norm(l3, y)));
}

TEST_CASE("jacobi matches eigen decomposition") {
  Rng rng(9);
  for (int n = 1; n <= 7; ++n) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Random(n, n);
    a = (a + a.transpose()).eval();
    const SymmetricEigen e = jacobi_eig(a);
    const Eigen::MatrixXd back = e.vectors * e.values.asDiagonal() * e.vectors.transpose();
    CHECK((back - a).cwiseAbs().maxCoeff() < 1e-12);
    for (int i = 1; i < n; ++i) CHECK(e.values[i - 1] <= e.values[i]);
  }
}

TEST_CASE("random generators stay in range") {
  Rng rng(3);
  for (auto s : {ModelSpace::fn(4), ModelSpace::jb(3), ModelSpace::censym(NormFamily::lp(1.5, 3))}) {
    for (int t = 0; t < 50; ++t) {
      const AElem e = random_effect(s, rng);
      CHECK(is_effect(e));
      CHECK(in_cone(random_positive(s, rng)));
      const Proj p = random_projection(s, rng);
      CHECK(is_sharp(p.elem()));
    }
  }
  Rng a(5, 1), b(5, 1), c(5, 2);
  CHECK(a.normal() == b.normal());
  CHECK(Rng(5, 1).normal() != c.normal());
}
