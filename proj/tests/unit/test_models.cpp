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
#include "ouspec/fn_model.hpp"
#include "ouspec/jb_model.hpp"
#include "ouspec/order_unit.hpp"
#include "ouspec/random.hpp"

using namespace ouspec;

TEST_CASE("jordan algebra identities") {
  const auto s = ModelSpace::jb(4);
  Rng rng(21);
  for (int t = 0; t < 20; ++t) {
    const AElem a = random_element(s, rng), b = random_element(s, rng);
    CHECK(jordan_identity_residual(a, b) < 1e-10);
    const Proj p = random_projection(s, rng);
    const Peirce pd = peirce_decompose(a, p.elem());
    CHECK((pd.a1 + pd.a2 + pd.a3 - a).payload().cwiseAbs().maxCoeff() < 1e-12);
    CHECK(rickart_A1_check(random_positive(s, rng), 4, t).ok());
  }
}

TEST_CASE("carrier and orthogonality") {
  const auto s = ModelSpace::jb(3);
  const AElem a = AElem::from_matrix(s, Eigen::Vector3d(2, 0, 0).asDiagonal().toDenseMatrix());
  const AElem b = AElem::from_matrix(s, Eigen::Vector3d(0, 0, 3).asDiagonal().toDenseMatrix());
  CHECK(jb_orthogonal(a, b));
  CHECK_FALSE(jb_orthogonal(a, a));
  CHECK(carrier(a).elem().matrix()(0, 0) == doctest::Approx(1.0));
  CHECK(operator_commute(a, carrier(a).elem()));
}

TEST_CASE("fn mackey witness") {
  const FnModel m = build_fn(3);
  const AElem e(m.space, Eigen::Vector3d(0.5, 0.2, 0.0));
  const AElem g(m.space, Eigen::Vector3d(0.1, 0.3, 0.4));
  const MackeyWitness w = fn_mackey_witness(e, g);
  CHECK(w.valid);
  CHECK((w.a1 + w.c - e).payload().cwiseAbs().maxCoeff() < 1e-12);
  CHECK((w.b1 + w.c - g).payload().cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("fn oracle equals the library") {
  const FnModel m = build_fn(5);
  Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    const AElem a = random_element(m.space, rng);
    const std::vector<double> grid{-3.1, -0.77, 0.013, 0.61, 3.3};
    const SpectralData d = spectral_resolution(a, *m.base, grid);
    const SpectralData o = oracle_spectral(a, grid);
    for (std::size_t i = 0; i < grid.size(); ++i)
      CHECK(d.resolution[i].p.elem().payload() == o.resolution[i].p.elem().payload());
  }
}
