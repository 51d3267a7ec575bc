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

#ifndef OUSPEC_FN_MODEL_HPP_
#define OUSPEC_FN_MODEL_HPP_

#include <memory>
#include <vector>

#include "ouspec/compression_base.hpp"
#include "ouspec/spectral.hpp"

namespace ouspec {

/// Multiplication compressions J_S(f) = f chi_S on the functions of n points.
class FnBase final : public CompressionBase {
 public:
  /// Masks are enumerated for n <= 12 and sampled (seeded) beyond.
  explicit FnBase(SpacePtr space, std::uint64_t sample_seed = 1);

  bool exhaustive() const { return exhaustive_; }

  std::string describe() const override;
  bool contains(const AElem& p) const override;
  ProjectionSet projections(int count, std::uint64_t seed) const override;
  std::vector<Triple> orthogonal_triples(int count, std::uint64_t seed) const override;
  std::vector<std::pair<Proj, Proj>> normality_pairs(int count,
                                                     std::uint64_t seed) const override;
  Proj cover(const AElem& e) const override;
  std::pair<double, double> bounds(const AElem& a) const override;
  ProjectionSet pc_set(const AElem& a) const override;
  ProjectionSet bicommutant(const AElem& a) const override;
  CBlock c_block(const AElem& a) const override;

 protected:
  CompMap make_compression(const Proj& p) const override;
  Proj make_comparability_projection(const AElem& a) const override;

 private:
  Proj mask(const std::vector<int>& bits) const;
  Proj mask_of_index(std::uint64_t bits) const;

  bool exhaustive_;
  std::vector<Proj> sampled_;
};

struct FnModel {
  int n = 0;
  SpacePtr space;
  std::shared_ptr<const FnBase> base;
  bool exhaustive = true;
};

inline constexpr int kFnMaxPoints = 24;
inline constexpr int kFnExhaustivePoints = 12;

FnModel build_fn(int n, Tol tol = {});

/// Spectral data from coordinate formulas alone.
SpectralData oracle_spectral(const AElem& f, const std::vector<double>& grid);

struct MackeyWitness {
  AElem c;
  AElem a1;
  AElem b1;
  bool valid = false;
};

/// c = max(e + g - 1, 0), a1 = e - c, b1 = g - c.
MackeyWitness fn_mackey_witness(const AElem& e, const AElem& g);

}  // namespace ouspec

#endif  // OUSPEC_FN_MODEL_HPP_
