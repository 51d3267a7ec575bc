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

#ifndef OUSPEC_COMPRESSION_BASE_HPP_
#define OUSPEC_COMPRESSION_BASE_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ouspec/compression.hpp"
#include "ouspec/report.hpp"
#include "ouspec/space.hpp"

namespace ouspec {

struct ProjectionSet {
  std::vector<Proj> members;
  /// False when `members` only witnesses an infinite or oversized family.
  bool exhaustive = true;
  std::string description;
};

using Triple = std::array<Proj, 3>;

struct CBlock {
  ProjectionSet block;
  /// Basis of the span of the block.
  std::vector<AElem> basis;
};

/// A family of F-compressions indexed by their foci, together with the
/// model-specific formulas the spectral layer needs.
class CompressionBase {
 public:
  virtual ~CompressionBase() = default;

  const SpacePtr& space() const { return space_; }
  virtual std::string describe() const = 0;

  virtual bool contains(const AElem& p) const = 0;
  /// J_p; throws UnknownProjection when p is not in the base.
  CompMap compression(const AElem& p) const;

  /// The enumerated family, or a seeded sample of it.
  virtual ProjectionSet projections(int count, std::uint64_t seed) const = 0;
  /// Triples (p, q, r) with p + q + r <= 1.
  virtual std::vector<Triple> orthogonal_triples(int count, std::uint64_t seed) const = 0;
  /// Pairs of projections probed by the normality check.
  virtual std::vector<std::pair<Proj, Proj>> normality_pairs(int count,
                                                             std::uint64_t seed) const = 0;

  virtual bool has_comparability() const { return true; }
  /// Why comparability fails; empty when it holds.
  virtual std::string comparability_certificate() const { return {}; }
  /// Least p with J_{1-p}(a) <= 0 <= J_p(a).
  Proj comparability_projection(const AElem& a) const;

  virtual Proj cover(const AElem& e) const = 0;
  /// (L_a, U_a).
  virtual std::pair<double, double> bounds(const AElem& a) const = 0;

  virtual ProjectionSet pc_set(const AElem& a) const = 0;
  virtual ProjectionSet bicommutant(const AElem& a) const = 0;
  virtual CBlock c_block(const AElem& a) const = 0;

 protected:
  explicit CompressionBase(SpacePtr space) : space_(std::move(space)) {}
  virtual CompMap make_compression(const Proj& p) const = 0;
  virtual Proj make_comparability_projection(const AElem& a) const = 0;

 private:
  SpacePtr space_;
};

using BasePtr = std::shared_ptr<const CompressionBase>;

bool in_C(const AElem& a, const AElem& p, const CompressionBase& b);

struct Compatibility {
  bool compatible = false;
  /// The common product's focus when compatible.
  std::optional<Proj> meet;
};

Compatibility projections_compatible(const AElem& p, const AElem& q, const CompressionBase& b);

/// Members of PC(a) among the base's witnesses; each satisfies in_C.
ProjectionSet PC_set(const AElem& a, const CompressionBase& b);
/// P(a) = PC(PC(a) u {a}).
ProjectionSet P_of(const AElem& a, const CompressionBase& b);

Report validate_base(const CompressionBase& b, int trials, std::uint64_t seed);

/// Projections are equal when their payloads agree entrywise to `tol`.
bool same_projection(const AElem& p, const AElem& q, double tol = 1e-6);

}  // namespace ouspec

#endif  // OUSPEC_COMPRESSION_BASE_HPP_
