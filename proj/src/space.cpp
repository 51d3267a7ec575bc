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

#include "ouspec/space.hpp"

#include <cmath>
#include <sstream>

#include "ouspec/errors.hpp"

namespace ouspec {

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::Fn: return "fn";
    case ModelKind::JB: return "jb";
    case ModelKind::CenSym: return "censym";
  }
  return "?";
}

ModelSpace::ModelSpace(ModelKind kind, int n, Tol tol, std::optional<NormFamily> fam)
    : kind_(kind), n_(n), dim_(0), tol_(tol), family_(std::move(fam)) {
  if (n < 1) {
    throw Error(ErrorCode::InvalidDimension,
                std::string(to_string(kind)) + " space needs n >= 1, got " + std::to_string(n));
  }
  if (!tol.valid()) throw Error(ErrorCode::InvalidDimension, "tolerances must be positive");
  switch (kind) {
    case ModelKind::Fn: dim_ = n; break;
    case ModelKind::JB: dim_ = n * (n + 1) / 2; break;
    case ModelKind::CenSym: dim_ = n + 1; break;
  }
}

SpacePtr ModelSpace::fn(int n, Tol tol) {
  return SpacePtr(new ModelSpace(ModelKind::Fn, n, tol, std::nullopt));
}

SpacePtr ModelSpace::jb(int n, Tol tol) {
  return SpacePtr(new ModelSpace(ModelKind::JB, n, tol, std::nullopt));
}

SpacePtr ModelSpace::censym(const NormFamily& family, Tol tol) {
  return SpacePtr(new ModelSpace(ModelKind::CenSym, family.dim(), tol, family));
}

int ModelSpace::payload_size() const {
  switch (kind_) {
    case ModelKind::Fn: return n_;
    case ModelKind::JB: return n_ * n_;
    case ModelKind::CenSym: return n_ + 1;
  }
  return 0;
}

const NormFamily& ModelSpace::family() const {
  if (!family_) throw Error(ErrorCode::ShapeMismatch, "space " + describe() + " has no norm family");
  return *family_;
}

std::string ModelSpace::describe() const {
  std::ostringstream os;
  os << to_string(kind_) << "(n=" << n_;
  if (family_) os << ", " << family_->describe();
  os << ")";
  return os.str();
}

bool ModelSpace::same_as(const ModelSpace& o) const {
  if (kind_ != o.kind_ || n_ != o.n_) return false;
  if (family_.has_value() != o.family_.has_value()) return false;
  return !family_ || *family_ == *o.family_;
}

void require_same_space(const ModelSpace& a, const ModelSpace& b) {
  if (&a != &b && !a.same_as(b)) {
    throw Error(ErrorCode::ShapeMismatch, a.describe() + " vs " + b.describe());
  }
}

namespace {

void check_payload(const ModelSpace& s, Eigen::VectorXd& data) {
  if (data.size() != s.payload_size()) {
    throw Error(ErrorCode::ShapeMismatch, "payload of length " + std::to_string(data.size()) +
                                              " for " + s.describe());
  }
  if (!data.allFinite()) throw Error(ErrorCode::ShapeMismatch, "non-finite payload");
  if (s.kind() != ModelKind::JB) return;
  const int n = s.n();
  Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
      data.data(), n, n);
  const double scale = 1.0 + m.cwiseAbs().maxCoeff();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(m(i, j) - m(j, i)) > s.tol().eq_tol * scale) {
        throw Error(ErrorCode::ShapeMismatch, "matrix payload is not symmetric");
      }
      const double avg = 0.5 * (m(i, j) + m(j, i));
      m(i, j) = avg;
      m(j, i) = avg;
    }
  }
}

Eigen::VectorXd row_major(const Eigen::MatrixXd& m) {
  Eigen::VectorXd v(m.size());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
  return v;
}

Eigen::MatrixXd from_row_major(const Eigen::VectorXd& v, int n) {
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = v(i * n + j);
  return m;
}

// Off-diagonal coordinate weight: 1 for A, 2 for V (so the pairing is a dot).
Eigen::VectorXd sym_coords(const Eigen::VectorXd& payload, int n, double off_weight) {
  Eigen::VectorXd c(n * (n + 1) / 2);
  int k = 0;
  for (int i = 0; i < n; ++i) c(k++) = payload(i * n + i);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) c(k++) = off_weight * payload(i * n + j);
  return c;
}

Eigen::VectorXd sym_payload(const Eigen::VectorXd& c, int n, double off_weight) {
  Eigen::VectorXd p(n * n);
  int k = 0;
  for (int i = 0; i < n; ++i) p(i * n + i) = c(k++);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double v = c(k++) / off_weight;
      p(i * n + j) = v;
      p(j * n + i) = v;
    }
  }
  return p;
}

void require_kind(const ModelSpace& s, ModelKind kind, const char* what) {
  if (s.kind() != kind) {
    throw Error(ErrorCode::ShapeMismatch, std::string(what) + " is not defined on " + s.describe());
  }
}

Eigen::VectorXd pair_payload(double a0, const Eigen::VectorXd& y) {
  Eigen::VectorXd v(y.size() + 1);
  v(0) = a0;
  v.tail(y.size()) = y;
  return v;
}

}  // namespace

AElem::AElem(SpacePtr space, Eigen::VectorXd payload)
    : space_(std::move(space)), data_(std::move(payload)) {
  check_payload(*space_, data_);
}

AElem AElem::zero(const SpacePtr& space) {
  return AElem(space, Eigen::VectorXd::Zero(space->payload_size()));
}

AElem AElem::unit(const SpacePtr& space) {
  const int n = space->n();
  switch (space->kind()) {
    case ModelKind::Fn: return AElem(space, Eigen::VectorXd::Ones(n));
    case ModelKind::JB: return from_matrix(space, Eigen::MatrixXd::Identity(n, n));
    case ModelKind::CenSym: return from_pair(space, 1.0, Eigen::VectorXd::Zero(n));
  }
  return zero(space);
}

AElem AElem::from_matrix(const SpacePtr& space, const Eigen::MatrixXd& m) {
  require_kind(*space, ModelKind::JB, "matrix payload");
  if (m.rows() != space->n() || m.cols() != space->n()) {
    throw Error(ErrorCode::ShapeMismatch, "matrix size does not match " + space->describe());
  }
  return AElem(space, row_major(m));
}

AElem AElem::from_pair(const SpacePtr& space, double a0, const Eigen::VectorXd& y) {
  require_kind(*space, ModelKind::CenSym, "pair payload");
  return AElem(space, pair_payload(a0, y));
}

AElem AElem::from_coords(const SpacePtr& space, const Eigen::VectorXd& c) {
  if (c.size() != space->dim()) throw Error(ErrorCode::ShapeMismatch, "coordinate length");
  if (space->kind() == ModelKind::JB) return AElem(space, sym_payload(c, space->n(), 1.0));
  return AElem(space, c);
}

Eigen::VectorXd AElem::coords() const {
  if (space_->kind() == ModelKind::JB) return sym_coords(data_, space_->n(), 1.0);
  return data_;
}

Eigen::MatrixXd AElem::matrix() const {
  require_kind(*space_, ModelKind::JB, "matrix()");
  return from_row_major(data_, space_->n());
}

double AElem::scalar() const {
  require_kind(*space_, ModelKind::CenSym, "scalar()");
  return data_(0);
}

Eigen::VectorXd AElem::functional() const {
  require_kind(*space_, ModelKind::CenSym, "functional()");
  return data_.tail(space_->n());
}

AElem& AElem::operator+=(const AElem& o) {
  require_same_space(*space_, *o.space_);
  data_ += o.data_;
  return *this;
}

AElem& AElem::operator-=(const AElem& o) {
  require_same_space(*space_, *o.space_);
  data_ -= o.data_;
  return *this;
}

AElem& AElem::operator*=(double t) {
  data_ *= t;
  return *this;
}

AElem operator+(AElem a, const AElem& b) { return a += b; }
AElem operator-(AElem a, const AElem& b) { return a -= b; }
AElem operator-(const AElem& a) { return -1.0 * a; }
AElem operator*(double t, AElem a) { return a *= t; }
AElem operator*(AElem a, double t) { return a *= t; }

VElem::VElem(SpacePtr space, Eigen::VectorXd payload)
    : space_(std::move(space)), data_(std::move(payload)) {
  check_payload(*space_, data_);
}

VElem VElem::from_pair(const SpacePtr& space, double alpha, const Eigen::VectorXd& x) {
  require_kind(*space, ModelKind::CenSym, "pair payload");
  return VElem(space, pair_payload(alpha, x));
}

VElem VElem::from_matrix(const SpacePtr& space, const Eigen::MatrixXd& m) {
  require_kind(*space, ModelKind::JB, "matrix payload");
  return VElem(space, row_major(m));
}

VElem VElem::from_coords(const SpacePtr& space, const Eigen::VectorXd& c) {
  if (c.size() != space->dim()) throw Error(ErrorCode::ShapeMismatch, "coordinate length");
  if (space->kind() == ModelKind::JB) return VElem(space, sym_payload(c, space->n(), 2.0));
  return VElem(space, c);
}

Eigen::VectorXd VElem::coords() const {
  if (space_->kind() == ModelKind::JB) return sym_coords(data_, space_->n(), 2.0);
  return data_;
}

Eigen::MatrixXd VElem::matrix() const {
  require_kind(*space_, ModelKind::JB, "matrix()");
  return from_row_major(data_, space_->n());
}

Proj Proj::complement() const { return Proj(AElem::unit(e_.space()) - e_); }

}  // namespace ouspec
