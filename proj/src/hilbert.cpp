// Copyright 2026 The qcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcert/hilbert.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace qcert {

namespace {

std::atomic<std::size_t> g_operator_cap{kDefaultOperatorCap};

void check_operator_dim(std::size_t dim) {
  if (dim > operator_cap()) {
    std::ostringstream msg;
    msg << "operator dimension " << dim << " exceeds cap " << operator_cap();
    throw Error(ErrorKind::kCapExceeded, msg.str());
  }
}

// Flattened indices of the kept and traced parts of every full index.
struct SplitIndex {
  std::vector<std::size_t> kept;
  std::vector<std::size_t> traced;
  std::size_t kept_dim = 1;
  std::size_t traced_dim = 1;
};

SplitIndex split_index(const SpaceShape& shape, SubsetMask keep) {
  SplitIndex s;
  const int n = shape.n_parties();
  std::vector<std::size_t> kept_stride(static_cast<std::size_t>(n), 0);
  std::vector<std::size_t> traced_stride(static_cast<std::size_t>(n), 0);
  for (int i = n - 1; i >= 0; --i) {
    auto d = static_cast<std::size_t>(shape.dim(i));
    if (keep.contains(i)) {
      kept_stride[static_cast<std::size_t>(i)] = s.kept_dim;
      s.kept_dim *= d;
    } else {
      traced_stride[static_cast<std::size_t>(i)] = s.traced_dim;
      s.traced_dim *= d;
    }
  }
  const std::size_t total = shape.total_dim();
  s.kept.resize(total);
  s.traced.resize(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t k = 0, t = 0;
    for (int i = 0; i < n; ++i) {
      const std::size_t digit = (idx / shape.stride(i)) % static_cast<std::size_t>(shape.dim(i));
      k += digit * kept_stride[static_cast<std::size_t>(i)];
      t += digit * traced_stride[static_cast<std::size_t>(i)];
    }
    s.kept[idx] = k;
    s.traced[idx] = t;
  }
  return s;
}

// psi reshaped as (kept x traced).
Matrix reshape_cut(const PureState& psi, SubsetMask keep) {
  const SplitIndex s = split_index(psi.shape(), keep);
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(s.kept_dim),
                          static_cast<Eigen::Index>(s.traced_dim));
  const Vector& a = psi.amplitudes();
  for (std::size_t idx = 0; idx < psi.dim(); ++idx)
    m(static_cast<Eigen::Index>(s.kept[idx]), static_cast<Eigen::Index>(s.traced[idx])) =
        a(static_cast<Eigen::Index>(idx));
  return m;
}

}  // namespace

std::size_t operator_cap() { return g_operator_cap.load(std::memory_order_relaxed); }

void set_operator_cap(std::size_t cap) {
  if (cap < 2) throw Error(ErrorKind::kInvalidArgument, "operator cap must be at least 2");
  g_operator_cap.store(cap, std::memory_order_relaxed);
}

std::vector<int> SubsetMask::parties() const {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

SpaceShape::SpaceShape(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw Error(ErrorKind::kInvalidArgument, "a space needs at least one party");
  if (dims_.size() > 63) throw Error(ErrorKind::kInvalidArgument, "too many parties");
  strides_.assign(dims_.size(), 1);
  total_ = 1;
  for (std::size_t i = dims_.size(); i-- > 0;) {
    if (dims_[i] < 2) {
      std::ostringstream msg;
      msg << "party " << i << " has dimension " << dims_[i] << "; every dimension must be >= 2";
      throw Error(ErrorKind::kInvalidArgument, msg.str());
    }
    strides_[i] = total_;
    total_ *= static_cast<std::size_t>(dims_[i]);
    if (total_ > kVectorCap) throw Error(ErrorKind::kCapExceeded, "space dimension exceeds 2^20");
  }
}

std::size_t SpaceShape::dim_of(SubsetMask mask) const {
  check_mask(mask);
  std::size_t d = 1;
  for (int i = 0; i < n_parties(); ++i)
    if (mask.contains(i)) d *= static_cast<std::size_t>(dims_[static_cast<std::size_t>(i)]);
  return d;
}

SpaceShape SpaceShape::restrict(SubsetMask mask) const {
  check_mask(mask);
  if (mask.empty()) return SpaceShape();
  std::vector<int> d;
  for (int i = 0; i < n_parties(); ++i)
    if (mask.contains(i)) d.push_back(dims_[static_cast<std::size_t>(i)]);
  return SpaceShape(std::move(d));
}

void SpaceShape::check_mask(SubsetMask mask) const {
  if (!mask.is_subset_of(SubsetMask::full(n_parties()))) {
    std::ostringstream msg;
    msg << "subset mask " << mask.bits() << " out of range for " << n_parties() << " parties";
    throw Error(ErrorKind::kInvalidArgument, msg.str());
  }
}

SpaceShape SpaceShape::concat(const SpaceShape& other) const {
  std::vector<int> d(dims_);
  d.insert(d.end(), other.dims_.begin(), other.dims_.end());
  return SpaceShape(std::move(d));
}

Operator::Operator(SpaceShape shape, Matrix entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  const auto d = static_cast<Eigen::Index>(shape_.total_dim());
  if (entries_.rows() != d || entries_.cols() != d) {
    std::ostringstream msg;
    msg << "matrix is " << entries_.rows() << "x" << entries_.cols() << " but the space has dimension "
        << d;
    throw Error(ErrorKind::kInvalidArgument, msg.str());
  }
  check_operator_dim(shape_.total_dim());
}

PureState::PureState(SpaceShape shape, Vector amplitudes)
    : shape_(std::move(shape)), amps_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amps_.size()) != shape_.total_dim()) {
    std::ostringstream msg;
    msg << "vector has length " << amps_.size() << " but the space has dimension "
        << shape_.total_dim();
    throw Error(ErrorKind::kInvalidArgument, msg.str());
  }
  const double norm2 = amps_.squaredNorm();
  if (std::abs(norm2 - 1.0) > kTolInput) {
    std::ostringstream msg;
    msg << "state has squared norm " << norm2 << ", expected 1";
    throw Error(ErrorKind::kValidation, msg.str());
  }
}

Operator PureState::density() const {
  check_operator_dim(dim());
  return Operator(shape_, amps_ * amps_.adjoint());
}

Operator tensor(const Operator& a, const Operator& b) {
  SpaceShape shape = a.shape().n_parties() == 0   ? b.shape()
                     : b.shape().n_parties() == 0 ? a.shape()
                                                  : a.shape().concat(b.shape());
  check_operator_dim(shape.total_dim());
  const Matrix& ma = a.matrix();
  const Matrix& mb = b.matrix();
  const Eigen::Index db = mb.rows();
  Matrix out(ma.rows() * db, ma.cols() * db);
  for (Eigen::Index i = 0; i < ma.rows(); ++i)
    for (Eigen::Index j = 0; j < ma.cols(); ++j) out.block(i * db, j * db, db, db) = ma(i, j) * mb;
  return Operator(std::move(shape), std::move(out));
}

Operator partial_trace(const Operator& rho, SubsetMask keep) {
  const SpaceShape& shape = rho.shape();
  shape.check_mask(keep);
  if (keep == SubsetMask::full(shape.n_parties())) return rho;

  const SplitIndex s = split_index(shape, keep);
  // Group full indices by traced multi-index; within a group they are ordered
  // by kept multi-index, so each group is a kept_dim x kept_dim block.
  std::vector<std::size_t> by_traced(shape.total_dim());
  for (std::size_t idx = 0; idx < shape.total_dim(); ++idx)
    by_traced[s.traced[idx] * s.kept_dim + s.kept[idx]] = idx;

  const auto kd = static_cast<Eigen::Index>(s.kept_dim);
  Matrix out = Matrix::Zero(kd, kd);
  const Matrix& m = rho.matrix();
  for (std::size_t t = 0; t < s.traced_dim; ++t) {
    const std::size_t* group = &by_traced[t * s.kept_dim];
    for (Eigen::Index r = 0; r < kd; ++r)
      for (Eigen::Index c = 0; c < kd; ++c)
        out(r, c) += m(static_cast<Eigen::Index>(group[r]), static_cast<Eigen::Index>(group[c]));
  }
  return Operator(shape.restrict(keep), std::move(out));
}

Operator reduced_density(const PureState& psi, SubsetMask keep) {
  psi.shape().check_mask(keep);
  check_operator_dim(psi.shape().dim_of(keep));
  const Matrix m = reshape_cut(psi, keep);
  return Operator(psi.shape().restrict(keep), m * m.adjoint());
}

double purity(const Operator& rho) {
  // Tr(rho^2) = sum_ij rho_ij rho_ji
  const Matrix& m = rho.matrix();
  double acc = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) acc += (m(i, j) * m(j, i)).real();
  return acc;
}

double marginal_purity(const PureState& psi, SubsetMask keep) {
  psi.shape().check_mask(keep);
  const Matrix m = reshape_cut(psi, keep);
  const Matrix gram = m.rows() <= m.cols() ? Matrix(m * m.adjoint()) : Matrix(m.adjoint() * m);
  return gram.squaredNorm();
}

DensityDiagnostics validate_density(const Operator& rho, double tol) {
  DensityDiagnostics d;
  const Matrix& m = rho.matrix();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      d.hermiticity_deviation = std::max(d.hermiticity_deviation, std::abs(m(i, j) - std::conj(m(j, i))));
  d.trace_deviation = std::abs(m.trace() - Complex(1.0, 0.0));
  const Matrix herm = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
  d.min_eigenvalue = solver.eigenvalues().size() ? solver.eigenvalues().minCoeff() : 0.0;
  d.pass = d.hermiticity_deviation <= tol && d.trace_deviation <= tol && d.min_eigenvalue >= -tol;
  return d;
}

void require_density(const Operator& rho, double tol) {
  const DensityDiagnostics d = validate_density(rho, tol);
  if (d.pass) return;
  std::ostringstream msg;
  msg << "not a valid density matrix (hermiticity deviation " << d.hermiticity_deviation
      << ", trace deviation " << d.trace_deviation << ", min eigenvalue " << d.min_eigenvalue
      << ", tolerance " << tol << ")";
  throw Error(ErrorKind::kValidation, msg.str());
}

double pairwise_sum(std::span<const double> terms) {
  if (terms.empty()) return 0.0;
  if (terms.size() <= 8) {
    double acc = 0.0;
    for (double t : terms) acc += t;
    return acc;
  }
  const std::size_t half = terms.size() / 2;
  return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

}  // namespace qcert
