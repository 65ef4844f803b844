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

#include "qcert/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <Eigen/Eigenvalues>

namespace qcert {

namespace {

SpaceShape qubits(int n) { return SpaceShape(std::vector<int>(static_cast<std::size_t>(n), 2)); }

void require_party_count(int n) {
  if (n < 2) throw Error(ErrorKind::kInvalidArgument, "named states need at least 2 parties");
}

}  // namespace

std::uint64_t CounterRng::next_u64() {
  ++counter_;
  std::uint64_t z = seed_ + counter_ * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double CounterRng::next_uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

Complex CounterRng::next_complex_gaussian() {
  const double u1 = next_uniform();
  const double u2 = next_uniform();
  const double r = std::sqrt(-std::log1p(-u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(theta), r * std::sin(theta)};
}

PureState w_state(int n) {
  require_party_count(n);
  SpaceShape shape = qubits(n);
  Vector amps = Vector::Zero(static_cast<Eigen::Index>(shape.total_dim()));
  const double a = 1.0 / std::sqrt(static_cast<double>(n));
  for (int i = 0; i < n; ++i) amps(Eigen::Index{1} << i) = a;
  return PureState(std::move(shape), std::move(amps));
}

PureState ghz_state(int n) {
  require_party_count(n);
  SpaceShape shape = qubits(n);
  Vector amps = Vector::Zero(static_cast<Eigen::Index>(shape.total_dim()));
  amps(0) = amps(amps.size() - 1) = 1.0 / std::sqrt(2.0);
  return PureState(std::move(shape), std::move(amps));
}

PureState product_state(std::span<const PureState> factors) {
  if (factors.empty()) throw Error(ErrorKind::kInvalidArgument, "product of zero factors");
  std::vector<int> dims;
  std::size_t total = 1;
  for (const PureState& f : factors) {
    dims.insert(dims.end(), f.shape().dims().begin(), f.shape().dims().end());
    total *= f.dim();
    if (total > kVectorCap) throw Error(ErrorKind::kCapExceeded, "product state exceeds 2^20 amplitudes");
  }
  Vector acc = factors.front().amplitudes();
  for (std::size_t k = 1; k < factors.size(); ++k) {
    const Vector& b = factors[k].amplitudes();
    Vector next(acc.size() * b.size());
    for (Eigen::Index i = 0; i < acc.size(); ++i) next.segment(i * b.size(), b.size()) = acc(i) * b;
    acc = std::move(next);
  }
  return PureState(SpaceShape(std::move(dims)), std::move(acc));
}

PureState random_pure(const SpaceShape& shape, std::uint64_t seed) {
  CounterRng rng(seed);
  Vector amps(static_cast<Eigen::Index>(shape.total_dim()));
  for (Eigen::Index i = 0; i < amps.size(); ++i) amps(i) = rng.next_complex_gaussian();
  amps.normalize();
  return PureState(shape, std::move(amps));
}

Operator random_mixed(const SpaceShape& shape, int rank, std::uint64_t seed) {
  const std::size_t d = shape.total_dim();
  if (rank < 1 || static_cast<std::size_t>(rank) > d)
    throw Error(ErrorKind::kInvalidArgument, "rank must lie in [1, total dimension]");
  if (d > operator_cap()) throw Error(ErrorKind::kCapExceeded, "mixed state exceeds the operator cap");
  if (d * static_cast<std::size_t>(rank) > kVectorCap)
    throw Error(ErrorKind::kCapExceeded, "purification exceeds 2^20 amplitudes");
  // Amplitudes of the system x ancilla vector, ancilla index fastest.
  CounterRng rng(seed);
  Matrix g(static_cast<Eigen::Index>(d), rank);
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index k = 0; k < g.cols(); ++k) g(i, k) = rng.next_complex_gaussian();
  g /= g.norm();
  Matrix rho = g * g.adjoint();
  rho = (rho + rho.adjoint()).eval() / 2.0;
  return Operator(shape, std::move(rho));
}

PureState purify(const Operator& rho) {
  require_density(rho);
  const auto d = static_cast<Eigen::Index>(rho.dim());
  if (static_cast<std::size_t>(d) * static_cast<std::size_t>(d) > kVectorCap)
    throw Error(ErrorKind::kCapExceeded, "purification exceeds 2^20 amplitudes");

  const Matrix herm = (rho.matrix() + rho.matrix().adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm);
  const Eigen::VectorXd& evals = solver.eigenvalues();
  const Matrix& evecs = solver.eigenvectors();

  std::vector<Eigen::Index> order(static_cast<std::size_t>(d));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return evals(a) > evals(b); });

  // |psi> = sum_k sqrt(lambda_k) |e_k>|k>, ancilla index fastest.
  Vector amps = Vector::Zero(d * d);
  for (Eigen::Index slot = 0; slot < d; ++slot) {
    const Eigen::Index k = order[static_cast<std::size_t>(slot)];
    Vector v = evecs.col(k);
    for (Eigen::Index i = 0; i < d; ++i) {
      if (std::abs(v(i)) > 1e-14) {
        v *= std::conj(v(i)) / std::abs(v(i));
        break;
      }
    }
    const double weight = std::sqrt(std::max(evals(k), 0.0));
    for (Eigen::Index i = 0; i < d; ++i) amps(i * d + slot) = weight * v(i);
  }
  return PureState(rho.shape().concat(SpaceShape({static_cast<int>(d)})), std::move(amps));
}

}  // namespace qcert
