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

#ifndef QCERT_TESTS_TEST_SUPPORT_HPP
#define QCERT_TESTS_TEST_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include <Eigen/QR>

#include "qcert/hilbert.hpp"
#include "qcert/states.hpp"

namespace qcert::testing {

inline double max_abs_diff(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

inline Matrix diag(std::initializer_list<double> values) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(values.size()), static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double v : values) {
    m(i, i) = v;
    ++i;
  }
  return m;
}

inline Operator maximally_mixed(const SpaceShape& shape) {
  const auto d = static_cast<Eigen::Index>(shape.total_dim());
  return Operator(shape, Matrix::Identity(d, d) / static_cast<double>(d));
}

inline PureState basis_state(std::vector<int> dims, std::size_t index) {
  SpaceShape shape(std::move(dims));
  Vector v = Vector::Zero(static_cast<Eigen::Index>(shape.total_dim()));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return PureState(std::move(shape), std::move(v));
}

/// Haar-ish random unitary: QR of a complex Gaussian matrix.
inline Matrix random_unitary(int d, std::uint64_t seed) {
  CounterRng rng(seed);
  Matrix g(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) g(i, j) = rng.next_complex_gaussian();
  Eigen::HouseholderQR<Matrix> qr(g);
  return qr.householderQ() * Matrix::Identity(d, d);
}

/// Applies `u` to one party of a pure state.
inline PureState apply_local(const PureState& psi, int party, const Matrix& u) {
  const SpaceShape& shape = psi.shape();
  const std::size_t stride = shape.stride(party);
  const auto d = static_cast<std::size_t>(shape.dim(party));
  Vector out = Vector::Zero(psi.amplitudes().size());
  for (std::size_t idx = 0; idx < psi.dim(); ++idx) {
    const std::size_t digit = (idx / stride) % d;
    const std::size_t base = idx - digit * stride;
    for (std::size_t k = 0; k < d; ++k)
      out(static_cast<Eigen::Index>(base + k * stride)) +=
          u(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(digit)) *
          psi.amplitudes()(static_cast<Eigen::Index>(idx));
  }
  return PureState(shape, std::move(out));
}

/// Relabels parties: new party j is old party perm[j].
inline PureState permute_parties(const PureState& psi, const std::vector<int>& perm) {
  const SpaceShape& shape = psi.shape();
  std::vector<int> new_dims;
  for (int p : perm) new_dims.push_back(shape.dim(p));
  SpaceShape out_shape(new_dims);
  Vector out(psi.amplitudes().size());
  for (std::size_t idx = 0; idx < psi.dim(); ++idx) {
    std::size_t new_idx = 0;
    for (std::size_t j = 0; j < perm.size(); ++j) {
      const std::size_t digit = (idx / shape.stride(perm[j])) % static_cast<std::size_t>(shape.dim(perm[j]));
      new_idx += digit * out_shape.stride(static_cast<int>(j));
    }
    out(static_cast<Eigen::Index>(new_idx)) = psi.amplitudes()(static_cast<Eigen::Index>(idx));
  }
  return PureState(std::move(out_shape), std::move(out));
}

/// Same relabeling for a density matrix.
inline Operator permute_parties(const Operator& rho, const std::vector<int>& perm) {
  const SpaceShape& shape = rho.shape();
  std::vector<int> new_dims;
  for (int p : perm) new_dims.push_back(shape.dim(p));
  SpaceShape out_shape(new_dims);
  std::vector<Eigen::Index> map(rho.dim());
  for (std::size_t idx = 0; idx < rho.dim(); ++idx) {
    std::size_t new_idx = 0;
    for (std::size_t j = 0; j < perm.size(); ++j) {
      const std::size_t digit = (idx / shape.stride(perm[j])) % static_cast<std::size_t>(shape.dim(perm[j]));
      new_idx += digit * out_shape.stride(static_cast<int>(j));
    }
    map[idx] = static_cast<Eigen::Index>(new_idx);
  }
  Matrix out(rho.matrix().rows(), rho.matrix().cols());
  for (std::size_t r = 0; r < rho.dim(); ++r)
    for (std::size_t c = 0; c < rho.dim(); ++c)
      out(map[r], map[c]) = rho.matrix()(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  return Operator(std::move(out_shape), std::move(out));
}

/// Deterministic pseudo-random permutation of 0..n-1.
inline std::vector<int> random_permutation(int n, std::uint64_t seed) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  CounterRng rng(seed);
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(i + 1));
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
  }
  return perm;
}

}  // namespace qcert::testing

#endif  // QCERT_TESTS_TEST_SUPPORT_HPP
