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

#include "qcert/oracle.hpp"

namespace qcert::oracle {

namespace {

// Multi-index of a flattened index; party 0 most significant.
std::vector<int> digits_of(std::size_t index, std::span<const int> dims) {
  std::vector<int> digits(dims.size());
  for (std::size_t i = dims.size(); i-- > 0;) {
    digits[i] = static_cast<int>(index % static_cast<std::size_t>(dims[i]));
    index /= static_cast<std::size_t>(dims[i]);
  }
  return digits;
}

std::size_t index_of(const std::vector<int>& digits, std::span<const int> dims) {
  std::size_t index = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) index = index * static_cast<std::size_t>(dims[i]) + static_cast<std::size_t>(digits[i]);
  return index;
}

double trace_purity(const Matrix& m) { return (m * m).trace().real(); }

Operator loop_partial_trace(const Operator& rho, SubsetMask keep) {
  const SpaceShape& shape = rho.shape();
  shape.check_mask(keep);
  const std::vector<int> kept = keep.parties();
  std::vector<int> kept_dims;
  for (int p : kept) kept_dims.push_back(shape.dim(p));
  std::size_t kd = 1;
  for (int d : kept_dims) kd *= static_cast<std::size_t>(d);

  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(kd), static_cast<Eigen::Index>(kd));
  const std::size_t total = shape.total_dim();
  std::vector<std::vector<int>> digits(total);
  for (std::size_t i = 0; i < total; ++i) digits[i] = digits_of(i, shape.dims());
  std::vector<int> rk(kept.size()), ck(kept.size());
  for (std::size_t r = 0; r < total; ++r) {
    const std::vector<int>& rd = digits[r];
    for (std::size_t c = 0; c < total; ++c) {
      const std::vector<int>& cd = digits[c];
      bool traced_match = true;
      for (int p = 0; p < shape.n_parties() && traced_match; ++p)
        if (!keep.contains(p) && rd[static_cast<std::size_t>(p)] != cd[static_cast<std::size_t>(p)]) traced_match = false;
      if (!traced_match) continue;
      for (std::size_t k = 0; k < kept.size(); ++k) {
        rk[k] = rd[static_cast<std::size_t>(kept[k])];
        ck[k] = cd[static_cast<std::size_t>(kept[k])];
      }
      out(static_cast<Eigen::Index>(index_of(rk, kept_dims)), static_cast<Eigen::Index>(index_of(ck, kept_dims))) +=
          rho(r, c);
    }
  }
  if (kept.empty()) return Operator(SpaceShape(), std::move(out));
  return Operator(SpaceShape(kept_dims), std::move(out));
}

}  // namespace

Operator naive_partial_trace(const Operator& rho, SubsetMask keep) {
  if (rho.dim() > kMaxPartialTraceDim)
    throw Error(ErrorKind::kCapExceeded, "oracle partial trace is limited to D <= 64");
  return loop_partial_trace(rho, keep);
}

Operator doubled_density(const PureState& psi) {
  const std::size_t d = psi.dim();
  if (d * d > kMaxDoubledDim) throw Error(ErrorKind::kCapExceeded, "oracle doubled space is limited to 256");
  const Vector& a = psi.amplitudes();
  Vector v(static_cast<Eigen::Index>(d * d));
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      v(static_cast<Eigen::Index>(x * d + y)) = a(static_cast<Eigen::Index>(x)) * a(static_cast<Eigen::Index>(y));
  return Operator(psi.shape().concat(psi.shape()), v * v.adjoint());
}

double naive_expectation(const Operator& state_pair, const SignPattern& pattern) {
  const SpaceShape& doubled = state_pair.shape();
  if (state_pair.dim() > kMaxDoubledDim) throw Error(ErrorKind::kCapExceeded, "oracle doubled space is limited to 256");
  const int n = pattern.n_parties();
  if (doubled.n_parties() != 2 * n)
    throw Error(ErrorKind::kInvalidArgument, "state pair must live on a doubled shape");
  std::vector<int> single(doubled.dims().begin(), doubled.dims().begin() + n);
  const Operator a = observable(SpaceShape(single), pattern);
  if (!(a.shape() == doubled)) throw Error(ErrorKind::kInvalidArgument, "state pair must live on a doubled shape");
  return (a.matrix() * state_pair.matrix()).trace().real();
}

double exhaustive_E(const PureState& psi) {
  const int n = psi.shape().n_parties();
  if (n % 2 != 0) throw Error(ErrorKind::kDomain, "partition classes undefined for odd N");
  if (n > kMaxExhaustiveParties || psi.dim() > kMaxDoubledDim)
    throw Error(ErrorKind::kCapExceeded, "oracle E is limited to N <= 8 and D <= 256");
  const Operator rho = psi.density();
  const double s_ab = 1.0 - trace_purity(rho.matrix());
  double odd_odd = 0.0, even_even = 0.0;
  // Every ordered (A, B) cut appears twice; keep those with party 0 in A.
  for (std::uint64_t bits = 1; bits + 1 < (std::uint64_t{1} << n); ++bits) {
    const SubsetMask a(bits);
    if (!a.contains(0)) continue;
    const SubsetMask b = a.complement(n);
    const double s = (1.0 - trace_purity(loop_partial_trace(rho, a).matrix())) +
                     (1.0 - trace_purity(loop_partial_trace(rho, b).matrix())) - s_ab;
    if (a.odd() && b.odd()) {
      odd_odd += s;
    } else {
      even_even += s;
    }
  }
  return odd_odd - even_even;
}

}  // namespace qcert::oracle
