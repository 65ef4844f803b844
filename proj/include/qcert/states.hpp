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

#ifndef QCERT_STATES_HPP
#define QCERT_STATES_HPP

#include <cstdint>
#include <span>

#include "qcert/hilbert.hpp"

namespace qcert {

/// Counter-based generator: draw k (0-based) of seed s is
/// splitmix64_finalize(s + (k + 1) * 0x9E3779B97F4A7C15). Any implementation
/// of that mixing function reproduces the stream exactly.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next_u64();
  /// Uniform in [0, 1): top 53 bits of the next draw times 2^-53.
  double next_uniform();
  /// Standard complex Gaussian (re, im i.i.d. N(0, 1/2)) via Box-Muller on two
  /// uniforms u1, u2: r = sqrt(-log(1 - u1)), theta = 2 pi u2.
  Complex next_complex_gaussian();

  std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

/// (|0..01> + |0..10> + ... + |10..0>) / sqrt(n) on n qubits.
PureState w_state(int n);
/// (|0..0> + |1..1>) / sqrt(2) on n qubits.
PureState ghz_state(int n);
PureState product_state(std::span<const PureState> factors);

/// Normalized vector of i.i.d. complex Gaussian amplitudes (Haar measure).
PureState random_pure(const SpaceShape& shape, std::uint64_t seed);

/// Trace of a random pure state on shape x C^rank over the C^rank factor.
Operator random_mixed(const SpaceShape& shape, int rank, std::uint64_t seed);

/// Pure state on shape x C^D with Tr_ancilla = rho. Eigenpairs are taken in
/// descending eigenvalue order, each eigenvector rotated so its first nonzero
/// component is real positive; zero eigenvalues keep their ancilla slot.
PureState purify(const Operator& rho);

}  // namespace qcert

#endif  // QCERT_STATES_HPP
