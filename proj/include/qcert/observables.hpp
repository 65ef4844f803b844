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

#ifndef QCERT_OBSERVABLES_HPP
#define QCERT_OBSERVABLES_HPP

#include <string>

#include "qcert/hilbert.hpp"

// Two-copy observables. The doubled space is laid out copy-major: all parties
// of copy 1, then all parties of copy 2, so party i's pair occupies factor
// positions (i, N + i) and the doubled index is x * D + y.

namespace qcert {

enum class Sign { kPlus, kMinus };

/// Choice of symmetric (+) or antisymmetric (-) projector per party.
class SignPattern {
 public:
  SignPattern(int n_parties, SubsetMask minus);

  static SignPattern all_plus(int n) { return {n, SubsetMask()}; }
  static SignPattern all_minus(int n) { return {n, SubsetMask::full(n)}; }
  /// Parses a string such as "+-+-".
  static SignPattern parse(const std::string& text);

  int n_parties() const noexcept { return n_; }
  SubsetMask minus() const noexcept { return minus_; }
  Sign sign(int party) const { return minus_.contains(party) ? Sign::kMinus : Sign::kPlus; }
  int antisym_count() const noexcept { return minus_.size(); }
  std::string str() const;

 private:
  int n_;
  SubsetMask minus_;
};

/// (I +- SWAP) / 2 on C^d x C^d.
Operator pair_projector(int d, Sign sign);

/// Materialized A = (x)_i P_{s_i} on the doubled space. Needs D^2 within the
/// operator cap; the contraction routes below avoid this.
Operator observable(const SpaceShape& shape, const SignPattern& pattern);

/// Applies (x)_i P_{s_i} to a doubled vector in place.
void apply_pattern(const SpaceShape& shape, const SignPattern& pattern, Vector& doubled);
/// Applies SWAP on the parties of `parties` to a doubled vector in place.
void apply_swap(const SpaceShape& shape, SubsetMask parties, Vector& doubled);

/// psi (x) psi as a doubled vector.
Vector doubled_vector(const PureState& psi);

/// <psi psi| A_pattern |psi psi> by per-party contractions.
double expectation_pure(const PureState& psi, const SignPattern& pattern);

/// Tr(A_pattern rho (x) rho) = sum_kl l_k l_l <k l|A|k l> over the eigenpairs
/// of rho.
double expectation_mixed(const Operator& rho, const SignPattern& pattern);

/// 1 - 2 * sum over patterns with an odd number of minus signs.
double purity_via_observables(const Operator& rho);

/// <psi psi| SWAP_A |psi psi>, which equals Tr rho_A^2.
double swap_subset_expectation(const PureState& psi, SubsetMask parties);

}  // namespace qcert

#endif  // QCERT_OBSERVABLES_HPP
