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

#ifndef QCERT_ORACLE_HPP
#define QCERT_ORACLE_HPP

#include "qcert/hilbert.hpp"
#include "qcert/observables.hpp"

// Slow reference implementations. They share no index arithmetic with the
// fast paths and are meant for small inputs only.

namespace qcert::oracle {

inline constexpr std::size_t kMaxPartialTraceDim = 64;
inline constexpr std::size_t kMaxDoubledDim = 256;
inline constexpr int kMaxExhaustiveParties = 8;

/// Partial trace by explicit loops over full multi-indices. D <= 64.
Operator naive_partial_trace(const Operator& rho, SubsetMask keep);

/// Tr(A_pattern * state_pair) with A materialized. `state_pair` lives on the
/// doubled shape (dims ++ dims) of total dimension <= 256.
double naive_expectation(const Operator& state_pair, const SignPattern& pattern);

/// |psi><psi| (x) |psi><psi| in the copy-major doubled layout.
Operator doubled_density(const PureState& psi);

/// Signed odd|odd minus even|even sum of mutual informations, every marginal traced
/// from |psi><psi| by index loops. Even N <= 8, D <= 256.
double exhaustive_E(const PureState& psi);

}  // namespace qcert::oracle

#endif  // QCERT_ORACLE_HPP
