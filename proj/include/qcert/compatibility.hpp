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

#ifndef QCERT_COMPATIBILITY_HPP
#define QCERT_COMPATIBILITY_HPP

#include <map>
#include <optional>
#include <vector>

#include "qcert/hilbert.hpp"

namespace qcert {

/// Slack below -kTolVerdict certifies a violation.
inline constexpr double kTolVerdict = 1e-9;

/// Claimed reduced states keyed by party subset.
class MarginalSet {
 public:
  explicit MarginalSet(SpaceShape shape) : shape_(std::move(shape)) {}

  /// Validates the key and density matrix; replaces an existing entry.
  void add(SubsetMask parties, Operator rho);

  const SpaceShape& shape() const noexcept { return shape_; }
  const std::map<SubsetMask, Operator>& entries() const noexcept { return entries_; }
  const Operator* find(SubsetMask parties) const;

  /// Nonempty proper subsets with no entry, in increasing mask order.
  std::vector<SubsetMask> missing_proper_subsets() const;

 private:
  SpaceShape shape_;
  std::map<SubsetMask, Operator> entries_;
};

/// Every nonempty proper marginal of a global state.
MarginalSet marginals_of(const Operator& rho);
MarginalSet marginals_of(const PureState& psi);

enum class Verdict { kConsistent, kIncompatible, kInconclusive };

const char* to_string(Verdict v);

/// Outcome of a necessary-condition test. "consistent" never means the
/// marginals are known to come from a common state.
struct CompatReport {
  double sum_odd_proper = 0.0;   // sum of Tr rho_A^2 over odd |A|, A proper
  double sum_even_proper = 0.0;  // same over even |A|, A nonempty proper
  double global_purity = 1.0;    // Tr rho_N^2 used for the full-set term
  bool best_case_global = false; // global purity was not supplied
  double lhs_proper = 0.0;       // sum_odd_proper - sum_even_proper
  double lhs = 0.0;              // with the full-set term included
  double bound = 1.0;
  double slack = 0.0;            // bound - lhs
  Verdict verdict = Verdict::kInconclusive;
  std::map<SubsetMask, double> per_subset_purities;
  std::vector<SubsetMask> missing_subsets;
};

/// Pure global state: full-set term fixed at 1. Any N.
CompatReport check_pure_compatibility(const MarginalSet& marginals);

/// Mixed global state, even N. Without `global_purity` the full-set term takes
/// its most permissive value 1.
CompatReport check_mixed_compatibility(const MarginalSet& marginals, std::optional<double> global_purity);

struct ConsistencyViolation {
  SubsetMask subset;
  SubsetMask superset;
  double max_deviation = 0.0;
};

/// Pairs A < B of present keys whose partial trace Tr_{B-A} rho_B differs from
/// rho_A by more than `tol` in some entry.
std::vector<ConsistencyViolation> consistency_precheck(const MarginalSet& marginals, double tol);

/// check_mixed_compatibility on the marginals of a known state with its true purity.
CompatReport self_check(const Operator& rho);

/// The four-qubit family: diag(2/3, 1/3) singles, W-marginal pairs and
/// |W><W| triples.
MarginalSet w_triplet_marginals();

}  // namespace qcert

#endif  // QCERT_COMPATIBILITY_HPP
