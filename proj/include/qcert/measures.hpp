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

#ifndef QCERT_MEASURES_HPP
#define QCERT_MEASURES_HPP

#include <map>
#include <optional>
#include <vector>

#include "qcert/hilbert.hpp"

namespace qcert {

/// Agreement required between the E routes.
inline constexpr double kTolRoute = 1e-8;

enum class PartitionClass {
  kOddOdd,    // both blocks odd
  kEvenEven,  // both blocks even
};

/// Unordered cut A|B of the parties; the stored block always contains party 0.
class Bipartition {
 public:
  Bipartition(int n_parties, SubsetMask block);

  int n_parties() const noexcept { return n_; }
  SubsetMask a() const noexcept { return a_; }
  SubsetMask b() const { return a_.complement(n_); }
  PartitionClass partition_class() const;

 private:
  int n_;
  SubsetMask a_;
};

struct MeasureReport {
  std::optional<double> value_partitions;
  double value_projector = 0.0;
  std::optional<double> value_subset_sum;
  /// Tr rho_A^2 for every nonempty A, keyed by mask.
  std::map<SubsetMask, double> per_subset_purities;
};

double linear_entropy(const Operator& rho);
/// Mixedness 1 - Tr rho^2 (same quantity as the linear entropy).
double mixedness(const Operator& rho);

/// S_A + S_B - S_AB with linear entropies, A = `split`, B its complement.
double mutual_information(const Operator& rho_ab, SubsetMask split);

/// All 2^(n-1) - 1 unordered cuts of an even number of parties.
std::vector<Bipartition> enumerate_partitions(int n);

/// Tr rho_A^2 for every mask A in [0, 2^N); index 0 holds 1.
std::vector<double> subset_purities(const PureState& psi);

/// Signed sum of linear-entropy mutual informations over odd|odd minus
/// even|even cuts. Even N only.
double entanglement_E_partitions(const PureState& psi);
/// 2^N <P- (x) ... (x) P->. Any N; vanishes for odd N.
double entanglement_E_projector(const PureState& psi);
/// sum_A (-1)^|A| Tr rho_A^2 with the empty set counted as +1. Even N only.
double entanglement_E_subset_sum(const PureState& psi);

/// 2 (1 - Tr rho_A^2); zero for the empty and the full set.
double i_concurrence_sq(const PureState& psi, SubsetMask a);

/// Runs every applicable route. Odd N leaves the partition and subset-sum
/// values empty.
MeasureReport measure_report(const PureState& psi);

}  // namespace qcert

#endif  // QCERT_MEASURES_HPP
