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

#ifndef QCERT_MONOGAMY_HPP
#define QCERT_MONOGAMY_HPP

#include <vector>

#include "qcert/hilbert.hpp"

namespace qcert {

/// Squared I-concurrences C^2_{A|N-A} summed over A within an index set I:
/// odd |A| on the left, even |A| on the right.
struct MonogamyReport {
  SubsetMask index_set;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;  // lhs >= rhs - kTolVerdict
};

/// Each cut is taken against the full complement N - A, with A ranging over
/// the subsets of `index_set` (|index_set| even, >= 2).
MonogamyReport monogamy_check(const PureState& psi, SubsetMask index_set);

/// One report per even-cardinality index set of size >= 2, by increasing mask.
std::vector<MonogamyReport> monogamy_scan(const PureState& psi);

/// Global versus local mixedness: lhs sums D(rho_A) over nonempty even |A|
/// (the full set included), rhs over odd |A|.
struct DisorderReport {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;  // lhs <= rhs + kTolVerdict
};

/// Even N only.
DisorderReport disorder_check(const Operator& rho);

}  // namespace qcert

#endif  // QCERT_MONOGAMY_HPP
