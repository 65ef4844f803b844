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

#include "qcert/monogamy.hpp"

#include "qcert/compatibility.hpp"
#include "qcert/measures.hpp"

namespace qcert {

MonogamyReport monogamy_check(const PureState& psi, SubsetMask index_set) {
  psi.shape().check_mask(index_set);
  if (index_set.odd() || index_set.size() < 2)
    throw Error(ErrorKind::kInvalidArgument, "index set must have even cardinality >= 2");
  std::vector<double> odd, even;
  // Enumerate the nonempty submasks of the index set.
  const std::uint64_t set = index_set.bits();
  for (std::uint64_t a = set; a != 0; a = (a - 1) & set) {
    const SubsetMask cut(a);
    (cut.odd() ? odd : even).push_back(i_concurrence_sq(psi, cut));
  }
  MonogamyReport r;
  r.index_set = index_set;
  r.lhs = pairwise_sum(odd);
  r.rhs = pairwise_sum(even);
  r.holds = r.lhs >= r.rhs - kTolVerdict;
  return r;
}

std::vector<MonogamyReport> monogamy_scan(const PureState& psi) {
  std::vector<MonogamyReport> out;
  const std::uint64_t full = SubsetMask::full(psi.shape().n_parties()).bits();
  for (std::uint64_t bits = 1; bits <= full; ++bits) {
    const SubsetMask set(bits);
    if (!set.odd()) out.push_back(monogamy_check(psi, set));
  }
  return out;
}

DisorderReport disorder_check(const Operator& rho) {
  const int n = rho.shape().n_parties();
  if (n % 2 != 0) throw Error(ErrorKind::kDomain, "disorder relation needs an even number of parties");
  std::vector<double> odd, even;
  const std::uint64_t full = SubsetMask::full(n).bits();
  for (std::uint64_t bits = 1; bits <= full; ++bits) {
    const SubsetMask a(bits);
    (a.odd() ? odd : even).push_back(mixedness(partial_trace(rho, a)));
  }
  DisorderReport r;
  r.lhs = pairwise_sum(even);
  r.rhs = pairwise_sum(odd);
  r.holds = r.lhs <= r.rhs + kTolVerdict;
  return r;
}

}  // namespace qcert
