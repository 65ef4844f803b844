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

#include "qcert/measures.hpp"

#include <cmath>

#include "qcert/observables.hpp"

namespace qcert {

namespace {

void require_even(int n) {
  if (n % 2 != 0)
    throw Error(ErrorKind::kDomain, "partition classes undefined for odd N");
}

}  // namespace

Bipartition::Bipartition(int n_parties, SubsetMask block) : n_(n_parties) {
  if (n_parties < 2) throw Error(ErrorKind::kInvalidArgument, "a bipartition needs at least 2 parties");
  const SubsetMask full = SubsetMask::full(n_parties);
  if (!block.is_subset_of(full)) throw Error(ErrorKind::kInvalidArgument, "bipartition mask out of range");
  if (block.empty() || block == full)
    throw Error(ErrorKind::kInvalidArgument, "bipartition blocks must be nonempty and proper");
  a_ = block.contains(0) ? block : block.complement(n_parties);
}

PartitionClass Bipartition::partition_class() const {
  require_even(n_);
  return a_.odd() ? PartitionClass::kOddOdd : PartitionClass::kEvenEven;
}

double linear_entropy(const Operator& rho) { return 1.0 - purity(rho); }

double mixedness(const Operator& rho) { return linear_entropy(rho); }

double mutual_information(const Operator& rho_ab, SubsetMask split) {
  const int n = rho_ab.shape().n_parties();
  rho_ab.shape().check_mask(split);
  if (split.empty() || split == SubsetMask::full(n))
    throw Error(ErrorKind::kInvalidArgument, "mutual information needs a nonempty proper split");
  return linear_entropy(partial_trace(rho_ab, split)) +
         linear_entropy(partial_trace(rho_ab, split.complement(n))) - linear_entropy(rho_ab);
}

std::vector<Bipartition> enumerate_partitions(int n) {
  if (n < 2) throw Error(ErrorKind::kInvalidArgument, "need at least 2 parties");
  require_even(n);
  std::vector<Bipartition> out;
  const std::uint64_t full = SubsetMask::full(n).bits();
  // Masks containing party 0, excluding the full set.
  for (std::uint64_t bits = 1; bits < full; bits += 2) out.emplace_back(n, SubsetMask(bits));
  return out;
}

std::vector<double> subset_purities(const PureState& psi) {
  const int n = psi.shape().n_parties();
  const std::size_t count = std::size_t{1} << n;
  std::vector<double> out(count, 1.0);
  const double norm4 = std::pow(psi.amplitudes().squaredNorm(), 2);
  out[count - 1] = norm4;
  for (std::size_t bits = 1; bits + 1 < count; ++bits) {
    const std::size_t comp = (count - 1) & ~bits;
    // Schmidt symmetry: rho_A and rho_B share their purity.
    if (comp < bits) {
      out[bits] = out[comp];
      continue;
    }
    out[bits] = marginal_purity(psi, SubsetMask(bits));
  }
  return out;
}

double entanglement_E_partitions(const PureState& psi) {
  const int n = psi.shape().n_parties();
  require_even(n);
  const double s_ab = 1.0 - std::pow(psi.amplitudes().squaredNorm(), 2);
  std::vector<double> odd_terms, even_terms;
  for (const Bipartition& p : enumerate_partitions(n)) {
    const double s = linear_entropy(reduced_density(psi, p.a())) +
                     linear_entropy(reduced_density(psi, p.b())) - s_ab;
    (p.partition_class() == PartitionClass::kOddOdd ? odd_terms : even_terms).push_back(s);
  }
  return pairwise_sum(odd_terms) - pairwise_sum(even_terms);
}

double entanglement_E_projector(const PureState& psi) {
  const int n = psi.shape().n_parties();
  return std::ldexp(expectation_pure(psi, SignPattern::all_minus(n)), n);
}

double entanglement_E_subset_sum(const PureState& psi) {
  const int n = psi.shape().n_parties();
  require_even(n);
  const std::vector<double> p = subset_purities(psi);
  std::vector<double> signed_terms(p.size());
  for (std::size_t bits = 0; bits < p.size(); ++bits)
    signed_terms[bits] = SubsetMask(bits).odd() ? -p[bits] : p[bits];
  return pairwise_sum(signed_terms);
}

double i_concurrence_sq(const PureState& psi, SubsetMask a) {
  psi.shape().check_mask(a);
  if (a.empty() || a == SubsetMask::full(psi.shape().n_parties())) return 0.0;
  return 2.0 * (1.0 - marginal_purity(psi, a));
}

MeasureReport measure_report(const PureState& psi) {
  MeasureReport r;
  const int n = psi.shape().n_parties();
  r.value_projector = entanglement_E_projector(psi);
  if (n % 2 == 0) {
    r.value_partitions = entanglement_E_partitions(psi);
    r.value_subset_sum = entanglement_E_subset_sum(psi);
  }
  const std::vector<double> p = subset_purities(psi);
  for (std::size_t bits = 1; bits < p.size(); ++bits) r.per_subset_purities[SubsetMask(bits)] = p[bits];
  return r;
}

}  // namespace qcert
