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

#include "qcert/compatibility.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qcert/states.hpp"

namespace qcert {

namespace {

// Re-expresses `sub` (a subset of `super`) in super's local party numbering.
SubsetMask localize(SubsetMask sub, SubsetMask super) {
  std::uint64_t local = 0;
  int j = 0;
  for (int p : super.parties()) {
    if (sub.contains(p)) local |= std::uint64_t{1} << j;
    ++j;
  }
  return SubsetMask(local);
}

// Fills the proper-subset sums; returns false when subsets are missing.
bool accumulate(const MarginalSet& marginals, CompatReport& r) {
  r.missing_subsets = marginals.missing_proper_subsets();
  if (!r.missing_subsets.empty()) {
    r.verdict = Verdict::kInconclusive;
    return false;
  }
  const SubsetMask full = SubsetMask::full(marginals.shape().n_parties());
  std::vector<double> odd, even;
  for (const auto& [mask, rho] : marginals.entries()) {
    if (mask == full) continue;
    const double p = purity(rho);
    r.per_subset_purities[mask] = p;
    (mask.odd() ? odd : even).push_back(p);
  }
  r.sum_odd_proper = pairwise_sum(odd);
  r.sum_even_proper = pairwise_sum(even);
  r.lhs_proper = r.sum_odd_proper - r.sum_even_proper;
  return true;
}

void finish(CompatReport& r, bool full_set_odd) {
  r.lhs = full_set_odd ? r.lhs_proper + r.global_purity : r.lhs_proper - r.global_purity;
  r.bound = 1.0;
  r.slack = r.bound - r.lhs;
  r.verdict = r.slack < -kTolVerdict ? Verdict::kIncompatible : Verdict::kConsistent;
}

}  // namespace

void MarginalSet::add(SubsetMask parties, Operator rho) {
  shape_.check_mask(parties);
  if (parties.empty()) throw Error(ErrorKind::kInvalidArgument, "marginal keys must be nonempty");
  if (!(rho.shape() == shape_.restrict(parties))) {
    std::ostringstream msg;
    msg << "marginal on parties mask " << parties.bits() << " has dimension " << rho.dim()
        << ", expected " << shape_.dim_of(parties);
    throw Error(ErrorKind::kInvalidArgument, msg.str());
  }
  require_density(rho, kTolInput);
  entries_.insert_or_assign(parties, std::move(rho));
}

const Operator* MarginalSet::find(SubsetMask parties) const {
  auto it = entries_.find(parties);
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<SubsetMask> MarginalSet::missing_proper_subsets() const {
  std::vector<SubsetMask> out;
  const std::uint64_t full = SubsetMask::full(shape_.n_parties()).bits();
  for (std::uint64_t bits = 1; bits < full; ++bits)
    if (!entries_.contains(SubsetMask(bits))) out.emplace_back(bits);
  return out;
}

MarginalSet marginals_of(const Operator& rho) {
  MarginalSet out(rho.shape());
  const std::uint64_t full = SubsetMask::full(rho.shape().n_parties()).bits();
  for (std::uint64_t bits = 1; bits < full; ++bits) out.add(SubsetMask(bits), partial_trace(rho, SubsetMask(bits)));
  return out;
}

MarginalSet marginals_of(const PureState& psi) {
  MarginalSet out(psi.shape());
  const std::uint64_t full = SubsetMask::full(psi.shape().n_parties()).bits();
  for (std::uint64_t bits = 1; bits < full; ++bits) out.add(SubsetMask(bits), reduced_density(psi, SubsetMask(bits)));
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kConsistent: return "consistent";
    case Verdict::kIncompatible: return "incompatible";
    case Verdict::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

CompatReport check_pure_compatibility(const MarginalSet& marginals) {
  CompatReport r;
  r.global_purity = 1.0;
  if (!accumulate(marginals, r)) return r;
  finish(r, marginals.shape().n_parties() % 2 == 1);
  return r;
}

CompatReport check_mixed_compatibility(const MarginalSet& marginals, std::optional<double> global_purity) {
  if (marginals.shape().n_parties() % 2 != 0)
    throw Error(ErrorKind::kDomain, "the mixed-state condition needs an even number of parties");
  if (global_purity && !(*global_purity > 0.0 && *global_purity <= 1.0 + kTolInput))
    throw Error(ErrorKind::kInvalidArgument, "global purity must lie in (0, 1]");
  CompatReport r;
  r.best_case_global = !global_purity.has_value();
  r.global_purity = global_purity.value_or(1.0);
  if (!accumulate(marginals, r)) return r;
  finish(r, false);
  return r;
}

std::vector<ConsistencyViolation> consistency_precheck(const MarginalSet& marginals, double tol) {
  std::vector<ConsistencyViolation> out;
  for (const auto& [super, rho_super] : marginals.entries()) {
    for (const auto& [sub, rho_sub] : marginals.entries()) {
      if (sub == super || !sub.is_subset_of(super)) continue;
      const Operator reduced = partial_trace(rho_super, localize(sub, super));
      const double dev = (reduced.matrix() - rho_sub.matrix()).cwiseAbs().maxCoeff();
      if (dev > tol) out.push_back({sub, super, dev});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::pair(a.subset, a.superset) < std::pair(b.subset, b.superset);
  });
  return out;
}

CompatReport self_check(const Operator& rho) {
  if (rho.shape().n_parties() % 2 != 0)
    throw Error(ErrorKind::kDomain, "the mixed-state condition needs an even number of parties");
  return check_mixed_compatibility(marginals_of(rho), purity(rho));
}

MarginalSet w_triplet_marginals() {
  MarginalSet out(SpaceShape({2, 2, 2, 2}));
  constexpr double third = 1.0 / 3.0;
  Matrix single = Matrix::Zero(2, 2);
  single(0, 0) = 2.0 * third;
  single(1, 1) = third;
  Matrix pair = Matrix::Zero(4, 4);
  pair(0, 0) = pair(1, 1) = pair(1, 2) = pair(2, 1) = pair(2, 2) = third;
  const Operator triple = w_state(3).density();
  const std::uint64_t full = SubsetMask::full(4).bits();
  for (std::uint64_t bits = 1; bits < full; ++bits) {
    const SubsetMask mask(bits);
    switch (mask.size()) {
      case 1: out.add(mask, Operator(SpaceShape({2}), single)); break;
      case 2: out.add(mask, Operator(SpaceShape({2, 2}), pair)); break;
      default: out.add(mask, triple); break;
    }
  }
  return out;
}

}  // namespace qcert
