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

#include "gtest/gtest.h"
#include "qcert/measures.hpp"
#include "qcert/states.hpp"
#include "test_support.hpp"

using namespace qcert;
using namespace qcert::testing;

TEST(MarginalSet, validates_entries) {
  MarginalSet m(SpaceShape({2, 3}));
  EXPECT_THROW(m.add(SubsetMask(), Operator(SpaceShape({2}), Matrix::Identity(2, 2) / 2.0)), Error);
  EXPECT_THROW(m.add(SubsetMask::of({0}), maximally_mixed(SpaceShape({3}))), Error);
  EXPECT_THROW(m.add(SubsetMask::of({2}), maximally_mixed(SpaceShape({2}))), Error);
  EXPECT_THROW(m.add(SubsetMask::of({0}), Operator(SpaceShape({2}), diag({0.6, 0.5}))), Error);
  m.add(SubsetMask::of({0}), maximally_mixed(SpaceShape({2})));
  m.add(SubsetMask::of({0}), Operator(SpaceShape({2}), diag({1.0, 0.0})));
  EXPECT_EQ(m.entries().size(), 1u);
  EXPECT_EQ(m.find(SubsetMask::of({0}))->matrix()(0, 0), Complex(1.0));
  EXPECT_EQ(m.find(SubsetMask::of({1})), nullptr);
  EXPECT_EQ(m.missing_proper_subsets(), std::vector<SubsetMask>{SubsetMask::of({1})});
}

TEST(PureCheck, w_states_saturate) {
  for (int n : {3, 4, 5, 6}) {
    const CompatReport r = check_pure_compatibility(marginals_of(w_state(n)));
    EXPECT_EQ(r.verdict, Verdict::kConsistent);
    EXPECT_NEAR(r.slack, 0.0, 1e-9);
    EXPECT_NEAR(r.lhs, 1.0, 1e-9);
  }
}

TEST(PureCheck, product_states_saturate) {
  const std::vector<PureState> f{random_pure(SpaceShape({2}), 1), random_pure(SpaceShape({3}), 2),
                                 random_pure(SpaceShape({2}), 3), random_pure(SpaceShape({2}), 4)};
  const CompatReport r = check_pure_compatibility(marginals_of(product_state(f)));
  EXPECT_NEAR(r.sum_odd_proper, 8.0, 1e-12);
  EXPECT_NEAR(r.sum_even_proper, 6.0, 1e-12);
  EXPECT_NEAR(r.lhs, 1.0, 1e-12);
}

TEST(PureCheck, lhs_plus_E_is_one) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const PureState psi = random_pure(SpaceShape(seed % 2 ? std::vector<int>{2, 2, 2, 2} : std::vector<int>{2, 3, 2, 2}), seed);
    const CompatReport r = check_pure_compatibility(marginals_of(psi));
    EXPECT_LE(r.lhs, 1.0 + 1e-9);
    EXPECT_NEAR(r.lhs, 1.0 - entanglement_E_subset_sum(psi), 1e-9);
  }
}

TEST(PureCheck, odd_n_identity) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const PureState psi = random_pure(SpaceShape(seed % 2 ? std::vector<int>{2, 3, 2} : std::vector<int>{2, 2, 2, 2, 2}), seed);
    const CompatReport r = check_pure_compatibility(marginals_of(psi));
    EXPECT_NEAR(r.lhs_proper, 0.0, 1e-10);
    EXPECT_NEAR(r.lhs, 1.0, 1e-10);
  }
}

TEST(PureCheck, missing_subsets_are_inconclusive) {
  MarginalSet m = marginals_of(ghz_state(3));
  MarginalSet partial(m.shape());
  for (const auto& [mask, rho] : m.entries())
    if (mask != SubsetMask::of({0, 2})) partial.add(mask, rho);
  const CompatReport r = check_pure_compatibility(partial);
  EXPECT_EQ(r.verdict, Verdict::kInconclusive);
  EXPECT_EQ(r.missing_subsets, std::vector<SubsetMask>{SubsetMask::of({0, 2})});
}

TEST(MixedCheck, w_triplet_set_is_incompatible) {
  const MarginalSet m = w_triplet_marginals();
  EXPECT_TRUE(consistency_precheck(m, 1e-10).empty());
  const CompatReport r = check_mixed_compatibility(m, std::nullopt);
  EXPECT_EQ(r.verdict, Verdict::kIncompatible);
  EXPECT_TRUE(r.best_case_global);
  EXPECT_NEAR(r.sum_odd_proper, 4.0 + 20.0 / 9, 1e-12);
  EXPECT_NEAR(r.sum_even_proper, 30.0 / 9, 1e-12);
  EXPECT_NEAR(r.lhs_proper, 26.0 / 9, 1e-12);
  EXPECT_NEAR(r.slack, 1.0 - (26.0 / 9 - 1.0), 1e-12);
  for (const auto& [mask, p] : r.per_subset_purities) EXPECT_NEAR(p, mask.size() == 3 ? 1.0 : 5.0 / 9, 1e-15);
}

TEST(MixedCheck, maximally_mixed_four_qubits) {
  const Operator rho = maximally_mixed(SpaceShape({2, 2, 2, 2}));
  const CompatReport r = check_mixed_compatibility(marginals_of(rho), 1.0 / 16);
  EXPECT_NEAR(r.lhs, 0.9375, 1e-12);
  EXPECT_EQ(r.verdict, Verdict::kConsistent);
  EXPECT_FALSE(r.best_case_global);
}

TEST(MixedCheck, rejects_odd_n_and_bad_purity) {
  EXPECT_THROW(check_mixed_compatibility(marginals_of(ghz_state(3)), std::nullopt), Error);
  const MarginalSet m = marginals_of(ghz_state(4));
  EXPECT_THROW(check_mixed_compatibility(m, 0.0), Error);
  EXPECT_THROW(check_mixed_compatibility(m, 1.5), Error);
}

TEST(MixedCheck, best_case_only_loosens) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Operator rho = random_mixed(SpaceShape({2, 2, 3, 2}), 1 + static_cast<int>(seed % 24), seed);
    const MarginalSet m = marginals_of(rho);
    const CompatReport truth = check_mixed_compatibility(m, purity(rho));
    const CompatReport best = check_mixed_compatibility(m, std::nullopt);
    EXPECT_GE(truth.slack, -1e-9);
    EXPECT_GE(best.slack, truth.slack - 1e-12);
  }
}

TEST(SelfCheck, named_states) {
  const CompatReport ghz = self_check(ghz_state(4).density());
  EXPECT_NEAR(ghz.lhs, 0.0, 1e-12);
  EXPECT_NEAR(ghz.slack, 1.0, 1e-12);
  const CompatReport w = self_check(w_state(4).density());
  EXPECT_NEAR(w.lhs, 1.0, 1e-12);
  EXPECT_NEAR(w.slack, 0.0, 1e-12);
  EXPECT_THROW(self_check(ghz_state(3).density()), Error);
}

TEST(SelfCheck, six_party_random) {
  for (std::uint64_t seed = 0; seed < 5; ++seed)
    EXPECT_GE(self_check(random_mixed(SpaceShape(std::vector<int>(6, 2)), 8, seed)).slack, -1e-9);
}

TEST(ConsistencyPrecheck, detects_replaced_single) {
  const MarginalSet m = marginals_of(random_pure(SpaceShape({2, 2, 2}), 3));
  EXPECT_TRUE(consistency_precheck(m, 1e-10).empty());
  MarginalSet broken = m;
  broken.add(SubsetMask::of({0}), maximally_mixed(SpaceShape({2})));
  const auto v = consistency_precheck(broken, 1e-10);
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0].subset, SubsetMask::of({0}));
  EXPECT_EQ(v[0].superset, SubsetMask::of({0, 1}));
  EXPECT_EQ(v[1].superset, SubsetMask::of({0, 2}));
  EXPECT_GT(v[0].max_deviation, 1e-3);
}

TEST(Verdict, names) {
  EXPECT_STREQ(to_string(Verdict::kConsistent), "consistent");
  EXPECT_STREQ(to_string(Verdict::kIncompatible), "incompatible");
  EXPECT_STREQ(to_string(Verdict::kInconclusive), "inconclusive");
}
