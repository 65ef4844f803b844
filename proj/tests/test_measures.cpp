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

#include "gtest/gtest.h"
#include "qcert/oracle.hpp"
#include "qcert/states.hpp"
#include "test_support.hpp"

using namespace qcert;
using namespace qcert::testing;

namespace {

void expect_domain_error(auto&& fn, const std::string& message) {
  try {
    fn();
    FAIL() << "expected a domain error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDomain);
    EXPECT_EQ(std::string(e.what()), message);
  }
}

}  // namespace

TEST(LinearEntropy, reference_values) {
  EXPECT_NEAR(linear_entropy(random_pure(SpaceShape({2, 3}), 1).density()), 0.0, 1e-12);
  EXPECT_NEAR(linear_entropy(Operator(SpaceShape({2}), diag({2.0 / 3, 1.0 / 3}))), 4.0 / 9, 1e-15);
  EXPECT_NEAR(linear_entropy(maximally_mixed(SpaceShape({3}))), 2.0 / 3, 1e-15);
  EXPECT_NEAR(mixedness(maximally_mixed(SpaceShape({4}))), 0.75, 1e-15);
  EXPECT_NEAR(mixedness(Operator(SpaceShape({2}), diag({2.0 / 3, 1.0 / 3}))), 4.0 / 9, 1e-15);
}

TEST(MutualInformation, reference_values) {
  const std::vector<PureState> f{random_pure(SpaceShape({2}), 3), random_pure(SpaceShape({3}), 4)};
  EXPECT_NEAR(mutual_information(product_state(f).density(), SubsetMask::of({0})), 0.0, 1e-12);
  EXPECT_NEAR(mutual_information(ghz_state(2).density(), SubsetMask::of({0})), 1.0, 1e-15);
  EXPECT_NEAR(mutual_information(w_state(3).density(), SubsetMask::of({0})), 8.0 / 9, 1e-15);
  EXPECT_THROW(mutual_information(ghz_state(2).density(), SubsetMask()), Error);
  EXPECT_THROW(mutual_information(ghz_state(2).density(), SubsetMask::full(2)), Error);
}

TEST(Partitions, counts_and_classes) {
  for (int n : {2, 4, 6, 8}) {
    const auto parts = enumerate_partitions(n);
    EXPECT_EQ(parts.size(), (std::size_t{1} << (n - 1)) - 1);
    int p1 = 0, p2 = 0;
    for (const auto& p : parts) {
      EXPECT_TRUE(p.a().contains(0));
      (p.partition_class() == PartitionClass::kOddOdd ? p1 : p2)++;
    }
    EXPECT_EQ(p1, 1 << (n - 2));
    EXPECT_EQ(p2, (1 << (n - 2)) - 1);
  }
  const auto four = enumerate_partitions(4);
  for (const auto& p : four)
    EXPECT_EQ(p.partition_class() == PartitionClass::kOddOdd, p.a().size() == 1 || p.a().size() == 3);
  expect_domain_error([] { enumerate_partitions(3); }, "partition classes undefined for odd N");
  EXPECT_THROW(Bipartition(4, SubsetMask()), Error);
  EXPECT_THROW(Bipartition(4, SubsetMask::full(4)), Error);
}

TEST(Bipartition, canonical_block_contains_party_zero) {
  const Bipartition p(4, SubsetMask::of({1, 2}));
  EXPECT_EQ(p.a(), SubsetMask::of({0, 3}));
  EXPECT_EQ(p.b(), SubsetMask::of({1, 2}));
  expect_domain_error([] { (void)Bipartition(3, SubsetMask::of({0})).partition_class(); },
                      "partition classes undefined for odd N");
}

TEST(EMeasure, named_states_on_all_routes) {
  struct Case {
    PureState psi;
    double expected;
  };
  const std::vector<Case> cases{{w_state(4), 0.0}, {w_state(6), 0.0}, {ghz_state(4), 1.0}, {ghz_state(2), 1.0},
                                {ghz_state(6), 1.0}, {basis_state({2, 3, 2, 2}, 7), 0.0}};
  for (const auto& c : cases) {
    EXPECT_NEAR(entanglement_E_partitions(c.psi), c.expected, 1e-12);
    EXPECT_NEAR(entanglement_E_projector(c.psi), c.expected, 1e-12);
    EXPECT_NEAR(entanglement_E_subset_sum(c.psi), c.expected, 1e-12);
    EXPECT_NEAR(oracle::exhaustive_E(c.psi), c.expected, 1e-12);
  }
}

TEST(EMeasure, odd_n_domain_behaviour) {
  const PureState psi = random_pure(SpaceShape({2, 3, 2}), 11);
  expect_domain_error([&] { entanglement_E_partitions(psi); }, "partition classes undefined for odd N");
  expect_domain_error([&] { entanglement_E_subset_sum(psi); }, "partition classes undefined for odd N");
  EXPECT_NEAR(entanglement_E_projector(psi), 0.0, 1e-12);
  EXPECT_NEAR(entanglement_E_projector(w_state(3)), 0.0, 1e-12);
  EXPECT_NEAR(entanglement_E_projector(ghz_state(5)), 0.0, 1e-12);
}

TEST(EMeasure, routes_agree_and_nonnegative) {
  const std::vector<std::vector<int>> profiles{{2, 2}, {2, 3}, {2, 2, 2, 2}, {2, 3, 2, 3}, {3, 3, 2, 2}};
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const PureState psi = random_pure(SpaceShape(profiles[seed % profiles.size()]), seed);
    const double a = entanglement_E_partitions(psi);
    const double b = entanglement_E_projector(psi);
    const double c = entanglement_E_subset_sum(psi);
    EXPECT_NEAR(a, b, 1e-10);
    EXPECT_NEAR(b, c, 1e-10);
    EXPECT_GE(b, -1e-10);
  }
}

TEST(EMeasure, two_party_identities) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const PureState psi = random_pure(SpaceShape({2 + static_cast<int>(seed % 2), 3}), seed);
    const double e = entanglement_E_projector(psi);
    EXPECT_NEAR(e, mutual_information(psi.density(), SubsetMask::of({0})), 1e-10);
    EXPECT_NEAR(e, i_concurrence_sq(psi, SubsetMask::of({0})), 1e-10);
    EXPECT_NEAR(e, i_concurrence_sq(psi, SubsetMask::of({1})), 1e-10);
  }
}

TEST(EMeasure, invariant_under_local_unitaries_and_relabeling) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const PureState psi = random_pure(SpaceShape({2, 3, 2, 2}), seed);
    const double e = entanglement_E_subset_sum(psi);
    const int party = static_cast<int>(seed % 4);
    const PureState rotated = apply_local(psi, party, random_unitary(psi.shape().dim(party), seed + 77));
    EXPECT_NEAR(entanglement_E_partitions(rotated), e, 1e-9);
    EXPECT_NEAR(entanglement_E_projector(rotated), e, 1e-9);
    EXPECT_NEAR(entanglement_E_subset_sum(rotated), e, 1e-9);
    const PureState relabeled = permute_parties(psi, random_permutation(4, seed));
    EXPECT_NEAR(entanglement_E_projector(relabeled), e, 1e-10);
    EXPECT_NEAR(entanglement_E_partitions(relabeled), e, 1e-10);
  }
}

TEST(IConcurrence, reference_values) {
  EXPECT_NEAR(i_concurrence_sq(ghz_state(2), SubsetMask::of({0})), 1.0, 1e-15);
  EXPECT_EQ(i_concurrence_sq(ghz_state(3), SubsetMask()), 0.0);
  EXPECT_EQ(i_concurrence_sq(ghz_state(3), SubsetMask::full(3)), 0.0);
  EXPECT_NEAR(i_concurrence_sq(ghz_state(3), SubsetMask::of({0, 1})), 1.0, 1e-15);
}

TEST(SubsetPurities, layout) {
  const auto p = subset_purities(w_state(4));
  ASSERT_EQ(p.size(), 16u);
  EXPECT_EQ(p[0], 1.0);
  EXPECT_NEAR(p[15], 1.0, 1e-15);
  EXPECT_NEAR(p[0b0001], 5.0 / 8, 1e-15);
  EXPECT_NEAR(p[0b0110], 0.5, 1e-15);
  EXPECT_NEAR(p[0b1110], 5.0 / 8, 1e-15);
}

TEST(MeasureReport, fields) {
  const MeasureReport even = measure_report(ghz_state(4));
  ASSERT_TRUE(even.value_partitions && even.value_subset_sum);
  EXPECT_NEAR(*even.value_partitions, 1.0, 1e-12);
  EXPECT_NEAR(even.value_projector, 1.0, 1e-12);
  EXPECT_EQ(even.per_subset_purities.size(), 15u);

  const MeasureReport odd = measure_report(ghz_state(3));
  EXPECT_FALSE(odd.value_partitions.has_value());
  EXPECT_FALSE(odd.value_subset_sum.has_value());
  EXPECT_NEAR(odd.value_projector, 0.0, 1e-12);
}
