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

#include "qcert/observables.hpp"

#include <cmath>

#include "gtest/gtest.h"
#include "qcert/oracle.hpp"
#include "qcert/states.hpp"
#include "test_support.hpp"

using namespace qcert;
using namespace qcert::testing;

namespace {

int rank_of(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  int r = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) r += es.eigenvalues()(i) > 0.5;
  return r;
}

}  // namespace

TEST(SignPattern, parse_and_counts) {
  const SignPattern p = SignPattern::parse("+-+-");
  EXPECT_EQ(p.n_parties(), 4);
  EXPECT_EQ(p.antisym_count(), 2);
  EXPECT_EQ(p.sign(1), Sign::kMinus);
  EXPECT_EQ(p.str(), "+-+-");
  EXPECT_EQ(SignPattern::all_minus(3).antisym_count(), 3);
  EXPECT_THROW(SignPattern::parse("+x"), Error);
  EXPECT_THROW(SignPattern(2, SubsetMask(4)), Error);
}

TEST(PairProjector, algebra) {
  for (int d : {2, 3, 4}) {
    const Matrix p = pair_projector(d, Sign::kPlus).matrix();
    const Matrix m = pair_projector(d, Sign::kMinus).matrix();
    const Matrix id = Matrix::Identity(d * d, d * d);
    EXPECT_LT(max_abs_diff(p + m, id), 1e-12);
    EXPECT_LT(max_abs_diff(p * p, p), 1e-12);
    EXPECT_LT(max_abs_diff(m * m, m), 1e-12);
    EXPECT_LT(max_abs_diff(p * m, Matrix::Zero(d * d, d * d)), 1e-12);
    EXPECT_EQ(rank_of(m), d * (d - 1) / 2);
    EXPECT_EQ(rank_of(p), d * (d + 1) / 2);
  }
}

TEST(PairProjector, qubit_singlet) {
  Vector singlet = Vector::Zero(4);
  singlet(1) = 1.0 / std::sqrt(2.0);
  singlet(2) = -1.0 / std::sqrt(2.0);
  const Matrix expected = singlet * singlet.adjoint();
  EXPECT_LT(max_abs_diff(pair_projector(2, Sign::kMinus).matrix(), expected), 1e-15);
  EXPECT_LT(max_abs_diff(observable(SpaceShape({2}), SignPattern::parse("-")).matrix(), expected), 1e-15);
}

TEST(Observable, completeness) {
  for (const auto& dims : std::vector<std::vector<int>>{{2, 2}, {2, 3}, {2, 2, 2}}) {
    const SpaceShape shape(dims);
    const auto n = shape.n_parties();
    const auto d2 = static_cast<Eigen::Index>(shape.total_dim() * shape.total_dim());
    Matrix sum = Matrix::Zero(d2, d2);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits)
      sum += observable(shape, SignPattern(n, SubsetMask(bits))).matrix();
    EXPECT_LT(max_abs_diff(sum, Matrix::Identity(d2, d2)), 1e-12);
  }
}

TEST(Observable, symmetric_fixes_identical_products) {
  const SpaceShape shape({2, 3});
  const Matrix a = observable(shape, SignPattern::all_plus(2)).matrix();
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const std::vector<PureState> f{random_pure(SpaceShape({2}), seed), random_pure(SpaceShape({3}), seed + 100)};
    const Vector v = doubled_vector(product_state(f));
    EXPECT_LT((a * v - v).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Observable, cap_exceeded) {
  EXPECT_THROW(observable(SpaceShape({2, 2, 2, 2, 2, 2, 2}), SignPattern::all_minus(7)), Error);
}

TEST(ExpectationPure, reference_values) {
  const PureState bell = ghz_state(2);
  EXPECT_NEAR(expectation_pure(bell, SignPattern::parse("--")), 0.25, 1e-15);
  EXPECT_NEAR(oracle::naive_expectation(oracle::doubled_density(bell), SignPattern::parse("--")), 0.25, 1e-15);
  const std::vector<PureState> f{random_pure(SpaceShape({2}), 1), random_pure(SpaceShape({3}), 2),
                                 random_pure(SpaceShape({2}), 3)};
  EXPECT_NEAR(expectation_pure(product_state(f), SignPattern::all_minus(3)), 0.0, 1e-15);
}

TEST(ExpectationPure, odd_patterns_vanish_and_sum_is_one) {
  const std::vector<std::vector<int>> profiles{{2, 2}, {2, 3, 2}, {3, 3}, {2, 2, 2, 2}, {2, 2, 3}};
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const SpaceShape shape(profiles[seed % profiles.size()]);
    const PureState psi = random_pure(shape, seed);
    const int n = shape.n_parties();
    double total = 0.0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      const SignPattern p(n, SubsetMask(bits));
      const double e = expectation_pure(psi, p);
      EXPECT_GE(e, -1e-12);
      EXPECT_LE(e, 1.0 + 1e-12);
      if (p.antisym_count() % 2 == 1) {
        EXPECT_NEAR(e, 0.0, 1e-12);
      }
      total += e;
    }
    EXPECT_NEAR(total, 1.0, 1e-10);
  }
}

TEST(ExpectationPure, matches_oracle) {
  const std::vector<std::vector<int>> profiles{{2, 2}, {2, 3}, {2, 2, 2}, {2, 2, 2, 2}, {3, 3}, {2, 2, 3}};
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const SpaceShape shape(profiles[seed % profiles.size()]);
    const PureState psi = random_pure(shape, 500 + seed);
    const Operator pair = oracle::doubled_density(psi);
    const int n = shape.n_parties();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      const SignPattern p(n, SubsetMask(bits));
      EXPECT_NEAR(expectation_pure(psi, p), oracle::naive_expectation(pair, p), 1e-10);
    }
  }
}

TEST(ExpectationMixed, reference_values) {
  EXPECT_NEAR(expectation_mixed(maximally_mixed(SpaceShape({2})), SignPattern::parse("-")), 0.25, 1e-15);
  const PureState psi = random_pure(SpaceShape({2, 3}), 3);
  EXPECT_NEAR(expectation_mixed(psi.density(), SignPattern::parse("-+")), 0.0, 1e-12);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Operator rho = random_mixed(SpaceShape({2, 2, 2}), 4, seed);
    double total = 0.0;
    for (std::uint64_t bits = 0; bits < 8; ++bits) total += expectation_mixed(rho, SignPattern(3, SubsetMask(bits)));
    EXPECT_NEAR(total, 1.0, 1e-10);
  }
}

TEST(ExpectationMixed, matches_materialized_trace) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const SpaceShape shape(seed % 2 ? std::vector<int>{2, 2} : std::vector<int>{2, 3});
    const Operator rho = random_mixed(shape, 1 + static_cast<int>(seed % shape.total_dim()), seed);
    const Operator pair = tensor(rho, rho);
    for (std::uint64_t bits = 0; bits < 4; ++bits) {
      const SignPattern p(2, SubsetMask(bits));
      EXPECT_NEAR(expectation_mixed(rho, p), oracle::naive_expectation(pair, p), 1e-10);
    }
  }
}

TEST(PurityViaObservables, reference_and_random) {
  EXPECT_NEAR(purity_via_observables(Operator(SpaceShape({2}), diag({2.0 / 3, 1.0 / 3}))), 5.0 / 9, 1e-12);
  for (int d : {2, 3, 4}) EXPECT_NEAR(purity_via_observables(maximally_mixed(SpaceShape({d}))), 1.0 / d, 1e-12);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Operator rho = random_mixed(SpaceShape({2, 2, 2}), 1 + static_cast<int>(seed % 8), seed);
    EXPECT_NEAR(purity_via_observables(rho), purity(rho), 1e-9);
  }
}

TEST(SwapSubset, reference_values_and_purity_identity) {
  const PureState bell = ghz_state(2);
  EXPECT_NEAR(swap_subset_expectation(bell, SubsetMask()), 1.0, 1e-15);
  EXPECT_NEAR(swap_subset_expectation(bell, SubsetMask::full(2)), 1.0, 1e-15);
  EXPECT_NEAR(swap_subset_expectation(bell, SubsetMask::of({0})), 0.5, 1e-15);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const PureState psi = random_pure(SpaceShape({2, 3, 2}), seed);
    const Operator rho = psi.density();
    for (std::uint64_t bits = 0; bits < 8; ++bits)
      EXPECT_NEAR(swap_subset_expectation(psi, SubsetMask(bits)), purity(partial_trace(rho, SubsetMask(bits))), 1e-10);
  }
}

TEST(ApplySwap, is_involution) {
  const SpaceShape shape({2, 3, 2});
  Vector v = doubled_vector(random_pure(shape, 4));
  const Vector original = v;
  apply_swap(shape, SubsetMask::of({0, 1}), v);
  EXPECT_GT((v - original).cwiseAbs().maxCoeff(), 1e-3);
  apply_swap(shape, SubsetMask::of({0, 1}), v);
  EXPECT_EQ(v, original);
}
