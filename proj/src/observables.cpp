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

#include <sstream>

#include <Eigen/Eigenvalues>

namespace qcert {

namespace {

void check_doubled(const SpaceShape& shape) {
  const std::size_t d = shape.total_dim();
  if (d * d > kVectorCap) throw Error(ErrorKind::kCapExceeded, "doubled vector exceeds 2^20 amplitudes");
}

void check_pattern(const SpaceShape& shape, const SignPattern& pattern) {
  if (pattern.n_parties() != shape.n_parties()) {
    std::ostringstream msg;
    msg << "sign pattern has " << pattern.n_parties() << " entries for " << shape.n_parties()
        << " parties";
    throw Error(ErrorKind::kInvalidArgument, msg.str());
  }
}

// Calls f(lo, hi) for every doubled index pair exchanged by SWAP on `party`,
// with lo < hi. Diagonal indices (equal digits) are reported as f(i, i).
template <typename F>
void for_each_swap_pair(const SpaceShape& shape, int party, F&& f) {
  const std::size_t dim = shape.total_dim();
  const std::size_t stride = shape.stride(party);
  const auto d = static_cast<std::size_t>(shape.dim(party));
  for (std::size_t x = 0; x < dim; ++x) {
    const std::size_t a = (x / stride) % d;
    for (std::size_t y = 0; y < dim; ++y) {
      const std::size_t b = (y / stride) % d;
      if (a > b) continue;
      const std::size_t i = x * dim + y;
      if (a == b) {
        f(i, i);
      } else {
        const std::size_t xs = x + (b - a) * stride;
        const std::size_t ys = y - (b - a) * stride;
        f(i, xs * dim + ys);
      }
    }
  }
}

}  // namespace

SignPattern::SignPattern(int n_parties, SubsetMask minus) : n_(n_parties), minus_(minus) {
  if (n_parties < 1 || n_parties > 63)
    throw Error(ErrorKind::kInvalidArgument, "sign pattern needs 1..63 parties");
  if (!minus.is_subset_of(SubsetMask::full(n_parties)))
    throw Error(ErrorKind::kInvalidArgument, "sign pattern mask out of range");
}

SignPattern SignPattern::parse(const std::string& text) {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '-') {
      bits |= std::uint64_t{1} << i;
    } else if (text[i] != '+') {
      throw Error(ErrorKind::kInvalidArgument, "sign pattern must consist of '+' and '-'");
    }
  }
  return SignPattern(static_cast<int>(text.size()), SubsetMask(bits));
}

std::string SignPattern::str() const {
  std::string s;
  for (int i = 0; i < n_; ++i) s += minus_.contains(i) ? '-' : '+';
  return s;
}

Operator pair_projector(int d, Sign sign) {
  if (d < 2) throw Error(ErrorKind::kInvalidArgument, "pair projector needs d >= 2");
  const double s = sign == Sign::kPlus ? 1.0 : -1.0;
  const Eigen::Index dd = Eigen::Index{d} * d;
  Matrix m = Matrix::Identity(dd, dd) * 0.5;
  for (Eigen::Index a = 0; a < d; ++a)
    for (Eigen::Index b = 0; b < d; ++b) m(a * d + b, b * d + a) += 0.5 * s;
  return Operator(SpaceShape({d, d}), std::move(m));
}

Operator observable(const SpaceShape& shape, const SignPattern& pattern) {
  check_pattern(shape, pattern);
  const std::size_t dim = shape.total_dim();
  if (dim * dim > operator_cap())
    throw Error(ErrorKind::kCapExceeded, "doubled operator exceeds the operator cap");

  // Pair-major product (x0 y0)(x1 y1)... then reindex to copy-major.
  const int n = shape.n_parties();
  Operator pair_major = pair_projector(shape.dim(0), pattern.sign(0));
  for (int i = 1; i < n; ++i) pair_major = tensor(pair_major, pair_projector(shape.dim(i), pattern.sign(i)));

  std::vector<Eigen::Index> to_pair_major(dim * dim);
  for (std::size_t x = 0; x < dim; ++x) {
    for (std::size_t y = 0; y < dim; ++y) {
      std::size_t idx = 0;
      for (int i = 0; i < n; ++i) {
        const auto d = static_cast<std::size_t>(shape.dim(i));
        const std::size_t xi = (x / shape.stride(i)) % d;
        const std::size_t yi = (y / shape.stride(i)) % d;
        idx = idx * d * d + xi * d + yi;
      }
      to_pair_major[x * dim + y] = static_cast<Eigen::Index>(idx);
    }
  }
  const auto dd = static_cast<Eigen::Index>(dim * dim);
  Matrix m(dd, dd);
  const Matrix& src = pair_major.matrix();
  for (Eigen::Index r = 0; r < dd; ++r)
    for (Eigen::Index c = 0; c < dd; ++c)
      m(r, c) = src(to_pair_major[static_cast<std::size_t>(r)], to_pair_major[static_cast<std::size_t>(c)]);
  return Operator(shape.concat(shape), std::move(m));
}

void apply_swap(const SpaceShape& shape, SubsetMask parties, Vector& doubled) {
  shape.check_mask(parties);
  for (int p : parties.parties()) {
    for_each_swap_pair(shape, p, [&](std::size_t i, std::size_t j) {
      if (i != j) std::swap(doubled(static_cast<Eigen::Index>(i)), doubled(static_cast<Eigen::Index>(j)));
    });
  }
}

void apply_pattern(const SpaceShape& shape, const SignPattern& pattern, Vector& doubled) {
  check_pattern(shape, pattern);
  for (int p = 0; p < shape.n_parties(); ++p) {
    const double s = pattern.sign(p) == Sign::kPlus ? 1.0 : -1.0;
    for_each_swap_pair(shape, p, [&](std::size_t i, std::size_t j) {
      auto& u = doubled(static_cast<Eigen::Index>(i));
      if (i == j) {
        if (s < 0) u = 0.0;
        return;
      }
      auto& w = doubled(static_cast<Eigen::Index>(j));
      const Complex nu = 0.5 * (u + s * w);
      const Complex nw = 0.5 * (w + s * u);
      u = nu;
      w = nw;
    });
  }
}

Vector doubled_vector(const PureState& psi) {
  check_doubled(psi.shape());
  const Vector& a = psi.amplitudes();
  const Eigen::Index d = a.size();
  Vector v(d * d);
  for (Eigen::Index x = 0; x < d; ++x) v.segment(x * d, d) = a(x) * a;
  return v;
}

double expectation_pure(const PureState& psi, const SignPattern& pattern) {
  check_pattern(psi.shape(), pattern);
  Vector v = doubled_vector(psi);
  apply_pattern(psi.shape(), pattern, v);
  // A is an orthogonal projector, so <v|A|v> = |A v|^2.
  return v.squaredNorm();
}

double expectation_mixed(const Operator& rho, const SignPattern& pattern) {
  const SpaceShape& shape = rho.shape();
  check_pattern(shape, pattern);
  check_doubled(shape);
  const Matrix herm = (rho.matrix() + rho.matrix().adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm);
  const Eigen::VectorXd& lambda = solver.eigenvalues();
  const Matrix& vecs = solver.eigenvectors();
  const Eigen::Index d = herm.rows();

  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(d * d));
  Vector v(d * d);
  for (Eigen::Index k = 0; k < d; ++k) {
    if (lambda(k) == 0.0) continue;
    for (Eigen::Index l = 0; l < d; ++l) {
      if (lambda(l) == 0.0) continue;
      for (Eigen::Index x = 0; x < d; ++x) v.segment(x * d, d) = vecs(x, k) * vecs.col(l);
      apply_pattern(shape, pattern, v);
      terms.push_back(lambda(k) * lambda(l) * v.squaredNorm());
    }
  }
  return pairwise_sum(terms);
}

double purity_via_observables(const Operator& rho) {
  const int n = rho.shape().n_parties();
  std::vector<double> odd_terms;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const SignPattern pattern(n, SubsetMask(bits));
    if (pattern.antisym_count() % 2 == 1) odd_terms.push_back(expectation_mixed(rho, pattern));
  }
  return 1.0 - 2.0 * pairwise_sum(odd_terms);
}

double swap_subset_expectation(const PureState& psi, SubsetMask parties) {
  const Vector v = doubled_vector(psi);
  Vector w = v;
  apply_swap(psi.shape(), parties, w);
  return v.dot(w).real();  // dot() conjugates the first argument
}

}  // namespace qcert
