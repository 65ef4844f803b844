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

#ifndef QCERT_HILBERT_HPP
#define QCERT_HILBERT_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qcert {

using Complex = std::complex<double>;
using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

/// Tolerance for validating user-supplied matrices and vectors.
inline constexpr double kTolInput = 1e-8;
/// Tolerance for internal algebraic identities.
inline constexpr double kTolNumeric = 1e-10;

/// Hard ceiling on any state vector length (including doubled vectors).
inline constexpr std::size_t kVectorCap = std::size_t{1} << 20;
inline constexpr std::size_t kDefaultOperatorCap = 4096;

/// Process-wide cap on operator side length. Reads and writes are atomic.
std::size_t operator_cap();
void set_operator_cap(std::size_t cap);

enum class ErrorKind {
  kInvalidArgument,  // malformed input (shape mismatch, bad mask, ...)
  kDomain,           // request is mathematically undefined (odd N, ...)
  kCapExceeded,      // dimension cap would be exceeded
  kValidation,       // a matrix or vector failed density/norm validation
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// A subset of party indices, bit i set iff party i belongs to the subset.
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint64_t bits) : bits_(bits) {}

  static SubsetMask full(int n_parties) {
    return SubsetMask(n_parties >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_parties) - 1);
  }
  static SubsetMask of(std::initializer_list<int> parties) {
    std::uint64_t b = 0;
    for (int p : parties) b |= std::uint64_t{1} << p;
    return SubsetMask(b);
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool contains(int party) const noexcept { return (bits_ >> party) & 1U; }
  int size() const noexcept { return __builtin_popcountll(bits_); }
  bool odd() const noexcept { return (size() & 1) != 0; }
  constexpr bool is_subset_of(SubsetMask other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  SubsetMask complement(int n_parties) const { return SubsetMask(full(n_parties).bits_ & ~bits_); }
  /// Party indices in increasing order.
  std::vector<int> parties() const;

  friend constexpr auto operator<=>(SubsetMask, SubsetMask) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Per-party dimensions of a composite space. Party 0 is the most significant
/// index block: index = sum_i idx_i * prod_{j>i} d_j.
class SpaceShape {
 public:
  SpaceShape() = default;
  explicit SpaceShape(std::vector<int> dims);

  int n_parties() const noexcept { return static_cast<int>(dims_.size()); }
  std::size_t total_dim() const noexcept { return total_; }
  int dim(int party) const { return dims_.at(static_cast<std::size_t>(party)); }
  std::span<const int> dims() const noexcept { return dims_; }

  /// Dimension of the subspace spanned by the parties in `mask`.
  std::size_t dim_of(SubsetMask mask) const;
  /// Shape restricted to `mask`, parties kept in original relative order.
  SpaceShape restrict(SubsetMask mask) const;
  /// Throws unless `mask` only names parties of this shape.
  void check_mask(SubsetMask mask) const;
  /// `this` parties followed by `other` parties.
  SpaceShape concat(const SpaceShape& other) const;

  /// Stride of party `i` in the flattened index.
  std::size_t stride(int party) const { return strides_.at(static_cast<std::size_t>(party)); }

  friend bool operator==(const SpaceShape& a, const SpaceShape& b) { return a.dims_ == b.dims_; }

 private:
  std::vector<int> dims_;
  std::vector<std::size_t> strides_;
  std::size_t total_ = 1;
};

/// Dense complex square operator on a SpaceShape.
class Operator {
 public:
  Operator(SpaceShape shape, Matrix entries);

  const SpaceShape& shape() const noexcept { return shape_; }
  const Matrix& matrix() const noexcept { return entries_; }
  std::size_t dim() const noexcept { return shape_.total_dim(); }
  Complex operator()(std::size_t r, std::size_t c) const { return entries_(r, c); }

 private:
  SpaceShape shape_;
  Matrix entries_;
};

/// Unit vector on a SpaceShape.
class PureState {
 public:
  /// Throws kValidation when the squared norm is off by more than kTolInput.
  PureState(SpaceShape shape, Vector amplitudes);

  const SpaceShape& shape() const noexcept { return shape_; }
  const Vector& amplitudes() const noexcept { return amps_; }
  std::size_t dim() const noexcept { return shape_.total_dim(); }

  /// |psi><psi|, subject to the operator cap.
  Operator density() const;

 private:
  SpaceShape shape_;
  Vector amps_;
};

struct DensityDiagnostics {
  double hermiticity_deviation = 0.0;  // max |rho_ij - conj(rho_ji)|
  double trace_deviation = 0.0;        // |Tr rho - 1|
  double min_eigenvalue = 0.0;
  bool pass = false;
};

/// Kronecker product, `a`'s parties first.
Operator tensor(const Operator& a, const Operator& b);

/// Reduced operator on the parties in `keep`. An empty `keep` yields the 1x1
/// matrix [Tr rho] on an empty shape.
Operator partial_trace(const Operator& rho, SubsetMask keep);

/// Reduced density matrix of a pure state, computed from the amplitudes
/// without forming |psi><psi|.
Operator reduced_density(const PureState& psi, SubsetMask keep);

/// Tr rho^2.
double purity(const Operator& rho);

/// Tr rho_A^2 for a pure state via the smaller Gram matrix of the A|rest cut.
double marginal_purity(const PureState& psi, SubsetMask keep);

DensityDiagnostics validate_density(const Operator& rho, double tol);

/// Throws kValidation with a readable message when validation fails.
void require_density(const Operator& rho, double tol = kTolInput);

/// Sum of `terms` using a fixed pairwise tree, so the result is independent of
/// how callers partition work.
double pairwise_sum(std::span<const double> terms);

}  // namespace qcert

#endif  // QCERT_HILBERT_HPP
