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

#include "qcert/qcert.h"

#include <cmath>
#include <new>
#include <string>
#include <variant>

#include "qcert/compatibility.hpp"
#include "qcert/measures.hpp"
#include "qcert/monogamy.hpp"
#include "qcert/oracle.hpp"
#include "qcert/states.hpp"

struct qcert_state {
  std::variant<qcert::PureState, qcert::Operator> value;
};

struct qcert_marginals {
  qcert::MarginalSet set;
};

namespace {

using namespace qcert;

thread_local std::string g_last_error;

qcert_status fail(qcert_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

qcert_status to_status(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return QCERT_ERR_INVALID_ARGUMENT;
    case ErrorKind::kDomain: return QCERT_ERR_DOMAIN;
    case ErrorKind::kCapExceeded: return QCERT_ERR_CAP_EXCEEDED;
    case ErrorKind::kValidation: return QCERT_ERR_VALIDATION;
  }
  return QCERT_ERR_INTERNAL;
}

template <typename F>
qcert_status guarded(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    return fail(to_status(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(QCERT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(QCERT_ERR_INTERNAL, e.what());
  }
}

#define QCERT_REQUIRE(cond, msg) \
  do {                            \
    if (!(cond)) return fail(QCERT_ERR_INVALID_ARGUMENT, msg); \
  } while (0)

SpaceShape make_shape(const int* dims, size_t n) {
  if (dims == nullptr || n == 0) throw Error(ErrorKind::kInvalidArgument, "dims must be a nonempty array");
  return SpaceShape(std::vector<int>(dims, dims + n));
}

Vector read_vector(const double* data, size_t n_doubles, std::size_t dim) {
  if (data == nullptr || n_doubles != 2 * dim)
    throw Error(ErrorKind::kInvalidArgument,
                "expected " + std::to_string(2 * dim) + " doubles, got " + std::to_string(n_doubles));
  Vector v(static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) v(static_cast<Eigen::Index>(i)) = Complex(data[2 * i], data[2 * i + 1]);
  return v;
}

Matrix read_matrix(const double* data, size_t n_doubles, std::size_t dim) {
  if (dim > operator_cap())
    throw Error(ErrorKind::kCapExceeded, "operator dimension " + std::to_string(dim) + " exceeds cap " +
                                             std::to_string(operator_cap()));
  if (data == nullptr || n_doubles != 2 * dim * dim)
    throw Error(ErrorKind::kInvalidArgument,
                "expected " + std::to_string(2 * dim * dim) + " doubles, got " + std::to_string(n_doubles));
  Matrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      const std::size_t k = 2 * (r * dim + c);
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = Complex(data[k], data[k + 1]);
    }
  return m;
}

void write_matrix(const Matrix& m, double* out) {
  std::size_t k = 0;
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      out[k++] = m(r, c).real();
      out[k++] = m(r, c).imag();
    }
}

const SpaceShape& shape_of(const qcert_state* s) {
  return std::visit([](const auto& v) -> const SpaceShape& { return v.shape(); }, s->value);
}

Operator density_of(const qcert_state* s) {
  if (const auto* psi = std::get_if<PureState>(&s->value)) return psi->density();
  return std::get<Operator>(s->value);
}

void fill(qcert_compat_result* out, const CompatReport& r) {
  out->sum_odd_proper = r.sum_odd_proper;
  out->sum_even_proper = r.sum_even_proper;
  out->lhs_proper = r.lhs_proper;
  out->global_purity = r.global_purity;
  out->best_case_global = r.best_case_global ? 1 : 0;
  out->lhs = r.lhs;
  out->bound = r.bound;
  out->slack = r.slack;
  out->n_missing = r.missing_subsets.size();
  switch (r.verdict) {
    case Verdict::kConsistent: out->verdict = QCERT_VERDICT_CONSISTENT; break;
    case Verdict::kIncompatible: out->verdict = QCERT_VERDICT_INCOMPATIBLE; break;
    case Verdict::kInconclusive: out->verdict = QCERT_VERDICT_INCONCLUSIVE; break;
  }
}

qcert_status emit_state(qcert_state** out, qcert_state value) {
  *out = new qcert_state(std::move(value));
  return QCERT_OK;
}

}  // namespace

extern "C" {

const char* qcert_version(void) { return "1.0.0"; }

const char* qcert_last_error(void) { return g_last_error.c_str(); }

qcert_tolerances qcert_default_tolerances(void) {
  return qcert_tolerances{kTolInput, kTolNumeric, kTolRoute, kTolVerdict};
}

size_t qcert_get_operator_cap(void) { return operator_cap(); }

qcert_status qcert_set_operator_cap(size_t cap) {
  return guarded([&] {
    set_operator_cap(cap);
    return QCERT_OK;
  });
}

qcert_status qcert_state_create_pure(const int* dims, size_t n_parties, const double* amplitudes, size_t n_doubles,
                                     qcert_state** out) {
  QCERT_REQUIRE(out != nullptr, "out must not be null");
  return guarded([&] {
    SpaceShape shape = make_shape(dims, n_parties);
    Vector v = read_vector(amplitudes, n_doubles, shape.total_dim());
    return emit_state(out, qcert_state{PureState(std::move(shape), std::move(v))});
  });
}

qcert_status qcert_state_create_mixed(const int* dims, size_t n_parties, const double* matrix, size_t n_doubles,
                                      qcert_state** out) {
  QCERT_REQUIRE(out != nullptr, "out must not be null");
  return guarded([&] {
    SpaceShape shape = make_shape(dims, n_parties);
    Matrix m = read_matrix(matrix, n_doubles, shape.total_dim());
    Operator rho(std::move(shape), std::move(m));
    require_density(rho, kTolInput);
    return emit_state(out, qcert_state{std::move(rho)});
  });
}

qcert_status qcert_state_w(int n_parties, qcert_state** out) {
  QCERT_REQUIRE(out != nullptr, "out must not be null");
  return guarded([&] { return emit_state(out, qcert_state{w_state(n_parties)}); });
}

qcert_status qcert_state_ghz(int n_parties, qcert_state** out) {
  QCERT_REQUIRE(out != nullptr, "out must not be null");
  return guarded([&] { return emit_state(out, qcert_state{ghz_state(n_parties)}); });
}

qcert_status qcert_state_random_pure(const int* dims, size_t n_parties, uint64_t seed, qcert_state** out) {
  QCERT_REQUIRE(out != nullptr, "out must not be null");
  return guarded([&] { return emit_state(out, qcert_state{random_pure(make_shape(dims, n_parties), seed)}); });
}

qcert_status qcert_state_random_mixed(const int* dims, size_t n_parties, int rank, uint64_t seed,
                                      qcert_state** out) {
  QCERT_REQUIRE(out != nullptr, "out must not be null");
  return guarded(
      [&] { return emit_state(out, qcert_state{random_mixed(make_shape(dims, n_parties), rank, seed)}); });
}

void qcert_state_free(qcert_state* state) { delete state; }

int qcert_state_is_pure(const qcert_state* state) {
  return state != nullptr && std::holds_alternative<PureState>(state->value) ? 1 : 0;
}

size_t qcert_state_n_parties(const qcert_state* state) {
  return state ? static_cast<size_t>(shape_of(state).n_parties()) : 0;
}

size_t qcert_state_total_dim(const qcert_state* state) { return state ? shape_of(state).total_dim() : 0; }

qcert_status qcert_state_dims(const qcert_state* state, int* out, size_t capacity) {
  QCERT_REQUIRE(state != nullptr && out != nullptr, "state and out must not be null");
  const auto dims = shape_of(state).dims();
  if (capacity < dims.size()) return fail(QCERT_ERR_BUFFER_TOO_SMALL, "dims buffer too small");
  std::copy(dims.begin(), dims.end(), out);
  return QCERT_OK;
}

size_t qcert_state_data_len(const qcert_state* state) {
  if (state == nullptr) return 0;
  const std::size_t d = shape_of(state).total_dim();
  return qcert_state_is_pure(state) ? 2 * d : 2 * d * d;
}

qcert_status qcert_state_data(const qcert_state* state, double* out, size_t capacity) {
  QCERT_REQUIRE(state != nullptr && out != nullptr, "state and out must not be null");
  if (capacity < qcert_state_data_len(state)) return fail(QCERT_ERR_BUFFER_TOO_SMALL, "data buffer too small");
  if (const auto* psi = std::get_if<PureState>(&state->value)) {
    const Vector& a = psi->amplitudes();
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      out[2 * i] = a(i).real();
      out[2 * i + 1] = a(i).imag();
    }
  } else {
    write_matrix(std::get<Operator>(state->value).matrix(), out);
  }
  return QCERT_OK;
}

qcert_status qcert_state_purity(const qcert_state* state, double* out) {
  QCERT_REQUIRE(state != nullptr && out != nullptr, "state and out must not be null");
  return guarded([&] {
    if (const auto* psi = std::get_if<PureState>(&state->value))
      *out = std::pow(psi->amplitudes().squaredNorm(), 2);
    else
      *out = purity(std::get<Operator>(state->value));
    return QCERT_OK;
  });
}

qcert_status qcert_measure(const qcert_state* state, unsigned routes, qcert_measure_result* out) {
  QCERT_REQUIRE(state != nullptr && out != nullptr, "state and out must not be null");
  const auto* psi = std::get_if<PureState>(&state->value);
  QCERT_REQUIRE(psi != nullptr, "the entanglement measure is defined for pure states only");
  QCERT_REQUIRE(routes != 0 && (routes & ~15U) == 0, "unknown route selection");
  return guarded([&] {
    *out = qcert_measure_result{};
    const bool alone = (routes & (routes - 1)) == 0;
    const bool even = psi->shape().n_parties() % 2 == 0;
    if (routes & QCERT_ROUTE_PROJECTOR) {
      out->projector = entanglement_E_projector(*psi);
      out->has_projector = 1;
    }
    if ((routes & QCERT_ROUTE_PARTITIONS) && (even || alone)) {
      out->partitions = entanglement_E_partitions(*psi);
      out->has_partitions = 1;
    }
    if ((routes & QCERT_ROUTE_SUBSET_SUM) && (even || alone)) {
      out->subset_sum = entanglement_E_subset_sum(*psi);
      out->has_subset_sum = 1;
    }
    if (routes & QCERT_ROUTE_ORACLE) {
      const bool feasible = even && psi->shape().n_parties() <= oracle::kMaxExhaustiveParties &&
                            psi->dim() <= oracle::kMaxDoubledDim;
      if (feasible || alone) {
        out->oracle = oracle::exhaustive_E(*psi);
        out->has_oracle = 1;
      }
    }
    return QCERT_OK;
  });
}

qcert_status qcert_subset_purities(const qcert_state* state, double* out, size_t capacity) {
  QCERT_REQUIRE(state != nullptr && out != nullptr, "state and out must not be null");
  return guarded([&] {
    const int n = shape_of(state).n_parties();
    const std::size_t count = std::size_t{1} << n;
    if (capacity < count) return fail(QCERT_ERR_BUFFER_TOO_SMALL, "purity buffer too small");
    if (const auto* psi = std::get_if<PureState>(&state->value)) {
      const std::vector<double> p = subset_purities(*psi);
      std::copy(p.begin(), p.end(), out);
    } else {
      const Operator& rho = std::get<Operator>(state->value);
      out[0] = 1.0;
      for (std::size_t bits = 1; bits < count; ++bits) out[bits] = purity(partial_trace(rho, SubsetMask(bits)));
    }
    return QCERT_OK;
  });
}

qcert_status qcert_marginals_create(const int* dims, size_t n_parties, qcert_marginals** out) {
  QCERT_REQUIRE(out != nullptr, "out must not be null");
  return guarded([&] {
    *out = new qcert_marginals{MarginalSet(make_shape(dims, n_parties))};
    return QCERT_OK;
  });
}

qcert_status qcert_marginals_from_state(const qcert_state* state, qcert_marginals** out) {
  QCERT_REQUIRE(state != nullptr && out != nullptr, "state and out must not be null");
  return guarded([&] {
    if (const auto* psi = std::get_if<PureState>(&state->value))
      *out = new qcert_marginals{marginals_of(*psi)};
    else
      *out = new qcert_marginals{marginals_of(std::get<Operator>(state->value))};
    return QCERT_OK;
  });
}

qcert_status qcert_marginals_w_triplet(qcert_marginals** out) {
  QCERT_REQUIRE(out != nullptr, "out must not be null");
  return guarded([&] {
    *out = new qcert_marginals{w_triplet_marginals()};
    return QCERT_OK;
  });
}

void qcert_marginals_free(qcert_marginals* marginals) { delete marginals; }

qcert_status qcert_marginals_add(qcert_marginals* marginals, const int* parties, size_t n_parties,
                                 const double* matrix, size_t n_doubles) {
  QCERT_REQUIRE(marginals != nullptr, "marginals must not be null");
  QCERT_REQUIRE(parties != nullptr && n_parties > 0, "party list must be nonempty");
  return guarded([&] {
    const int n = marginals->set.shape().n_parties();
    std::uint64_t bits = 0;
    for (size_t i = 0; i < n_parties; ++i) {
      if (parties[i] < 0 || parties[i] >= n)
        return fail(QCERT_ERR_INVALID_ARGUMENT, "party index " + std::to_string(parties[i]) + " out of range");
      if (i > 0 && parties[i] <= parties[i - 1])
        return fail(QCERT_ERR_INVALID_ARGUMENT, "party lists must be strictly increasing");
      bits |= std::uint64_t{1} << parties[i];
    }
    const SubsetMask mask(bits);
    SpaceShape sub = marginals->set.shape().restrict(mask);
    Matrix m = read_matrix(matrix, n_doubles, sub.total_dim());
    marginals->set.add(mask, Operator(std::move(sub), std::move(m)));
    return QCERT_OK;
  });
}

size_t qcert_marginals_n_parties(const qcert_marginals* marginals) {
  return marginals ? static_cast<size_t>(marginals->set.shape().n_parties()) : 0;
}

qcert_status qcert_marginals_dims(const qcert_marginals* marginals, int* out, size_t capacity) {
  QCERT_REQUIRE(marginals != nullptr && out != nullptr, "marginals and out must not be null");
  const auto dims = marginals->set.shape().dims();
  if (capacity < dims.size()) return fail(QCERT_ERR_BUFFER_TOO_SMALL, "dims buffer too small");
  std::copy(dims.begin(), dims.end(), out);
  return QCERT_OK;
}

size_t qcert_marginals_count(const qcert_marginals* marginals) {
  return marginals ? marginals->set.entries().size() : 0;
}

qcert_status qcert_marginals_entry(const qcert_marginals* marginals, size_t index, uint64_t* out_mask,
                                   double* out_matrix, size_t capacity, size_t* out_len) {
  QCERT_REQUIRE(marginals != nullptr, "marginals must not be null");
  const auto& entries = marginals->set.entries();
  QCERT_REQUIRE(index < entries.size(), "entry index out of range");
  auto it = std::next(entries.begin(), static_cast<std::ptrdiff_t>(index));
  const std::size_t d = it->second.dim();
  if (out_mask) *out_mask = it->first.bits();
  if (out_len) *out_len = 2 * d * d;
  if (out_matrix == nullptr) return QCERT_OK;
  if (capacity < 2 * d * d) return fail(QCERT_ERR_BUFFER_TOO_SMALL, "matrix buffer too small");
  write_matrix(it->second.matrix(), out_matrix);
  return QCERT_OK;
}

qcert_status qcert_marginals_missing(const qcert_marginals* marginals, uint64_t* out, size_t capacity,
                                     size_t* out_count) {
  QCERT_REQUIRE(marginals != nullptr && out_count != nullptr, "marginals and out_count must not be null");
  const std::vector<SubsetMask> missing = marginals->set.missing_proper_subsets();
  *out_count = missing.size();
  if (out == nullptr) return QCERT_OK;
  if (capacity < missing.size()) return fail(QCERT_ERR_BUFFER_TOO_SMALL, "missing-subset buffer too small");
  for (std::size_t i = 0; i < missing.size(); ++i) out[i] = missing[i].bits();
  return QCERT_OK;
}

qcert_status qcert_check_pure(const qcert_marginals* marginals, qcert_compat_result* out) {
  QCERT_REQUIRE(marginals != nullptr && out != nullptr, "marginals and out must not be null");
  return guarded([&] {
    fill(out, check_pure_compatibility(marginals->set));
    return QCERT_OK;
  });
}

qcert_status qcert_check_mixed(const qcert_marginals* marginals, int has_global_purity, double global_purity,
                               qcert_compat_result* out) {
  QCERT_REQUIRE(marginals != nullptr && out != nullptr, "marginals and out must not be null");
  return guarded([&] {
    std::optional<double> gp;
    if (has_global_purity) gp = global_purity;
    fill(out, check_mixed_compatibility(marginals->set, gp));
    return QCERT_OK;
  });
}

qcert_status qcert_marginal_purities(const qcert_marginals* marginals, double* out, size_t capacity) {
  QCERT_REQUIRE(marginals != nullptr && out != nullptr, "marginals and out must not be null");
  return guarded([&] {
    const std::size_t count = std::size_t{1} << marginals->set.shape().n_parties();
    if (capacity < count) return fail(QCERT_ERR_BUFFER_TOO_SMALL, "purity buffer too small");
    std::fill(out, out + count, 0.0);
    for (const auto& [mask, rho] : marginals->set.entries()) out[mask.bits()] = purity(rho);
    return QCERT_OK;
  });
}

qcert_status qcert_consistency_precheck(const qcert_marginals* marginals, double tol, qcert_violation* out,
                                        size_t capacity, size_t* out_count) {
  QCERT_REQUIRE(marginals != nullptr && out_count != nullptr, "marginals and out_count must not be null");
  return guarded([&] {
    const std::vector<ConsistencyViolation> v = consistency_precheck(marginals->set, tol);
    *out_count = v.size();
    if (out == nullptr) return QCERT_OK;
    if (capacity < v.size()) return fail(QCERT_ERR_BUFFER_TOO_SMALL, "violation buffer too small");
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = {v[i].subset.bits(), v[i].superset.bits(), v[i].max_deviation};
    return QCERT_OK;
  });
}

qcert_status qcert_self_check(const qcert_state* state, qcert_compat_result* out) {
  QCERT_REQUIRE(state != nullptr && out != nullptr, "state and out must not be null");
  return guarded([&] {
    fill(out, self_check(density_of(state)));
    return QCERT_OK;
  });
}

qcert_status qcert_monogamy_scan(const qcert_state* state, qcert_monogamy_result* out, size_t capacity,
                                 size_t* out_count) {
  QCERT_REQUIRE(state != nullptr && out_count != nullptr, "state and out_count must not be null");
  const auto* psi = std::get_if<PureState>(&state->value);
  QCERT_REQUIRE(psi != nullptr, "monogamy relations are defined for pure states only");
  return guarded([&] {
    const std::vector<MonogamyReport> reports = monogamy_scan(*psi);
    *out_count = reports.size();
    if (out == nullptr) return QCERT_OK;
    if (capacity < reports.size()) return fail(QCERT_ERR_BUFFER_TOO_SMALL, "report buffer too small");
    for (std::size_t i = 0; i < reports.size(); ++i)
      out[i] = {reports[i].index_set.bits(), reports[i].lhs, reports[i].rhs, reports[i].holds ? 1 : 0};
    return QCERT_OK;
  });
}

qcert_status qcert_disorder(const qcert_state* state, qcert_disorder_result* out) {
  QCERT_REQUIRE(state != nullptr && out != nullptr, "state and out must not be null");
  return guarded([&] {
    const DisorderReport r = disorder_check(density_of(state));
    *out = {r.lhs, r.rhs, r.holds ? 1 : 0};
    return QCERT_OK;
  });
}

}  // extern "C"
