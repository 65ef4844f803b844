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

// qcert: command-line front end over the libqcert C API.
//
// Exit codes: 0 success / all relations hold, 2 input error, 3 certified
// violation, 4 inconclusive.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcert/qcert.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitViolation = 3;
constexpr int kExitInconclusive = 4;

constexpr const char* kSchemaVersion = "1";

// Raised for anything the user can fix: unreadable files, schema errors,
// rejected states.
class InputError : public std::runtime_error {
 public:
  InputError(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

struct StateDeleter {
  void operator()(qcert_state* s) const { qcert_state_free(s); }
};
struct MarginalsDeleter {
  void operator()(qcert_marginals* m) const { qcert_marginals_free(m); }
};
using StatePtr = std::unique_ptr<qcert_state, StateDeleter>;
using MarginalsPtr = std::unique_ptr<qcert_marginals, MarginalsDeleter>;

const char* status_kind(qcert_status s) {
  switch (s) {
    case QCERT_OK: return "ok";
    case QCERT_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case QCERT_ERR_DOMAIN: return "domain";
    case QCERT_ERR_CAP_EXCEEDED: return "cap_exceeded";
    case QCERT_ERR_VALIDATION: return "validation";
    case QCERT_ERR_BUFFER_TOO_SMALL: return "buffer_too_small";
    case QCERT_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

void check(qcert_status s) {
  if (s != QCERT_OK) throw InputError(status_kind(s), qcert_last_error());
}

// ---- JSON output with 17 significant digits ----------------------------

void write_number(double v, std::string& out) {
  if (!std::isfinite(v)) {
    out += "null";
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

void write_json(const json& j, std::string& out, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  switch (j.type()) {
    case json::value_t::number_float:
      write_number(j.get<double>(), out);
      return;
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad + json(it.key()).dump() + ": ";
        write_json(it.value(), out, indent, depth + 1);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      bool flat = true;
      for (const auto& e : j)
        if (e.is_structured() && !(e.is_array() && e.size() == 2 && e[0].is_number())) flat = false;
      out += flat ? "[" : "[\n";
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += flat ? ", " : ",\n";
        first = false;
        if (!flat) out += pad;
        write_json(e, out, indent, depth + 1);
      }
      out += flat ? "]" : "\n" + close_pad + "]";
      return;
    }
    default:
      out += j.dump();
  }
}

std::string to_text(const json& j) {
  std::string out;
  write_json(j, out, 2, 0);
  out += '\n';
  return out;
}

void emit(const json& j) { std::cout << to_text(j) << std::flush; }

json tolerances_json() {
  const qcert_tolerances t = qcert_default_tolerances();
  return json{{"input", t.input}, {"numeric", t.numeric}, {"route", t.route}, {"verdict", t.verdict}};
}

json parties_of(uint64_t mask) {
  json out = json::array();
  for (int i = 0; i < 64; ++i)
    if ((mask >> i) & 1U) out.push_back(i);
  return out;
}

// ---- file parsing ------------------------------------------------------

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("io", "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("parse", path + ": " + e.what());
  }
}

std::vector<int> parse_dims(const json& j) {
  if (!j.is_array() || j.empty()) throw InputError("schema", "\"dims\" must be a nonempty list of integers");
  std::vector<int> dims;
  for (const auto& d : j) {
    if (!d.is_number_integer()) throw InputError("schema", "\"dims\" entries must be integers");
    dims.push_back(d.get<int>());
  }
  return dims;
}

void append_complex(const json& c, std::vector<double>& out) {
  if (!c.is_array() || c.size() != 2 || !c[0].is_number() || !c[1].is_number())
    throw InputError("schema", "complex numbers must be [re, im] pairs");
  out.push_back(c[0].get<double>());
  out.push_back(c[1].get<double>());
}

std::vector<double> parse_matrix(const json& m) {
  if (!m.is_array()) throw InputError("schema", "\"matrix\" must be a list of rows");
  std::vector<double> out;
  for (const auto& row : m) {
    if (!row.is_array() || row.size() != m.size()) throw InputError("schema", "\"matrix\" must be square");
    for (const auto& c : row) append_complex(c, out);
  }
  return out;
}

std::vector<double> parse_vector(const json& v) {
  if (!v.is_array()) throw InputError("schema", "\"vector\" must be a list of [re, im] pairs");
  std::vector<double> out;
  for (const auto& c : v) append_complex(c, out);
  return out;
}

StatePtr load_state(const std::string& path) {
  const json doc = read_json_file(path);
  if (!doc.is_object() || !doc.contains("dims") || !doc.contains("kind"))
    throw InputError("schema", "state files need \"dims\" and \"kind\"");
  const std::vector<int> dims = parse_dims(doc["dims"]);
  const std::string kind = doc["kind"].is_string() ? doc["kind"].get<std::string>() : "";
  qcert_state* raw = nullptr;
  if (kind == "pure") {
    if (!doc.contains("vector")) throw InputError("schema", "pure state files need \"vector\"");
    const std::vector<double> v = parse_vector(doc["vector"]);
    check(qcert_state_create_pure(dims.data(), dims.size(), v.data(), v.size(), &raw));
  } else if (kind == "mixed") {
    if (!doc.contains("matrix")) throw InputError("schema", "mixed state files need \"matrix\"");
    const std::vector<double> m = parse_matrix(doc["matrix"]);
    check(qcert_state_create_mixed(dims.data(), dims.size(), m.data(), m.size(), &raw));
  } else {
    throw InputError("schema", "\"kind\" must be \"pure\" or \"mixed\"");
  }
  return StatePtr(raw);
}

struct LoadedMarginals {
  MarginalsPtr set;
  std::optional<double> global_purity;
};

LoadedMarginals load_marginals(const std::string& path) {
  const json doc = read_json_file(path);
  if (!doc.is_object() || !doc.contains("dims") || !doc.contains("marginals"))
    throw InputError("schema", "marginal files need \"dims\" and \"marginals\"");
  const std::vector<int> dims = parse_dims(doc["dims"]);
  qcert_marginals* raw = nullptr;
  check(qcert_marginals_create(dims.data(), dims.size(), &raw));
  LoadedMarginals out{MarginalsPtr(raw), std::nullopt};
  if (!doc["marginals"].is_array()) throw InputError("schema", "\"marginals\" must be a list");
  for (const auto& entry : doc["marginals"]) {
    if (!entry.is_object() || !entry.contains("parties") || !entry.contains("matrix"))
      throw InputError("schema", "each marginal needs \"parties\" and \"matrix\"");
    std::vector<int> parties;
    for (const auto& p : entry["parties"]) {
      if (!p.is_number_integer()) throw InputError("schema", "\"parties\" entries must be integers");
      parties.push_back(p.get<int>());
    }
    if (parties.empty()) throw InputError("schema", "\"parties\" must be nonempty");
    const std::vector<double> m = parse_matrix(entry["matrix"]);
    check(qcert_marginals_add(out.set.get(), parties.data(), parties.size(), m.data(), m.size()));
  }
  if (doc.contains("global_purity") && !doc["global_purity"].is_null()) {
    if (!doc["global_purity"].is_number()) throw InputError("schema", "\"global_purity\" must be a number");
    out.global_purity = doc["global_purity"].get<double>();
  }
  return out;
}

// ---- serialization -----------------------------------------------------

json complex_rows(const std::vector<double>& data, std::size_t dim) {
  json rows = json::array();
  for (std::size_t r = 0; r < dim; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < dim; ++c) {
      const std::size_t k = 2 * (r * dim + c);
      row.push_back(json::array({data[k], data[k + 1]}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<int> state_dims(const qcert_state* s) {
  std::vector<int> dims(qcert_state_n_parties(s));
  check(qcert_state_dims(s, dims.data(), dims.size()));
  return dims;
}

json state_file_json(const qcert_state* s) {
  std::vector<double> data(qcert_state_data_len(s));
  check(qcert_state_data(s, data.data(), data.size()));
  json doc{{"dims", state_dims(s)}};
  if (qcert_state_is_pure(s)) {
    doc["kind"] = "pure";
    json v = json::array();
    for (std::size_t i = 0; i + 1 < data.size(); i += 2) v.push_back(json::array({data[i], data[i + 1]}));
    doc["vector"] = std::move(v);
  } else {
    doc["kind"] = "mixed";
    doc["matrix"] = complex_rows(data, qcert_state_total_dim(s));
  }
  return doc;
}

json marginal_file_json(const qcert_marginals* m, std::optional<double> global_purity) {
  std::vector<int> dims(qcert_marginals_n_parties(m));
  check(qcert_marginals_dims(m, dims.data(), dims.size()));
  json entries = json::array();
  for (std::size_t i = 0; i < qcert_marginals_count(m); ++i) {
    uint64_t mask = 0;
    std::size_t len = 0;
    check(qcert_marginals_entry(m, i, &mask, nullptr, 0, &len));
    std::vector<double> data(len);
    check(qcert_marginals_entry(m, i, &mask, data.data(), data.size(), &len));
    const auto dim = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(len / 2))));
    entries.push_back(json{{"parties", parties_of(mask)}, {"matrix", complex_rows(data, dim)}});
  }
  json doc{{"dims", dims}, {"marginals", std::move(entries)}};
  if (global_purity) doc["global_purity"] = *global_purity;
  return doc;
}

const char* verdict_name(qcert_verdict v) {
  switch (v) {
    case QCERT_VERDICT_CONSISTENT: return "consistent";
    case QCERT_VERDICT_INCOMPATIBLE: return "incompatible";
    case QCERT_VERDICT_INCONCLUSIVE: return "inconclusive";
  }
  return "unknown";
}

json precheck_json(const qcert_marginals* m) {
  const double tol = qcert_default_tolerances().input;
  std::size_t count = 0;
  check(qcert_consistency_precheck(m, tol, nullptr, 0, &count));
  std::vector<qcert_violation> v(count);
  check(qcert_consistency_precheck(m, tol, v.data(), v.size(), &count));
  json list = json::array();
  for (const auto& e : v)
    list.push_back(json{{"subset", parties_of(e.subset)},
                        {"superset", parties_of(e.superset)},
                        {"max_deviation", e.max_deviation}});
  return json{{"tolerance", tol}, {"violations", std::move(list)}};
}

// Certificate JSON; returns the verdict through `verdict`.
json certificate_json(const qcert_marginals* m, bool pure, std::optional<double> global_purity,
                      qcert_verdict& verdict) {
  qcert_compat_result r{};
  if (pure)
    check(qcert_check_pure(m, &r));
  else
    check(qcert_check_mixed(m, global_purity.has_value(), global_purity.value_or(1.0), &r));
  verdict = r.verdict;
  const std::size_t n = qcert_marginals_n_parties(m);

  json doc{{"schema_version", kSchemaVersion},
           {"condition", pure ? "pure-global-state" : "mixed-global-state"},
           {"n_parties", n},
           {"verdict", verdict_name(r.verdict)},
           {"necessary_condition_only", true}};
  const bool inconclusive = r.verdict == QCERT_VERDICT_INCONCLUSIVE;
  auto value = [&](double v) { return inconclusive ? json(nullptr) : json(v); };
  doc["sum_odd_proper"] = value(r.sum_odd_proper);
  doc["sum_even_proper"] = value(r.sum_even_proper);
  doc["lhs_proper"] = value(r.lhs_proper);
  doc["lhs"] = value(r.lhs);
  doc["bound"] = r.bound;
  doc["slack"] = value(r.slack);
  doc["global_purity_used"] = r.global_purity;
  doc["assumed_global_purity"] = r.best_case_global ? json("best-case") : json(r.global_purity);

  std::size_t n_missing = 0;
  check(qcert_marginals_missing(m, nullptr, 0, &n_missing));
  std::vector<uint64_t> missing(n_missing);
  check(qcert_marginals_missing(m, missing.data(), missing.size(), &n_missing));
  json missing_json = json::array();
  for (uint64_t mask : missing) missing_json.push_back(parties_of(mask));
  doc["missing_subsets"] = std::move(missing_json);

  std::vector<double> purities(std::size_t{1} << n);
  check(qcert_marginal_purities(m, purities.data(), purities.size()));
  json per_subset = json::array();
  for (std::size_t i = 0; i < qcert_marginals_count(m); ++i) {
    uint64_t mask = 0;
    check(qcert_marginals_entry(m, i, &mask, nullptr, 0, nullptr));
    per_subset.push_back(json{{"parties", parties_of(mask)}, {"purity", purities[mask]}});
  }
  doc["per_subset_purities"] = std::move(per_subset);
  doc["tolerances"] = tolerances_json();
  return doc;
}

int exit_for(qcert_verdict v) {
  switch (v) {
    case QCERT_VERDICT_CONSISTENT: return kExitOk;
    case QCERT_VERDICT_INCOMPATIBLE: return kExitViolation;
    case QCERT_VERDICT_INCONCLUSIVE: return kExitInconclusive;
  }
  return kExitInput;
}

// ---- commands ----------------------------------------------------------

int cmd_measure(const std::string& path, const std::string& route) {
  StatePtr state = load_state(path);
  unsigned routes = 0;
  if (route == "partitions") routes = QCERT_ROUTE_PARTITIONS;
  else if (route == "projector") routes = QCERT_ROUTE_PROJECTOR;
  else if (route == "subset-sum") routes = QCERT_ROUTE_SUBSET_SUM;
  else if (route == "oracle") routes = QCERT_ROUTE_ORACLE;
  else if (route == "all")
    routes = QCERT_ROUTE_PARTITIONS | QCERT_ROUTE_PROJECTOR | QCERT_ROUTE_SUBSET_SUM | QCERT_ROUTE_ORACLE;
  else throw InputError("usage", "unknown route " + route);

  qcert_measure_result r{};
  check(qcert_measure(state.get(), routes, &r));

  const std::size_t n = qcert_state_n_parties(state.get());
  json doc{{"schema_version", kSchemaVersion},
           {"command", "measure"},
           {"route", route},
           {"n_parties", n},
           {"dims", state_dims(state.get())}};
  std::vector<std::pair<std::string, double>> present;
  auto put = [&](const char* key, const char* name, int has, double v) {
    doc[key] = has ? json(v) : json(nullptr);
    if (has) present.emplace_back(name, v);
  };
  put("value_partitions", "partitions", r.has_partitions, r.partitions);
  put("value_projector", "projector", r.has_projector, r.projector);
  put("value_subset_sum", "subset-sum", r.has_subset_sum, r.subset_sum);
  put("value_oracle", "oracle", r.has_oracle, r.oracle);
  if (present.size() == 1) doc["value"] = present.front().second;

  if (route == "all") {
    json deltas = json::object();
    double max_delta = 0.0;
    for (std::size_t i = 0; i < present.size(); ++i)
      for (std::size_t j = i + 1; j < present.size(); ++j) {
        const double d = std::abs(present[i].second - present[j].second);
        deltas[present[i].first + "|" + present[j].first] = d;
        max_delta = std::max(max_delta, d);
      }
    doc["deltas"] = std::move(deltas);
    doc["max_delta"] = max_delta;
    doc["routes_agree"] = max_delta <= qcert_default_tolerances().route;
  }

  std::vector<double> purities(std::size_t{1} << n);
  check(qcert_subset_purities(state.get(), purities.data(), purities.size()));
  json per_subset = json::array();
  for (std::size_t mask = 1; mask < purities.size(); ++mask)
    per_subset.push_back(json{{"parties", parties_of(mask)}, {"purity", purities[mask]}});
  doc["per_subset_purities"] = std::move(per_subset);
  doc["tolerances"] = tolerances_json();
  emit(doc);
  return kExitOk;
}

int cmd_compat(const std::string& path, bool pure, std::optional<double> global_purity) {
  LoadedMarginals loaded = load_marginals(path);
  if (pure && global_purity) throw InputError("usage", "--pure fixes the global purity at 1; drop --global-purity");
  if (!pure && !global_purity) global_purity = loaded.global_purity;
  qcert_verdict verdict{};
  json doc = certificate_json(loaded.set.get(), pure, global_purity, verdict);
  doc["command"] = "compat";
  doc["consistency_precheck"] = precheck_json(loaded.set.get());
  emit(doc);
  return exit_for(verdict);
}

int cmd_monogamy(const std::string& path) {
  StatePtr state = load_state(path);
  if (!qcert_state_is_pure(state.get())) throw InputError("validation", "monogamy relations need a pure state");
  std::size_t count = 0;
  check(qcert_monogamy_scan(state.get(), nullptr, 0, &count));
  std::vector<qcert_monogamy_result> reports(count);
  check(qcert_monogamy_scan(state.get(), reports.data(), reports.size(), &count));
  json list = json::array();
  bool all_hold = true;
  for (const auto& r : reports) {
    all_hold = all_hold && r.holds;
    list.push_back(json{{"index_set", parties_of(r.index_set)}, {"lhs", r.lhs}, {"rhs", r.rhs},
                        {"holds", r.holds != 0}});
  }
  emit(json{{"schema_version", kSchemaVersion},
            {"command", "monogamy"},
            {"n_parties", qcert_state_n_parties(state.get())},
            {"reports", std::move(list)},
            {"all_hold", all_hold},
            {"tolerances", tolerances_json()}});
  return all_hold ? kExitOk : kExitViolation;
}

int cmd_disorder(const std::string& path) {
  StatePtr state = load_state(path);
  qcert_disorder_result r{};
  check(qcert_disorder(state.get(), &r));
  emit(json{{"schema_version", kSchemaVersion},
            {"command", "disorder"},
            {"n_parties", qcert_state_n_parties(state.get())},
            {"lhs", r.lhs},
            {"rhs", r.rhs},
            {"holds", r.holds != 0},
            {"tolerances", tolerances_json()}});
  return r.holds ? kExitOk : kExitViolation;
}

int cmd_sample(const std::vector<int>& dims, const std::string& kind, std::optional<int> rank, uint64_t seed,
               const std::string& out_path) {
  qcert_state* raw = nullptr;
  if (kind == "pure") {
    if (rank) throw InputError("usage", "--rank applies to mixed samples only");
    check(qcert_state_random_pure(dims.data(), dims.size(), seed, &raw));
  } else if (kind == "mixed") {
    std::size_t total = 1;
    for (int d : dims) total *= static_cast<std::size_t>(std::max(d, 1));
    const int r = rank.value_or(static_cast<int>(std::min<std::size_t>(total, 1U << 30)));
    check(qcert_state_random_mixed(dims.data(), dims.size(), r, seed, &raw));
  } else {
    throw InputError("usage", "--kind must be pure or mixed");
  }
  StatePtr state(raw);
  const std::string text = to_text(state_file_json(state.get()));
  if (out_path.empty() || out_path == "-") {
    std::cout << text << std::flush;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw InputError("io", "cannot write " + out_path);
    out << text;
  }
  return kExitOk;
}

int cmd_demo(const std::string& name, const std::string& write_marginals) {
  if (name != "eq8") throw InputError("usage", "unknown demo " + name + " (available: eq8)");
  qcert_marginals* raw = nullptr;
  check(qcert_marginals_w_triplet(&raw));
  MarginalsPtr m(raw);
  const json file = marginal_file_json(m.get(), std::nullopt);
  if (!write_marginals.empty()) {
    std::ofstream out(write_marginals, std::ios::binary);
    if (!out) throw InputError("io", "cannot write " + write_marginals);
    out << to_text(file);
  }
  qcert_verdict verdict{};
  json cert = certificate_json(m.get(), false, std::nullopt, verdict);
  cert["command"] = "compat";
  emit(json{{"schema_version", kSchemaVersion},
            {"command", "demo"},
            {"demo", name},
            {"marginal_file", file},
            {"consistency_precheck", precheck_json(m.get())},
            {"certificate", std::move(cert)}});
  return exit_for(verdict);
}

void apply_env_cap() {
  const char* env = std::getenv("QCERT_MAX_DIM");
  if (env == nullptr || *env == '\0') return;
  char* end = nullptr;
  const unsigned long long cap = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0') throw InputError("usage", "QCERT_MAX_DIM must be a positive integer");
  check(qcert_set_operator_cap(static_cast<std::size_t>(cap)));
}

int report_error(const InputError& e) {
  emit(json{{"schema_version", kSchemaVersion}, {"error", json{{"kind", e.kind()}, {"message", e.what()}}}});
  return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement-measure and marginal-compatibility certificates"};
  app.require_subcommand(1);
  app.set_version_flag("--version", qcert_version());

  std::string state_path, marginals_path, route = "all", kind, out_path, demo_name, write_marginals;
  bool pure = false;
  std::optional<double> global_purity;
  std::vector<int> dims;
  std::optional<int> rank;
  uint64_t seed = 0;

  auto* measure = app.add_subcommand("measure", "Compute the entanglement measure E of a pure state");
  measure->add_option("--state", state_path, "State file (JSON)")->required();
  measure->add_option("--route", route, "partitions | projector | subset-sum | all | oracle")
      ->check(CLI::IsMember({"partitions", "projector", "subset-sum", "all", "oracle"}));

  auto* compat = app.add_subcommand("compat", "Test a marginal set against the purity-sum condition");
  compat->add_option("--marginals", marginals_path, "Marginal file (JSON)")->required();
  compat->add_flag("--pure", pure, "Assume the global state is pure");
  compat->add_option("--global-purity", global_purity, "Known Tr rho^2 of the global state");

  auto* monogamy = app.add_subcommand("monogamy", "Check the squared I-concurrence monogamy relations");
  monogamy->add_option("--state", state_path, "Pure state file (JSON)")->required();

  auto* disorder = app.add_subcommand("disorder", "Check the global-versus-local mixedness relation");
  disorder->add_option("--state", state_path, "State file (JSON), even number of parties")->required();

  auto* sample = app.add_subcommand("sample", "Write a seeded random state file");
  sample->add_option("--dims", dims, "Per-party dimensions, comma separated")->required()->delimiter(',');
  sample->add_option("--kind", kind, "pure | mixed")->required()->check(CLI::IsMember({"pure", "mixed"}));
  sample->add_option("--rank", rank, "Rank of a mixed sample (default: full)");
  sample->add_option("--seed", seed, "Generator seed")->required();
  sample->add_option("--out", out_path, "Output path (default: stdout)");

  auto* demo = app.add_subcommand("demo", "Run a built-in example");
  demo->add_option("name", demo_name, "Demo name (eq8)")->required();
  demo->add_option("--write-marginals", write_marginals, "Also write the demo's marginal file here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    apply_env_cap();
    if (*measure) return cmd_measure(state_path, route);
    if (*compat) return cmd_compat(marginals_path, pure, global_purity);
    if (*monogamy) return cmd_monogamy(state_path);
    if (*disorder) return cmd_disorder(state_path);
    if (*sample) return cmd_sample(dims, kind, rank, seed, out_path);
    if (*demo) return cmd_demo(demo_name, write_marginals);
  } catch (const InputError& e) {
    return report_error(e);
  } catch (const std::exception& e) {
    return report_error(InputError("internal", e.what()));
  }
  return kExitInput;
}
