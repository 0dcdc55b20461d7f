// Copyright 2026 The kzp Authors
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


#include "kzp/kzp.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kzp/construct.hpp"
#include "kzp/curves.hpp"
#include "kzp/error.hpp"
#include "kzp/ffpoly.hpp"
#include "kzp/fpintegral.hpp"
#include "kzp/json_io.hpp"
#include "kzp/suite.hpp"
#include "kzp/verify.hpp"

struct kzp_poly {
  kzp::SparsePoly value;
};

namespace {

using kzp::json;

thread_local std::string g_last_error;

kzp_status status_of(kzp::ErrorKind kind) {
  switch (kind) {
    case kzp::ErrorKind::kInvalidArgument: return KZP_EINVAL;
    case kzp::ErrorKind::kAmbientMismatch: return KZP_EAMBIENT;
    case kzp::ErrorKind::kPrecondition: return KZP_EPRECONDITION;
    case kzp::ErrorKind::kInapplicable: return KZP_EINAPPLICABLE;
    case kzp::ErrorKind::kParse: return KZP_EPARSE;
    case kzp::ErrorKind::kIo: return KZP_EINVAL;
  }
  return KZP_EINTERNAL;
}

// Runs fn, converting exceptions into a status and the thread-local message.
template <typename Fn>
kzp_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    return fn();
  } catch (const kzp::Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const json::exception& e) {
    g_last_error = e.what();
    return KZP_EPARSE;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return KZP_EINTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return KZP_EINTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return KZP_EINTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put_json(const json& j, char** out) { *out = copy_string(j.dump(2)); }

template <typename T>
void require(const T* ptr, const char* what) {
  if (ptr == nullptr) throw kzp::InvalidArgument(std::string(what) + " must not be null");
}

json parse_arg(const char* text, const char* what) {
  require(text, what);
  return kzp::parse_json_text(text);
}

void put_poly(kzp::SparsePoly value, kzp_poly** out) {
  require(out, "out");
  *out = new kzp_poly{std::move(value)};
}

// A ProblemSpec from a request object; q defaults to zeros and l to ones.
kzp::ProblemSpec request_spec(const json& req) {
  if (!req.is_object()) throw kzp::ParseError("request must be a JSON object");
  json j = req;
  if (j.contains("k") && j.at("k").is_number_unsigned()) {
    const auto k = j.at("k").get<std::uint32_t>();
    if (!j.contains("q")) j["q"] = std::vector<std::int64_t>(k, 0);
    if (!j.contains("l")) j["l"] = std::vector<std::uint32_t>(k, 1);
  }
  kzp::ProblemSpec spec = kzp::spec_from_json(j);
  spec.validate();
  return spec;
}

kzp::ExponentData request_exponents(const kzp::ProblemSpec& spec, const json& req) {
  if (req.contains("exponents")) {
    const kzp::ExponentOverride ov = kzp::override_from_json(req.at("exponents"));
    return kzp::exponent_data(spec, &ov);
  }
  return kzp::exponent_data(spec);
}

// The smallest ell in [1, p] with (ze)^ell expected to vanish, if any.
std::optional<std::uint32_t> smallest_ell(const kzp::ProblemSpec& spec, const kzp::ExponentData& exps) {
  for (std::uint32_t ell = 1; ell <= spec.p; ++ell) {
    if (kzp::ze_resonance_condition_holds(spec.p, spec.k, exps, ell)) return ell;
  }
  return std::nullopt;
}

std::vector<std::uint32_t> default_point(const kzp::ProblemSpec& spec) {
  std::vector<std::uint32_t> z(spec.n());
  for (std::uint32_t s = 0; s < spec.n(); ++s) z[s] = (s + 1) % spec.p;
  return z;
}

struct Solution {
  kzp::SolutionDocument doc;
  // Expanded lazily from the factored form when a check needs it.
  const kzp::WeightVector& expanded() {
    if (!doc.solution) doc.solution = doc.factored->expand();
    return *doc.solution;
  }
};

kzp::CheckReport run_named_check(const std::string& name, Solution& sol, const json& opts) {
  const kzp::ProblemSpec& spec = sol.doc.spec;
  const kzp::ExponentData& exps = sol.doc.exponents;
  if (name == "kz") {
    return sol.doc.factored ? kzp::check_kz_factored(*sol.doc.factored, exps.K) : kzp::check_kz(sol.expanded(), exps.K);
  }
  if (name == "singular") {
    return sol.doc.factored ? kzp::check_singular(*sol.doc.factored) : kzp::check_singular(sol.expanded());
  }
  if (name == "resonance-linear") return kzp::check_resonance_linear(sol.expanded(), exps);
  if (name == "ze") {
    std::uint32_t ell = 0;
    if (opts.contains("ell")) {
      ell = opts.at("ell").get<std::uint32_t>();
    } else {
      const auto found = smallest_ell(spec, exps);
      if (!found) throw kzp::PreconditionError("no ell in [1, p] satisfies the ze resonance condition");
      ell = *found;
    }
    return sol.doc.factored ? kzp::check_ze_resonance(*sol.doc.factored, exps, ell)
                            : kzp::check_ze_resonance(sol.expanded(), exps, ell);
  }
  if (name == "flatness") {
    const std::vector<std::uint32_t> z =
        opts.contains("z") ? opts.at("z").get<std::vector<std::uint32_t>>() : default_point(spec);
    return kzp::check_flatness(spec.p, spec.m, spec.k, z);
  }
  if (name == "cohomology") return kzp::check_cohomology_k1(spec, exps);
  throw kzp::InvalidArgument("unknown check '" + name + "'");
}

// Checks whose hypotheses hold for this solution, in a fixed order.
std::vector<std::string> applicable_checks(Solution& sol) {
  const kzp::ProblemSpec& spec = sol.doc.spec;
  const kzp::ExponentData& exps = sol.doc.exponents;
  std::vector<std::string> names{"kz", "singular"};
  if (spec.k == 1 && kzp::resonance_condition_holds(spec.p, exps)) names.emplace_back("resonance-linear");
  if (smallest_ell(spec, exps)) names.emplace_back("ze");
  if (spec.n() < spec.p) names.emplace_back("flatness");
  if (spec.k == 1) names.emplace_back("cohomology");
  return names;
}

json integral_for(const kzp::ProblemSpec& spec, const kzp::ExponentData& exps, const std::vector<std::uint32_t>& x,
                  const kzp::FactoredWeightVector& fw) {
  json r = kzp::to_json(kzp::check_integral_theorem(spec, exps, x, &fw));
  r["x"] = x;
  return r;
}

json gamma_for(const kzp::ProblemSpec& spec, const std::vector<std::uint32_t>& x) {
  json r = kzp::to_json(kzp::check_gamma_decomposition(spec, x));
  r["x"] = x;
  return r;
}

template <typename One>
json sweep_report(const std::vector<std::vector<std::uint32_t>>& points, One&& one) {
  json reports = json::array();
  bool passed = true;
  for (const auto& x : points) {
    json r = one(x);
    passed = passed && r.at("passed").get<bool>();
    reports.push_back(std::move(r));
  }
  return json{{"passed", passed}, {"tuples", points.size()}, {"reports", std::move(reports)}};
}

kzp_status finish(json report, char** out) {
  const bool passed = report.at("passed").get<bool>();
  put_json(report, out);
  return passed ? KZP_OK : KZP_CHECK_FAILED;
}

}  // namespace

extern "C" {

const char* kzp_version(void) { return "0.1.0"; }

const char* kzp_status_name(kzp_status status) {
  switch (status) {
    case KZP_OK: return "ok";
    case KZP_CHECK_FAILED: return "check_failed";
    case KZP_EINVAL: return "invalid_argument";
    case KZP_EPRECONDITION: return "precondition";
    case KZP_EINAPPLICABLE: return "inapplicable";
    case KZP_EPARSE: return "parse";
    case KZP_EAMBIENT: return "ambient_mismatch";
    case KZP_EINTERNAL: return "internal";
  }
  return "unknown";
}

const char* kzp_last_error(void) { return g_last_error.c_str(); }

void kzp_string_free(char* s) { std::free(s); }

kzp_status kzp_poly_from_json(const char* text, kzp_poly** out) {
  return guarded([&] {
    put_poly(kzp::poly_from_json(parse_arg(text, "json")), out);
    return KZP_OK;
  });
}

kzp_status kzp_poly_to_json(const kzp_poly* a, char** out) {
  return guarded([&] {
    require(a, "a");
    require(out, "out");
    put_json(kzp::to_json(a->value), out);
    return KZP_OK;
  });
}

kzp_status kzp_poly_to_string(const kzp_poly* a, char** out) {
  return guarded([&] {
    require(a, "a");
    require(out, "out");
    *out = copy_string(kzp::to_string(a->value));
    return KZP_OK;
  });
}

#define KZP_BINARY_OP(fn_name, op)                                          \
  kzp_status fn_name(const kzp_poly* a, const kzp_poly* b, kzp_poly** out) { \
    return guarded([&] {                                                    \
      require(a, "a");                                                      \
      require(b, "b");                                                      \
      put_poly(kzp::op(a->value, b->value), out);                           \
      return KZP_OK;                                                        \
    });                                                                     \
  }

KZP_BINARY_OP(kzp_poly_add, add)
KZP_BINARY_OP(kzp_poly_sub, sub)
KZP_BINARY_OP(kzp_poly_mul, mul)

#undef KZP_BINARY_OP

kzp_status kzp_poly_pow(const kzp_poly* a, uint64_t e, kzp_poly** out) {
  return guarded([&] {
    require(a, "a");
    put_poly(kzp::pow(a->value, e), out);
    return KZP_OK;
  });
}

kzp_status kzp_poly_derivative(const kzp_poly* a, kzp_block block, uint32_t index, kzp_poly** out) {
  return guarded([&] {
    require(a, "a");
    const kzp::Var v = block == KZP_BLOCK_T ? kzp::Var::t(index) : kzp::Var::z(index);
    put_poly(kzp::partial_derivative(a->value, v), out);
    return KZP_OK;
  });
}

kzp_status kzp_poly_shift_t(const kzp_poly* a, const int64_t* q, size_t len, kzp_poly** out) {
  return guarded([&] {
    require(a, "a");
    if (len > 0) require(q, "q");
    const std::vector<std::int64_t> shift(q, q + len);
    put_poly(kzp::shift_t(a->value, shift), out);
    return KZP_OK;
  });
}

kzp_status kzp_poly_coeff_t(const kzp_poly* a, const uint32_t* e, size_t len, kzp_poly** out) {
  return guarded([&] {
    require(a, "a");
    if (len > 0) require(e, "e");
    const std::vector<std::uint32_t> exps(e, e + len);
    put_poly(kzp::coeff_t(a->value, exps), out);
    return KZP_OK;
  });
}

kzp_status kzp_poly_equal(const kzp_poly* a, const kzp_poly* b, int* out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    if (!(a->value.ambient() == b->value.ambient())) throw kzp::AmbientMismatch("polynomials live in different rings");
    *out = a->value == b->value ? 1 : 0;
    return KZP_OK;
  });
}

void kzp_poly_free(kzp_poly* a) { delete a; }

kzp_status kzp_solve(const char* request_json, char** out) {
  return guarded([&] {
    require(out, "out");
    const json req = parse_arg(request_json, "request");
    const kzp::ProblemSpec spec = request_spec(req);
    const kzp::ExponentData exps = request_exponents(spec, req);
    const bool factored = req.value("factored", false);
    put_json(kzp::solution_document(spec, exps, kzp::taylor_solution_factored(spec, exps), factored), out);
    return KZP_OK;
  });
}

kzp_status kzp_check(const char* name, const char* solution_json, const char* options_json, char** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    Solution sol{kzp::parse_solution_document(parse_arg(solution_json, "solution"))};
    const json opts = options_json != nullptr ? kzp::parse_json_text(options_json) : json::object();
    if (!opts.is_object()) throw kzp::ParseError("check options must be a JSON object");
    const std::string which = name;
    if (which != "all") return finish(kzp::to_json(run_named_check(which, sol, opts)), out);
    json checks = json::array();
    bool passed = true;
    for (const std::string& n : applicable_checks(sol)) {
      const kzp::CheckReport r = run_named_check(n, sol, opts);
      passed = passed && r.passed;
      checks.push_back(kzp::to_json(r));
    }
    return finish(json{{"passed", passed}, {"checks", std::move(checks)}}, out);
  });
}

kzp_status kzp_integrate(const char* request_json, char** out) {
  return guarded([&] {
    require(out, "out");
    const json req = parse_arg(request_json, "request");
    if (!req.is_object()) throw kzp::ParseError("request must be a JSON object");
    const std::string mode = req.value("mode", std::string("theorem"));

    if (mode == "poly") {
      const kzp::SparsePoly F = kzp::poly_from_json(req.at("poly"));
      const std::string path = req.value("path", std::string("grid"));
      kzp::IntegrationPath which = kzp::IntegrationPath::kGrid;
      if (path == "power-sum") {
        which = kzp::IntegrationPath::kPowerSum;
      } else if (path != "grid") {
        throw kzp::InvalidArgument("integration path must be 'grid' or 'power-sum'");
      }
      put_json(json{{"path", path}, {"value", kzp::integrate_fpk(F, which)}}, out);
      return KZP_OK;
    }

    const kzp::ProblemSpec spec = request_spec(req);
    std::vector<std::vector<std::uint32_t>> points;
    if (req.contains("x")) {
      points.push_back(req.at("x").get<std::vector<std::uint32_t>>());
    } else {
      points = kzp::distinct_tuples(spec.p, spec.n());
    }

    json report;
    if (mode == "theorem") {
      const kzp::ExponentData exps = request_exponents(spec, req);
      const kzp::FactoredWeightVector fw = kzp::taylor_solution_factored(spec, exps);
      report = sweep_report(points, [&](const auto& x) { return integral_for(spec, exps, x, fw); });
    } else if (mode == "gamma") {
      report = sweep_report(points, [&](const auto& x) { return gamma_for(spec, x); });
    } else {
      throw kzp::InvalidArgument("integrate mode must be 'theorem', 'gamma' or 'poly'");
    }
    report["mode"] = mode;
    report["spec"] = kzp::to_json(spec);
    return finish(std::move(report), out);
  });
}

kzp_status kzp_curve(const char* request_json, char** out) {
  return guarded([&] {
    require(out, "out");
    const json req = parse_arg(request_json, "request");
    if (!req.is_object()) throw kzp::ParseError("request must be a JSON object");
    const std::string kind = req.at("kind").get<std::string>();
    const auto p = req.at("p").get<std::uint32_t>();
    const bool gate = req.value("enforce_gate", true);

    json report;
    bool outside_gate = false;
    if (kind == "surface") {
      const kzp::SurfaceTheorem theorem(p, gate);
      outside_gate = theorem.outside_gate();
      std::vector<std::vector<std::uint32_t>> points;
      if (req.contains("x")) {
        points.push_back(req.at("x").get<std::vector<std::uint32_t>>());
        if (points.back().size() != 2) throw kzp::InvalidArgument("surface needs x = [x1, x2]");
      } else {
        points = kzp::distinct_tuples(p, 2);
      }
      report = sweep_report(points, [&](const auto& x) {
        json r = kzp::to_json(theorem.check(x[0], x[1]));
        r["x"] = x;
        return r;
      });
    } else {
      const kzp::CurveKind ck = kzp::parse_curve_kind(kind);
      const kzp::CurveTheorem theorem(ck, p, gate);
      outside_gate = theorem.outside_gate();
      std::vector<std::vector<std::uint32_t>> points;
      if (req.contains("x")) {
        points.push_back(req.at("x").get<std::vector<std::uint32_t>>());
      } else {
        points = kzp::distinct_tuples(p, kzp::branch_count(ck));
      }
      report = sweep_report(points, [&](const auto& x) {
        json r = kzp::to_json(theorem.check(x));
        r["x"] = x;
        return r;
      });
    }
    report["kind"] = kind;
    report["p"] = p;
    report["outside_gate"] = outside_gate;
    return finish(std::move(report), out);
  });
}

kzp_status kzp_suite(const char* level, uint64_t seed, int criterion, char** out) {
  return guarded([&] {
    require(level, "level");
    require(out, "out");
    const kzp::SuiteConfig cfg{kzp::parse_suite_level(level), seed};
    if (criterion == 0) return finish(kzp::run_suite(cfg), out);
    const kzp::CriterionResult r = kzp::run_criterion(criterion, cfg);
    return finish(json{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}}, out);
  });
}

}  // extern "C"
