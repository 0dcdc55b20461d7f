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


// Command-line front end. Every subcommand builds a JSON request, hands it to
// the C API and prints the JSON report. Exit codes: 0 when every check
// passes, 1 when some check fails, 2 for usage errors and inputs that
// violate a precondition.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kzp/kzp.h"

namespace {

using json = nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError{"cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text << '\n')) throw UsageError{"cannot write '" + path + "'"};
}

// Maps a C API call onto an exit code, printing the report if one came back.
int emit(kzp_status status, char* report, const std::string& out_path) {
  if (status != KZP_OK && status != KZP_CHECK_FAILED) {
    std::cerr << "kzp: " << kzp_status_name(status) << ": " << kzp_last_error() << '\n';
    kzp_string_free(report);
    return kExitUsage;
  }
  const std::string text = report != nullptr ? report : "";
  kzp_string_free(report);
  write_output(text, out_path);
  return status == KZP_OK ? kExitPass : kExitCheckFailed;
}

struct SpecFlags {
  std::uint32_t p = 0;
  std::string kappa;
  std::vector<std::uint32_t> m;
  std::uint32_t k = 1;
  std::vector<std::int64_t> q;
  std::vector<std::uint32_t> l;
  std::string exponents_file;

  void add_to(CLI::App* app, bool require_spec) {
    auto* po = app->add_option("--p", p, "odd prime");
    auto* ko = app->add_option("--kappa", kappa, "kappa as a/b");
    auto* mo = app->add_option("--m", m, "highest weights, e.g. 2,2")->delimiter(',');
    if (require_spec) {
      po->required();
      ko->required();
      mo->required();
    }
    app->add_option("--k", k, "number of t-variables")->capture_default_str();
    app->add_option("--q", q, "shift per t-variable (default zeros)")->delimiter(',');
    app->add_option("--l", l, "Taylor orders l_i (default ones)")->delimiter(',');
    app->add_option("--exponents", exponents_file, "JSON file overriding M, pair, M0 or K");
  }

  json request() const {
    json req{{"p", p}, {"kappa", kappa}, {"m", m}, {"k", k}};
    if (!q.empty()) req["q"] = q;
    if (!l.empty()) req["l"] = l;
    if (!exponents_file.empty()) req["exponents"] = parse(read_file(exponents_file), exponents_file);
    return req;
  }

  static json parse(const std::string& text, const std::string& what) {
    try {
      return json::parse(text);
    } catch (const json::parse_error& e) {
      throw UsageError{what + ": " + e.what()};
    }
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial solutions of sl2 KZ equations over F_p, with exact verification"};
  app.set_version_flag("--version", std::string(kzp_version()));
  app.require_subcommand(1);

  std::string out_path;

  // solve
  SpecFlags solve_flags;
  bool factored = false;
  auto* solve = app.add_subcommand("solve", "Build the Taylor-coefficient solution");
  solve_flags.add_to(solve, true);
  solve->add_flag("--factored", factored, "keep the z-prefactor symbolic");
  solve->add_option("-o,--output", out_path, "output file (default stdout)");

  // check
  std::string check_name;
  std::string sol_file;
  std::optional<std::uint32_t> ell;
  std::vector<std::uint32_t> zpoint;
  auto* check = app.add_subcommand("check", "Verify identities on a solution written by 'solve'");
  check->add_option("name", check_name, "kz | singular | resonance-linear | ze | flatness | cohomology | all")
      ->required();
  check->add_option("--sol", sol_file, "solution JSON")->required();
  check->add_option("--ell", ell, "power of ze (default: smallest admissible)");
  check->add_option("--z", zpoint, "point for the flatness check")->delimiter(',');
  check->add_option("-o,--output", out_path, "output file (default stdout)");

  // integrate
  SpecFlags int_flags;
  std::vector<std::uint32_t> xpoint;
  bool gamma = false;
  std::string poly_file;
  std::string path = "grid";
  auto* integrate = app.add_subcommand("integrate", "Discrete integrals over F_p^k");
  int_flags.add_to(integrate, false);
  integrate->add_option("--x", xpoint, "evaluation point (default: every tuple of distinct residues)")->delimiter(',');
  integrate->add_flag("--gamma", gamma, "check the skew-symmetric cell decomposition");
  integrate->add_option("--poly", poly_file, "integrate a polynomial JSON file over F_p^k");
  integrate->add_option("--path", path, "grid | power-sum")->capture_default_str();
  integrate->add_option("-o,--output", out_path, "output file (default stdout)");

  // curve
  std::string kind;
  std::uint32_t curve_p = 0;
  std::vector<std::uint32_t> curve_x;
  bool no_gate = false;
  auto* curve = app.add_subcommand("curve", "Point sums on curves and surfaces");
  curve->add_option("--kind", kind, "elliptic | quartic | cubic3 | genus2 | surface")->required();
  curve->add_option("--p", curve_p, "odd prime")->required();
  curve->add_option("--x", curve_x, "branch points (default: every tuple of distinct residues)")->delimiter(',');
  curve->add_flag("--no-gate", no_gate, "run below the smallest p where the identity is claimed");
  curve->add_option("-o,--output", out_path, "output file (default stdout)");

  // suite
  std::string level = "quick";
  std::uint64_t seed = 42;
  int criterion = 0;
  auto* suite = app.add_subcommand("suite", "Run the reproducibility suite");
  suite->add_option("--level", level, "quick | full")->capture_default_str();
  suite->add_option("--seed", seed, "seed for sampled checks")->capture_default_str();
  suite->add_option("--criterion", criterion, "run only this criterion (1-10)");
  suite->add_option("-o,--output", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    char* report = nullptr;
    if (solve->parsed()) {
      json req = solve_flags.request();
      req["factored"] = factored;
      const kzp_status status = kzp_solve(req.dump().c_str(), &report);
      return emit(status, report, out_path);
    }
    if (check->parsed()) {
      json opts = json::object();
      if (ell) opts["ell"] = *ell;
      if (!zpoint.empty()) opts["z"] = zpoint;
      const std::string sol = read_file(sol_file);
      const kzp_status status = kzp_check(check_name.c_str(), sol.c_str(), opts.dump().c_str(), &report);
      return emit(status, report, out_path);
    }
    if (integrate->parsed()) {
      json req;
      if (!poly_file.empty()) {
        req = json{{"mode", "poly"}, {"path", path}, {"poly", SpecFlags::parse(read_file(poly_file), poly_file)}};
      } else {
        if (int_flags.p == 0 || int_flags.kappa.empty() || int_flags.m.empty()) {
          throw UsageError{"integrate needs --p, --kappa and --m, or --poly"};
        }
        req = int_flags.request();
        req["mode"] = gamma ? "gamma" : "theorem";
        if (!xpoint.empty()) req["x"] = xpoint;
      }
      const kzp_status status = kzp_integrate(req.dump().c_str(), &report);
      return emit(status, report, out_path);
    }
    if (curve->parsed()) {
      json req{{"kind", kind}, {"p", curve_p}, {"enforce_gate", !no_gate}};
      if (!curve_x.empty()) req["x"] = curve_x;
      const kzp_status status = kzp_curve(req.dump().c_str(), &report);
      return emit(status, report, out_path);
    }
    if (suite->parsed()) {
      const kzp_status status = kzp_suite(level.c_str(), seed, criterion, &report);
      return emit(status, report, out_path);
    }
  } catch (const UsageError& e) {
    std::cerr << "kzp: " << e.message << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
