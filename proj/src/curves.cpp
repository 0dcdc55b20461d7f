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

#include "kzp/curves.hpp"

#include <numeric>
#include <set>

#include "kzp/error.hpp"

namespace kzp {

namespace {

// counts[v] = #{y in F_p : y^d = v}
std::vector<std::uint32_t> root_counts(const PrimeField& f, std::uint32_t d) {
  std::vector<std::uint32_t> counts(f.modulus(), 0);
  for (std::uint32_t y = 0; y < f.modulus(); ++y) ++counts[f.pow(y, d)];
  return counts;
}

std::uint32_t fibre_size_by_character(const PrimeField& f, std::uint32_t d, std::uint32_t v) {
  if (v == 0) return 1;
  const std::uint32_t p = f.modulus();
  const std::uint32_t g = std::gcd(d, p - 1);
  return f.pow(v, (p - 1) / g) == 1 ? g : 0;
}

void require_distinct(std::uint32_t p, std::span<const std::uint32_t> x) {
  std::set<std::uint32_t> seen;
  for (std::uint32_t v : x) {
    if (!seen.insert(v % p).second) throw InvalidArgument("branch points must be distinct mod p");
  }
}

MultiIndex unit(std::uint32_t n, std::uint32_t s) {
  MultiIndex J{std::vector<std::uint32_t>(n, 0)};
  J.j[s] = 1;
  return J;
}

std::uint32_t eval_at(const SparsePoly& poly, std::span<const std::uint32_t> x) {
  std::vector<std::uint32_t> reduced(x.begin(), x.end());
  for (auto& v : reduced) v %= poly.ambient().p;
  return eval(poly, {}, reduced);
}

}  // namespace

void CurveSpec::validate() const {
  const PrimeField f(p);
  if (d < 2) throw InvalidArgument("the cover degree d must be at least 2");
  if (x.empty()) throw InvalidArgument("a curve needs at least one branch point");
  if (e.size() != x.size()) throw InvalidArgument("need one multiplicity per branch point");
  for (std::uint32_t v : e) {
    if (v == 0) throw InvalidArgument("multiplicities must be positive");
  }
  require_distinct(p, x);
}

std::uint32_t CurveSpec::rhs(std::uint32_t t) const {
  const PrimeField f(p);
  std::uint32_t v = 1;
  for (std::size_t s = 0; s < x.size(); ++s) v = f.mul(v, f.pow(f.sub(t % p, x[s] % p), e[s]));
  return v;
}

void SurfaceSpec::validate() const {
  const PrimeField f(p);
  if (x1 % p == x2 % p) throw InvalidArgument("x1 and x2 must be distinct mod p");
}

std::uint32_t SurfaceSpec::rhs(std::uint32_t t1, std::uint32_t t2) const {
  const PrimeField f(p);
  const std::uint32_t a = x1 % p;
  const std::uint32_t b = x2 % p;
  std::uint32_t v = f.sub(t1, t2);
  for (std::uint32_t t : {t1, t2}) v = f.mul(v, f.mul(f.sub(t, a), f.sub(t, b)));
  return v;
}

std::vector<std::array<std::uint32_t, 2>> affine_points(const CurveSpec& c) {
  c.validate();
  const PrimeField f(c.p);
  std::vector<std::array<std::uint32_t, 2>> pts;
  for (std::uint32_t t = 0; t < c.p; ++t) {
    const std::uint32_t v = c.rhs(t);
    for (std::uint32_t y = 0; y < c.p; ++y) {
      if (f.pow(y, c.d) == v) pts.push_back({t, y});
    }
  }
  return pts;
}

std::vector<std::array<std::uint32_t, 3>> affine_points(const SurfaceSpec& s) {
  s.validate();
  const PrimeField f(s.p);
  std::vector<std::array<std::uint32_t, 3>> pts;
  for (std::uint32_t t1 = 0; t1 < s.p; ++t1) {
    for (std::uint32_t t2 = 0; t2 < s.p; ++t2) {
      const std::uint32_t v = s.rhs(t1, t2);
      for (std::uint32_t y = 0; y < s.p; ++y) {
        if (f.mul(y, y) == v) pts.push_back({t1, t2, y});
      }
    }
  }
  return pts;
}

std::uint64_t character_point_count(const CurveSpec& c) {
  c.validate();
  const PrimeField f(c.p);
  std::uint64_t total = 0;
  for (std::uint32_t t = 0; t < c.p; ++t) total += fibre_size_by_character(f, c.d, c.rhs(t));
  return total;
}

std::uint64_t character_point_count(const SurfaceSpec& s) {
  s.validate();
  const PrimeField f(s.p);
  std::uint64_t total = 0;
  for (std::uint32_t t1 = 0; t1 < s.p; ++t1) {
    for (std::uint32_t t2 = 0; t2 < s.p; ++t2) total += fibre_size_by_character(f, 2, s.rhs(t1, t2));
  }
  return total;
}

std::uint32_t curve_integral(const CurveSpec& c, std::uint32_t j) {
  c.validate();
  if (j >= c.x.size()) throw InvalidArgument("branch index out of range");
  const PrimeField f(c.p);
  const auto counts = root_counts(f, c.d);
  const std::uint32_t xj = c.x[j] % c.p;
  std::uint32_t total = 0;
  for (std::uint32_t t = 0; t < c.p; ++t) {
    if (t == xj) continue;
    const std::uint32_t n = counts[c.rhs(t)];
    if (n != 0) total = f.add(total, f.mul(f.reduce(n), f.inv(f.sub(t, xj))));
  }
  return total;
}

std::uint32_t surface_integral(const SurfaceSpec& s, std::uint32_t a, std::uint32_t b) {
  s.validate();
  if (a > 1 || b > 1) throw InvalidArgument("surface branch index must be 0 or 1");
  const PrimeField f(s.p);
  const auto counts = root_counts(f, 2);
  const std::uint32_t xa = (a == 0 ? s.x1 : s.x2) % s.p;
  const std::uint32_t xb = (b == 0 ? s.x1 : s.x2) % s.p;
  std::uint32_t total = 0;
  for (std::uint32_t t1 = 0; t1 < s.p; ++t1) {
    if (t1 == xa) continue;
    for (std::uint32_t t2 = 0; t2 < s.p; ++t2) {
      if (t2 == xb) continue;
      const std::uint32_t n = counts[s.rhs(t1, t2)];
      if (n == 0) continue;
      const std::uint32_t h = f.mul(f.sub(t1, t2), f.inv(f.mul(f.sub(t1, xa), f.sub(t2, xb))));
      total = f.add(total, f.mul(f.reduce(n), h));
    }
  }
  return total;
}

std::string to_string(CurveKind kind) {
  switch (kind) {
    case CurveKind::kElliptic: return "elliptic";
    case CurveKind::kQuartic: return "quartic";
    case CurveKind::kCubic3: return "cubic3";
    case CurveKind::kGenus2: return "genus2";
  }
  return "unknown";
}

CurveKind parse_curve_kind(const std::string& name) {
  for (CurveKind k : {CurveKind::kElliptic, CurveKind::kQuartic, CurveKind::kCubic3, CurveKind::kGenus2}) {
    if (to_string(k) == name) return k;
  }
  throw InvalidArgument("unknown curve kind '" + name + "'");
}

std::uint32_t branch_count(CurveKind kind) { return kind == CurveKind::kQuartic ? 4 : 3; }

namespace {

std::pair<ProblemSpec, ExponentData> k1_source(std::uint32_t p, const char* kappa, std::vector<std::uint32_t> m,
                                               std::vector<std::uint32_t> M) {
  ProblemSpec spec;
  spec.p = p;
  spec.kappa = Kappa::parse(kappa);
  spec.m = std::move(m);
  spec.k = 1;
  spec.q = {0};
  spec.l = {1};
  ExponentOverride over;
  over.M = std::move(M);
  ExponentData exps = exponent_data(spec, &over);
  return {std::move(spec), std::move(exps)};
}

}  // namespace

CurveTheorem::CurveTheorem(CurveKind kind, std::uint32_t p, bool enforce_gate) : kind_(kind), p_(p) {
  const PrimeField f(p);
  switch (kind) {
    case CurveKind::kElliptic:
    case CurveKind::kQuartic: {
      if (p < 5) {
        if (enforce_gate) throw PreconditionError("the point-sum identity for y^2 curves needs p >= 5");
        outside_gate_ = true;
      }
      const std::uint32_t n = branch_count(kind);
      sources_.push_back(k1_source(p, "2", std::vector<std::uint32_t>(n, 1), std::vector<std::uint32_t>(n, (p - 1) / 2)));
      break;
    }
    case CurveKind::kCubic3:
    case CurveKind::kGenus2: {
      if ((p - 1) % 3 != 0) throw PreconditionError("y^3 curves need 3 | p - 1");
      const std::uint32_t r = (p - 1) / 3;
      if (kind == CurveKind::kCubic3) {
        sources_.push_back(k1_source(p, "3", {2, 2, 2}, {2 * r, 2 * r, 2 * r}));
      } else {
        sources_.push_back(k1_source(p, "3", {1, 1, 2}, {r, r, 2 * r}));
        sources_.push_back(k1_source(p, "3", {2, 2, 1}, {2 * r, 2 * r, r}));
      }
      break;
    }
  }
  for (const auto& [spec, exps] : sources_) coefficients_.push_back(taylor_solution_factored(spec, exps).reduced);
}

PointSumReport CurveTheorem::check(std::span<const std::uint32_t> x) const {
  const std::uint32_t n = branch_count(kind_);
  if (x.size() != n) throw InvalidArgument(to_string(kind_) + " needs " + std::to_string(n) + " branch points");
  require_distinct(p_, x);
  const PrimeField f(p_);
  CurveSpec curve{p_, kind_ == CurveKind::kCubic3 || kind_ == CurveKind::kGenus2 ? 3u : 2u,
                  std::vector<std::uint32_t>(x.begin(), x.end()), std::vector<std::uint32_t>(n, 1)};
  if (kind_ == CurveKind::kGenus2) curve.e[2] = 2;

  PointSumReport report{CheckReport::pass(to_string(kind_)), {}, {}, outside_gate_};
  for (std::uint32_t j = 0; j < n; ++j) {
    std::uint32_t predicted = 0;
    for (const WeightVector& c : coefficients_) predicted = f.sub(predicted, eval_at(c.at(unit(n, j)), x));
    const std::uint32_t integral = curve_integral(curve, j);
    report.integrals.push_back(integral);
    report.expected.push_back(predicted);
    if (integral != predicted && report.check.passed) {
      report.check = CheckReport::fail(
          to_string(kind_), Witness{"point sum of 1/(t - x_" + std::to_string(j + 1) + ")", unit(n, j),
                                    SparsePoly::constant(Ambient{p_, 0, 0}, f.sub(integral, predicted))});
    }
  }
  return report;
}

PointSumReport check_curve_theorem(CurveKind kind, std::uint32_t p, std::span<const std::uint32_t> x,
                                   bool enforce_gate) {
  return CurveTheorem(kind, p, enforce_gate).check(x);
}

namespace {

WeightVector surface_coefficients(std::uint32_t p) {
  ProblemSpec spec;
  spec.p = p;
  spec.kappa = Kappa::parse("4");
  spec.m = {2, 2};
  spec.k = 2;
  spec.q = {0, 0};
  spec.l = {1, 1};
  return taylor_solution_factored(spec, exponent_data(spec)).reduced;
}

std::uint32_t surface_gate(std::uint32_t p, bool enforce_gate) {
  const PrimeField f(p);
  if (p % 4 != 3) throw PreconditionError("the surface identity needs p = 3 mod 4");
  if (p < 7 && enforce_gate) throw PreconditionError("the surface identity needs p >= 7");
  return p;
}

}  // namespace

SurfaceTheorem::SurfaceTheorem(std::uint32_t p, bool enforce_gate)
    : p_(surface_gate(p, enforce_gate)), outside_gate_(p < 7), coefficients_(surface_coefficients(p)) {}

PointSumReport SurfaceTheorem::check(std::uint32_t x1, std::uint32_t x2) const {
  const SurfaceSpec s{p_, x1 % p_, x2 % p_};
  s.validate();
  const PrimeField f(p_);
  const std::array<std::uint32_t, 2> x{s.x1, s.x2};
  const std::array<std::uint32_t, 3> integrals{
      surface_integral(s, 0, 0), f.add(surface_integral(s, 0, 1), surface_integral(s, 1, 0)),
      surface_integral(s, 1, 1)};
  PointSumReport report{CheckReport::pass("surface"), {}, {}, outside_gate_};
  const auto idx = basis(std::vector<std::uint32_t>{2, 2}, 2);  // (2,0), (1,1), (0,2)
  for (std::size_t a = 0; a < idx.size(); ++a) {
    const std::uint32_t predicted = eval_at(coefficients_.at(idx[a]), x);
    report.integrals.push_back(integrals[a]);
    report.expected.push_back(predicted);
    if (integrals[a] != predicted && report.check.passed) {
      report.check = CheckReport::fail(
          "surface", Witness{"surface integral of (t1 - t2) W_J", idx[a],
                             SparsePoly::constant(Ambient{p_, 0, 0}, f.sub(integrals[a], predicted))});
    }
  }
  return report;
}

PointSumReport check_surface_theorem(std::uint32_t p, std::uint32_t x1, std::uint32_t x2, bool enforce_gate) {
  return SurfaceTheorem(p, enforce_gate).check(x1, x2);
}

}  // namespace kzp
