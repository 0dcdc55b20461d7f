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


#pragma once

// Point sums on the curves y^d = prod (t - x_s)^{e_s} and on the surface
// y^2 = (t1 - t2) prod_{i,s} (t_i - x_s) over F_p, compared with coefficients
// of polynomial KZ solutions.

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "kzp/construct.hpp"
#include "kzp/verify.hpp"

namespace kzp {

struct CurveSpec {
  std::uint32_t p = 5;
  std::uint32_t d = 2;             // y^d
  std::vector<std::uint32_t> x;    // distinct branch points
  std::vector<std::uint32_t> e;    // multiplicities, each >= 1

  /// Throws InvalidArgument on an empty or repeated branch set, a zero
  /// multiplicity, d < 2, or a bad modulus.
  void validate() const;
  /// prod_s (t - x_s)^{e_s} at t.
  std::uint32_t rhs(std::uint32_t t) const;
};

struct SurfaceSpec {
  std::uint32_t p = 7;
  std::uint32_t x1 = 0;
  std::uint32_t x2 = 1;

  void validate() const;
  /// (t1 - t2)(t1 - x1)(t2 - x1)(t1 - x2)(t2 - x2).
  std::uint32_t rhs(std::uint32_t t1, std::uint32_t t2) const;
};

/// All affine points (t, y), sorted.
std::vector<std::array<std::uint32_t, 2>> affine_points(const CurveSpec& c);
/// All affine points (t1, t2, y), sorted.
std::vector<std::array<std::uint32_t, 3>> affine_points(const SurfaceSpec& s);

/// Number of affine points from the character formula: a fibre over t has
/// 1 point if the right side vanishes, and otherwise g = gcd(d, p - 1)
/// points when it is a g-th power residue and none when it is not.
std::uint64_t character_point_count(const CurveSpec& c);
std::uint64_t character_point_count(const SurfaceSpec& s);

/// Sum of 1/(t - x_j) over the affine points with t != x_j (j is 0-based).
std::uint32_t curve_integral(const CurveSpec& c, std::uint32_t j);

/// Sum of (t1 - t2)/((t1 - x_a)(t2 - x_b)) over the affine points where it is
/// defined; a, b in {0, 1} select x1 or x2.
std::uint32_t surface_integral(const SurfaceSpec& s, std::uint32_t a, std::uint32_t b);

enum class CurveKind {
  kElliptic,  // y^2 = (t - x1)(t - x2)(t - x3)
  kQuartic,   // y^2 = (t - x1)(t - x2)(t - x3)(t - x4)
  kCubic3,    // y^3 = (t - x1)(t - x2)(t - x3)
  kGenus2,    // y^3 = (t - x1)(t - x2)(t - x3)^2
};

std::string to_string(CurveKind kind);
/// Accepts "elliptic", "quartic", "cubic3", "genus2".
CurveKind parse_curve_kind(const std::string& name);
std::uint32_t branch_count(CurveKind kind);

struct PointSumReport {
  CheckReport check;
  std::vector<std::uint32_t> integrals;  // point sums, one per coordinate
  std::vector<std::uint32_t> expected;   // value predicted from the solution
  bool outside_gate = false;             // run below the minimum p on request
};

/// The solutions whose coefficients predict the point sums, built once per
/// (kind, p) and evaluated at many x.
class CurveTheorem {
 public:
  /// Throws PreconditionError when the exponents are not integral (3 must
  /// divide p - 1 for the cubic kinds) or, with enforce_gate, when p is below
  /// the minimum where the identity holds (p >= 5 for elliptic and quartic).
  CurveTheorem(CurveKind kind, std::uint32_t p, bool enforce_gate = true);

  CurveKind kind() const noexcept { return kind_; }
  std::uint32_t p() const noexcept { return p_; }
  bool outside_gate() const noexcept { return outside_gate_; }
  /// The problem data and exponents of each contributing solution (one, or
  /// two for genus2).
  const std::vector<std::pair<ProblemSpec, ExponentData>>& sources() const noexcept { return sources_; }

  /// Point sum of 1/(t - x_j) equals minus the sum over sources of the
  /// t^{p-1} coefficient, for every j.
  PointSumReport check(std::span<const std::uint32_t> x) const;

 private:
  CurveKind kind_;
  std::uint32_t p_;
  bool outside_gate_ = false;
  std::vector<std::pair<ProblemSpec, ExponentData>> sources_;
  std::vector<WeightVector> coefficients_;  // reduced solutions, prefactor dropped
};

PointSumReport check_curve_theorem(CurveKind kind, std::uint32_t p, std::span<const std::uint32_t> x,
                                   bool enforce_gate = true);

/// c_J(x1, x2) = integral over the surface of (t1 - t2) W_J for J = (2,0),
/// (1,1), (0,2), where c is the t1^{p-1} t2^{p-1} coefficient for kappa = 4,
/// m = (2,2). Requires p = 3 mod 4; with enforce_gate also p >= 7.
class SurfaceTheorem {
 public:
  explicit SurfaceTheorem(std::uint32_t p, bool enforce_gate = true);
  std::uint32_t p() const noexcept { return p_; }
  bool outside_gate() const noexcept { return outside_gate_; }
  PointSumReport check(std::uint32_t x1, std::uint32_t x2) const;

 private:
  std::uint32_t p_;
  bool outside_gate_ = false;
  WeightVector coefficients_;
};

PointSumReport check_surface_theorem(std::uint32_t p, std::uint32_t x1, std::uint32_t x2, bool enforce_gate = true);

}  // namespace kzp
