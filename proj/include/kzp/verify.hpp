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

// Exact checkers for the identities satisfied by polynomial KZ solutions.
// Every rational identity is multiplied through by its denominators so that
// a check is a finite list of polynomial equalities over F_p.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kzp/construct.hpp"
#include "kzp/ffpoly.hpp"
#include "kzp/sl2rep.hpp"

namespace kzp {

/// First nonvanishing residual of a failed check.
struct Witness {
  std::string equation;                 // e.g. "kz[2]" (1-based) or "rel"
  std::optional<MultiIndex> coordinate; // basis index of the offending coordinate
  SparsePoly residual;
};

struct CheckReport {
  std::string name;
  bool passed = true;
  std::optional<Witness> witness;  // present iff !passed

  static CheckReport pass(std::string name) { return {std::move(name), true, std::nullopt}; }
  static CheckReport fail(std::string name, Witness w) { return {std::move(name), false, std::move(w)}; }
};

/// Pi_{j!=i}(z_i - z_j) dw/dz_i = K sum_{j!=i} Pi_{r!=i,j}(z_i - z_r) Omega^{(i,j)} w
/// for every i. K is the image of 1/kappa in F_p.
CheckReport check_kz(const WeightVector& w, std::uint32_t K);

/// The same system for w = prod (z_a - z_b)^{E_ab} u, checked on u alone via
/// Pi_{j!=i}(z_i - z_j) du/dz_i + u sum_j E_ij Pi_{r!=i,j}(z_i - z_r)
///   = K sum_j Pi_{r!=i,j}(z_i - z_r) Omega^{(i,j)} u.
CheckReport check_kz_factored(const FactoredWeightVector& fw, std::uint32_t K);

/// e.w = 0.
CheckReport check_singular(const WeightVector& w);
/// The prefactor is a scalar polynomial, so e.w = 0 iff e.u = 0.
CheckReport check_singular(const FactoredWeightVector& fw);

/// sum_s (j_s + 1)(m_s - j_s) I_{J + 1_s} for every J in I_{k-1}, written as a
/// weight vector indexed by I_{k-1}. Computed without going through act_e.
WeightVector rel_residuals(const WeightVector& w);

/// M_1 + ... + M_n == -1 mod p.
bool resonance_condition_holds(std::uint32_t p, const ExponentData& exps);
/// k = 1: sum_s z_s M_s I_s = 0. Throws PreconditionError unless
/// resonance_condition_holds.
CheckReport check_resonance_linear(const WeightVector& w, const ExponentData& exps);

/// (ell - 1) K - sum_s M_s - (k - 1) M0 == 1 mod p.
bool ze_resonance_condition_holds(std::uint32_t p, std::uint32_t k, const ExponentData& exps, std::uint32_t ell);
/// (ze)^ell w = 0. Throws PreconditionError unless the condition above holds.
CheckReport check_ze_resonance(const WeightVector& w, const ExponentData& exps, std::uint32_t ell);
CheckReport check_ze_resonance(const FactoredWeightVector& fw, const ExponentData& exps, std::uint32_t ell);

/// Gaudin matrices H_i(z) at a point pairwise commute and commute with the
/// diagonal e, f, h. Throws InvalidArgument if two coordinates coincide mod p
/// (always the case when n > p).
CheckReport check_flatness(std::uint32_t p, std::span<const std::uint32_t> m, std::uint32_t k,
                           std::span<const std::uint32_t> zpoint);

/// d Phi/dt = sum_s c_s Phi/(t - z_s) for k = 1, with explicit coefficients c.
/// Holds for c = M; any other choice is a negative control.
CheckReport check_log_derivative(const ProblemSpec& spec, const ExponentData& exps,
                                 std::span<const std::uint32_t> coeffs);

/// The three k = 1 identities behind the KZ system and the linear
/// resonance relation:
///   (a) d Phi/dt = sum_s M_s Phi/(t - z_s);
///   (b) (d/dz_i - K sum_{j!=i} Omega^{(i,j)}/(z_i - z_j)) Phi V = d/dt(Phi W^i),
///       V = (1/(t - z_s))_s, W^i = -1/(t - z_i) in slot i;
///   (c) d/dt(t Phi) = (1 + sum M_s) Phi + sum_s z_s M_s Phi/(t - z_s).
/// Since the z-prefactor of Phi is free of t, the identities are checked
/// after dividing it out (for (b) its logarithmic derivative is added back).
/// Throws InvalidArgument if k != 1 or some M_s = 0.
CheckReport check_cohomology_k1(const ProblemSpec& spec, const ExponentData& exps);

}  // namespace kzp
