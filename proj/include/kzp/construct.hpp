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

// Polynomial solutions of the sl2 KZ equations over F_p built as Taylor
// coefficients of (master polynomial) x (weight function).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kzp/ffpoly.hpp"
#include "kzp/sl2rep.hpp"

namespace kzp {

/// The rational parameter kappa = num / den.
struct Kappa {
  std::int64_t num = 1;
  std::int64_t den = 1;

  /// Parses "a/b" or "a".
  static Kappa parse(const std::string& text);
  std::string to_string() const;
  friend bool operator==(const Kappa&, const Kappa&) = default;
};

struct ProblemSpec {
  std::uint32_t p = 3;
  Kappa kappa;
  std::vector<std::uint32_t> m;
  std::uint32_t k = 1;
  std::vector<std::int64_t> q;  // one shift per t-variable
  std::vector<std::uint32_t> l; // positive; the coefficient taken is t_i^{l_i p - 1}

  /// Throws InvalidArgument or PreconditionError when the data is unusable
  /// (p dividing the numerator or the denominator of kappa, k > |m|, wrong
  /// lengths, ...).
  void validate() const;
  std::uint32_t n() const { return static_cast<std::uint32_t>(m.size()); }
  Ambient ambient() const { return Ambient{p, k, n()}; }
  Ambient z_ambient() const { return Ambient{p, 0, n()}; }
  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

/// Positive integer exponents congruent mod p to -m_s/kappa (M_s),
/// m_i m_j/(2 kappa) (pair, i < j), 2/kappa (M0) and 1/kappa (K).
struct ExponentData {
  std::vector<std::uint32_t> M;
  std::vector<std::vector<std::uint32_t>> pair;  // symmetric n x n, zero diagonal
  std::uint32_t M0 = 0;
  std::uint32_t K = 0;

  std::uint32_t pair_exp(std::uint32_t i, std::uint32_t j) const { return pair[i][j]; }
  friend bool operator==(const ExponentData&, const ExponentData&) = default;
};

/// Explicit exponent choices; absent fields fall back to least residues.
struct ExponentOverride {
  std::optional<std::vector<std::uint32_t>> M;
  std::optional<std::vector<std::vector<std::uint32_t>>> pair;  // full symmetric matrix
  std::optional<std::uint32_t> M0;
  std::optional<std::uint32_t> K;
};

/// Residues in [1, p] of the four congruence classes.
ExponentData least_residue_exponents(const ProblemSpec& spec);
/// Least residues, then overrides; throws InvalidArgument if an override is
/// not positive or violates its congruence.
ExponentData exponent_data(const ProblemSpec& spec, const ExponentOverride* override = nullptr);
/// Throws InvalidArgument if `exps` does not match the congruences of `spec`.
void validate_exponents(const ProblemSpec& spec, const ExponentData& exps);

/// prod_{i<j} (z_i - z_j)^{pair_ij} in the ambient (p, 0, n).
SparsePoly z_prefactor(std::uint32_t p, const std::vector<std::vector<std::uint32_t>>& pair);

/// The master polynomial in F_p[t, z].
SparsePoly master_polynomial(const ProblemSpec& spec, const ExponentData& exps);

/// Every map sigma from t-slots to tensor slots with |sigma^{-1}(s)| = j_s;
/// entry i of an assignment is the slot of t_i.
std::vector<std::vector<std::uint32_t>> assignments(const MultiIndex& J);

/// Master polynomial times the weight function W_J, as the sum over
/// assignments of the master polynomial with each (t_i - z_sigma(i))
/// exponent lowered by one. No division is performed.
SparsePoly master_times_weight(const ProblemSpec& spec, const ExponentData& exps, const MultiIndex& J);

/// Same product with z already evaluated at x; a polynomial in t only.
SparsePoly master_times_weight_at(const ProblemSpec& spec, const ExponentData& exps, const MultiIndex& J,
                                  std::span<const std::uint32_t> x);

/// A weight vector written as prod_{i<j}(z_i - z_j)^{pair_ij} * reduced.
struct FactoredWeightVector {
  std::vector<std::vector<std::uint32_t>> pair;
  WeightVector reduced;

  WeightVector expand() const;
};

/// The Taylor-coefficient solution with its z-prefactor kept symbolic.
FactoredWeightVector taylor_solution_factored(const ProblemSpec& spec, const ExponentData& exps);

/// Coefficient of prod_i (t_i - q_i)^{l_i p - 1} in sum_J Phi W_J f_J v_m.
WeightVector taylor_solution(const ProblemSpec& spec, const ExponentData& exps);

/// Splits every coordinate by total z-degree; components are listed by
/// increasing degree and zero components are omitted.
std::vector<WeightVector> homogeneous_components(const WeightVector& w);

/// Tries to write w as prod (z_i - z_j)^{pair_ij} * u by exact division.
std::optional<FactoredWeightVector> factor_prefactor(const WeightVector& w,
                                                     const std::vector<std::vector<std::uint32_t>>& pair);

}  // namespace kzp
