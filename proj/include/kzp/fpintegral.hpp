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

// Sums over F_p^k and their relation to the Taylor-coefficient solutions.

#include <cstdint>
#include <span>
#include <vector>

#include "kzp/construct.hpp"
#include "kzp/verify.hpp"

namespace kzp {

/// sum_{t in F_p} t^i: p - 1 when i >= 1 and (p - 1) | i, otherwise 0.
/// For i = 0 the sum has p terms equal to 1, hence 0.
std::uint32_t power_sum(std::uint32_t p, std::uint64_t i);

enum class IntegrationPath {
  kGrid,      // evaluate at every point of F_p^k
  kPowerSum,  // term by term through power_sum
};

/// sum over t in F_p^k of F(t). F must have no z-variables.
std::uint32_t integrate_fpk(const SparsePoly& F, IntegrationPath path = IntegrationPath::kGrid);

/// Sum of F over an explicit list of points of F_p^k.
std::uint32_t integrate_over(const SparsePoly& F, std::span<const std::vector<std::uint32_t>> points);

struct IntegralValue {
  MultiIndex J;
  std::uint32_t taylor = 0;    // I_J(x, q)
  std::uint32_t integral = 0;  // (-1)^k sum_{F_p^k} F_J
};

struct IntegralReport {
  CheckReport check;
  std::vector<IntegralValue> values;  // basis order
};

/// Largest deg_{t_i} over all coordinates of F(t) = Phi(t, x) W(t, x).
std::uint32_t max_t_degree(const ProblemSpec& spec, const ExponentData& exps, std::span<const std::uint32_t> x);

/// I^{(p-1, ..., p-1)}(x, q) = (-1)^k sum_{F_p^k} F for every coordinate.
/// Requires l = (1, ..., 1) and distinct x. Throws InapplicableError when
/// some deg_{t_i} F >= 2p - 2. `solution`, if given, must be
/// taylor_solution_factored(spec, exps) and saves recomputing it per point.
IntegralReport check_integral_theorem(const ProblemSpec& spec, const ExponentData& exps,
                                      std::span<const std::uint32_t> x,
                                      const FactoredWeightVector* solution = nullptr);

/// Smallest positive generator of F_p^*.
std::uint32_t primitive_root(std::uint32_t p);

/// Data of the skew-symmetry decomposition: kappa = 2 kappa', kappa' even,
/// m_s = 2 m_s', kappa' | p - 1 with (p - 1)/kappa' odd.
struct GammaData {
  std::uint32_t kappa_half = 0;           // kappa'
  std::vector<std::uint32_t> m_half;      // m_s'
  std::uint32_t ratio = 0;                // (p - 1)/kappa'
};

/// Validates the hypotheses above (PreconditionError otherwise).
GammaData gamma_data(const ProblemSpec& spec);

/// The exponents M0 = p - (p-1)/kappa', M_s = m_s' (p-1)/kappa'; pair exponents
/// are least residues.
ExponentData gamma_exponents(const ProblemSpec& spec);

struct GammaPartition {
  std::uint32_t generator = 0;  // a
  // cells[0] is the zero locus of phi; cells[l] has phi^{(p-1)/kappa'} = a^{l (p-1)/kappa'}.
  std::vector<std::vector<std::vector<std::uint32_t>>> cells;
};

/// phi(t, x) = prod_{i<j} (t_i - t_j)^{kappa' - 1} prod_{i,s} (t_i - x_s)^{m_s'}.
std::uint32_t gamma_phi(const ProblemSpec& spec, const GammaData& g, std::span<const std::uint32_t> t,
                        std::span<const std::uint32_t> x);

GammaPartition gamma_partition(const ProblemSpec& spec, std::span<const std::uint32_t> x);

/// sum_{F_p^k} Phi W_J = V(x) sum_{l=1}^{kappa'/2} 2 a^{l(p-1)/kappa'} sum_{gamma_l} W_J prod_{i<j}(t_i - t_j)
/// for every J, with Phi built from gamma_exponents. Needs k >= 2 and every
/// M_s >= 2 (PreconditionError otherwise).
CheckReport check_gamma_decomposition(const ProblemSpec& spec, std::span<const std::uint32_t> x);

}  // namespace kzp
