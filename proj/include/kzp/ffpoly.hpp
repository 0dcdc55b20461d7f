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

// Sparse multivariate polynomials over F_p in two blocks of variables:
// t = (t_1, ..., t_k) and z = (z_1, ..., z_n).
//
// Terms are kept sorted by the lexicographic order on the concatenated
// exponent vector (t-exponents first) and no stored coefficient is zero, so
// structural equality is polynomial equality. Values are immutable once
// built; every operation returns a fresh polynomial.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "kzp/field.hpp"

namespace kzp {

// Upper bound on k + n.
inline constexpr std::size_t kMaxVars = 16;

using Monomial = std::array<std::uint16_t, kMaxVars>;

struct Ambient {
  std::uint32_t p = 3;
  std::uint32_t k = 0;  // number of t-variables
  std::uint32_t n = 0;  // number of z-variables

  std::uint32_t nvars() const noexcept { return k + n; }
  PrimeField field() const { return PrimeField(p); }
  friend bool operator==(const Ambient&, const Ambient&) = default;
};

/// Throws InvalidArgument if p is not an odd prime or k + n > kMaxVars.
void validate_ambient(const Ambient& amb);

struct Term {
  Monomial exps{};
  std::uint32_t coeff = 0;
  friend bool operator==(const Term&, const Term&) = default;
};

struct Var {
  enum class Block : std::uint8_t { kT, kZ };
  Block block = Block::kZ;
  std::uint32_t index = 0;  // 0-based within the block

  static Var t(std::uint32_t i) { return {Block::kT, i}; }
  static Var z(std::uint32_t s) { return {Block::kZ, s}; }
};

class SparsePoly {
 public:
  SparsePoly() = default;
  /// The zero polynomial of the given ambient.
  explicit SparsePoly(Ambient amb);

  static SparsePoly constant(Ambient amb, std::int64_t c);
  static SparsePoly variable(Ambient amb, Var v);
  /// Canonicalises: reduces coefficients, merges duplicates, drops zeros, sorts.
  static SparsePoly from_terms(Ambient amb, std::vector<Term> terms);
  /// Builds from already canonical terms (sorted, unique, nonzero, reduced).
  static SparsePoly from_canonical(Ambient amb, std::vector<Term> terms);

  const Ambient& ambient() const noexcept { return amb_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Largest exponent of `v` over all terms (0 for the zero polynomial).
  std::uint32_t degree(Var v) const;
  std::uint32_t total_degree() const;
  std::uint32_t z_degree() const;  // largest total z-degree among terms
  /// True iff no term involves a z-variable.
  bool is_free_of_z() const;
  /// Coefficient of an exact monomial, 0 if absent.
  std::uint32_t coefficient(const Monomial& m) const;

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  Ambient amb_{};
  std::vector<Term> terms_;
};

std::size_t var_position(const Ambient& amb, Var v);

SparsePoly add(const SparsePoly& a, const SparsePoly& b);
SparsePoly sub(const SparsePoly& a, const SparsePoly& b);
SparsePoly neg(const SparsePoly& a);
SparsePoly scale(const SparsePoly& a, std::uint32_t c);
SparsePoly mul(const SparsePoly& a, const SparsePoly& b);
/// Product with every term whose t_i-exponent exceeds t_caps[i] discarded.
/// Exact for all coefficients at or below the caps, since exponents never
/// decrease under multiplication.
SparsePoly mul_truncated(const SparsePoly& a, const SparsePoly& b, std::span<const std::uint32_t> t_caps);
/// coeff_t(a * b, e) without forming the whole product.
SparsePoly coeff_t_of_product(const SparsePoly& a, const SparsePoly& b, std::span<const std::uint32_t> e);
SparsePoly pow(const SparsePoly& a, std::uint64_t e);
SparsePoly pow_truncated(const SparsePoly& a, std::uint64_t e, std::span<const std::uint32_t> t_caps);

inline SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) { return add(a, b); }
inline SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return sub(a, b); }
inline SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) { return mul(a, b); }

SparsePoly partial_derivative(const SparsePoly& a, Var v);
/// a(t + q, z); q has one entry per t-variable and is reduced mod p.
SparsePoly shift_t(const SparsePoly& a, std::span<const std::int64_t> q);
/// Coefficient of t^e as a polynomial in the ambient (p, 0, n).
SparsePoly coeff_t(const SparsePoly& a, std::span<const std::uint32_t> e);
/// Full evaluation; t_values has k entries, z_values has n entries.
std::uint32_t eval(const SparsePoly& a, std::span<const std::uint32_t> t_values,
                   std::span<const std::uint32_t> z_values);
/// Substitutes z = x, returning a polynomial in the ambient (p, k, 0).
SparsePoly eval_z(const SparsePoly& a, std::span<const std::uint32_t> x);
/// Re-homes a polynomial into a larger ambient with the same p, placing the
/// source t-block and z-block at the start of the target blocks.
SparsePoly embed(const SparsePoly& a, const Ambient& target);
/// Splits by total z-degree; index d holds the degree-d part.
std::vector<SparsePoly> z_homogeneous_parts(const SparsePoly& a);
/// Exact division by (z_a - z_b). Returns false (leaving `out` untouched)
/// when the division leaves a remainder.
bool divide_by_z_difference(const SparsePoly& a, std::uint32_t za, std::uint32_t zb, SparsePoly& out);

/// Human-readable form, e.g. "2*t1^2*z1 + z2"; variables are 1-based.
std::string to_string(const SparsePoly& a);

}  // namespace kzp
