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

// Finite-dimensional sl2-modules L_{m_1} (x) ... (x) L_{m_n} over F_p.
//
// A basis vector f^{j_1} v (x) ... (x) f^{j_n} v is labelled by the
// multi-index J = (j_1, ..., j_n) with 0 <= j_s <= m_s; the weight subspace
// of weight |m| - 2k is spanned by the J with |J| = k. Slots are 0-based in
// this API.

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "kzp/ffpoly.hpp"

namespace kzp {

struct MultiIndex {
  std::vector<std::uint32_t> j;

  std::size_t size() const noexcept { return j.size(); }
  std::uint32_t operator[](std::size_t s) const { return j[s]; }
  std::uint32_t total() const noexcept;

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

/// Highest weights must all be positive; throws InvalidArgument otherwise.
void validate_weights(std::span<const std::uint32_t> m);

/// All J with |J| = k and j_s <= m_s, in descending lexicographic order
/// (so for m = (2,2), k = 2 the order is (2,0), (1,1), (0,2)).
std::vector<MultiIndex> basis(std::span<const std::uint32_t> m, std::uint32_t k);

/// Position of J inside basis(m, |J|), or -1.
std::ptrdiff_t basis_position(std::span<const std::uint32_t> m, const MultiIndex& J);

/// A vector sum_J I_J(z) f_J v_m of the weight subspace indexed by k, with
/// polynomial coordinates. Zero coordinates are not stored.
class WeightVector {
 public:
  WeightVector(std::vector<std::uint32_t> m, std::uint32_t k, Ambient coord_ambient);

  const std::vector<std::uint32_t>& m() const noexcept { return m_; }
  std::uint32_t k() const noexcept { return k_; }
  std::uint32_t n() const noexcept { return static_cast<std::uint32_t>(m_.size()); }
  std::uint32_t p() const noexcept { return amb_.p; }
  const Ambient& coord_ambient() const noexcept { return amb_; }

  /// Coordinate at J; the zero polynomial when absent.
  SparsePoly at(const MultiIndex& J) const;
  void set(const MultiIndex& J, SparsePoly poly);
  void accumulate(const MultiIndex& J, const SparsePoly& poly);

  const std::map<MultiIndex, SparsePoly>& coords() const noexcept { return coords_; }
  bool is_zero() const noexcept { return coords_.empty(); }
  /// Coordinates in basis order, zeros included.
  std::vector<SparsePoly> dense() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  void check_index(const MultiIndex& J) const;

  std::vector<std::uint32_t> m_;
  std::uint32_t k_ = 0;
  Ambient amb_{};
  std::map<MultiIndex, SparsePoly> coords_;
};

WeightVector add(const WeightVector& a, const WeightVector& b);
WeightVector sub(const WeightVector& a, const WeightVector& b);
WeightVector scale(const WeightVector& w, std::uint32_t c);
/// Multiplies every coordinate by a polynomial in the coordinate ambient.
WeightVector multiply_coords(const WeightVector& w, const SparsePoly& factor);

WeightVector act_e(const WeightVector& w);
/// Terms that would leave a module (j_s > m_s) are dropped.
WeightVector act_f(const WeightVector& w);
WeightVector act_h(const WeightVector& w);
/// e, f or h acting in a single slot only.
WeightVector act_e_slot(const WeightVector& w, std::uint32_t s);
WeightVector act_f_slot(const WeightVector& w, std::uint32_t s);
/// Omega^{(i,j)} = e_i f_j + f_i e_j + (1/2) h_i h_j, for i != j.
WeightVector casimir(std::uint32_t i, std::uint32_t j, const WeightVector& w);
/// sum_s z_s e_s; needs coordinates with one z-variable per slot.
WeightVector ze_apply(const WeightVector& w);
/// act_e(w) == 0 and ze_apply^ell(w) == 0.
bool conformal_block_test(const WeightVector& w, std::uint32_t ell);

/// Dense matrix over F_p.
struct FpMatrix {
  std::uint32_t p = 3;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint32_t> data;

  FpMatrix() = default;
  FpMatrix(std::uint32_t prime, std::size_t r, std::size_t c) : p(prime), rows(r), cols(c), data(r * c, 0) {}

  std::uint32_t& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  std::uint32_t operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  bool is_zero() const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;
};

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
FpMatrix operator+(const FpMatrix& a, const FpMatrix& b);
FpMatrix operator-(const FpMatrix& a, const FpMatrix& b);
FpMatrix scale(const FpMatrix& a, std::uint32_t c);
/// a*b - b*a for square matrices of equal size.
FpMatrix commutator(const FpMatrix& a, const FpMatrix& b);

/// Omega^{(i,j)} on basis(m, k); column J holds the image of f_J v_m.
FpMatrix casimir_matrix(std::uint32_t p, std::span<const std::uint32_t> m, std::uint32_t k, std::uint32_t i,
                        std::uint32_t j);
/// H_i(z) = sum_{j != i} Omega^{(i,j)} / (z_i - z_j) on basis(m, k).
/// Throws InvalidArgument when two coordinates of z coincide mod p.
FpMatrix gaudin_matrix(std::uint32_t p, std::span<const std::uint32_t> m, std::uint32_t k, std::uint32_t i,
                       std::span<const std::uint32_t> zpoint);

enum class Generator { kE, kF, kH };
/// Diagonal action of e, f or h from basis(m, k) to basis(m, k-1), basis(m, k+1)
/// or basis(m, k) respectively.
FpMatrix diagonal_matrix(std::uint32_t p, std::span<const std::uint32_t> m, std::uint32_t k, Generator g);

}  // namespace kzp
