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

#include "kzp/sl2rep.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "kzp/error.hpp"

namespace kzp {

namespace {

using Image = std::vector<std::pair<MultiIndex, std::uint32_t>>;

std::uint32_t e_coefficient(std::uint32_t m, std::uint32_t j, const PrimeField& f) {
  // e f^j v_m = j (m - j + 1) f^{j-1} v_m
  return f.mul(f.reduce(j), f.reduce(static_cast<std::int64_t>(m) - j + 1));
}

std::int64_t h_eigenvalue(std::uint32_t m, std::uint32_t j) { return static_cast<std::int64_t>(m) - 2 * j; }

Image e_image_slot(std::span<const std::uint32_t> m, const MultiIndex& J, std::uint32_t s, const PrimeField& f) {
  Image out;
  if (J[s] == 0) return out;
  std::uint32_t c = e_coefficient(m[s], J[s], f);
  if (c == 0) return out;
  MultiIndex T = J;
  T.j[s] -= 1;
  out.emplace_back(std::move(T), c);
  return out;
}

Image f_image_slot(std::span<const std::uint32_t> m, const MultiIndex& J, std::uint32_t s) {
  Image out;
  if (J[s] + 1 > m[s]) return out;
  MultiIndex T = J;
  T.j[s] += 1;
  out.emplace_back(std::move(T), 1);
  return out;
}

Image casimir_image(std::span<const std::uint32_t> m, const MultiIndex& J, std::uint32_t i, std::uint32_t j,
                    const PrimeField& f) {
  Image out;
  // e in slot i, f in slot j
  if (J[i] >= 1 && J[j] + 1 <= m[j]) {
    std::uint32_t c = e_coefficient(m[i], J[i], f);
    if (c != 0) {
      MultiIndex T = J;
      T.j[i] -= 1;
      T.j[j] += 1;
      out.emplace_back(std::move(T), c);
    }
  }
  // f in slot i, e in slot j
  if (J[j] >= 1 && J[i] + 1 <= m[i]) {
    std::uint32_t c = e_coefficient(m[j], J[j], f);
    if (c != 0) {
      MultiIndex T = J;
      T.j[j] -= 1;
      T.j[i] += 1;
      out.emplace_back(std::move(T), c);
    }
  }
  std::uint32_t diag = f.mul(f.half(), f.reduce(h_eigenvalue(m[i], J[i]) * h_eigenvalue(m[j], J[j])));
  if (diag != 0) out.emplace_back(J, diag);
  return out;
}

void check_slot(const WeightVector& w, std::uint32_t s) {
  if (s >= w.n()) throw InvalidArgument("slot " + std::to_string(s) + " out of range");
}

template <typename ImageFn>
WeightVector apply_linear(const WeightVector& w, std::uint32_t new_k, ImageFn&& image) {
  WeightVector out(w.m(), new_k, w.coord_ambient());
  for (const auto& [J, poly] : w.coords()) {
    for (const auto& [T, c] : image(J)) out.accumulate(T, scale(poly, c));
  }
  return out;
}

SparsePoly times_z(const SparsePoly& a, std::uint32_t s) {
  const Ambient& amb = a.ambient();
  const std::size_t pos = var_position(amb, Var::z(s));
  std::vector<Term> ts(a.terms().begin(), a.terms().end());
  for (Term& t : ts) t.exps[pos] += 1;
  return SparsePoly::from_canonical(amb, std::move(ts));
}

void enumerate(std::span<const std::uint32_t> m, std::uint32_t remaining, std::size_t slot,
               std::vector<std::uint32_t>& cur, std::vector<MultiIndex>& out) {
  if (slot == m.size()) {
    if (remaining == 0) out.push_back(MultiIndex{cur});
    return;
  }
  std::uint32_t tail = 0;
  for (std::size_t s = slot + 1; s < m.size(); ++s) tail += m[s];
  const std::uint32_t hi = std::min(m[slot], remaining);
  for (std::uint32_t v = hi + 1; v-- > 0;) {
    if (remaining - v > tail) break;
    cur[slot] = v;
    enumerate(m, remaining - v, slot + 1, cur, out);
  }
  cur[slot] = 0;
}

}  // namespace

std::uint32_t MultiIndex::total() const noexcept { return std::accumulate(j.begin(), j.end(), std::uint32_t{0}); }

void validate_weights(std::span<const std::uint32_t> m) {
  if (m.empty()) throw InvalidArgument("at least one tensor factor is required");
  for (std::uint32_t v : m) {
    if (v == 0) throw InvalidArgument("highest weights must be positive");
  }
}

std::vector<MultiIndex> basis(std::span<const std::uint32_t> m, std::uint32_t k) {
  std::vector<MultiIndex> out;
  std::vector<std::uint32_t> cur(m.size(), 0);
  enumerate(m, k, 0, cur, out);
  return out;
}

std::ptrdiff_t basis_position(std::span<const std::uint32_t> m, const MultiIndex& J) {
  const auto b = basis(m, J.total());
  // descending order
  auto it = std::lower_bound(b.begin(), b.end(), J, [](const MultiIndex& a, const MultiIndex& x) { return x < a; });
  if (it == b.end() || !(*it == J)) return -1;
  return it - b.begin();
}

WeightVector::WeightVector(std::vector<std::uint32_t> m, std::uint32_t k, Ambient coord_ambient)
    : m_(std::move(m)), k_(k), amb_(coord_ambient) {
  validate_weights(m_);
  validate_ambient(amb_);
  const std::uint32_t total = std::accumulate(m_.begin(), m_.end(), std::uint32_t{0});
  if (k_ > total) throw InvalidArgument("k exceeds |m|");
}

void WeightVector::check_index(const MultiIndex& J) const {
  if (J.size() != m_.size() || J.total() != k_) throw InvalidArgument("multi-index outside I_k");
  for (std::size_t s = 0; s < m_.size(); ++s) {
    if (J[s] > m_[s]) throw InvalidArgument("multi-index outside I_k");
  }
}

SparsePoly WeightVector::at(const MultiIndex& J) const {
  auto it = coords_.find(J);
  return it == coords_.end() ? SparsePoly(amb_) : it->second;
}

void WeightVector::set(const MultiIndex& J, SparsePoly poly) {
  check_index(J);
  if (!(poly.ambient() == amb_)) throw AmbientMismatch("coordinate polynomial has the wrong ambient");
  if (poly.is_zero()) {
    coords_.erase(J);
  } else {
    coords_.insert_or_assign(J, std::move(poly));
  }
}

void WeightVector::accumulate(const MultiIndex& J, const SparsePoly& poly) {
  if (poly.is_zero()) return;
  auto it = coords_.find(J);
  if (it == coords_.end()) {
    set(J, poly);
    return;
  }
  it->second += poly;
  if (it->second.is_zero()) coords_.erase(it);
}

std::vector<SparsePoly> WeightVector::dense() const {
  std::vector<SparsePoly> out;
  for (const MultiIndex& J : basis(m_, k_)) out.push_back(at(J));
  return out;
}

WeightVector add(const WeightVector& a, const WeightVector& b) {
  if (a.m() != b.m() || a.k() != b.k() || !(a.coord_ambient() == b.coord_ambient())) {
    throw AmbientMismatch("weight vectors live in different spaces");
  }
  WeightVector out = a;
  for (const auto& [J, poly] : b.coords()) out.accumulate(J, poly);
  return out;
}

WeightVector sub(const WeightVector& a, const WeightVector& b) { return add(a, scale(b, a.p() - 1)); }

WeightVector scale(const WeightVector& w, std::uint32_t c) {
  WeightVector out(w.m(), w.k(), w.coord_ambient());
  for (const auto& [J, poly] : w.coords()) out.set(J, scale(poly, c));
  return out;
}

WeightVector multiply_coords(const WeightVector& w, const SparsePoly& factor) {
  WeightVector out(w.m(), w.k(), w.coord_ambient());
  for (const auto& [J, poly] : w.coords()) out.set(J, mul(poly, factor));
  return out;
}

WeightVector act_e_slot(const WeightVector& w, std::uint32_t s) {
  check_slot(w, s);
  if (w.k() == 0) return WeightVector(w.m(), 0, w.coord_ambient());
  const PrimeField f(w.p());
  return apply_linear(w, w.k() - 1, [&](const MultiIndex& J) { return e_image_slot(w.m(), J, s, f); });
}

WeightVector act_f_slot(const WeightVector& w, std::uint32_t s) {
  check_slot(w, s);
  const std::uint32_t total = std::accumulate(w.m().begin(), w.m().end(), std::uint32_t{0});
  if (w.k() == total) return WeightVector(w.m(), w.k(), w.coord_ambient());
  return apply_linear(w, w.k() + 1, [&](const MultiIndex& J) { return f_image_slot(w.m(), J, s); });
}

WeightVector act_e(const WeightVector& w) {
  if (w.k() == 0) return WeightVector(w.m(), 0, w.coord_ambient());
  WeightVector out(w.m(), w.k() - 1, w.coord_ambient());
  for (std::uint32_t s = 0; s < w.n(); ++s) out = add(out, act_e_slot(w, s));
  return out;
}

WeightVector act_f(const WeightVector& w) {
  const std::uint32_t total = std::accumulate(w.m().begin(), w.m().end(), std::uint32_t{0});
  // f maps the lowest weight space to zero.
  if (w.k() == total) return WeightVector(w.m(), w.k(), w.coord_ambient());
  WeightVector out(w.m(), w.k() + 1, w.coord_ambient());
  for (std::uint32_t s = 0; s < w.n(); ++s) out = add(out, act_f_slot(w, s));
  return out;
}

WeightVector act_h(const WeightVector& w) {
  const PrimeField f(w.p());
  const std::int64_t total = std::accumulate(w.m().begin(), w.m().end(), std::int64_t{0});
  return scale(w, f.reduce(total - 2 * static_cast<std::int64_t>(w.k())));
}

WeightVector casimir(std::uint32_t i, std::uint32_t j, const WeightVector& w) {
  check_slot(w, i);
  check_slot(w, j);
  if (i == j) throw InvalidArgument("casimir needs two distinct slots");
  const PrimeField f(w.p());
  return apply_linear(w, w.k(), [&](const MultiIndex& J) { return casimir_image(w.m(), J, i, j, f); });
}

WeightVector ze_apply(const WeightVector& w) {
  if (w.coord_ambient().n != w.n()) {
    throw InvalidArgument("ze needs one z-variable per tensor slot");
  }
  if (w.k() == 0) return WeightVector(w.m(), 0, w.coord_ambient());
  WeightVector out(w.m(), w.k() - 1, w.coord_ambient());
  for (std::uint32_t s = 0; s < w.n(); ++s) {
    WeightVector es = act_e_slot(w, s);
    for (const auto& [J, poly] : es.coords()) out.accumulate(J, times_z(poly, s));
  }
  return out;
}

bool conformal_block_test(const WeightVector& w, std::uint32_t ell) {
  if (ell == 0) throw InvalidArgument("ell must be positive");
  if (!act_e(w).is_zero()) return false;
  WeightVector cur = w;
  for (std::uint32_t r = 0; r < ell; ++r) {
    if (cur.is_zero()) return true;
    if (cur.k() == 0) return true;  // (ze) kills the highest weight vector
    cur = ze_apply(cur);
  }
  return cur.is_zero();
}

bool FpMatrix::is_zero() const {
  return std::all_of(data.begin(), data.end(), [](std::uint32_t v) { return v == 0; });
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
  if (a.cols != b.rows || a.p != b.p) throw InvalidArgument("matrix shapes do not match");
  FpMatrix c(a.p, a.rows, b.cols);
  for (std::size_t r = 0; r < a.rows; ++r) {
    for (std::size_t x = 0; x < a.cols; ++x) {
      const std::uint64_t av = a(r, x);
      if (av == 0) continue;
      for (std::size_t col = 0; col < b.cols; ++col) {
        c(r, col) = static_cast<std::uint32_t>((c(r, col) + av * b(x, col)) % a.p);
      }
    }
  }
  return c;
}

FpMatrix operator+(const FpMatrix& a, const FpMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols || a.p != b.p) throw InvalidArgument("matrix shapes do not match");
  const PrimeField f(a.p);
  FpMatrix c = a;
  for (std::size_t i = 0; i < c.data.size(); ++i) c.data[i] = f.add(a.data[i], b.data[i]);
  return c;
}

FpMatrix operator-(const FpMatrix& a, const FpMatrix& b) { return a + scale(b, a.p - 1); }

FpMatrix scale(const FpMatrix& a, std::uint32_t c) {
  const PrimeField f(a.p);
  FpMatrix out = a;
  for (auto& v : out.data) v = f.mul(v, c % a.p);
  return out;
}

FpMatrix commutator(const FpMatrix& a, const FpMatrix& b) { return a * b - b * a; }

FpMatrix casimir_matrix(std::uint32_t p, std::span<const std::uint32_t> m, std::uint32_t k, std::uint32_t i,
                        std::uint32_t j) {
  validate_weights(m);
  if (i >= m.size() || j >= m.size() || i == j) throw InvalidArgument("casimir_matrix: bad slot pair");
  const PrimeField f(p);
  const auto b = basis(m, k);
  FpMatrix out(p, b.size(), b.size());
  for (std::size_t c = 0; c < b.size(); ++c) {
    for (const auto& [T, v] : casimir_image(m, b[c], i, j, f)) {
      const auto r = static_cast<std::size_t>(basis_position(m, T));
      out(r, c) = f.add(out(r, c), v);
    }
  }
  return out;
}

FpMatrix gaudin_matrix(std::uint32_t p, std::span<const std::uint32_t> m, std::uint32_t k, std::uint32_t i,
                       std::span<const std::uint32_t> zpoint) {
  const PrimeField f(p);
  if (zpoint.size() != m.size()) throw InvalidArgument("gaudin_matrix: need one coordinate per slot");
  for (std::size_t a = 0; a < zpoint.size(); ++a) {
    for (std::size_t b = a + 1; b < zpoint.size(); ++b) {
      if (zpoint[a] % p == zpoint[b] % p) throw InvalidArgument("gaudin_matrix: coincident coordinates");
    }
  }
  const auto dim = basis(m, k).size();
  FpMatrix h(p, dim, dim);
  for (std::uint32_t j = 0; j < m.size(); ++j) {
    if (j == i) continue;
    const std::uint32_t w = f.inv(f.sub(zpoint[i] % p, zpoint[j] % p));
    h = h + scale(casimir_matrix(p, m, k, i, j), w);
  }
  return h;
}

FpMatrix diagonal_matrix(std::uint32_t p, std::span<const std::uint32_t> m, std::uint32_t k, Generator g) {
  validate_weights(m);
  const PrimeField f(p);
  const auto src = basis(m, k);
  const std::uint32_t total = std::accumulate(m.begin(), m.end(), std::uint32_t{0});
  switch (g) {
    case Generator::kH: {
      FpMatrix out(p, src.size(), src.size());
      const std::uint32_t wt = f.reduce(static_cast<std::int64_t>(total) - 2 * static_cast<std::int64_t>(k));
      for (std::size_t c = 0; c < src.size(); ++c) out(c, c) = wt;
      return out;
    }
    case Generator::kE: {
      const auto dst = k == 0 ? std::vector<MultiIndex>{} : basis(m, k - 1);
      FpMatrix out(p, dst.size(), src.size());
      for (std::size_t c = 0; c < src.size(); ++c) {
        for (std::uint32_t s = 0; s < m.size(); ++s) {
          for (const auto& [T, v] : e_image_slot(m, src[c], s, f)) {
            const auto r = static_cast<std::size_t>(basis_position(m, T));
            out(r, c) = f.add(out(r, c), v);
          }
        }
      }
      return out;
    }
    case Generator::kF: {
      const auto dst = k >= total ? std::vector<MultiIndex>{} : basis(m, k + 1);
      FpMatrix out(p, dst.size(), src.size());
      for (std::size_t c = 0; c < src.size(); ++c) {
        for (std::uint32_t s = 0; s < m.size(); ++s) {
          for (const auto& [T, v] : f_image_slot(m, src[c], s)) {
            const auto r = static_cast<std::size_t>(basis_position(m, T));
            out(r, c) = f.add(out(r, c), v);
          }
        }
      }
      return out;
    }
  }
  return {};
}

}  // namespace kzp
