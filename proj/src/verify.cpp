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

#include "kzp/verify.hpp"

#include <numeric>

#include "kzp/error.hpp"
#include "kzp/parallel.hpp"

namespace kzp {

namespace {

SparsePoly z_diff(const Ambient& amb, std::uint32_t i, std::uint32_t j) {
  return SparsePoly::variable(amb, Var::z(i)) - SparsePoly::variable(amb, Var::z(j));
}

// prod_{r != i, r not in skip} (z_i - z_r)
SparsePoly vandermonde_row(const Ambient& amb, std::uint32_t n, std::uint32_t i, std::optional<std::uint32_t> skip) {
  SparsePoly out = SparsePoly::constant(amb, 1);
  for (std::uint32_t r = 0; r < n; ++r) {
    if (r == i || (skip && r == *skip)) continue;
    out = mul(out, z_diff(amb, i, r));
  }
  return out;
}

WeightVector d_dz(const WeightVector& w, std::uint32_t i) {
  WeightVector out(w.m(), w.k(), w.coord_ambient());
  for (const auto& [J, poly] : w.coords()) out.set(J, partial_derivative(poly, Var::z(i)));
  return out;
}

std::optional<Witness> first_nonzero(const WeightVector& v, std::string equation) {
  if (v.is_zero()) return std::nullopt;
  const auto& [J, poly] = *v.coords().begin();
  return Witness{std::move(equation), J, poly};
}

void require_slot_variables(const WeightVector& w) {
  if (w.coord_ambient().n != w.n()) {
    throw AmbientMismatch("coordinates need exactly one z-variable per tensor slot");
  }
}

// Left minus right side of the i-th cleared KZ equation. `log_prefactor`, if
// given, holds the exponents E of a dropped factor prod (z_a - z_b)^{E_ab}.
WeightVector kz_residual(const WeightVector& w, std::uint32_t K, std::uint32_t i,
                         const std::vector<std::vector<std::uint32_t>>* log_prefactor) {
  const Ambient& amb = w.coord_ambient();
  const std::uint32_t n = w.n();
  const PrimeField f(amb.p);
  WeightVector lhs = multiply_coords(d_dz(w, i), vandermonde_row(amb, n, i, std::nullopt));
  WeightVector rhs(w.m(), w.k(), amb);
  SparsePoly log_term(amb);
  for (std::uint32_t j = 0; j < n; ++j) {
    if (j == i) continue;
    const SparsePoly row = vandermonde_row(amb, n, i, j);
    rhs = add(rhs, multiply_coords(casimir(i, j, w), row));
    if (log_prefactor != nullptr) log_term += scale(row, f.reduce((*log_prefactor)[i][j]));
  }
  if (!log_term.is_zero()) lhs = add(lhs, multiply_coords(w, log_term));
  return sub(lhs, scale(rhs, f.reduce(K)));
}

CheckReport kz_system(const WeightVector& w, std::uint32_t K,
                      const std::vector<std::vector<std::uint32_t>>* log_prefactor, std::string name) {
  require_slot_variables(w);
  const std::uint32_t n = w.n();
  std::vector<std::optional<Witness>> witnesses(n);
  parallel_for(n, [&](std::size_t i) {
    const auto slot = static_cast<std::uint32_t>(i);
    witnesses[i] = first_nonzero(kz_residual(w, K, slot, log_prefactor), "kz[" + std::to_string(slot + 1) + "]");
  });
  for (auto& wit : witnesses) {
    if (wit) return CheckReport::fail(std::move(name), std::move(*wit));
  }
  return CheckReport::pass(std::move(name));
}

}  // namespace

CheckReport check_kz(const WeightVector& w, std::uint32_t K) { return kz_system(w, K, nullptr, "kz"); }

CheckReport check_kz_factored(const FactoredWeightVector& fw, std::uint32_t K) {
  if (fw.pair.size() != fw.reduced.n()) throw InvalidArgument("pair exponent matrix must be n x n");
  return kz_system(fw.reduced, K, &fw.pair, "kz");
}

CheckReport check_singular(const WeightVector& w) {
  if (auto wit = first_nonzero(act_e(w), "rel")) return CheckReport::fail("singular", std::move(*wit));
  return CheckReport::pass("singular");
}

CheckReport check_singular(const FactoredWeightVector& fw) { return check_singular(fw.reduced); }

WeightVector rel_residuals(const WeightVector& w) {
  if (w.k() == 0) return WeightVector(w.m(), 0, w.coord_ambient());
  const PrimeField f(w.p());
  const auto& m = w.m();
  WeightVector out(m, w.k() - 1, w.coord_ambient());
  for (const MultiIndex& J : basis(m, w.k() - 1)) {
    SparsePoly acc(w.coord_ambient());
    for (std::uint32_t s = 0; s < w.n(); ++s) {
      if (J[s] >= m[s]) continue;
      MultiIndex up = J;
      up.j[s] += 1;
      const std::uint32_t c = f.mul(f.reduce(J[s] + 1), f.reduce(m[s] - J[s]));
      if (c != 0) acc += scale(w.at(up), c);
    }
    if (!acc.is_zero()) out.set(J, std::move(acc));
  }
  return out;
}

bool resonance_condition_holds(std::uint32_t p, const ExponentData& exps) {
  const PrimeField f(p);
  std::uint32_t sum = 0;
  for (std::uint32_t v : exps.M) sum = f.add(sum, f.reduce(v));
  return sum == f.neg(1);
}

CheckReport check_resonance_linear(const WeightVector& w, const ExponentData& exps) {
  if (w.k() != 1) throw InvalidArgument("the linear resonance relation is stated for k = 1");
  require_slot_variables(w);
  if (exps.M.size() != w.n()) throw InvalidArgument("need one exponent per slot");
  if (!resonance_condition_holds(w.p(), exps)) {
    throw PreconditionError("M_1 + ... + M_n is not -1 mod p");
  }
  const PrimeField f(w.p());
  const Ambient& amb = w.coord_ambient();
  SparsePoly acc(amb);
  for (std::uint32_t s = 0; s < w.n(); ++s) {
    MultiIndex J{std::vector<std::uint32_t>(w.n(), 0)};
    J.j[s] = 1;
    acc += scale(mul(SparsePoly::variable(amb, Var::z(s)), w.at(J)), f.reduce(exps.M[s]));
  }
  if (acc.is_zero()) return CheckReport::pass("resonance-linear");
  return CheckReport::fail("resonance-linear", Witness{"sum z_s M_s I_s", std::nullopt, std::move(acc)});
}

bool ze_resonance_condition_holds(std::uint32_t p, std::uint32_t k, const ExponentData& exps, std::uint32_t ell) {
  if (ell == 0) return false;
  const PrimeField f(p);
  std::uint32_t v = f.mul(f.reduce(ell - 1), f.reduce(exps.K));
  for (std::uint32_t M : exps.M) v = f.sub(v, f.reduce(M));
  v = f.sub(v, f.mul(f.reduce(static_cast<std::int64_t>(k) - 1), f.reduce(exps.M0)));
  return v == 1 % p;
}

CheckReport check_ze_resonance(const WeightVector& w, const ExponentData& exps, std::uint32_t ell) {
  require_slot_variables(w);
  if (!ze_resonance_condition_holds(w.p(), w.k(), exps, ell)) {
    throw PreconditionError("(ell - 1) K - sum M_s - (k - 1) M0 is not 1 mod p for ell = " + std::to_string(ell));
  }
  WeightVector cur = w;
  for (std::uint32_t r = 0; r < ell && !cur.is_zero(); ++r) {
    if (cur.k() == 0) {
      // e kills the highest weight vector.
      return CheckReport::pass("ze-resonance");
    }
    cur = ze_apply(cur);
  }
  if (auto wit = first_nonzero(cur, "(ze)^" + std::to_string(ell))) {
    return CheckReport::fail("ze-resonance", std::move(*wit));
  }
  return CheckReport::pass("ze-resonance");
}

CheckReport check_ze_resonance(const FactoredWeightVector& fw, const ExponentData& exps, std::uint32_t ell) {
  return check_ze_resonance(fw.reduced, exps, ell);
}

CheckReport check_flatness(std::uint32_t p, std::span<const std::uint32_t> m, std::uint32_t k,
                           std::span<const std::uint32_t> zpoint) {
  const PrimeField f(p);
  validate_weights(m);
  const auto n = static_cast<std::uint32_t>(m.size());
  if (zpoint.size() != n) throw InvalidArgument("need one z-coordinate per slot");
  if (n > p) throw InvalidArgument("n > p, so the coordinates cannot be distinct in F_p");
  const std::uint32_t total = std::accumulate(m.begin(), m.end(), std::uint32_t{0});
  if (k > total) throw InvalidArgument("k exceeds |m|");

  auto hamiltonians = [&](std::uint32_t level) {
    std::vector<FpMatrix> hs;
    for (std::uint32_t i = 0; i < n; ++i) hs.push_back(gaudin_matrix(p, m, level, i, zpoint));
    return hs;
  };
  auto report = [&](const FpMatrix& diff, const std::string& what) -> std::optional<CheckReport> {
    for (std::size_t r = 0; r < diff.rows; ++r) {
      for (std::size_t c = 0; c < diff.cols; ++c) {
        if (diff(r, c) != 0) {
          return CheckReport::fail(
              "flatness", Witness{what + " entry (" + std::to_string(r) + "," + std::to_string(c) + ")", std::nullopt,
                                  SparsePoly::constant(Ambient{p, 0, 0}, diff(r, c))});
        }
      }
    }
    return std::nullopt;
  };

  const auto hs = hamiltonians(k);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      if (auto bad = report(commutator(hs[i], hs[j]),
                            "[H_" + std::to_string(i + 1) + ", H_" + std::to_string(j + 1) + "]")) {
        return *bad;
      }
    }
  }
  const FpMatrix h = diagonal_matrix(p, m, k, Generator::kH);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (auto bad = report(commutator(hs[i], h), "[H_" + std::to_string(i + 1) + ", h]")) return *bad;
  }
  if (k >= 1) {
    const FpMatrix e = diagonal_matrix(p, m, k, Generator::kE);
    const auto below = hamiltonians(k - 1);
    for (std::uint32_t i = 0; i < n; ++i) {
      if (auto bad = report(e * hs[i] - below[i] * e, "[H_" + std::to_string(i + 1) + ", e]")) return *bad;
    }
  }
  if (k + 1 <= total) {
    const FpMatrix fm = diagonal_matrix(p, m, k, Generator::kF);
    const auto above = hamiltonians(k + 1);
    for (std::uint32_t i = 0; i < n; ++i) {
      if (auto bad = report(fm * hs[i] - above[i] * fm, "[H_" + std::to_string(i + 1) + ", f]")) return *bad;
    }
  }
  return CheckReport::pass("flatness");
}

namespace {

// Phi without its z-prefactor, and Phi/(t - z_s) for each s.
struct K1Parts {
  Ambient amb;
  SparsePoly phi;
  std::vector<SparsePoly> phi_over;
};

K1Parts k1_parts(const ProblemSpec& spec, const ExponentData& exps) {
  spec.validate();
  if (spec.k != 1) throw InvalidArgument("the cohomological identities are implemented for k = 1");
  if (exps.M.size() != spec.n()) throw InvalidArgument("need one exponent per slot");
  for (std::uint32_t v : exps.M) {
    if (v == 0) throw InvalidArgument("division by (t - z_s) is not exact when M_s = 0");
  }
  const Ambient amb = spec.ambient();
  const std::uint32_t n = spec.n();
  std::vector<SparsePoly> lin;
  for (std::uint32_t s = 0; s < n; ++s) {
    lin.push_back(SparsePoly::variable(amb, Var::t(0)) - SparsePoly::variable(amb, Var::z(s)));
  }
  auto product = [&](std::optional<std::uint32_t> lowered) {
    SparsePoly acc = SparsePoly::constant(amb, 1);
    for (std::uint32_t s = 0; s < n; ++s) {
      const std::uint32_t e = exps.M[s] - (lowered && *lowered == s ? 1 : 0);
      if (e > 0) acc = mul(acc, pow(lin[s], e));
    }
    return acc;
  };
  K1Parts parts{amb, product(std::nullopt), {}};
  for (std::uint32_t s = 0; s < n; ++s) parts.phi_over.push_back(product(s));
  return parts;
}

std::optional<Witness> log_derivative_residual(const K1Parts& parts, std::span<const std::uint32_t> coeffs) {
  const PrimeField f(parts.amb.p);
  SparsePoly r = partial_derivative(parts.phi, Var::t(0));
  for (std::size_t s = 0; s < parts.phi_over.size(); ++s) r -= scale(parts.phi_over[s], f.reduce(coeffs[s]));
  if (r.is_zero()) return std::nullopt;
  return Witness{"dPhi/dt", std::nullopt, std::move(r)};
}

}  // namespace

CheckReport check_log_derivative(const ProblemSpec& spec, const ExponentData& exps,
                                 std::span<const std::uint32_t> coeffs) {
  const K1Parts parts = k1_parts(spec, exps);
  if (coeffs.size() != spec.n()) throw InvalidArgument("need one coefficient per slot");
  if (auto wit = log_derivative_residual(parts, coeffs)) return CheckReport::fail("log-derivative", std::move(*wit));
  return CheckReport::pass("log-derivative");
}

CheckReport check_cohomology_k1(const ProblemSpec& spec, const ExponentData& exps) {
  const std::string name = "cohomology";
  const K1Parts parts = k1_parts(spec, exps);
  const Ambient& amb = parts.amb;
  const PrimeField f(spec.p);
  const std::uint32_t n = spec.n();

  // (a)
  if (auto wit = log_derivative_residual(parts, exps.M)) return CheckReport::fail(name, std::move(*wit));

  // (c)
  {
    const SparsePoly t = SparsePoly::variable(amb, Var::t(0));
    std::uint32_t sum = 1;
    for (std::uint32_t v : exps.M) sum = f.add(sum, f.reduce(v));
    SparsePoly r = partial_derivative(mul(t, parts.phi), Var::t(0)) - scale(parts.phi, sum);
    for (std::uint32_t s = 0; s < n; ++s) {
      r -= scale(mul(SparsePoly::variable(amb, Var::z(s)), parts.phi_over[s]), f.reduce(exps.M[s]));
    }
    if (!r.is_zero()) return CheckReport::fail(name, Witness{"d(t Phi)/dt", std::nullopt, std::move(r)});
  }

  // (b): psi = sum_s Phi/(t - z_s) f_s v. With the z-prefactor removed, the
  // KZ operator picks up the logarithmic derivative of the prefactor, which is
  // exactly what kz_residual adds when given the pair exponents.
  WeightVector psi(spec.m, 1, amb);
  auto unit = [n](std::uint32_t s) {
    MultiIndex J{std::vector<std::uint32_t>(n, 0)};
    J.j[s] = 1;
    return J;
  };
  for (std::uint32_t s = 0; s < n; ++s) psi.set(unit(s), parts.phi_over[s]);
  for (std::uint32_t i = 0; i < n; ++i) {
    WeightVector r = kz_residual(psi, exps.K, i, &exps.pair);
    const SparsePoly exact = mul(vandermonde_row(amb, n, i, std::nullopt),
                                 partial_derivative(neg(parts.phi_over[i]), Var::t(0)));
    r.set(unit(i), r.at(unit(i)) - exact);
    if (auto wit = first_nonzero(r, "kz-form[" + std::to_string(i + 1) + "]")) {
      return CheckReport::fail(name, std::move(*wit));
    }
  }
  return CheckReport::pass(name);
}

}  // namespace kzp
