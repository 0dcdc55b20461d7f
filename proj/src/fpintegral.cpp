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

#include "kzp/fpintegral.hpp"

#include <set>

#include "kzp/error.hpp"
#include "kzp/parallel.hpp"

namespace kzp {

namespace {

// Visits every point of F_p^k with the first coordinate fixed to `first`.
template <typename Fn>
void for_each_point_with_first(std::uint32_t p, std::uint32_t k, std::uint32_t first, Fn&& fn) {
  std::vector<std::uint32_t> t(k, 0);
  t[0] = first;
  while (true) {
    fn(std::span<const std::uint32_t>(t));
    std::size_t pos = k;
    while (pos > 1) {
      --pos;
      if (++t[pos] < p) break;
      t[pos] = 0;
      if (pos == 1) return;
    }
    if (k == 1) return;
  }
}

void require_distinct(std::uint32_t p, std::span<const std::uint32_t> x) {
  std::set<std::uint32_t> seen;
  for (std::uint32_t v : x) {
    if (!seen.insert(v % p).second) throw InvalidArgument("the points x_s must be distinct mod p");
  }
}

std::uint32_t prefactor_at(const PrimeField& f, const ExponentData& exps, std::span<const std::uint32_t> x) {
  std::uint32_t v = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      v = f.mul(v, f.pow(f.sub(f.reduce(x[i]), f.reduce(x[j])), exps.pair[i][j]));
    }
  }
  return v;
}

}  // namespace

std::uint32_t power_sum(std::uint32_t p, std::uint64_t i) {
  const PrimeField f(p);
  if (i == 0) return 0;
  return i % (p - 1) == 0 ? p - 1 : 0;
}

std::uint32_t integrate_fpk(const SparsePoly& F, IntegrationPath path) {
  const Ambient& amb = F.ambient();
  if (amb.n != 0) throw AmbientMismatch("evaluate the z-variables before integrating over F_p^k");
  const PrimeField f(amb.p);
  if (amb.k == 0) return F.is_zero() ? 0 : F.terms()[0].coeff;  // F_p^0 is a single point

  if (path == IntegrationPath::kPowerSum) {
    std::uint32_t total = 0;
    for (const Term& term : F.terms()) {
      std::uint32_t v = term.coeff;
      for (std::uint32_t i = 0; i < amb.k && v != 0; ++i) v = f.mul(v, power_sum(amb.p, term.exps[i]));
      total = f.add(total, v);
    }
    return total;
  }

  std::vector<std::uint32_t> partial(amb.p, 0);
  parallel_for(amb.p, [&](std::size_t first) {
    std::uint32_t acc = 0;
    for_each_point_with_first(amb.p, amb.k, static_cast<std::uint32_t>(first),
                              [&](std::span<const std::uint32_t> t) { acc = f.add(acc, eval(F, t, {})); });
    partial[first] = acc;
  });
  std::uint32_t total = 0;
  for (std::uint32_t v : partial) total = f.add(total, v);
  return total;
}

std::uint32_t integrate_over(const SparsePoly& F, std::span<const std::vector<std::uint32_t>> points) {
  const Ambient& amb = F.ambient();
  if (amb.n != 0) throw AmbientMismatch("evaluate the z-variables before integrating");
  const PrimeField f(amb.p);
  std::uint32_t total = 0;
  for (const auto& t : points) total = f.add(total, eval(F, t, {}));
  return total;
}

std::uint32_t max_t_degree(const ProblemSpec& spec, const ExponentData& exps, std::span<const std::uint32_t> x) {
  std::uint32_t deg = 0;
  for (const MultiIndex& J : basis(spec.m, spec.k)) {
    const SparsePoly F = master_times_weight_at(spec, exps, J, x);
    for (std::uint32_t i = 0; i < spec.k; ++i) deg = std::max(deg, F.degree(Var::t(i)));
  }
  return deg;
}

IntegralReport check_integral_theorem(const ProblemSpec& spec, const ExponentData& exps,
                                      std::span<const std::uint32_t> x, const FactoredWeightVector* solution) {
  spec.validate();
  for (std::uint32_t li : spec.l) {
    if (li != 1) throw InvalidArgument("the integral identity concerns l = (1, ..., 1)");
  }
  if (x.size() != spec.n()) throw InvalidArgument("need one point per z-variable");
  require_distinct(spec.p, x);
  const PrimeField f(spec.p);

  const std::vector<MultiIndex> idx = basis(spec.m, spec.k);
  std::vector<SparsePoly> F;
  F.reserve(idx.size());
  for (const MultiIndex& J : idx) {
    F.push_back(master_times_weight_at(spec, exps, J, x));
    for (std::uint32_t i = 0; i < spec.k; ++i) {
      if (F.back().degree(Var::t(i)) >= 2 * spec.p - 2) {
        throw InapplicableError("deg_{t_" + std::to_string(i + 1) + "} F = " +
                                std::to_string(F.back().degree(Var::t(i))) + " is not below 2p - 2");
      }
    }
  }

  std::optional<FactoredWeightVector> owned;
  if (solution == nullptr) {
    owned = taylor_solution_factored(spec, exps);
    solution = &*owned;
  }
  const std::uint32_t pre = prefactor_at(f, exps, x);
  const std::uint32_t sign = spec.k % 2 == 0 ? 1 : f.neg(1);

  IntegralReport report{CheckReport::pass("integral"), {}};
  for (std::size_t a = 0; a < idx.size(); ++a) {
    IntegralValue v{idx[a], 0, 0};
    v.taylor = f.mul(pre, eval(solution->reduced.at(idx[a]), {}, x));
    v.integral = f.mul(sign, integrate_fpk(F[a]));
    if (v.taylor != v.integral && report.check.passed) {
      report.check = CheckReport::fail(
          "integral", Witness{"taylor - integral", idx[a],
                              SparsePoly::constant(Ambient{spec.p, 0, 0}, f.sub(v.taylor, v.integral))});
    }
    report.values.push_back(std::move(v));
  }
  return report;
}

std::uint32_t primitive_root(std::uint32_t p) {
  const PrimeField f(p);
  std::vector<std::uint32_t> factors;
  std::uint32_t r = p - 1;
  for (std::uint32_t d = 2; d * d <= r; ++d) {
    if (r % d == 0) {
      factors.push_back(d);
      while (r % d == 0) r /= d;
    }
  }
  if (r > 1) factors.push_back(r);
  for (std::uint32_t g = 2; g < p; ++g) {
    bool ok = true;
    for (std::uint32_t q : factors) {
      if (f.pow(g, (p - 1) / q) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return 1;  // p = 3 is handled by g = 2 above; unreachable for odd primes
}

GammaData gamma_data(const ProblemSpec& spec) {
  spec.validate();
  const Kappa& kap = spec.kappa;
  if (kap.den != 1 || kap.num <= 0 || kap.num % 4 != 0) {
    throw PreconditionError("kappa must be 2 kappa' with kappa' a positive even integer");
  }
  GammaData g;
  g.kappa_half = static_cast<std::uint32_t>(kap.num / 2);
  for (std::uint32_t ms : spec.m) {
    if (ms % 2 != 0) throw PreconditionError("every m_s must be even");
    g.m_half.push_back(ms / 2);
  }
  if ((spec.p - 1) % g.kappa_half != 0) throw PreconditionError("kappa' must divide p - 1");
  g.ratio = (spec.p - 1) / g.kappa_half;
  if (g.ratio % 2 == 0) throw PreconditionError("(p - 1)/kappa' must be odd");
  return g;
}

ExponentData gamma_exponents(const ProblemSpec& spec) {
  const GammaData g = gamma_data(spec);
  ExponentData e = least_residue_exponents(spec);
  e.M0 = spec.p - g.ratio;
  for (std::size_t s = 0; s < e.M.size(); ++s) e.M[s] = g.m_half[s] * g.ratio;
  validate_exponents(spec, e);
  return e;
}

std::uint32_t gamma_phi(const ProblemSpec& spec, const GammaData& g, std::span<const std::uint32_t> t,
                        std::span<const std::uint32_t> x) {
  const PrimeField f(spec.p);
  std::uint32_t v = 1;
  for (std::uint32_t i = 0; i < spec.k; ++i) {
    for (std::uint32_t j = i + 1; j < spec.k; ++j) v = f.mul(v, f.pow(f.sub(t[i], t[j]), g.kappa_half - 1));
    for (std::uint32_t s = 0; s < spec.n(); ++s) v = f.mul(v, f.pow(f.sub(t[i], f.reduce(x[s])), g.m_half[s]));
  }
  return v;
}

GammaPartition gamma_partition(const ProblemSpec& spec, std::span<const std::uint32_t> x) {
  const GammaData g = gamma_data(spec);
  if (x.size() != spec.n()) throw InvalidArgument("need one point per z-variable");
  const PrimeField f(spec.p);
  GammaPartition part;
  part.generator = primitive_root(spec.p);
  part.cells.resize(g.kappa_half + 1);
  std::vector<std::uint32_t> cell_of_root(spec.p, 0);
  for (std::uint32_t l = 1; l <= g.kappa_half; ++l) cell_of_root[f.pow(part.generator, std::uint64_t{l} * g.ratio)] = l;
  for (std::uint32_t first = 0; first < spec.p; ++first) {
    for_each_point_with_first(spec.p, spec.k, first, [&](std::span<const std::uint32_t> t) {
      const std::uint32_t v = gamma_phi(spec, g, t, x);
      const std::uint32_t cell = v == 0 ? 0 : cell_of_root[f.pow(v, g.ratio)];
      part.cells[cell].emplace_back(t.begin(), t.end());
    });
  }
  return part;
}

CheckReport check_gamma_decomposition(const ProblemSpec& spec, std::span<const std::uint32_t> x) {
  if (spec.k < 2) throw PreconditionError("the decomposition pairs cells through a transposition, so k >= 2");
  const GammaData g = gamma_data(spec);
  const ExponentData exps = gamma_exponents(spec);
  for (std::uint32_t M : exps.M) {
    // With M_s = 1 the lowered factor (t_i - x_s)^0 no longer kills Phi W_J
    // on the zero locus of phi, and the cell sum misses those points.
    if (M < 2) throw PreconditionError("the decomposition needs m_s' (p - 1)/kappa' >= 2 for every s");
  }
  const GammaPartition part = gamma_partition(spec, x);
  const PrimeField f(spec.p);
  const std::uint32_t pre = prefactor_at(f, exps, x);

  for (const MultiIndex& J : basis(spec.m, spec.k)) {
    const std::uint32_t lhs = integrate_fpk(master_times_weight_at(spec, exps, J, x));
    const auto sigmas = assignments(J);
    std::uint32_t rhs = 0;
    for (std::uint32_t l = 1; l <= g.kappa_half / 2; ++l) {
      std::uint32_t cell_sum = 0;
      for (const auto& t : part.cells[l]) {
        std::uint32_t w = 0;
        for (const auto& sigma : sigmas) {
          std::uint32_t term = 1;
          for (std::uint32_t i = 0; i < spec.k; ++i) term = f.mul(term, f.inv(f.sub(t[i], f.reduce(x[sigma[i]]))));
          w = f.add(w, term);
        }
        for (std::uint32_t i = 0; i < spec.k; ++i) {
          for (std::uint32_t j = i + 1; j < spec.k; ++j) w = f.mul(w, f.sub(t[i], t[j]));
        }
        cell_sum = f.add(cell_sum, w);
      }
      const std::uint32_t coeff = f.mul(2, f.pow(part.generator, std::uint64_t{l} * g.ratio));
      rhs = f.add(rhs, f.mul(coeff, cell_sum));
    }
    rhs = f.mul(pre, rhs);
    if (lhs != rhs) {
      return CheckReport::fail("gamma", Witness{"grid - cells", J,
                                                SparsePoly::constant(Ambient{spec.p, 0, 0}, f.sub(lhs, rhs))});
    }
  }
  return CheckReport::pass("gamma");
}

}  // namespace kzp
