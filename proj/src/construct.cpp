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

#include "kzp/construct.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>

#include "kzp/error.hpp"

namespace kzp {

namespace {

// var_a - var_b + c in the given ambient.
SparsePoly linear(const Ambient& amb, Var a, std::optional<Var> b, std::uint32_t c) {
  SparsePoly out = SparsePoly::variable(amb, a);
  if (b) out -= SparsePoly::variable(amb, *b);
  if (c != 0) out += SparsePoly::constant(amb, c);
  return out;
}

void require_positive_M(const ExponentData& exps) {
  for (std::uint32_t v : exps.M) {
    if (v == 0) throw InvalidArgument("every M_s must be positive for Phi * W_J to be a polynomial");
  }
}

std::vector<std::uint32_t> t_caps(const ProblemSpec& spec) {
  std::vector<std::uint32_t> caps(spec.k);
  for (std::uint32_t i = 0; i < spec.k; ++i) caps[i] = spec.l[i] * spec.p - 1;
  return caps;
}

}  // namespace

Kappa Kappa::parse(const std::string& text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw InvalidArgument("kappa must look like a/b, got '" + text + "'");
    }
    return v;
  };
  Kappa k;
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    k.num = parse_int(text);
    k.den = 1;
  } else {
    k.num = parse_int(std::string_view(text).substr(0, slash));
    k.den = parse_int(std::string_view(text).substr(slash + 1));
  }
  if (k.den == 0) throw InvalidArgument("kappa has a zero denominator");
  if (k.num == 0) throw InvalidArgument("kappa must be nonzero");
  if (k.den < 0) {
    k.num = -k.num;
    k.den = -k.den;
  }
  const std::int64_t g = std::gcd(k.num, k.den);
  k.num /= g;
  k.den /= g;
  return k;
}

std::string Kappa::to_string() const { return std::to_string(num) + "/" + std::to_string(den); }

void ProblemSpec::validate() const {
  const PrimeField f(p);
  if (kappa.den == 0 || kappa.num == 0) throw InvalidArgument("kappa must be a nonzero rational");
  const std::int64_t g = std::gcd(kappa.num, kappa.den);
  if ((kappa.num / g) % static_cast<std::int64_t>(p) == 0) {
    throw PreconditionError("p = " + std::to_string(p) + " divides the numerator of kappa");
  }
  // With 1/kappa = 0 mod p every M_s vanishes mod p, the relation
  // sum_s M_s I_s = 0 no longer forces sum_s m_s I_s = 0, and the Taylor
  // coefficients stop being singular vectors (p = 3, kappa = 5/3, m = (1,1)).
  if ((kappa.den / g) % static_cast<std::int64_t>(p) == 0) {
    throw PreconditionError("p = " + std::to_string(p) + " divides the denominator of kappa, so 1/kappa = 0 mod p");
  }
  validate_weights(m);
  if (m.size() > kMaxVars || k + m.size() > kMaxVars) throw InvalidArgument("too many variables");
  const std::uint32_t total = std::accumulate(m.begin(), m.end(), std::uint32_t{0});
  if (k == 0 || k > total) throw InvalidArgument("k must satisfy 1 <= k <= |m|");
  if (q.size() != k) throw InvalidArgument("q must have k entries");
  if (l.size() != k) throw InvalidArgument("l must have k entries");
  for (std::uint32_t li : l) {
    if (li == 0) throw InvalidArgument("entries of l must be positive");
  }
}

ExponentData least_residue_exponents(const ProblemSpec& spec) {
  spec.validate();
  const PrimeField f(spec.p);
  const std::int64_t g = std::gcd(spec.kappa.num, spec.kappa.den);
  // 1/kappa = den/num
  const std::uint32_t inv_kappa = f.mul(f.reduce(spec.kappa.den / g), f.inv(f.reduce(spec.kappa.num / g)));
  auto positive = [&](std::uint32_t r) { return r == 0 ? spec.p : r; };
  const std::uint32_t n = spec.n();
  ExponentData e;
  e.M.resize(n);
  e.pair.assign(n, std::vector<std::uint32_t>(n, 0));
  for (std::uint32_t s = 0; s < n; ++s) e.M[s] = positive(f.mul(f.neg(f.reduce(spec.m[s])), inv_kappa));
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      const std::uint32_t v = f.mul(f.mul(f.reduce(spec.m[i]), f.reduce(spec.m[j])), f.mul(f.half(), inv_kappa));
      e.pair[i][j] = e.pair[j][i] = positive(v);
    }
  }
  e.M0 = positive(f.mul(2, inv_kappa));
  e.K = positive(inv_kappa);
  return e;
}

void validate_exponents(const ProblemSpec& spec, const ExponentData& exps) {
  const ExponentData ref = least_residue_exponents(spec);
  const std::uint32_t p = spec.p;
  auto same_class = [p](std::uint32_t a, std::uint32_t b) { return a % p == b % p; };
  const std::uint32_t n = spec.n();
  if (exps.M.size() != n || exps.pair.size() != n) throw InvalidArgument("exponent data has the wrong size");
  for (std::uint32_t s = 0; s < n; ++s) {
    if (exps.M[s] == 0 || !same_class(exps.M[s], ref.M[s])) {
      throw InvalidArgument("M_" + std::to_string(s + 1) + " must be positive and congruent to -m_s/kappa");
    }
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    if (exps.pair[i].size() != n) throw InvalidArgument("pair exponent matrix must be n x n");
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (exps.pair[i][j] != exps.pair[j][i]) throw InvalidArgument("pair exponent matrix must be symmetric");
      if (exps.pair[i][j] == 0 || !same_class(exps.pair[i][j], ref.pair[i][j])) {
        throw InvalidArgument("M_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                              "} must be positive and congruent to m_i m_j/(2 kappa)");
      }
    }
  }
  if (exps.M0 == 0 || !same_class(exps.M0, ref.M0)) {
    throw InvalidArgument("M0 must be positive and congruent to 2/kappa");
  }
  if (exps.K == 0 || !same_class(exps.K, ref.K)) throw InvalidArgument("K must be positive and congruent to 1/kappa");
}

ExponentData exponent_data(const ProblemSpec& spec, const ExponentOverride* override) {
  ExponentData e = least_residue_exponents(spec);
  if (override == nullptr) return e;
  if (override->M) e.M = *override->M;
  if (override->pair) e.pair = *override->pair;
  if (override->M0) e.M0 = *override->M0;
  if (override->K) e.K = *override->K;
  validate_exponents(spec, e);
  return e;
}

SparsePoly z_prefactor(std::uint32_t p, const std::vector<std::vector<std::uint32_t>>& pair) {
  const auto n = static_cast<std::uint32_t>(pair.size());
  const Ambient amb{p, 0, n};
  SparsePoly out = SparsePoly::constant(amb, 1);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      if (pair[i][j] == 0) continue;
      out = mul(out, pow(linear(amb, Var::z(i), Var::z(j), 0), pair[i][j]));
    }
  }
  return out;
}

SparsePoly master_polynomial(const ProblemSpec& spec, const ExponentData& exps) {
  spec.validate();
  const Ambient amb = spec.ambient();
  SparsePoly out = embed(z_prefactor(spec.p, exps.pair), amb);
  for (std::uint32_t i = 0; i < spec.k; ++i) {
    for (std::uint32_t j = i + 1; j < spec.k; ++j) {
      out = mul(out, pow(linear(amb, Var::t(i), Var::t(j), 0), exps.M0));
    }
  }
  for (std::uint32_t i = 0; i < spec.k; ++i) {
    for (std::uint32_t s = 0; s < spec.n(); ++s) {
      out = mul(out, pow(linear(amb, Var::t(i), Var::z(s), 0), exps.M[s]));
    }
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> assignments(const MultiIndex& J) {
  // Multiset permutations of the slot word (0^{j_0} 1^{j_1} ...), in
  // lexicographic order.
  std::vector<std::uint32_t> word;
  for (std::uint32_t s = 0; s < J.size(); ++s) word.insert(word.end(), J[s], s);
  std::vector<std::vector<std::uint32_t>> out;
  do {
    out.push_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

namespace {

// Phi * W_J with z either symbolic (x empty) or evaluated at x.
SparsePoly weighted_product(const ProblemSpec& spec, const ExponentData& exps, const MultiIndex& J,
                            std::span<const std::uint32_t> x, bool symbolic) {
  spec.validate();
  require_positive_M(exps);
  if (J.size() != spec.n() || J.total() != spec.k) throw InvalidArgument("J is not in I_k");
  for (std::uint32_t s = 0; s < spec.n(); ++s) {
    if (J[s] > spec.m[s]) throw InvalidArgument("J is not in I_k");
  }
  const PrimeField f(spec.p);
  const Ambient amb = symbolic ? spec.ambient() : Ambient{spec.p, spec.k, 0};
  auto t_minus_z = [&](std::uint32_t i, std::uint32_t s) {
    return symbolic ? linear(amb, Var::t(i), Var::z(s), 0) : linear(amb, Var::t(i), std::nullopt, f.neg(x[s] % spec.p));
  };

  SparsePoly common = SparsePoly::constant(amb, 1);
  if (symbolic) {
    common = embed(z_prefactor(spec.p, exps.pair), amb);
  } else {
    std::uint32_t c = 1;
    for (std::uint32_t i = 0; i < spec.n(); ++i) {
      for (std::uint32_t j = i + 1; j < spec.n(); ++j) {
        c = f.mul(c, f.pow(f.sub(x[i] % spec.p, x[j] % spec.p), exps.pair[i][j]));
      }
    }
    common = SparsePoly::constant(amb, c);
  }
  for (std::uint32_t i = 0; i < spec.k; ++i) {
    for (std::uint32_t j = i + 1; j < spec.k; ++j) {
      common = mul(common, pow(linear(amb, Var::t(i), Var::t(j), 0), exps.M0));
    }
  }

  SparsePoly total(amb);
  for (const auto& sigma : assignments(J)) {
    SparsePoly term = common;
    for (std::uint32_t i = 0; i < spec.k; ++i) {
      for (std::uint32_t s = 0; s < spec.n(); ++s) {
        const std::uint32_t e = exps.M[s] - (sigma[i] == s ? 1 : 0);
        if (e > 0) term = mul(term, pow(t_minus_z(i, s), e));
      }
    }
    total += term;
  }
  return total;
}

}  // namespace

SparsePoly master_times_weight(const ProblemSpec& spec, const ExponentData& exps, const MultiIndex& J) {
  return weighted_product(spec, exps, J, {}, true);
}

SparsePoly master_times_weight_at(const ProblemSpec& spec, const ExponentData& exps, const MultiIndex& J,
                                  std::span<const std::uint32_t> x) {
  if (x.size() != spec.n()) throw InvalidArgument("need one value per z-variable");
  return weighted_product(spec, exps, J, x, false);
}

WeightVector FactoredWeightVector::expand() const {
  return multiply_coords(reduced, z_prefactor(reduced.p(), pair));
}

FactoredWeightVector taylor_solution_factored(const ProblemSpec& spec, const ExponentData& exps) {
  spec.validate();
  require_positive_M(exps);
  const PrimeField f(spec.p);
  const Ambient amb = spec.ambient();
  const std::vector<std::uint32_t> caps = t_caps(spec);
  std::vector<std::uint32_t> q(spec.k);
  for (std::uint32_t i = 0; i < spec.k; ++i) q[i] = f.reduce(spec.q[i]);

  // Shifting each linear factor is the same as shifting the product:
  // (t_i + q_i - z_s) and (t_i - t_j + q_i - q_j).
  SparsePoly tt = SparsePoly::constant(amb, 1);
  for (std::uint32_t i = 0; i < spec.k; ++i) {
    for (std::uint32_t j = i + 1; j < spec.k; ++j) {
      tt = mul_truncated(tt, pow_truncated(linear(amb, Var::t(i), Var::t(j), f.sub(q[i], q[j])), exps.M0, caps), caps);
    }
  }
  // factor[i][s]: prod_{s'} (t_i + q_i - z_{s'})^{M_{s'} - [s' == s]}
  std::map<std::pair<std::uint32_t, std::uint32_t>, SparsePoly> factor_cache;
  auto factor = [&](std::uint32_t i, std::uint32_t s) -> const SparsePoly& {
    auto key = std::make_pair(i, s);
    auto it = factor_cache.find(key);
    if (it != factor_cache.end()) return it->second;
    SparsePoly acc = SparsePoly::constant(amb, 1);
    for (std::uint32_t r = 0; r < spec.n(); ++r) {
      const std::uint32_t e = exps.M[r] - (r == s ? 1 : 0);
      if (e == 0) continue;
      acc = mul_truncated(acc, pow_truncated(linear(amb, Var::t(i), Var::z(r), q[i]), e, caps), caps);
    }
    return factor_cache.emplace(key, std::move(acc)).first->second;
  };

  WeightVector reduced(spec.m, spec.k, spec.z_ambient());
  for (const MultiIndex& J : basis(spec.m, spec.k)) {
    SparsePoly coord(spec.z_ambient());
    for (const auto& sigma : assignments(J)) {
      SparsePoly partial = tt;
      for (std::uint32_t i = 0; i + 1 < spec.k; ++i) partial = mul_truncated(partial, factor(i, sigma[i]), caps);
      coord += coeff_t_of_product(partial, factor(spec.k - 1, sigma[spec.k - 1]), caps);
    }
    reduced.set(J, std::move(coord));
  }
  return FactoredWeightVector{exps.pair, std::move(reduced)};
}

WeightVector taylor_solution(const ProblemSpec& spec, const ExponentData& exps) {
  return taylor_solution_factored(spec, exps).expand();
}

std::vector<WeightVector> homogeneous_components(const WeightVector& w) {
  std::map<std::uint32_t, WeightVector> by_degree;
  for (const auto& [J, poly] : w.coords()) {
    const auto parts = z_homogeneous_parts(poly);
    for (std::uint32_t d = 0; d < parts.size(); ++d) {
      if (parts[d].is_zero()) continue;
      auto it = by_degree.try_emplace(d, w.m(), w.k(), w.coord_ambient()).first;
      it->second.set(J, parts[d]);
    }
  }
  std::vector<WeightVector> out;
  for (auto& [d, comp] : by_degree) out.push_back(std::move(comp));
  return out;
}

std::optional<FactoredWeightVector> factor_prefactor(const WeightVector& w,
                                                     const std::vector<std::vector<std::uint32_t>>& pair) {
  if (pair.size() != w.n()) throw InvalidArgument("pair exponent matrix must be n x n");
  WeightVector reduced(w.m(), w.k(), w.coord_ambient());
  for (const auto& [J, poly] : w.coords()) {
    SparsePoly cur = poly;
    for (std::uint32_t i = 0; i < w.n(); ++i) {
      for (std::uint32_t j = i + 1; j < w.n(); ++j) {
        for (std::uint32_t r = 0; r < pair[i][j]; ++r) {
          SparsePoly next;
          if (!divide_by_z_difference(cur, i, j, next)) return std::nullopt;
          cur = std::move(next);
        }
      }
    }
    reduced.set(J, std::move(cur));
  }
  return FactoredWeightVector{pair, std::move(reduced)};
}

}  // namespace kzp
