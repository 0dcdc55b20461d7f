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


#include <doctest.h>

#include <vector>

#include "kzp/construct.hpp"
#include "kzp/error.hpp"
#include "kzp/verify.hpp"
#include "testkit.hpp"

using namespace kzp;
using kzt::C;
using kzt::Gen;
using kzt::T;
using kzt::Z;

namespace {

ProblemSpec make(std::uint32_t p, const std::string& kappa, std::vector<std::uint32_t> m, std::uint32_t k,
                 std::vector<std::int64_t> q = {}, std::vector<std::uint32_t> l = {}) {
  ProblemSpec s;
  s.p = p;
  s.kappa = Kappa::parse(kappa);
  s.m = std::move(m);
  s.k = k;
  s.q = q.empty() ? std::vector<std::int64_t>(k, 0) : std::move(q);
  s.l = l.empty() ? std::vector<std::uint32_t>(k, 1) : std::move(l);
  return s;
}

// Brute-force least residue r in [1, p] with r * a == b (mod p).
std::uint32_t solve_linear(std::uint32_t p, std::int64_t a, std::int64_t b) {
  const PrimeField f(p);
  for (std::uint32_t r = 1; r <= p; ++r) {
    if (f.mul(f.reduce(r), f.reduce(a)) == f.reduce(b)) return r;
  }
  return 0;
}

}  // namespace

TEST_CASE("kappa parsing") {
  CHECK(Kappa::parse("4/1") == Kappa{4, 1});
  CHECK(Kappa::parse("4") == Kappa{4, 1});
  CHECK(Kappa::parse("-6/4") == Kappa{-3, 2});
  CHECK(Kappa::parse("3/-9") == Kappa{-1, 3});
  CHECK(Kappa::parse("-3/2").to_string() == "-3/2");
  CHECK_THROWS_AS(Kappa::parse("0"), InvalidArgument);
  CHECK_THROWS_AS(Kappa::parse("1/0"), InvalidArgument);
  CHECK_THROWS_AS(Kappa::parse("abc"), InvalidArgument);
  CHECK_THROWS_AS(Kappa::parse("1/2/3"), InvalidArgument);
  CHECK_THROWS_AS(Kappa::parse(""), InvalidArgument);
}

TEST_CASE("problem validation") {
  CHECK_NOTHROW(make(3, "4", {2, 2}, 2).validate());
  CHECK_THROWS_AS(make(3, "3", {1, 1}, 1).validate(), PreconditionError);
  CHECK_THROWS_AS(make(5, "10/3", {1, 1}, 1).validate(), PreconditionError);
  CHECK_THROWS_AS(make(3, "5/3", {1, 1}, 1).validate(), PreconditionError);
  CHECK_THROWS_AS(make(5, "5/3", {1, 1}, 1).validate(), PreconditionError);
  CHECK_NOTHROW(make(7, "5/3", {1, 1}, 1).validate());
  CHECK_THROWS_AS(make(5, "2", {1, 1}, 3).validate(), InvalidArgument);
  CHECK_THROWS_AS(make(5, "2", {1, 0}, 1).validate(), InvalidArgument);
  CHECK_THROWS_AS(make(4, "2", {1, 1}, 1).validate(), InvalidArgument);
  ProblemSpec bad_l = make(5, "2", {1, 1}, 1);
  bad_l.l = {0};
  CHECK_THROWS_AS(bad_l.validate(), InvalidArgument);
  ProblemSpec bad_q = make(5, "2", {1, 1}, 1);
  bad_q.q = {0, 0};
  CHECK_THROWS_AS(bad_q.validate(), InvalidArgument);
}

TEST_CASE("a denominator divisible by p breaks the singular relation") {
  // p = 3, kappa = 5/3: 1/kappa = 0 mod 3 so every M_s is a multiple of 3.
  // With M_s = 3 the k = 1 Taylor coefficients are I_1 = -z2^3, I_2 = -z1^3,
  // and I_1 + I_2 (the relation for m = (1,1)) does not vanish.
  const Ambient amb{3, 1, 2};
  const SparsePoly t = T(amb, 0);
  const SparsePoly z1 = Z(amb, 0);
  const SparsePoly z2 = Z(amb, 1);
  const std::vector<std::uint32_t> e{2};
  const SparsePoly I1 = coeff_t(pow(t - z1, 2) * pow(t - z2, 3), e);
  const SparsePoly I2 = coeff_t(pow(t - z1, 3) * pow(t - z2, 2), e);
  const Ambient zamb{3, 0, 2};
  CHECK(I1 == neg(pow(Z(zamb, 1), 3)));
  CHECK(I2 == neg(pow(Z(zamb, 0), 3)));
  CHECK_FALSE((I1 + I2).is_zero());
  CHECK_THROWS_AS(exponent_data(make(3, "5/3", {1, 1}, 1)), PreconditionError);
}

TEST_CASE("least residues solve their congruences") {
  Gen g(41);
  const std::vector<std::string> kappas{"2", "3", "4", "1/2", "-3/2", "5/3", "-1", "7/4"};
  for (int iter = 0; iter < 80; ++iter) {
    const std::uint32_t p = g.pick({3, 5, 7, 11, 13});
    std::vector<std::uint32_t> m(g.between(1, 4));
    for (auto& v : m) v = g.between(1, 3);
    ProblemSpec spec = make(p, kappas[g.below(kappas.size())], m, 1);
    try {
      spec.validate();
    } catch (const PreconditionError&) {
      continue;
    }
    const std::int64_t a = spec.kappa.num;
    const std::int64_t b = spec.kappa.den;
    const ExponentData e = least_residue_exponents(spec);
    for (std::uint32_t s = 0; s < m.size(); ++s) {
      CHECK(e.M[s] == solve_linear(p, a, -static_cast<std::int64_t>(m[s]) * b));  // M kappa = -m
      for (std::uint32_t j = 0; j < m.size(); ++j) {
        if (j == s) {
          CHECK(e.pair[s][j] == 0);
        } else {
          CHECK(e.pair[s][j] == solve_linear(p, 2 * a, static_cast<std::int64_t>(m[s]) * m[j] * b));
        }
      }
    }
    CHECK(e.M0 == solve_linear(p, a, 2 * b));
    CHECK(e.K == solve_linear(p, a, b));
  }
}

TEST_CASE("exponent overrides") {
  const ProblemSpec spec = make(5, "2", {1, 1, 1}, 1);
  const ExponentData base = exponent_data(spec);
  CHECK(base.M == std::vector<std::uint32_t>{2, 2, 2});
  ExponentOverride ov;
  ov.M = std::vector<std::uint32_t>{7, 2, 12};
  CHECK(exponent_data(spec, &ov).M == *ov.M);
  ov.M = std::vector<std::uint32_t>{3, 2, 2};
  CHECK_THROWS_AS(exponent_data(spec, &ov), InvalidArgument);
  ExponentOverride asym;
  asym.pair = base.pair;
  (*asym.pair)[0][1] += 5;
  CHECK_THROWS_AS(exponent_data(spec, &asym), InvalidArgument);
  ExponentOverride k0;
  k0.K = 0;
  CHECK_THROWS_AS(exponent_data(spec, &k0), InvalidArgument);
}

TEST_CASE("assignments enumerate maps with prescribed fibres") {
  const auto a = assignments(MultiIndex{{2, 0, 1}});
  REQUIRE(a.size() == 3);  // 3! / (2! 1!)
  for (const auto& sigma : a) {
    CHECK(std::count(sigma.begin(), sigma.end(), 0u) == 2);
    CHECK(std::count(sigma.begin(), sigma.end(), 2u) == 1);
  }
  CHECK(assignments(MultiIndex{{1, 1, 1, 1}}).size() == 24);
  CHECK(assignments(MultiIndex{{0, 0}}).size() == 1);
}

TEST_CASE("master polynomial for a small case") {
  // p = 5, kappa = 2, m = (1,1), k = 1: M_s = 2, pair = 4.
  const ProblemSpec spec = make(5, "2", {1, 1}, 1);
  const ExponentData e = exponent_data(spec);
  const Ambient amb{5, 1, 2};
  const SparsePoly t = T(amb, 0);
  const SparsePoly expect = pow(Z(amb, 0) - Z(amb, 1), 4) * pow(t - Z(amb, 0), 2) * pow(t - Z(amb, 1), 2);
  CHECK(master_polynomial(spec, e) == expect);
  CHECK(z_prefactor(5, e.pair) == pow(Z({5, 0, 2}, 0) - Z({5, 0, 2}, 1), 4));
}

TEST_CASE("master polynomial times weight function matches pointwise evaluation") {
  Gen g(43);
  for (int iter = 0; iter < 12; ++iter) {
    const std::uint32_t p = g.pick({5, 7});
    std::vector<std::uint32_t> m(g.between(2, 3));
    for (auto& v : m) v = g.between(1, 2);
    const std::uint32_t k = g.between(1, 2);
    const ProblemSpec spec = make(p, g.coin() ? "2" : "-3/2", m, k);
    const ExponentData e = exponent_data(spec);
    for (const MultiIndex& J : basis(m, k)) {
      const SparsePoly F = master_times_weight(spec, e, J);
      for (int pt = 0; pt < 4; ++pt) {
        std::vector<std::uint32_t> t(k), z(m.size());
        for (auto& v : t) v = g.below(p);
        for (auto& v : z) v = g.below(p);
        CHECK(eval(F, t, z) == kzt::phi_w_at(spec, e, J.j, t, z));
        CHECK(eval(master_times_weight_at(spec, e, J, z), t, std::vector<std::uint32_t>{}) == eval(F, t, z));
      }
    }
  }
}

TEST_CASE("Taylor solution equals the shifted coefficient of the full product") {
  Gen g(47);
  for (int iter = 0; iter < 12; ++iter) {
    const std::uint32_t p = g.pick({3, 5});
    std::vector<std::uint32_t> m(g.between(2, 3));
    for (auto& v : m) v = g.between(1, 2);
    const std::uint32_t k = g.between(1, 2);
    std::vector<std::int64_t> q(k);
    std::vector<std::uint32_t> l(k);
    for (auto& v : q) v = g.below(p);
    for (auto& v : l) v = g.between(1, 2);
    const ProblemSpec spec = make(p, g.coin() ? "2" : "4", m, k, q, l);
    ExponentData e;
    try {
      e = exponent_data(spec);
    } catch (const PreconditionError&) {
      continue;
    }
    const WeightVector w = taylor_solution(spec, e);
    const FactoredWeightVector fw = taylor_solution_factored(spec, e);
    CHECK(fw.pair == e.pair);
    CHECK(fw.expand() == w);
    std::vector<std::uint32_t> ex(k);
    for (std::uint32_t i = 0; i < k; ++i) ex[i] = l[i] * p - 1;
    for (const MultiIndex& J : basis(m, k)) {
      CHECK(w.at(J) == coeff_t(shift_t(master_times_weight(spec, e, J), q), ex));
    }
  }
}

TEST_CASE("the small two-point example over F_3") {
  // p = 3, kappa = 4, m = (2,2), k = 2: (z1 - z2)^2 (1, -1, 1) on (2,0), (1,1), (0,2).
  const ProblemSpec spec = make(3, "4/1", {2, 2}, 2);
  const ExponentData e = exponent_data(spec);
  const WeightVector w = taylor_solution(spec, e);
  const Ambient amb{3, 0, 2};
  const SparsePoly sq = kzt::poly(amb, {{1, kzt::mono({2, 0})}, {-2, kzt::mono({1, 1})}, {1, kzt::mono({0, 2})}});
  CHECK(w.at(MultiIndex{{2, 0}}) == sq);
  CHECK(w.at(MultiIndex{{1, 1}}) == neg(sq));
  CHECK(w.at(MultiIndex{{0, 2}}) == sq);

  const auto reduced = factor_prefactor(w, e.pair);
  REQUIRE(reduced);
  CHECK(reduced->reduced.at(MultiIndex{{1, 1}}) == C(amb, -1));
  CHECK_FALSE(factor_prefactor(w, std::vector<std::vector<std::uint32_t>>{{0, 3}, {3, 0}}).has_value());
}

TEST_CASE("printed exponents of the three-point cubic sources") {
  // kappa = 3 with m = (1,1,2) and m = (2,2,1); exponents written as
  // functions of p = 1 mod 3 and checked against both equation families.
  for (std::uint32_t p : {7u, 13u}) {
    const std::uint32_t r = (p - 1) / 3;
    struct Source {
      std::vector<std::uint32_t> m;
      std::uint32_t pair12;
      std::vector<std::uint32_t> M;
    };
    const Source sources[] = {{{1, 1, 2}, (5 * p + 1) / 6, {r, r, 2 * r}}, {{2, 2, 1}, (p + 2) / 3, {2 * r, 2 * r, r}}};
    for (const Source& src : sources) {
      const ProblemSpec spec = make(p, "3", src.m, 1);
      ExponentOverride ov;
      ov.M = src.M;
      const std::uint32_t c = (2 * p + 1) / 3;
      ov.pair = std::vector<std::vector<std::uint32_t>>{{0, src.pair12, c}, {src.pair12, 0, c}, {c, c, 0}};
      const ExponentData e = exponent_data(spec, &ov);
      const FactoredWeightVector fw = taylor_solution_factored(spec, e);
      CHECK_FALSE(fw.reduced.is_zero());
      CHECK(check_kz_factored(fw, e.K).passed);
      CHECK(check_singular(fw).passed);
    }
  }
}

TEST_CASE("raising pair exponents by multiples of p multiplies by p-th powers") {
  // kappa = 2, m = (1,1,1): the printed pair exponent (p+1)^2/4 is congruent
  // to 1/4 and exceeds the least residue by a multiple of p.
  const std::uint32_t p = 5;
  const ProblemSpec spec = make(p, "2", {1, 1, 1}, 1);
  const ExponentData base = exponent_data(spec);
  const std::uint32_t printed = (p + 1) * (p + 1) / 4;
  ExponentOverride ov;
  ov.pair = std::vector<std::vector<std::uint32_t>>{{0, printed, printed}, {printed, 0, printed}, {printed, printed, 0}};
  const ExponentData raised = exponent_data(spec, &ov);
  const std::uint32_t extra = printed - base.pair[0][1];
  REQUIRE(extra % p == 0);
  const Ambient amb{p, 0, 3};
  const SparsePoly factor = pow((Z(amb, 0) - Z(amb, 1)) * (Z(amb, 0) - Z(amb, 2)) * (Z(amb, 1) - Z(amb, 2)), extra);
  const WeightVector a = taylor_solution(spec, base);
  const WeightVector b = taylor_solution(spec, raised);
  CHECK(b == multiply_coords(a, factor));
  CHECK(check_kz(b, raised.K).passed);
}

TEST_CASE("homogeneous components add up to the solution") {
  const ProblemSpec spec = make(3, "2", {1, 1, 1, 1}, 1, {1});
  const ExponentData e = exponent_data(spec);
  const WeightVector w = taylor_solution(spec, e);
  const auto parts = homogeneous_components(w);
  WeightVector sum(w.m(), w.k(), w.coord_ambient());
  for (const WeightVector& part : parts) {
    sum = add(sum, part);
    CHECK(check_kz(part, e.K).passed);
  }
  CHECK(sum == w);
}
