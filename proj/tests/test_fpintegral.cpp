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

#include <algorithm>
#include <map>
#include <vector>

#include "kzp/construct.hpp"
#include "kzp/error.hpp"
#include "kzp/fpintegral.hpp"
#include "kzp/suite.hpp"
#include "testkit.hpp"

using namespace kzp;
using kzt::Gen;

namespace {

ProblemSpec make(std::uint32_t p, const std::string& kappa, std::vector<std::uint32_t> m, std::uint32_t k,
                 std::vector<std::int64_t> q = {}) {
  ProblemSpec s;
  s.p = p;
  s.kappa = Kappa::parse(kappa);
  s.m = std::move(m);
  s.k = k;
  s.q = q.empty() ? std::vector<std::int64_t>(k, 0) : std::move(q);
  s.l = std::vector<std::uint32_t>(k, 1);
  return s;
}

// Grid sum of a polynomial in t (ambient (p, k, 0)) by direct evaluation.
std::uint32_t brute_sum(const SparsePoly& F) {
  const std::uint32_t p = F.ambient().p;
  const std::uint32_t k = F.ambient().k;
  const PrimeField f(p);
  std::vector<std::uint32_t> t(k, 0);
  std::uint32_t total = 0;
  while (true) {
    total = f.add(total, eval(F, t, std::vector<std::uint32_t>{}));
    std::uint32_t i = 0;
    while (i < k && ++t[i] == p) t[i++] = 0;
    if (i == k) break;
  }
  return total;
}

}  // namespace

TEST_CASE("power sums against direct summation") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    const PrimeField f(p);
    for (std::uint64_t i = 0; i <= 3 * (p - 1); ++i) {
      std::uint32_t direct = 0;
      for (std::uint32_t t = 0; t < p; ++t) direct = f.add(direct, f.pow(t, i));
      CHECK(power_sum(p, i) == direct);
    }
  }
  // -1 exactly when i is a positive multiple of p - 1.
  CHECK(power_sum(7, 6) == 6);
  CHECK(power_sum(7, 12) == 6);
  CHECK(power_sum(7, 0) == 0);
  CHECK(power_sum(7, 5) == 0);
}

TEST_CASE("both integration paths agree with brute force") {
  Gen g(73);
  for (int iter = 0; iter < 40; ++iter) {
    const Ambient amb{g.pick({3, 5, 7}), g.between(1, 3), 0};
    const SparsePoly F = kzt::random_poly(g, amb, 8, 14);
    const std::uint32_t grid = integrate_fpk(F, IntegrationPath::kGrid);
    CHECK(grid == integrate_fpk(F, IntegrationPath::kPowerSum));
    CHECK(grid == brute_sum(F));
  }
  CHECK(integrate_fpk(SparsePoly::constant(Ambient{5, 0, 0}, 3)) == 3);
  CHECK_THROWS_AS(integrate_fpk(kzt::Z(Ambient{5, 1, 1}, 0)), AmbientMismatch);
}

TEST_CASE("integration over an explicit point set") {
  const Ambient amb{5, 1, 0};
  const SparsePoly t = kzt::T(amb, 0);
  const std::vector<std::vector<std::uint32_t>> pts{{1}, {2}, {4}};
  CHECK(integrate_over(pow(t, 2), pts) == (1 + 4 + 16) % 5);
}

TEST_CASE("k = 1 integral theorem against a pointwise oracle") {
  for (std::uint32_t p : {5u, 7u}) {
    for (std::int64_t q : {0, 1}) {
      const ProblemSpec spec = make(p, "2", {1, 1, 1}, 1, {q});
      const ExponentData e = exponent_data(spec);
      const FactoredWeightVector fw = taylor_solution_factored(spec, e);
      const PrimeField f(p);
      for (const auto& x : distinct_tuples(p, 3)) {
        const IntegralReport r = check_integral_theorem(spec, e, x, &fw);
        CHECK(r.check.passed);
        REQUIRE(r.values.size() == 3);
        for (const IntegralValue& v : r.values) {
          std::uint32_t sum = 0;
          for (std::uint32_t t = 0; t < p; ++t) {
            sum = f.add(sum, kzt::phi_w_at(spec, e, v.J.j, std::vector<std::uint32_t>{t}, x));
          }
          CHECK(v.integral == f.neg(sum));
          CHECK(v.taylor == v.integral);
        }
      }
    }
  }
}

TEST_CASE("the integral theorem refuses large degrees and non-unit l") {
  const ProblemSpec spec = make(5, "2", {1, 1, 1}, 1);
  ExponentOverride ov;
  ov.M = std::vector<std::uint32_t>{7, 7, 7};
  const ExponentData big = exponent_data(spec, &ov);
  const std::vector<std::uint32_t> x{0, 1, 2};
  CHECK(max_t_degree(spec, big, x) >= 2 * 5 - 2);
  CHECK_THROWS_AS(check_integral_theorem(spec, big, x), InapplicableError);

  ProblemSpec l2 = spec;
  l2.l = {2};
  CHECK_THROWS(check_integral_theorem(l2, exponent_data(l2), x));
}

TEST_CASE("primitive roots") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 101u}) {
    const std::uint32_t a = primitive_root(p);
    const PrimeField f(p);
    std::vector<bool> seen(p, false);
    std::uint32_t v = 1;
    for (std::uint32_t i = 0; i < p - 1; ++i) {
      seen[v] = true;
      v = f.mul(v, a);
    }
    CHECK(std::count(seen.begin(), seen.end(), true) == static_cast<std::ptrdiff_t>(p - 1));
  }
  CHECK(primitive_root(7) == 3);
}

TEST_CASE("gamma decomposition") {
  const ProblemSpec spec = make(7, "4", {2, 2}, 2);
  for (const auto& x : distinct_tuples(7, 2)) CHECK(check_gamma_decomposition(spec, x).passed);

  // M_s = 1 at p = 3: the hypotheses of the decomposition fail.
  CHECK_THROWS_AS(check_gamma_decomposition(make(3, "4", {2, 2}, 2), std::vector<std::uint32_t>{0, 1}),
                  PreconditionError);
  CHECK_THROWS_AS(check_gamma_decomposition(make(7, "4", {2, 2}, 1), std::vector<std::uint32_t>{0, 1}),
                  PreconditionError);
  // kappa' = 3 is odd.
  CHECK_THROWS_AS(gamma_data(make(7, "6", {2, 2}, 2)), PreconditionError);
  // (p - 1)/kappa' = 2 is even at p = 5.
  CHECK_THROWS_AS(gamma_data(make(5, "4", {2, 2}, 2)), PreconditionError);
}

TEST_CASE("gamma cells partition the grid and respect permutations of t") {
  // kappa' = 2, k = 3: a transposition of t flips the sign of phi and so
  // moves cell l to the other cell; a 3-cycle keeps every cell.
  const ProblemSpec spec = make(7, "4", {2, 2, 2}, 3);
  const std::vector<std::uint32_t> x{0, 1, 3};
  const GammaData g = gamma_data(spec);
  REQUIRE(g.kappa_half == 2);
  const GammaPartition part = gamma_partition(spec, x);
  REQUIRE(part.cells.size() == 3);
  std::size_t total = 0;
  std::map<std::vector<std::uint32_t>, std::size_t> cell_of;
  for (std::size_t c = 0; c < part.cells.size(); ++c) {
    total += part.cells[c].size();
    for (const auto& t : part.cells[c]) cell_of[t] = c;
  }
  CHECK(total == 343);
  CHECK(cell_of.size() == 343);
  for (const auto& [t, c] : cell_of) {
    const std::vector<std::uint32_t> swapped{t[1], t[0], t[2]};
    const std::vector<std::uint32_t> cycled{t[1], t[2], t[0]};
    CHECK(cell_of[cycled] == c);
    if (c == 0) {
      CHECK(cell_of[swapped] == 0);
    } else {
      CHECK(cell_of[swapped] == 3 - c);
    }
  }
}
