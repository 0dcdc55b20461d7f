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

#include <numeric>
#include <vector>

#include "kzp/construct.hpp"
#include "kzp/suite.hpp"
#include "kzp/verify.hpp"
#include "testkit.hpp"

using namespace kzp;
using kzt::Gen;

namespace {

const ProblemSpec& random_small_spec(Gen& g, const std::vector<ProblemSpec>& specs) {
  while (true) {
    const ProblemSpec& s = specs[g.below(static_cast<std::uint32_t>(specs.size()))];
    if (s.n() <= 4) return s;
  }
}

}  // namespace

TEST_CASE("solutions form an F_p[z^p]-module") {
  Gen g(103);
  const auto specs = sweep_specs(SuiteLevel::kQuick);
  for (int iter = 0; iter < 15; ++iter) {
    const ProblemSpec& spec = random_small_spec(g, specs);
    const ExponentData e = exponent_data(spec);
    const WeightVector w = taylor_solution(spec, e);
    const Ambient amb = w.coord_ambient();
    const SparsePoly zp = pow(kzt::Z(amb, g.below(spec.n())), spec.p);
    const SparsePoly c = kzt::C(amb, g.between(1, spec.p - 1));
    const WeightVector v = multiply_coords(w, zp + c);
    CHECK(check_kz(v, e.K).passed);
    CHECK(check_singular(v).passed);
    // z_s itself is not a p-th power and breaks KZ unless w is zero.
    if (!w.is_zero()) CHECK_FALSE(check_kz(multiply_coords(w, kzt::Z(amb, 0)), e.K).passed);
  }
}

TEST_CASE("sums of solutions with different cycles are solutions") {
  Gen g(107);
  const auto specs = sweep_specs(SuiteLevel::kQuick);
  for (int iter = 0; iter < 10; ++iter) {
    ProblemSpec a = random_small_spec(g, specs);
    ProblemSpec b = a;
    for (auto& q : b.q) q = g.below(a.p);
    const ExponentData e = exponent_data(a);
    const WeightVector sum = add(taylor_solution(a, e), taylor_solution(b, e));
    CHECK(check_kz(sum, e.K).passed);
    CHECK(check_singular(sum).passed);
  }
}

TEST_CASE("relabelling the tensor slots permutes the solution") {
  Gen g(109);
  const auto specs = sweep_specs(SuiteLevel::kQuick);
  for (int iter = 0; iter < 10; ++iter) {
    const ProblemSpec& spec = random_small_spec(g, specs);
    const std::uint32_t n = spec.n();
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    for (std::uint32_t i = n - 1; i > 0; --i) std::swap(perm[i], perm[g.below(i + 1)]);
    ProblemSpec moved = spec;
    for (std::uint32_t s = 0; s < n; ++s) moved.m[perm[s]] = spec.m[s];
    const WeightVector w = taylor_solution(spec, exponent_data(spec));
    const WeightVector v = taylor_solution(moved, exponent_data(moved));
    // Slot s of the original becomes slot perm[s]; compare pointwise.
    for (int pt = 0; pt < 3; ++pt) {
      std::vector<std::uint32_t> z(n), zm(n);
      for (std::uint32_t s = 0; s < n; ++s) z[s] = g.below(spec.p);
      for (std::uint32_t s = 0; s < n; ++s) zm[perm[s]] = z[s];
      for (const MultiIndex& J : basis(spec.m, spec.k)) {
        MultiIndex Jm{std::vector<std::uint32_t>(n)};
        for (std::uint32_t s = 0; s < n; ++s) Jm.j[perm[s]] = J.j[s];
        CHECK(eval(w.at(J), {}, z) == eval(v.at(Jm), {}, zm));
      }
    }
  }
}

TEST_CASE("unshifted solutions are homogeneous in z") {
  Gen g(113);
  const auto specs = sweep_specs(SuiteLevel::kQuick);
  for (int iter = 0; iter < 15; ++iter) {
    ProblemSpec spec = random_small_spec(g, specs);
    for (auto& q : spec.q) q = 0;
    const WeightVector w = taylor_solution(spec, exponent_data(spec));
    if (w.is_zero()) continue;
    const std::uint32_t d = w.coords().begin()->second.z_degree();
    for (const auto& [J, c] : w.coords()) {
      for (const Term& t : c.terms()) {
        std::uint32_t deg = 0;
        for (std::uint32_t s = 0; s < spec.n(); ++s) deg += t.exps[s];  // coordinates have no t-block
        CHECK(deg == d);
      }
    }
  }
}

TEST_CASE("translating z is the same as shifting the cycle") {
  // I(z + c, q) = I(z, q - c), because the master polynomial only sees
  // differences t_i - z_s, z_a - z_b and t_i - t_j.
  Gen g(127);
  const auto specs = sweep_specs(SuiteLevel::kQuick);
  for (int iter = 0; iter < 10; ++iter) {
    const ProblemSpec& spec = random_small_spec(g, specs);
    const ExponentData e = exponent_data(spec);
    const std::uint32_t c = g.between(1, spec.p - 1);
    ProblemSpec shifted = spec;
    for (auto& q : shifted.q) q -= c;
    const WeightVector w = taylor_solution(spec, e);
    const WeightVector v = taylor_solution(shifted, e);
    for (int pt = 0; pt < 3; ++pt) {
      std::vector<std::uint32_t> z(spec.n()), zc(spec.n());
      for (std::uint32_t s = 0; s < spec.n(); ++s) {
        z[s] = g.below(spec.p);
        zc[s] = (z[s] + c) % spec.p;
      }
      for (const MultiIndex& J : basis(spec.m, spec.k)) CHECK(eval(w.at(J), {}, zc) == eval(v.at(J), {}, z));
    }
  }
}
