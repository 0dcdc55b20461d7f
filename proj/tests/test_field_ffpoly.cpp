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

#include "kzp/error.hpp"
#include "kzp/ffpoly.hpp"
#include "kzp/field.hpp"
#include "testkit.hpp"

using namespace kzp;
using kzt::C;
using kzt::Gen;
using kzt::mono;
using kzt::poly;
using kzt::T;
using kzt::Z;

TEST_CASE("prime field basics") {
  CHECK(is_prime(3));
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK_THROWS_AS(PrimeField(2), InvalidArgument);
  CHECK_THROWS_AS(PrimeField(9), InvalidArgument);
  CHECK_THROWS_AS(PrimeField(std::uint64_t{1} << 32), InvalidArgument);

  const PrimeField f(7);
  CHECK(f.reduce(-1) == 6);
  CHECK(f.reduce(15) == 1);
  CHECK(f.half() == 4);
  CHECK(f.mul(f.half(), 2) == 1);
  CHECK_THROWS_AS(f.inv(0), InvalidArgument);
  for (std::uint32_t a = 1; a < 7; ++a) {
    CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.pow(a, 6) == 1);  // Fermat
  }
  CHECK(f.pow(0, 0) == 1);

  const PrimeField big(2147483647);
  CHECK(big.mul(2147483646, 2147483646) == 1);
}

TEST_CASE("binomial rows satisfy Pascal and Lucas") {
  const PrimeField f(5);
  const auto row5 = f.binomial_row(5);
  REQUIRE(row5.size() == 6);
  CHECK(row5[0] == 1);
  CHECK(row5[5] == 1);
  for (int i = 1; i < 5; ++i) CHECK(row5[i] == 0);
  for (std::uint32_t n = 1; n < 30; ++n) {
    const auto prev = f.binomial_row(n - 1);
    const auto row = f.binomial_row(n);
    for (std::uint32_t i = 1; i < n; ++i) CHECK(row[i] == f.add(prev[i - 1], prev[i]));
  }
}

TEST_CASE("construction canonicalises terms") {
  const Ambient amb{5, 1, 2};
  const SparsePoly a = poly(amb, {{3, mono({1, 0, 2})}, {4, mono({1, 0, 2})}, {5, mono({0, 1, 0})}, {-1, mono({})}});
  // 3 + 4 = 2 mod 5; the coefficient 5 vanishes.
  REQUIRE(a.size() == 2);
  CHECK(a.coefficient(mono({1, 0, 2})) == 2);
  CHECK(a.coefficient(mono({})) == 4);
  CHECK(a.coefficient(mono({0, 1, 0})) == 0);
  CHECK(SparsePoly(amb).is_zero());
  CHECK(C(amb, 10).is_zero());
}

TEST_CASE("ambient validation and mismatches") {
  CHECK_THROWS_AS(validate_ambient(Ambient{4, 1, 1}), InvalidArgument);
  CHECK_THROWS_AS(validate_ambient(Ambient{5, 10, 10}), InvalidArgument);
  CHECK_THROWS_AS(add(T({5, 1, 1}, 0), T({7, 1, 1}, 0)), AmbientMismatch);
  CHECK_THROWS_AS(mul(T({5, 1, 1}, 0), T({5, 2, 1}, 0)), AmbientMismatch);
  CHECK_THROWS_AS(SparsePoly::variable(Ambient{5, 1, 1}, Var::t(1)), InvalidArgument);
}

TEST_CASE("coefficient of t1^2 t2^2 in a small product over F_3") {
  const Ambient amb{3, 2, 0};
  const SparsePoly t1 = T(amb, 0);
  const SparsePoly t2 = T(amb, 1);
  const SparsePoly one = C(amb, 1);
  const SparsePoly prod = pow(t1 - t2, 2) * (t1 - one) * (t2 - one);
  // -2 from (-2 t1 t2)(t1 t2), which is 1 mod 3.
  CHECK(prod.coefficient(mono({2, 2})) == 1);
  const std::vector<std::uint32_t> e{2, 2};
  CHECK(coeff_t(prod, e) == C(Ambient{3, 0, 0}, 1));
}

TEST_CASE("ring axioms on random polynomials") {
  Gen g(101);
  for (int iter = 0; iter < 60; ++iter) {
    const Ambient amb{g.pick({3, 5, 7, 101}), g.between(0, 2), g.between(0, 3)};
    if (amb.nvars() == 0) continue;
    const SparsePoly a = kzt::random_poly(g, amb, 6, 3);
    const SparsePoly b = kzt::random_poly(g, amb, 6, 3);
    const SparsePoly c = kzt::random_poly(g, amb, 6, 3);
    const SparsePoly zero(amb);
    const SparsePoly one = C(amb, 1);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == zero);
    CHECK(a + neg(a) == zero);
    CHECK(a * one == a);
    CHECK(a * zero == zero);
    CHECK(scale(a, 2) == a + a);
    SparsePoly acc = a;
    acc += b;
    CHECK(acc == a + b);
    acc -= b;
    CHECK(acc == a);
  }
}

TEST_CASE("pow agrees with repeated multiplication and Frobenius holds") {
  Gen g(7);
  for (int iter = 0; iter < 20; ++iter) {
    const std::uint32_t p = g.pick({3, 5});
    const Ambient amb{p, 1, 2};
    const SparsePoly a = kzt::random_poly(g, amb, 3, 2);
    const SparsePoly b = kzt::random_poly(g, amb, 3, 2);
    SparsePoly rep = C(amb, 1);
    for (int e = 0; e < 4; ++e) rep = rep * a;
    CHECK(pow(a, 4) == rep);
    CHECK(pow(a, 0) == C(amb, 1));
    CHECK(pow(a + b, p) == pow(a, p) + pow(b, p));
  }
}

TEST_CASE("truncated products and coefficient extraction") {
  Gen g(11);
  for (int iter = 0; iter < 40; ++iter) {
    const Ambient amb{g.pick({3, 7}), g.between(1, 2), g.between(0, 2)};
    const SparsePoly a = kzt::random_poly(g, amb, 6, 4);
    const SparsePoly b = kzt::random_poly(g, amb, 6, 4);
    std::vector<std::uint32_t> caps(amb.k);
    for (auto& c : caps) c = g.between(0, 6);
    const SparsePoly full = a * b;
    const SparsePoly trunc = mul_truncated(a, b, caps);
    std::vector<Term> kept;
    for (const Term& t : full.terms()) {
      bool ok = true;
      for (std::uint32_t i = 0; i < amb.k; ++i) ok = ok && t.exps[i] <= caps[i];
      if (ok) kept.push_back(t);
    }
    CHECK(trunc == SparsePoly::from_terms(amb, kept));
    CHECK(coeff_t_of_product(a, b, caps) == coeff_t(full, caps));
    CHECK(pow_truncated(a, 3, caps) == mul_truncated(mul_truncated(a, a, caps), a, caps));
  }
}

TEST_CASE("derivatives") {
  Gen g(13);
  const Ambient amb{5, 1, 2};
  CHECK(partial_derivative(pow(T(amb, 0), 5), Var::t(0)).is_zero());
  CHECK(partial_derivative(pow(Z(amb, 1), 3), Var::z(1)) == scale(pow(Z(amb, 1), 2), 3));
  for (int iter = 0; iter < 30; ++iter) {
    const SparsePoly a = kzt::random_poly(g, amb, 5, 3);
    const SparsePoly b = kzt::random_poly(g, amb, 5, 3);
    for (const Var v : {Var::t(0), Var::z(0), Var::z(1)}) {
      CHECK(partial_derivative(a * b, v) == partial_derivative(a, v) * b + a * partial_derivative(b, v));
    }
  }
}

TEST_CASE("shift in t") {
  Gen g(17);
  const Ambient amb{7, 2, 1};
  const std::vector<std::int64_t> q{3, -2};
  const std::vector<std::int64_t> back{-3, 2};
  CHECK(shift_t(T(amb, 0), q) == T(amb, 0) + C(amb, 3));
  CHECK(shift_t(T(amb, 1), q) == T(amb, 1) + C(amb, 5));
  for (int iter = 0; iter < 20; ++iter) {
    const SparsePoly a = kzt::random_poly(g, amb, 5, 3);
    const SparsePoly b = kzt::random_poly(g, amb, 5, 3);
    CHECK(shift_t(shift_t(a, q), back) == a);
    CHECK(shift_t(a * b, q) == shift_t(a, q) * shift_t(b, q));
    // Evaluating the shifted polynomial at t equals evaluating at t + q.
    const std::vector<std::uint32_t> t{g.below(7), g.below(7)};
    const std::vector<std::uint32_t> tq{(t[0] + 3) % 7, (t[1] + 5) % 7};
    const std::vector<std::uint32_t> z{g.below(7)};
    CHECK(eval(shift_t(a, q), t, z) == eval(a, tq, z));
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  Gen g(19);
  const Ambient amb{11, 2, 2};
  for (int iter = 0; iter < 30; ++iter) {
    const SparsePoly a = kzt::random_poly(g, amb, 5, 3);
    const SparsePoly b = kzt::random_poly(g, amb, 5, 3);
    const std::vector<std::uint32_t> t{g.below(11), g.below(11)};
    const std::vector<std::uint32_t> z{g.below(11), g.below(11)};
    const PrimeField f(11);
    CHECK(eval(a * b, t, z) == f.mul(eval(a, t, z), eval(b, t, z)));
    CHECK(eval(a + b, t, z) == f.add(eval(a, t, z), eval(b, t, z)));
    const SparsePoly az = eval_z(a, z);
    CHECK(az.ambient() == Ambient{11, 2, 0});
    CHECK(eval(az, t, std::vector<std::uint32_t>{}) == eval(a, t, z));
  }
}

TEST_CASE("homogeneous parts, embedding and exact division") {
  Gen g(23);
  const Ambient amb{5, 1, 3};
  for (int iter = 0; iter < 20; ++iter) {
    const SparsePoly a = kzt::random_poly(g, amb, 6, 3);
    const auto parts = z_homogeneous_parts(a);
    SparsePoly sum(amb);
    for (std::size_t d = 0; d < parts.size(); ++d) {
      sum += parts[d];
      for (const Term& t : parts[d].terms()) CHECK(t.exps[1] + t.exps[2] + t.exps[3] == d);
    }
    CHECK(sum == a);

    const SparsePoly diff = Z(amb, 0) - Z(amb, 2);
    SparsePoly out;
    REQUIRE(divide_by_z_difference(a * diff, 0, 2, out));
    CHECK(out == a);
  }
  SparsePoly untouched = C(amb, 4);
  CHECK_FALSE(divide_by_z_difference(Z(amb, 0), 0, 1, untouched));
  CHECK(untouched == C(amb, 4));

  const SparsePoly small = T({5, 1, 1}, 0) * Z({5, 1, 1}, 0);
  const SparsePoly big = embed(small, Ambient{5, 2, 3});
  CHECK(big == T({5, 2, 3}, 0) * Z({5, 2, 3}, 0));
}

TEST_CASE("degrees and printing") {
  const Ambient amb{5, 1, 2};
  const SparsePoly a = scale(pow(T(amb, 0), 2) * Z(amb, 0), 2) + Z(amb, 1);
  CHECK(a.degree(Var::t(0)) == 2);
  CHECK(a.total_degree() == 3);
  CHECK(a.z_degree() == 1);
  CHECK_FALSE(a.is_free_of_z());
  CHECK(to_string(a) == "2*t1^2*z1 + z2");
  CHECK(to_string(SparsePoly(amb)) == "0");
}
