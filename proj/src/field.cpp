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

#include "kzp/field.hpp"

#include <string>

#include "kzp/error.hpp"

namespace kzp {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(0) {
  if (p == 2) throw InvalidArgument("p = 2 is not supported: the Casimir element needs 1/2");
  if (p > kMaxPrime) throw InvalidArgument("modulus " + std::to_string(p) + " exceeds the 31-bit limit");
  if (!is_prime(p)) throw InvalidArgument("modulus " + std::to_string(p) + " is not prime");
  p_ = static_cast<std::uint32_t>(p);
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  std::uint32_t result = 1 % p_;
  std::uint32_t base = a % p_;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw InvalidArgument("zero has no inverse in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

std::vector<std::uint32_t> PrimeField::binomial_row(std::uint32_t n) const {
  std::vector<std::uint32_t> row(n + 1, 0);
  row[0] = 1;
  for (std::uint32_t i = 1; i <= n; ++i) {
    for (std::uint32_t j = i; j > 0; --j) row[j] = add(row[j], row[j - 1]);
  }
  return row;
}

}  // namespace kzp
