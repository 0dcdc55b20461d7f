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

// JSON encodings of polynomials, weight vectors, problem data and reports.
// Readers throw ParseError on malformed input.

#include <optional>
#include <string>

#include <json.hpp>

#include "kzp/construct.hpp"
#include "kzp/curves.hpp"
#include "kzp/fpintegral.hpp"
#include "kzp/verify.hpp"

namespace kzp {

using json = nlohmann::json;

/// {"p", "k", "n", "terms": [{"c", "t": [...], "z": [...]}, ...]} in canonical order.
json to_json(const SparsePoly& a);
SparsePoly poly_from_json(const json& j);

/// {"p", "m", "k", "coords": [{"J": [...], "poly": {...}}, ...]} listing every
/// basis index in basis order, zero coordinates included.
json to_json(const WeightVector& w);
WeightVector weight_vector_from_json(const json& j);

json to_json(const ExponentData& e);
ExponentData exponents_from_json(const json& j);
/// Any subset of {"M", "pair", "M0", "K"}.
ExponentOverride override_from_json(const json& j);

/// {"p", "kappa": "a/b", "m", "k", "q", "l"}.
json to_json(const ProblemSpec& spec);
ProblemSpec spec_from_json(const json& j);

json to_json(const CheckReport& r);
json to_json(const IntegralReport& r);
json to_json(const PointSumReport& r);

/// A solved problem as written by `kzp solve`.
struct SolutionDocument {
  ProblemSpec spec;
  ExponentData exponents;
  std::optional<WeightVector> solution;          // expanded form
  std::optional<FactoredWeightVector> factored;  // prefactor kept symbolic
};

/// {"provenance": {spec..., "exponents": {...}}, "solution": ...} and, when
/// `factored` is set, "prefactor_pair" and "reduced" in place of "solution".
json solution_document(const ProblemSpec& spec, const ExponentData& exps, const FactoredWeightVector& fw,
                       bool factored);
SolutionDocument parse_solution_document(const json& j);

/// Parses text, mapping syntax errors to ParseError.
json parse_json_text(const std::string& text);

}  // namespace kzp
