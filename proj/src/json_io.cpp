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

#include "kzp/json_io.hpp"

#include "kzp/error.hpp"

namespace kzp {

namespace {

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <typename T>
T get(const json& j, const char* key) {
  const json& v = member(j, key);
  try {
    return v.get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

// Wraps library errors (bad ambient, index outside the basis, ...) raised
// while rebuilding objects from otherwise well-formed JSON.
template <typename Fn>
auto rebuild(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

json witness_json(const Witness& w) {
  json out{{"equation", w.equation}, {"residual", to_json(w.residual)}};
  out["coordinate"] = w.coordinate ? json(w.coordinate->j) : json(nullptr);
  return out;
}

}  // namespace

json to_json(const SparsePoly& a) {
  const Ambient& amb = a.ambient();
  json terms = json::array();
  for (const Term& t : a.terms()) {
    std::vector<std::uint32_t> te(t.exps.begin(), t.exps.begin() + amb.k);
    std::vector<std::uint32_t> ze(t.exps.begin() + amb.k, t.exps.begin() + amb.k + amb.n);
    terms.push_back({{"c", t.coeff}, {"t", te}, {"z", ze}});
  }
  return {{"p", amb.p}, {"k", amb.k}, {"n", amb.n}, {"terms", terms}};
}

SparsePoly poly_from_json(const json& j) {
  const Ambient amb{get<std::uint32_t>(j, "p"), get<std::uint32_t>(j, "k"), get<std::uint32_t>(j, "n")};
  rebuild("polynomial ambient", [&] {
    validate_ambient(amb);
    return 0;
  });
  const json& terms = member(j, "terms");
  if (!terms.is_array()) throw ParseError("'terms' must be an array");
  std::vector<Term> out;
  out.reserve(terms.size());
  const PrimeField f(amb.p);
  for (const json& t : terms) {
    const auto te = get<std::vector<std::uint32_t>>(t, "t");
    const auto ze = get<std::vector<std::uint32_t>>(t, "z");
    if (te.size() != amb.k || ze.size() != amb.n) throw ParseError("exponent vector length does not match ambient");
    Term term;
    term.coeff = f.reduce(get<std::int64_t>(t, "c"));
    for (std::size_t v = 0; v < amb.nvars(); ++v) {
      const std::uint32_t e = v < amb.k ? te[v] : ze[v - amb.k];
      if (e > 0xFFFF) throw ParseError("exponent too large");
      term.exps[v] = static_cast<std::uint16_t>(e);
    }
    out.push_back(term);
  }
  return SparsePoly::from_terms(amb, std::move(out));
}

json to_json(const WeightVector& w) {
  json coords = json::array();
  for (const MultiIndex& J : basis(w.m(), w.k())) coords.push_back({{"J", J.j}, {"poly", to_json(w.at(J))}});
  const Ambient& amb = w.coord_ambient();
  return {{"p", w.p()}, {"m", w.m()}, {"k", w.k()}, {"coord_k", amb.k}, {"coord_n", amb.n}, {"coords", coords}};
}

WeightVector weight_vector_from_json(const json& j) {
  const auto p = get<std::uint32_t>(j, "p");
  const auto m = get<std::vector<std::uint32_t>>(j, "m");
  const auto k = get<std::uint32_t>(j, "k");
  const Ambient amb{p, j.value("coord_k", 0u), j.value("coord_n", static_cast<std::uint32_t>(m.size()))};
  return rebuild("weight vector", [&] {
    WeightVector w(m, k, amb);
    const json& coords = member(j, "coords");
    if (!coords.is_array()) throw ParseError("'coords' must be an array");
    for (const json& c : coords) {
      MultiIndex J{get<std::vector<std::uint32_t>>(c, "J")};
      SparsePoly poly = poly_from_json(member(c, "poly"));
      if (!poly.is_zero()) w.set(J, std::move(poly));
    }
    return w;
  });
}

json to_json(const ExponentData& e) {
  return {{"M", e.M}, {"pair", e.pair}, {"M0", e.M0}, {"K", e.K}};
}

ExponentData exponents_from_json(const json& j) {
  ExponentData e;
  e.M = get<std::vector<std::uint32_t>>(j, "M");
  e.pair = get<std::vector<std::vector<std::uint32_t>>>(j, "pair");
  e.M0 = get<std::uint32_t>(j, "M0");
  e.K = get<std::uint32_t>(j, "K");
  return e;
}

ExponentOverride override_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("exponent override must be an object");
  ExponentOverride o;
  if (j.contains("M")) o.M = get<std::vector<std::uint32_t>>(j, "M");
  if (j.contains("pair")) o.pair = get<std::vector<std::vector<std::uint32_t>>>(j, "pair");
  if (j.contains("M0")) o.M0 = get<std::uint32_t>(j, "M0");
  if (j.contains("K")) o.K = get<std::uint32_t>(j, "K");
  return o;
}

json to_json(const ProblemSpec& spec) {
  return {{"p", spec.p}, {"kappa", spec.kappa.to_string()}, {"m", spec.m}, {"k", spec.k}, {"q", spec.q}, {"l", spec.l}};
}

ProblemSpec spec_from_json(const json& j) {
  ProblemSpec spec;
  spec.p = get<std::uint32_t>(j, "p");
  spec.kappa = rebuild("kappa", [&] { return Kappa::parse(get<std::string>(j, "kappa")); });
  spec.m = get<std::vector<std::uint32_t>>(j, "m");
  spec.k = get<std::uint32_t>(j, "k");
  spec.q = get<std::vector<std::int64_t>>(j, "q");
  spec.l = get<std::vector<std::uint32_t>>(j, "l");
  return spec;
}

json to_json(const CheckReport& r) {
  json out{{"name", r.name}, {"passed", r.passed}};
  if (r.witness) out["witness"] = witness_json(*r.witness);
  return out;
}

json to_json(const IntegralReport& r) {
  json out = to_json(r.check);
  json values = json::array();
  for (const IntegralValue& v : r.values) {
    values.push_back({{"J", v.J.j}, {"taylor", v.taylor}, {"integral", v.integral}});
  }
  out["values"] = values;
  return out;
}

json to_json(const PointSumReport& r) {
  json out = to_json(r.check);
  out["integrals"] = r.integrals;
  out["expected"] = r.expected;
  out["outside_gate"] = r.outside_gate;
  return out;
}

json solution_document(const ProblemSpec& spec, const ExponentData& exps, const FactoredWeightVector& fw,
                       bool factored) {
  json prov = to_json(spec);
  prov["exponents"] = to_json(exps);
  json out{{"provenance", prov}};
  if (factored) {
    out["prefactor_pair"] = fw.pair;
    out["reduced"] = to_json(fw.reduced);
  } else {
    out["solution"] = to_json(fw.expand());
  }
  return out;
}

SolutionDocument parse_solution_document(const json& j) {
  if (!j.is_object() || !j.contains("provenance")) throw ParseError("solution file lacks a provenance block");
  const json& prov = member(j, "provenance");
  SolutionDocument doc{spec_from_json(prov), exponents_from_json(member(prov, "exponents")), std::nullopt, std::nullopt};
  rebuild("provenance", [&] {
    validate_exponents(doc.spec, doc.exponents);
    return 0;
  });
  if (j.contains("solution")) doc.solution = weight_vector_from_json(member(j, "solution"));
  if (j.contains("reduced")) {
    doc.factored = FactoredWeightVector{get<std::vector<std::vector<std::uint32_t>>>(j, "prefactor_pair"),
                                       weight_vector_from_json(j.at("reduced"))};
  }
  if (!doc.solution && !doc.factored) throw ParseError("solution file has neither 'solution' nor 'reduced'");
  return doc;
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace kzp
