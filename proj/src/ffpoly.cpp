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

#include "kzp/ffpoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "kzp/error.hpp"

namespace kzp {

namespace {

void require_same_ambient(const SparsePoly& a, const SparsePoly& b, const char* op) {
  if (!(a.ambient() == b.ambient())) {
    throw AmbientMismatch(std::string(op) + ": operands live in different ambients");
  }
}

bool term_less(const Term& x, const Term& y) { return x.exps < y.exps; }

// Open-addressing accumulator keyed by packed monomials. Coefficients are
// summed mod p as they arrive.
class PackedAccumulator {
 public:
  PackedAccumulator(std::uint32_t p, std::size_t expected) : p_(p) {
    std::size_t cap = 16;
    while (cap < 2 * expected) cap <<= 1;
    resize(cap);
  }

  void add(std::uint64_t key, std::uint32_t v) {
    if (v == 0) return;
    if (2 * (count_ + 1) > keys_.size()) resize(keys_.size() * 2);
    insert(key, v);
  }

  template <typename F>
  void for_each(F&& fn) const {
    for (std::size_t i = 0; i < keys_.size(); ++i) {
      if (keys_[i] != kEmpty && vals_[i] != 0) fn(keys_[i], vals_[i]);
    }
  }

 private:
  static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};

  std::size_t slot(std::uint64_t key) const {
    return static_cast<std::size_t>((key * 0x9E3779B97F4A7C15ull) >> shift_);
  }

  void insert(std::uint64_t key, std::uint32_t v) {
    std::size_t i = slot(key);
    const std::size_t mask = keys_.size() - 1;
    while (true) {
      if (keys_[i] == key) {
        std::uint32_t s = vals_[i] + v;
        vals_[i] = s >= p_ ? s - p_ : s;
        return;
      }
      if (keys_[i] == kEmpty) {
        keys_[i] = key;
        vals_[i] = v;
        ++count_;
        return;
      }
      i = (i + 1) & mask;
    }
  }

  void resize(std::size_t cap) {
    std::vector<std::uint64_t> old_keys = std::move(keys_);
    std::vector<std::uint32_t> old_vals = std::move(vals_);
    keys_.assign(cap, kEmpty);
    vals_.assign(cap, 0);
    count_ = 0;
    shift_ = 64;
    for (std::size_t c = cap; c > 1; c >>= 1) --shift_;
    for (std::size_t i = 0; i < old_keys.size(); ++i) {
      if (old_keys[i] != kEmpty) insert(old_keys[i], old_vals[i]);
    }
  }

  std::uint32_t p_;
  std::vector<std::uint64_t> keys_;
  std::vector<std::uint32_t> vals_;
  std::size_t count_ = 0;
  unsigned shift_ = 60;
};

// Mixed-radix packing with variable 0 most significant, so numeric key order
// coincides with the lexicographic monomial order.
struct Packer {
  std::size_t nvars = 0;
  std::array<std::uint64_t, kMaxVars> radix{};
  bool fits = true;

  Packer(std::size_t nv, std::span<const std::uint32_t> max_exp) : nvars(nv) {
    unsigned __int128 total = 1;
    for (std::size_t v = 0; v < nvars; ++v) {
      radix[v] = std::uint64_t{max_exp[v]} + 1;
      total *= radix[v];
      if (total > (static_cast<unsigned __int128>(1) << 63)) {
        fits = false;
        break;
      }
    }
  }

  std::uint64_t pack(const Monomial& m) const {
    std::uint64_t key = 0;
    for (std::size_t v = 0; v < nvars; ++v) key = key * radix[v] + m[v];
    return key;
  }

  Monomial unpack(std::uint64_t key) const {
    Monomial m{};
    for (std::size_t v = nvars; v-- > 0;) {
      m[v] = static_cast<std::uint16_t>(key % radix[v]);
      key /= radix[v];
    }
    return m;
  }
};

std::vector<std::uint32_t> max_exponents(const SparsePoly& a) {
  std::vector<std::uint32_t> out(a.ambient().nvars(), 0);
  for (const Term& t : a.terms()) {
    for (std::size_t v = 0; v < out.size(); ++v) out[v] = std::max<std::uint32_t>(out[v], t.exps[v]);
  }
  return out;
}

bool within_caps(const Monomial& m, std::span<const std::uint32_t> caps) {
  for (std::size_t i = 0; i < caps.size(); ++i) {
    if (m[i] > caps[i]) return false;
  }
  return true;
}

SparsePoly multiply(const SparsePoly& a, const SparsePoly& b, std::span<const std::uint32_t> caps) {
  require_same_ambient(a, b, "mul");
  const Ambient& amb = a.ambient();
  if (a.is_zero() || b.is_zero()) return SparsePoly(amb);
  const PrimeField field(amb.p);
  const std::size_t nv = amb.nvars();

  std::vector<Term> ta;
  std::vector<Term> tb;
  for (const Term& t : a.terms()) if (within_caps(t.exps, caps)) ta.push_back(t);
  for (const Term& t : b.terms()) if (within_caps(t.exps, caps)) tb.push_back(t);
  if (ta.empty() || tb.empty()) return SparsePoly(amb);

  std::vector<std::uint32_t> ma = max_exponents(a);
  std::vector<std::uint32_t> mb = max_exponents(b);
  std::vector<std::uint32_t> bound(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    bound[v] = ma[v] + mb[v];
    if (v < caps.size()) bound[v] = std::min(bound[v], caps[v]);
    if (bound[v] > 0xFFFF) throw InvalidArgument("mul: exponent exceeds 65535");
  }

  const bool capped = !caps.empty();
  auto combine = [&](const Term& x, const Term& y, Monomial& out) {
    for (std::size_t v = 0; v < nv; ++v) out[v] = static_cast<std::uint16_t>(x.exps[v] + y.exps[v]);
    return !capped || within_caps(out, caps);
  };

  Packer packer(nv, bound);
  std::vector<Term> result;
  if (packer.fits) {
    std::vector<std::uint64_t> kb(tb.size());
    for (std::size_t j = 0; j < tb.size(); ++j) kb[j] = packer.pack(tb[j].exps);
    PackedAccumulator acc(amb.p, ta.size() + tb.size());
    Monomial scratch{};
    for (const Term& x : ta) {
      const std::uint64_t kx = packer.pack(x.exps);
      for (std::size_t j = 0; j < tb.size(); ++j) {
        if (capped && !combine(x, tb[j], scratch)) continue;
        acc.add(kx + kb[j], field.mul(x.coeff, tb[j].coeff));
      }
    }
    std::vector<std::pair<std::uint64_t, std::uint32_t>> flat;
    acc.for_each([&](std::uint64_t k, std::uint32_t c) { flat.emplace_back(k, c); });
    std::sort(flat.begin(), flat.end());
    result.reserve(flat.size());
    for (const auto& [k, c] : flat) result.push_back({packer.unpack(k), c});
  } else {
    std::map<Monomial, std::uint32_t> acc;
    Monomial m{};
    for (const Term& x : ta) {
      for (const Term& y : tb) {
        if (!combine(x, y, m)) continue;
        std::uint32_t& slot = acc[m];
        slot = field.add(slot, field.mul(x.coeff, y.coeff));
      }
    }
    for (const auto& [mono, c] : acc) {
      if (c != 0) result.push_back({mono, c});
    }
  }
  return SparsePoly::from_canonical(amb, std::move(result));
}

// Merge of two sorted term lists: a + sign*b.
std::vector<Term> merge(std::span<const Term> a, std::span<const Term> b, bool subtract, const PrimeField& f) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exps < b[j].exps)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exps < a[i].exps) {
      Term t = b[j++];
      if (subtract) t.coeff = f.neg(t.coeff);
      out.push_back(t);
    } else {
      std::uint32_t c = subtract ? f.sub(a[i].coeff, b[j].coeff) : f.add(a[i].coeff, b[j].coeff);
      if (c != 0) out.push_back({a[i].exps, c});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

void validate_ambient(const Ambient& amb) {
  PrimeField f(amb.p);
  (void)f;
  if (amb.nvars() > kMaxVars) {
    throw InvalidArgument("ambient has " + std::to_string(amb.nvars()) + " variables; the limit is " +
                          std::to_string(kMaxVars));
  }
}

std::size_t var_position(const Ambient& amb, Var v) {
  if (v.block == Var::Block::kT) {
    if (v.index >= amb.k) throw InvalidArgument("unknown variable t" + std::to_string(v.index + 1));
    return v.index;
  }
  if (v.index >= amb.n) throw InvalidArgument("unknown variable z" + std::to_string(v.index + 1));
  return amb.k + v.index;
}

SparsePoly::SparsePoly(Ambient amb) : amb_(amb) { validate_ambient(amb_); }

SparsePoly SparsePoly::constant(Ambient amb, std::int64_t c) {
  SparsePoly r(amb);
  std::uint32_t v = PrimeField(amb.p).reduce(c);
  if (v != 0) r.terms_.push_back({Monomial{}, v});
  return r;
}

SparsePoly SparsePoly::variable(Ambient amb, Var v) {
  SparsePoly r(amb);
  Term t;
  t.exps[var_position(amb, v)] = 1;
  t.coeff = 1;
  r.terms_.push_back(t);
  return r;
}

SparsePoly SparsePoly::from_terms(Ambient amb, std::vector<Term> terms) {
  SparsePoly r(amb);
  const PrimeField f(amb.p);
  for (Term& t : terms) {
    for (std::size_t v = amb.nvars(); v < kMaxVars; ++v) {
      if (t.exps[v] != 0) throw InvalidArgument("term uses a variable outside the ambient");
    }
    t.coeff %= amb.p;
  }
  std::stable_sort(terms.begin(), terms.end(), term_less);
  for (const Term& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().exps == t.exps) {
      r.terms_.back().coeff = f.add(r.terms_.back().coeff, t.coeff);
    } else {
      r.terms_.push_back(t);
    }
  }
  std::erase_if(r.terms_, [](const Term& t) { return t.coeff == 0; });
  return r;
}

SparsePoly SparsePoly::from_canonical(Ambient amb, std::vector<Term> terms) {
  SparsePoly r;
  r.amb_ = amb;
  r.terms_ = std::move(terms);
  return r;
}

std::uint32_t SparsePoly::degree(Var v) const {
  const std::size_t pos = var_position(amb_, v);
  std::uint32_t d = 0;
  for (const Term& t : terms_) d = std::max<std::uint32_t>(d, t.exps[pos]);
  return d;
}

std::uint32_t SparsePoly::total_degree() const {
  std::uint32_t d = 0;
  for (const Term& t : terms_) {
    std::uint32_t s = 0;
    for (std::size_t v = 0; v < amb_.nvars(); ++v) s += t.exps[v];
    d = std::max(d, s);
  }
  return d;
}

std::uint32_t SparsePoly::z_degree() const {
  std::uint32_t d = 0;
  for (const Term& t : terms_) {
    std::uint32_t s = 0;
    for (std::size_t v = amb_.k; v < amb_.nvars(); ++v) s += t.exps[v];
    d = std::max(d, s);
  }
  return d;
}

bool SparsePoly::is_free_of_z() const {
  for (const Term& t : terms_) {
    for (std::size_t v = amb_.k; v < amb_.nvars(); ++v) {
      if (t.exps[v] != 0) return false;
    }
  }
  return true;
}

std::uint32_t SparsePoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{m, 0}, term_less);
  return (it != terms_.end() && it->exps == m) ? it->coeff : 0;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  require_same_ambient(*this, o, "add");
  terms_ = merge(terms_, o.terms_, false, PrimeField(amb_.p));
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  require_same_ambient(*this, o, "sub");
  terms_ = merge(terms_, o.terms_, true, PrimeField(amb_.p));
  return *this;
}

SparsePoly add(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly r = a;
  r += b;
  return r;
}

SparsePoly sub(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly r = a;
  r -= b;
  return r;
}

SparsePoly neg(const SparsePoly& a) { return scale(a, a.ambient().p - 1); }

SparsePoly scale(const SparsePoly& a, std::uint32_t c) {
  const PrimeField f(a.ambient().p);
  c %= a.ambient().p;
  if (c == 0) return SparsePoly(a.ambient());
  std::vector<Term> out(a.terms().begin(), a.terms().end());
  for (Term& t : out) t.coeff = f.mul(t.coeff, c);
  return SparsePoly::from_canonical(a.ambient(), std::move(out));
}

SparsePoly mul(const SparsePoly& a, const SparsePoly& b) { return multiply(a, b, {}); }

SparsePoly mul_truncated(const SparsePoly& a, const SparsePoly& b, std::span<const std::uint32_t> t_caps) {
  if (t_caps.size() != a.ambient().k) throw InvalidArgument("mul_truncated: one cap per t-variable required");
  return multiply(a, b, t_caps);
}

SparsePoly coeff_t_of_product(const SparsePoly& a, const SparsePoly& b, std::span<const std::uint32_t> e) {
  require_same_ambient(a, b, "coeff_t_of_product");
  const Ambient& amb = a.ambient();
  if (e.size() != amb.k) throw InvalidArgument("coeff_t_of_product: expected " + std::to_string(amb.k) + " exponents");
  // Slice both factors by their t-exponent vectors, then pair matching slices.
  auto slice = [&](const SparsePoly& x) {
    std::map<std::vector<std::uint32_t>, std::vector<Term>> out;
    for (const Term& t : x.terms()) {
      std::vector<std::uint32_t> key(t.exps.begin(), t.exps.begin() + amb.k);
      bool ok = true;
      for (std::uint32_t i = 0; i < amb.k; ++i) ok = ok && key[i] <= e[i];
      if (!ok) continue;
      Term r{};
      for (std::uint32_t s = 0; s < amb.n; ++s) r.exps[s] = t.exps[amb.k + s];
      r.coeff = t.coeff;
      out[key].push_back(r);
    }
    return out;
  };
  const Ambient zamb{amb.p, 0, amb.n};
  auto sa = slice(a);
  auto sb = slice(b);
  SparsePoly acc(zamb);
  for (auto& [key, terms] : sa) {
    std::vector<std::uint32_t> need(amb.k);
    for (std::uint32_t i = 0; i < amb.k; ++i) need[i] = e[i] - key[i];
    auto it = sb.find(need);
    if (it == sb.end()) continue;
    // Slices inherit lex order from the parent once the shared t-prefix is dropped.
    SparsePoly x = SparsePoly::from_canonical(zamb, terms);
    SparsePoly y = SparsePoly::from_canonical(zamb, it->second);
    acc += mul(x, y);
  }
  return acc;
}

SparsePoly pow(const SparsePoly& a, std::uint64_t e) {
  SparsePoly result = SparsePoly::constant(a.ambient(), 1);
  SparsePoly base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

SparsePoly pow_truncated(const SparsePoly& a, std::uint64_t e, std::span<const std::uint32_t> t_caps) {
  SparsePoly result = SparsePoly::constant(a.ambient(), 1);
  SparsePoly base = a;
  while (e > 0) {
    if (e & 1) result = mul_truncated(result, base, t_caps);
    e >>= 1;
    if (e > 0) base = mul_truncated(base, base, t_caps);
  }
  return result;
}

SparsePoly partial_derivative(const SparsePoly& a, Var v) {
  const std::size_t pos = var_position(a.ambient(), v);
  const PrimeField f(a.ambient().p);
  std::vector<Term> out;
  out.reserve(a.size());
  for (const Term& t : a.terms()) {
    if (t.exps[pos] == 0) continue;
    std::uint32_t c = f.mul(t.coeff, t.exps[pos] % a.ambient().p);
    if (c == 0) continue;
    Term d = t;
    d.exps[pos] -= 1;
    d.coeff = c;
    out.push_back(d);
  }
  // Lowering one coordinate can reorder terms, so canonicalise.
  return SparsePoly::from_terms(a.ambient(), std::move(out));
}

SparsePoly shift_t(const SparsePoly& a, std::span<const std::int64_t> q) {
  const Ambient& amb = a.ambient();
  if (q.size() != amb.k) throw InvalidArgument("shift_t: expected " + std::to_string(amb.k) + " shifts");
  const PrimeField f(amb.p);
  std::vector<std::uint32_t> qr(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) qr[i] = f.reduce(q[i]);

  std::uint32_t max_deg = 0;
  for (std::uint32_t i = 0; i < amb.k; ++i) max_deg = std::max(max_deg, a.degree(Var::t(i)));
  std::vector<std::vector<std::uint32_t>> binom(max_deg + 1);
  for (std::uint32_t d = 0; d <= max_deg; ++d) binom[d] = f.binomial_row(d);

  std::vector<Term> out;
  for (const Term& term : a.terms()) {
    // Expand prod_i (t_i + q_i)^{e_i} term by term.
    std::vector<Term> partial{Term{term.exps, term.coeff}};
    for (std::uint32_t i = 0; i < amb.k; ++i) {
      const std::uint32_t e = term.exps[i];
      if (e == 0 || qr[i] == 0) continue;
      std::vector<Term> next;
      next.reserve(partial.size() * (e + 1));
      for (const Term& pt : partial) {
        std::uint32_t qpow = 1;  // q_i^{e-u} built from u = e downward
        for (std::uint32_t u = e + 1; u-- > 0;) {
          std::uint32_t c = f.mul(pt.coeff, f.mul(binom[e][u], qpow));
          if (c != 0) {
            Term nt = pt;
            nt.exps[i] = static_cast<std::uint16_t>(u);
            nt.coeff = c;
            next.push_back(nt);
          }
          qpow = f.mul(qpow, qr[i]);
        }
      }
      partial = std::move(next);
    }
    out.insert(out.end(), partial.begin(), partial.end());
  }
  return SparsePoly::from_terms(amb, std::move(out));
}

SparsePoly coeff_t(const SparsePoly& a, std::span<const std::uint32_t> e) {
  const Ambient& amb = a.ambient();
  if (e.size() != amb.k) throw InvalidArgument("coeff_t: expected " + std::to_string(amb.k) + " exponents");
  const Ambient target{amb.p, 0, amb.n};
  std::vector<Term> out;
  for (const Term& t : a.terms()) {
    bool match = true;
    for (std::uint32_t i = 0; i < amb.k; ++i) {
      if (t.exps[i] != e[i]) {
        match = false;
        break;
      }
    }
    if (!match) continue;
    Term r;
    for (std::uint32_t s = 0; s < amb.n; ++s) r.exps[s] = t.exps[amb.k + s];
    r.coeff = t.coeff;
    out.push_back(r);
  }
  // Matching terms share their t-prefix, so the z-suffixes are already sorted.
  return SparsePoly::from_canonical(target, std::move(out));
}

std::uint32_t eval(const SparsePoly& a, std::span<const std::uint32_t> t_values,
                   std::span<const std::uint32_t> z_values) {
  const Ambient& amb = a.ambient();
  if (t_values.size() != amb.k || z_values.size() != amb.n) {
    throw InvalidArgument("eval: assignment must cover all " + std::to_string(amb.nvars()) + " variables");
  }
  const PrimeField f(amb.p);
  std::vector<std::uint32_t> point(amb.nvars());
  for (std::size_t i = 0; i < amb.k; ++i) point[i] = t_values[i] % amb.p;
  for (std::size_t s = 0; s < amb.n; ++s) point[amb.k + s] = z_values[s] % amb.p;
  std::uint32_t acc = 0;
  for (const Term& t : a.terms()) {
    std::uint32_t v = t.coeff;
    for (std::size_t i = 0; i < point.size() && v != 0; ++i) {
      if (t.exps[i] != 0) v = f.mul(v, f.pow(point[i], t.exps[i]));
    }
    acc = f.add(acc, v);
  }
  return acc;
}

SparsePoly eval_z(const SparsePoly& a, std::span<const std::uint32_t> x) {
  const Ambient& amb = a.ambient();
  if (x.size() != amb.n) throw InvalidArgument("eval_z: expected " + std::to_string(amb.n) + " values");
  const PrimeField f(amb.p);
  std::vector<Term> out;
  out.reserve(a.size());
  for (const Term& t : a.terms()) {
    std::uint32_t v = t.coeff;
    for (std::size_t s = 0; s < amb.n && v != 0; ++s) {
      const std::uint32_t e = t.exps[amb.k + s];
      if (e != 0) v = f.mul(v, f.pow(x[s] % amb.p, e));
    }
    if (v == 0) continue;
    Term r{};
    for (std::size_t i = 0; i < amb.k; ++i) r.exps[i] = t.exps[i];
    r.coeff = v;
    out.push_back(r);
  }
  return SparsePoly::from_terms(Ambient{amb.p, amb.k, 0}, std::move(out));
}

SparsePoly embed(const SparsePoly& a, const Ambient& target) {
  const Ambient& src = a.ambient();
  if (src.p != target.p || src.k > target.k || src.n > target.n) {
    throw AmbientMismatch("embed: target ambient cannot hold the source");
  }
  std::vector<Term> out;
  out.reserve(a.size());
  for (const Term& t : a.terms()) {
    Term r{};
    for (std::size_t i = 0; i < src.k; ++i) r.exps[i] = t.exps[i];
    for (std::size_t s = 0; s < src.n; ++s) r.exps[target.k + s] = t.exps[src.k + s];
    r.coeff = t.coeff;
    out.push_back(r);
  }
  return SparsePoly::from_terms(target, std::move(out));
}

std::vector<SparsePoly> z_homogeneous_parts(const SparsePoly& a) {
  const Ambient& amb = a.ambient();
  std::vector<std::vector<Term>> buckets(a.is_zero() ? 0 : a.z_degree() + 1);
  for (const Term& t : a.terms()) {
    std::uint32_t d = 0;
    for (std::size_t v = amb.k; v < amb.nvars(); ++v) d += t.exps[v];
    buckets[d].push_back(t);
  }
  std::vector<SparsePoly> parts;
  parts.reserve(buckets.size());
  for (auto& b : buckets) parts.push_back(SparsePoly::from_canonical(amb, std::move(b)));
  return parts;
}

bool divide_by_z_difference(const SparsePoly& a, std::uint32_t za, std::uint32_t zb, SparsePoly& out) {
  const Ambient& amb = a.ambient();
  if (za == zb) throw InvalidArgument("divide_by_z_difference: variables must differ");
  const std::size_t pa = var_position(amb, Var::z(za));
  const std::size_t pb = var_position(amb, Var::z(zb));
  if (a.is_zero()) {
    out = a;
    return true;
  }
  // Synthetic division in z_a with root z_b: Q_{d-1} = P_d + z_b Q_d.
  const std::uint32_t top = a.degree(Var::z(za));
  std::vector<std::vector<Term>> slices(top + 1);
  for (const Term& t : a.terms()) {
    Term r = t;
    r.exps[pa] = 0;
    slices[t.exps[pa]].push_back(r);
  }
  auto times_zb = [&](const SparsePoly& q) {
    std::vector<Term> ts(q.terms().begin(), q.terms().end());
    for (Term& t : ts) {
      if (t.exps[pb] == 0xFFFF) throw InvalidArgument("divide_by_z_difference: exponent overflow");
      t.exps[pb] += 1;
    }
    return SparsePoly::from_canonical(amb, std::move(ts));  // shifting one exponent keeps lex order
  };
  std::vector<SparsePoly> quotient(top, SparsePoly(amb));
  SparsePoly carry(amb);
  for (std::uint32_t d = top; d >= 1; --d) {
    SparsePoly pd = SparsePoly::from_terms(amb, std::move(slices[d]));
    carry = add(pd, times_zb(carry));
    quotient[d - 1] = carry;
  }
  SparsePoly remainder = add(SparsePoly::from_terms(amb, std::move(slices[0])), times_zb(carry));
  if (!remainder.is_zero()) return false;
  std::vector<Term> all;
  for (std::uint32_t d = 0; d < top; ++d) {
    for (Term t : quotient[d].terms()) {
      t.exps[pa] = static_cast<std::uint16_t>(d);
      all.push_back(t);
    }
  }
  out = SparsePoly::from_terms(amb, std::move(all));
  return true;
}

std::string to_string(const SparsePoly& a) {
  if (a.is_zero()) return "0";
  const Ambient& amb = a.ambient();
  std::ostringstream os;
  bool first = true;
  // Highest monomials first reads more naturally.
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    bool has_var = false;
    std::ostringstream mono;
    for (std::size_t v = 0; v < amb.nvars(); ++v) {
      if (it->exps[v] == 0) continue;
      if (has_var) mono << '*';
      has_var = true;
      mono << (v < amb.k ? 't' : 'z') << (v < amb.k ? v + 1 : v - amb.k + 1);
      if (it->exps[v] > 1) mono << '^' << it->exps[v];
    }
    if (!has_var) {
      os << it->coeff;
    } else if (it->coeff == 1) {
      os << mono.str();
    } else {
      os << it->coeff << '*' << mono.str();
    }
  }
  return os.str();
}

}  // namespace kzp
