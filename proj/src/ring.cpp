// Copyright 2026 The unirow Authors
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

#include "unirow/ring.hpp"

#include <algorithm>
#include <cctype>

#include "unirow/graded.hpp"
#include "lex.hpp"

namespace unirow {

using lex::expect;
using lex::parse_ident;
using lex::parse_int;
using lex::peek;
using lex::skip_ws;

namespace {

int nesting_depth(const Ring& r) {
  switch (r.kind()) {
    case RingKind::Integers:
    case RingKind::IntegersMod:
    case RingKind::Rationals:
      return 0;
    case RingKind::Poly:
      return nesting_depth(*r.base()) + 1;
    case RingKind::Graded:
      return 1;
    case RingKind::Quotient:
    case RingKind::Excision:
      return nesting_depth(*r.base());
  }
  return 0;
}

bool is_scalar(const Ring& r) {
  return r.kind() == RingKind::Integers || r.kind() == RingKind::IntegersMod ||
         r.kind() == RingKind::Rationals || r.is_residue_ring();
}

void trim(std::vector<Elem>& c, const Elem& zero) {
  while (!c.empty() && c.back() == zero) c.pop_back();
}

}  // namespace

bool elem_less(const Elem& a, const Elem& b) {
  if (a.v.index() != b.v.index()) return a.v.index() < b.v.index();
  switch (a.v.index()) {
    case 0:
      return a.integer() < b.integer();
    case 1:
      return a.rational() < b.rational();
    default: {
      const auto& x = a.list();
      const auto& y = b.list();
      if (x.size() != y.size()) return x.size() < y.size();
      for (std::size_t i = x.size(); i-- > 0;) {
        if (elem_less(x[i], y[i])) return true;
        if (elem_less(y[i], x[i])) return false;
      }
      return false;
    }
  }
}

// ---------------------------------------------------------------- factories

RingPtr Ring::integers() {
  auto r = std::make_shared<Ring>(RingKind::Integers);
  r->name_ = "Z";
  return r;
}

RingPtr Ring::integers_mod(const Int& n) {
  if (n < 2) throw InvalidElement("Z/n needs n >= 2");
  auto r = std::make_shared<Ring>(RingKind::IntegersMod);
  r->n_ = n;
  r->name_ = "Z/" + n.str();
  return r;
}

RingPtr Ring::rationals() {
  auto r = std::make_shared<Ring>(RingKind::Rationals);
  r->name_ = "Q";
  return r;
}

RingPtr Ring::poly(RingPtr base, std::string var) {
  if (base->kind() == RingKind::Excision)
    throw Unsupported("polynomials over excision rings are not supported");
  auto r = std::make_shared<Ring>(RingKind::Poly);
  r->base_ = std::move(base);
  r->var_ = std::move(var);
  if (nesting_depth(*r) > 2) throw Unsupported("nesting depth exceeds 2");
  r->name_ = "poly(" + r->base_->name() + ";" + r->var_ + ")";
  return r;
}

RingPtr Ring::quotient(RingPtr base, const Elem& modulus) {
  auto r = std::make_shared<Ring>(RingKind::Quotient);
  if (base->kind() == RingKind::Integers || base->kind() == RingKind::IntegersMod) {
    Int m = abs(base->normalize(modulus).integer());
    if (base->kind() == RingKind::IntegersMod) m = gcd(m, base->modulus_int());
    if (m < 2) throw Unsupported("quotient by a unit or by zero has no finite normal form");
    r->n_ = m;
  } else if (base->kind() == RingKind::Poly) {
    Elem f = base->normalize(modulus);
    if (base->degree(f) < 1 || !base->base()->is_one(base->leading(f)))
      throw Unsupported("quotient of a polynomial ring needs a monic modulus of degree >= 1");
  } else {
    throw Unsupported("quotient needs an integer or monic polynomial modulus");
  }
  r->modulus_ = base->normalize(modulus);
  r->base_ = std::move(base);
  r->name_ = "quotient(" + r->base_->name() + "; " + r->base_->print(r->modulus_) + ")";
  return r;
}

RingPtr Ring::graded(RingPtr base, std::vector<std::pair<Elem, int>> gens) {
  if (!is_scalar(*base)) throw Unsupported("graded algebras need a scalar coefficient ring");
  for (auto& g : gens) {
    g.first = base->normalize(g.first);
    if (base->is_zero(g.first)) throw InvalidElement("zero coefficient generator");
    if (g.second < 1) throw InvalidElement("generator degree must be >= 1");
  }
  if (gens.empty()) throw InvalidElement("graded algebra needs a generator");
  auto r = std::make_shared<Ring>(RingKind::Graded);
  r->base_ = base;
  r->var_ = "t";
  r->algebra_ = std::make_shared<GradedAlgebra>(base, gens);
  std::string nm = "graded(" + base->name() + ";";
  for (std::size_t i = 0; i < gens.size(); ++i)
    nm += (i ? ", " : " ") + base->print(gens[i].first) + "@" + std::to_string(gens[i].second);
  r->name_ = nm + ")";
  return r;
}

RingPtr Ring::excision(RingPtr base, std::vector<Elem> gens) {
  if (base->kind() == RingKind::Excision) throw Unsupported("nested excision");
  if (gens.empty()) throw InvalidElement("excision needs an ideal generator");
  for (auto& g : gens) g = base->normalize(g);
  auto r = std::make_shared<Ring>(RingKind::Excision);
  r->base_ = base;
  r->ideal_gens_ = gens;
  std::string nm = "excision(" + base->name() + ";";
  for (std::size_t i = 0; i < gens.size(); ++i) nm += (i ? ", " : " ") + base->print(gens[i]);
  r->name_ = nm + ")";
  return r;
}

// --------------------------------------------------------------- structure

bool Ring::is_polynomial_like() const {
  return kind_ == RingKind::Poly || kind_ == RingKind::Graded ||
         (kind_ == RingKind::Quotient && base_->kind() == RingKind::Poly);
}

bool Ring::is_residue_ring() const {
  return kind_ == RingKind::IntegersMod ||
         (kind_ == RingKind::Quotient && !base_->is_polynomial_like());
}

const Ring& Ring::coeff_ring() const {
  if (kind_ == RingKind::Quotient) return *base_->base_;
  return *base_;
}

std::string Ring::name() const { return name_; }

Elem Ring::zero() const {
  switch (kind_) {
    case RingKind::Rationals:
      return Elem(Rat(0));
    case RingKind::Poly:
    case RingKind::Graded:
      return Elem(std::vector<Elem>{});
    case RingKind::Quotient:
      if (is_polynomial_like()) return Elem(std::vector<Elem>{});
      return Elem(Int(0));
    case RingKind::Excision:
      return Elem(std::vector<Elem>{base_->zero(), base_->zero()});
    default:
      return Elem(Int(0));
  }
}

Elem Ring::one() const { return from_int(1); }

Elem Ring::from_int(const Int& k) const {
  switch (kind_) {
    case RingKind::Integers:
      return Elem(k);
    case RingKind::IntegersMod:
      return Elem(mod_floor(k, n_));
    case RingKind::Rationals:
      return Elem(Rat(k));
    case RingKind::Excision:
      return Elem(std::vector<Elem>{base_->from_int(k), base_->zero()});
    case RingKind::Quotient:
      if (!is_polynomial_like()) return Elem(mod_floor(k, n_));
      [[fallthrough]];
    default: {
      std::vector<Elem> c{coeff_ring().from_int(k)};
      trim(c, coeff_ring().zero());
      return Elem(std::move(c));
    }
  }
}

int Ring::degree(const Elem& f) const { return static_cast<int>(f.list().size()) - 1; }

Elem Ring::coeff(const Elem& f, int i) const {
  const auto& c = f.list();
  if (i < 0 || i >= static_cast<int>(c.size())) return coeff_ring().zero();
  return c[i];
}

Elem Ring::leading(const Elem& f) const {
  const auto& c = f.list();
  return c.empty() ? coeff_ring().zero() : c.back();
}

Elem Ring::monomial(const Elem& c, int deg) const {
  std::vector<Elem> v(deg + 1, coeff_ring().zero());
  v[deg] = c;
  return normalize(Elem(std::move(v)));
}

// --------------------------------------------------------------- arithmetic

Elem Ring::add(const Elem& x, const Elem& y) const {
  switch (kind_) {
    case RingKind::Integers:
      return Elem(x.integer() + y.integer());
    case RingKind::IntegersMod:
      return Elem(mod_floor(x.integer() + y.integer(), n_));
    case RingKind::Rationals:
      return Elem(x.rational() + y.rational());
    case RingKind::Excision:
      return Elem(std::vector<Elem>{base_->add(x.list()[0], y.list()[0]),
                                    base_->add(x.list()[1], y.list()[1])});
    case RingKind::Quotient:
      if (!is_polynomial_like()) return Elem(mod_floor(x.integer() + y.integer(), n_));
      [[fallthrough]];
    default: {
      const Ring& k = coeff_ring();
      const auto& a = x.list();
      const auto& b = y.list();
      std::vector<Elem> c(std::max(a.size(), b.size()), k.zero());
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < a.size() && i < b.size())
          c[i] = k.add(a[i], b[i]);
        else
          c[i] = i < a.size() ? a[i] : b[i];
      }
      trim(c, k.zero());
      return Elem(std::move(c));
    }
  }
}

Elem Ring::neg(const Elem& x) const {
  switch (kind_) {
    case RingKind::Integers:
      return Elem(Int(-x.integer()));
    case RingKind::IntegersMod:
      return Elem(mod_floor(-x.integer(), n_));
    case RingKind::Rationals:
      return Elem(Rat(-x.rational()));
    case RingKind::Excision:
      return Elem(std::vector<Elem>{base_->neg(x.list()[0]), base_->neg(x.list()[1])});
    case RingKind::Quotient:
      if (!is_polynomial_like()) return Elem(mod_floor(-x.integer(), n_));
      [[fallthrough]];
    default: {
      const Ring& k = coeff_ring();
      std::vector<Elem> c = x.list();
      for (auto& e : c) e = k.neg(e);
      return Elem(std::move(c));
    }
  }
}

Elem Ring::sub(const Elem& x, const Elem& y) const { return add(x, neg(y)); }

Elem Ring::poly_mul(const Elem& x, const Elem& y) const {
  const Ring& k = coeff_ring();
  const auto& a = x.list();
  const auto& b = y.list();
  if (a.empty() || b.empty()) return Elem(std::vector<Elem>{});
  std::vector<Elem> c(a.size() + b.size() - 1, k.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (k.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = k.add(c[i + j], k.mul(a[i], b[j]));
  }
  trim(c, k.zero());
  return Elem(std::move(c));
}

Elem Ring::reduce_mod_poly(std::vector<Elem> c) const {
  const Ring& k = coeff_ring();
  const auto& m = modulus_.list();
  const std::size_t d = m.size() - 1;
  trim(c, k.zero());
  while (c.size() > d) {
    Elem lc = c.back();
    std::size_t shift = c.size() - 1 - d;
    for (std::size_t i = 0; i <= d; ++i) c[shift + i] = k.sub(c[shift + i], k.mul(lc, m[i]));
    trim(c, k.zero());
  }
  return Elem(std::move(c));
}

Elem Ring::mul(const Elem& x, const Elem& y) const {
  switch (kind_) {
    case RingKind::Integers:
      return Elem(Int(x.integer() * y.integer()));
    case RingKind::IntegersMod:
      return Elem(mod_floor(x.integer() * y.integer(), n_));
    case RingKind::Rationals:
      return Elem(Rat(x.rational() * y.rational()));
    case RingKind::Excision: {
      // (r, i)(s, j) = (rs, rj + si + ij)
      const Elem& r = x.list()[0];
      const Elem& i = x.list()[1];
      const Elem& s = y.list()[0];
      const Elem& j = y.list()[1];
      const Ring& b = *base_;
      Elem second = b.add(b.add(b.mul(r, j), b.mul(s, i)), b.mul(i, j));
      return Elem(std::vector<Elem>{b.mul(r, s), second});
    }
    case RingKind::Quotient:
      if (!is_polynomial_like()) return Elem(mod_floor(x.integer() * y.integer(), n_));
      return reduce_mod_poly(poly_mul(x, y).list());
    default:
      return poly_mul(x, y);
  }
}

Elem Ring::pow(const Elem& x, std::uint64_t k) const {
  Elem result = one();
  Elem b = x;
  while (k) {
    if (k & 1) result = mul(result, b);
    k >>= 1;
    if (k) b = mul(b, b);
  }
  return result;
}

// -------------------------------------------------------- canonical forms

Elem Ring::normalize(const Elem& x) const {
  switch (kind_) {
    case RingKind::Integers:
      if (x.v.index() != 0) throw InvalidElement("expected an integer");
      return x;
    case RingKind::IntegersMod:
      if (x.v.index() != 0) throw InvalidElement("expected a residue");
      return Elem(mod_floor(x.integer(), n_));
    case RingKind::Rationals:
      if (x.v.index() == 0) return Elem(Rat(x.integer()));
      if (x.v.index() != 1) throw InvalidElement("expected a rational");
      return x;
    case RingKind::Excision: {
      if (x.v.index() != 2 || x.list().size() != 2) throw InvalidElement("expected a pair");
      Elem r = base_->normalize(x.list()[0]);
      Elem i = base_->normalize(x.list()[1]);
      if (!in_ideal({base_, ideal_gens_}, i))
        throw InvalidElement("second component is not in the excision ideal");
      return Elem(std::vector<Elem>{r, i});
    }
    case RingKind::Quotient:
      if (!is_polynomial_like()) {
        if (x.v.index() != 0) throw InvalidElement("expected a residue");
        return Elem(mod_floor(x.integer(), n_));
      }
      [[fallthrough]];
    default: {
      if (x.v.index() != 2) throw InvalidElement("expected a coefficient list");
      const Ring& k = coeff_ring();
      std::vector<Elem> c;
      c.reserve(x.list().size());
      for (const auto& e : x.list()) c.push_back(k.normalize(e));
      trim(c, k.zero());
      if (kind_ == RingKind::Quotient) return reduce_mod_poly(std::move(c));
      if (kind_ == RingKind::Graded && !algebra_->contains(c))
        throw InvalidElement("coefficient outside its component ideal");
      return Elem(std::move(c));
    }
  }
}

void Ring::check(const Elem& x) const {
  if (normalize(x) != x) throw InvalidElement("element is not in canonical form");
}

// ------------------------------------------------------------ text formats

std::string Ring::print(const Elem& x) const {
  switch (kind_) {
    case RingKind::Integers:
    case RingKind::IntegersMod:
      return x.integer().str();
    case RingKind::Rationals:
      return to_string(x.rational());
    case RingKind::Excision:
      return "(" + base_->print(x.list()[0]) + ", " + base_->print(x.list()[1]) + ")";
    case RingKind::Quotient:
      if (!is_polynomial_like()) return x.integer().str();
      [[fallthrough]];
    default: {
      const Ring& k = coeff_ring();
      std::string out = "[";
      bool first = true;
      const auto& c = x.list();
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (k.is_zero(c[i])) continue;
        if (!first) out += ", ";
        first = false;
        out += k.print(c[i]);
        if (i > 0) out += "@" + std::to_string(i);
      }
      return out + "]";
    }
  }
}

Elem Ring::parse_at(std::string_view s, std::size_t& pos) const {
  skip_ws(s, pos);
  std::size_t start = pos;
  try {
    switch (kind_) {
      case RingKind::Integers:
      case RingKind::IntegersMod:
        return normalize(Elem(parse_int(s, pos)));
      case RingKind::Rationals: {
        Int num = parse_int(s, pos);
        Int den = 1;
        if (peek(s, pos, '/')) {
          ++pos;
          den = parse_int(s, pos);
          if (den == 0) throw ParseError("zero denominator", pos);
        }
        return Elem(Rat(num, den));
      }
      case RingKind::Excision: {
        expect(s, pos, '(');
        Elem r = base_->parse_at(s, pos);
        expect(s, pos, ',');
        Elem i = base_->parse_at(s, pos);
        expect(s, pos, ')');
        return normalize(Elem(std::vector<Elem>{r, i}));
      }
      case RingKind::Quotient:
        if (!is_polynomial_like()) return normalize(Elem(parse_int(s, pos)));
        [[fallthrough]];
      default: {
        const Ring& k = coeff_ring();
        expect(s, pos, '[');
        std::vector<Elem> c;
        if (peek(s, pos, ']')) {
          ++pos;
          return normalize(Elem(std::move(c)));
        }
        while (true) {
          Elem coef = k.parse_at(s, pos);
          int deg = 0;
          if (peek(s, pos, '@')) {
            ++pos;
            Int d = parse_int(s, pos);
            if (d < 0 || d > 100000) throw ParseError("bad degree", pos);
            deg = static_cast<int>(d);
          }
          if (static_cast<int>(c.size()) <= deg) c.resize(deg + 1, k.zero());
          c[deg] = k.add(c[deg], coef);
          if (peek(s, pos, ',')) {
            ++pos;
            continue;
          }
          expect(s, pos, ']');
          break;
        }
        return normalize(Elem(std::move(c)));
      }
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), start);
  }
}

Elem Ring::parse(std::string_view text) const {
  std::size_t pos = 0;
  Elem e = parse_at(text, pos);
  skip_ws(text, pos);
  if (pos != text.size()) throw ParseError("trailing characters", pos);
  return e;
}

RingPtr parse_descriptor_at(std::string_view s, std::size_t& pos) {
  skip_ws(s, pos);
  std::size_t start = pos;
  std::string id = parse_ident(s, pos);
  if (id == "Z") {
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      std::size_t at = pos;
      Int n = parse_int(s, pos);
      if (n < 2) throw ParseError("modulus must be >= 2", at);
      return Ring::integers_mod(n);
    }
    return Ring::integers();
  }
  if (id == "Q") return Ring::rationals();
  if (id == "poly") {
    expect(s, pos, '(');
    RingPtr base = parse_descriptor_at(s, pos);
    expect(s, pos, ';');
    std::size_t at = pos;
    std::string var = parse_ident(s, pos);
    if (var.empty()) throw ParseError("expected variable name", at);
    expect(s, pos, ')');
    try {
      return Ring::poly(base, var);
    } catch (const Error& e) {
      throw ParseError(e.what(), start);
    }
  }
  if (id == "quotient") {
    expect(s, pos, '(');
    RingPtr base = parse_descriptor_at(s, pos);
    expect(s, pos, ';');
    std::size_t at = pos;
    Elem m = base->parse_at(s, pos);
    expect(s, pos, ')');
    try {
      return Ring::quotient(base, m);
    } catch (const Error& e) {
      throw ParseError(e.what(), at);
    }
  }
  if (id == "graded") {
    expect(s, pos, '(');
    RingPtr base = parse_descriptor_at(s, pos);
    expect(s, pos, ';');
    std::vector<std::pair<Elem, int>> gens;
    while (true) {
      skip_ws(s, pos);
      std::size_t at = pos;
      Elem c = base->parse_at(s, pos);
      expect(s, pos, '@');
      Int d = parse_int(s, pos);
      if (base->is_zero(c)) throw ParseError("zero coefficient generator", at);
      if (d < 1 || d > 10000) throw ParseError("generator degree must be >= 1", at);
      gens.emplace_back(c, static_cast<int>(d));
      if (peek(s, pos, ',')) {
        ++pos;
        continue;
      }
      expect(s, pos, ')');
      break;
    }
    try {
      return Ring::graded(base, gens);
    } catch (const Error& e) {
      throw ParseError(e.what(), start);
    }
  }
  if (id == "excision") {
    expect(s, pos, '(');
    RingPtr base = parse_descriptor_at(s, pos);
    expect(s, pos, ';');
    std::vector<Elem> gens;
    while (true) {
      gens.push_back(base->parse_at(s, pos));
      if (peek(s, pos, ',')) {
        ++pos;
        continue;
      }
      expect(s, pos, ')');
      break;
    }
    try {
      return Ring::excision(base, gens);
    } catch (const Error& e) {
      throw ParseError(e.what(), start);
    }
  }
  throw ParseError("unknown ring descriptor '" + id + "'", start);
}

RingPtr parse_descriptor(std::string_view text) {
  std::size_t pos = 0;
  RingPtr r = parse_descriptor_at(text, pos);
  skip_ws(text, pos);
  if (pos != text.size()) throw ParseError("trailing characters", pos);
  return r;
}

// ------------------------------------------------------------- finiteness

bool Ring::is_finite() const { return cardinality().has_value(); }

std::optional<std::uint64_t> Ring::cardinality() const {
  switch (kind_) {
    case RingKind::IntegersMod:
      return static_cast<std::uint64_t>(n_);
    case RingKind::Quotient: {
      if (!is_polynomial_like()) return static_cast<std::uint64_t>(n_);
      auto q = coeff_ring().cardinality();
      if (!q) return std::nullopt;
      std::uint64_t total = 1;
      for (int i = 0; i < base_->degree(modulus_); ++i) {
        if (total > (1ull << 32) / *q) return std::nullopt;
        total *= *q;
      }
      return total;
    }
    case RingKind::Excision: {
      auto q = base_->cardinality();
      if (!q) return std::nullopt;
      return *q * ideal_elements({base_, ideal_gens_}).size();
    }
    default:
      return std::nullopt;
  }
}

std::vector<Elem> Ring::elements() const {
  auto card = cardinality();
  if (!card) throw Unsupported("ring " + name() + " is not finite");
  std::vector<Elem> out;
  switch (kind_) {
    case RingKind::Excision: {
      auto bs = base_->elements();
      auto is = ideal_elements({base_, ideal_gens_});
      for (const auto& r : bs)
        for (const auto& i : is) out.push_back(Elem(std::vector<Elem>{r, i}));
      return out;
    }
    case RingKind::Quotient:
      if (is_polynomial_like()) {
        auto ks = coeff_ring().elements();
        int d = base_->degree(modulus_);
        std::vector<std::size_t> digit(d, 0);
        for (std::uint64_t idx = 0; idx < *card; ++idx) {
          std::vector<Elem> c(d);
          for (int i = 0; i < d; ++i) c[i] = ks[digit[i]];
          trim(c, coeff_ring().zero());
          out.push_back(Elem(std::move(c)));
          for (int i = 0; i < d; ++i) {
            if (++digit[i] < ks.size()) break;
            digit[i] = 0;
          }
        }
        return out;
      }
      [[fallthrough]];
    default:
      for (std::uint64_t i = 0; i < *card; ++i) out.push_back(Elem(Int(i)));
      return out;
  }
}

// ----------------------------------------------------------- RingElement

namespace {
void require_same(const RingElement& a, const RingElement& b) {
  if (!a.ring()->same(*b.ring()))
    throw DescriptorMismatch(a.ring()->name() + " vs " + b.ring()->name());
}
}  // namespace

RingElement operator+(const RingElement& a, const RingElement& b) {
  require_same(a, b);
  return RingElement(a.ring_, a.ring_->add(a.v_, b.v_));
}
RingElement operator-(const RingElement& a, const RingElement& b) {
  require_same(a, b);
  return RingElement(a.ring_, a.ring_->sub(a.v_, b.v_));
}
RingElement operator*(const RingElement& a, const RingElement& b) {
  require_same(a, b);
  return RingElement(a.ring_, a.ring_->mul(a.v_, b.v_));
}
RingElement operator-(const RingElement& a) { return RingElement(a.ring_, a.ring_->neg(a.v_)); }
bool operator==(const RingElement& a, const RingElement& b) {
  require_same(a, b);
  return a.v_ == b.v_;
}

std::variant<RingElement, bool> ring_arith(ArithOp op, const RingElement& x,
                                           const RingElement& y) {
  switch (op) {
    case ArithOp::Add:
      return x + y;
    case ArithOp::Mul:
      return x * y;
    case ArithOp::Neg:
      require_same(x, y);
      return -x;
    case ArithOp::Eq:
      return x == y;
  }
  return false;
}

// --------------------------------------------------------- excision maps

Elem excision_map(const Ring& exc, ExcisionMap which, const Elem& x) {
  const Ring& b = *exc.base();
  switch (which) {
    case ExcisionMap::Pi:
      return b.add(x.list()[0], x.list()[1]);
    case ExcisionMap::Epsilon:
      return x.list()[0];
    case ExcisionMap::Iota:
      return Elem(std::vector<Elem>{b.normalize(x), b.zero()});
    case ExcisionMap::FiberIso:
      return Elem(std::vector<Elem>{x.list()[0], b.add(x.list()[0], x.list()[1])});
  }
  return x;
}

}  // namespace unirow
