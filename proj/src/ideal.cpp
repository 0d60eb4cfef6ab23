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

#include <algorithm>
#include <set>

#include "lex.hpp"
#include "unirow/graded.hpp"
#include "unirow/ring.hpp"

namespace unirow {

namespace {

Membership member_with(std::vector<Elem> c) {
  Membership m;
  m.status = MembershipStatus::Member;
  m.coeffs = std::move(c);
  return m;
}

Membership not_member() {
  Membership m;
  m.status = MembershipStatus::NotMember;
  return m;
}

Membership undecided() { return Membership{}; }

bool is_field(const Ring& k) {
  if (k.kind() == RingKind::Rationals) return true;
  return k.is_residue_ring() && is_prime(k.modulus_int());
}

Elem field_inverse(const Ring& k, const Elem& x) {
  if (k.kind() == RingKind::Rationals) return Elem(Rat(1 / x.rational()));
  Int s, t;
  ext_gcd(x.integer(), k.modulus_int(), s, t);
  return k.normalize(Elem(s));
}

// Division with remainder in k[t] for a field k.
void poly_divmod(const Ring& P, const Elem& a, const Elem& b, Elem& q, Elem& r) {
  const Ring& k = P.coeff_ring();
  q = P.zero();
  r = a;
  int db = P.degree(b);
  Elem inv = field_inverse(k, P.leading(b));
  while (!P.is_zero(r) && P.degree(r) >= db) {
    Elem c = k.mul(P.leading(r), inv);
    Elem term = P.monomial(c, P.degree(r) - db);
    q = P.add(q, term);
    r = P.sub(r, P.mul(term, b));
  }
}

Membership poly_field_membership(const Ideal& I, const Elem& x) {
  const Ring& P = *I.ring;
  // Running gcd g with sum c_j gens_j = g.
  Elem g = P.zero();
  std::vector<Elem> c(I.gens.size(), P.zero());
  for (std::size_t j = 0; j < I.gens.size(); ++j) {
    // Extended Euclid on (g, gens_j).
    Elem r0 = g, r1 = I.gens[j];
    Elem s0 = P.one(), s1 = P.zero();  // coefficient of g
    Elem t0 = P.zero(), t1 = P.one();  // coefficient of gens_j
    while (!P.is_zero(r1)) {
      Elem q, r;
      poly_divmod(P, r0, r1, q, r);
      Elem s2 = P.sub(s0, P.mul(q, s1));
      Elem t2 = P.sub(t0, P.mul(q, t1));
      r0 = r1;
      r1 = r;
      s0 = s1;
      s1 = s2;
      t0 = t1;
      t1 = t2;
    }
    for (std::size_t i = 0; i < j; ++i) c[i] = P.mul(c[i], s0);
    c[j] = t0;
    g = r0;
  }
  if (P.is_zero(g)) return P.is_zero(x) ? member_with(c) : not_member();
  Elem q, r;
  poly_divmod(P, x, g, q, r);
  if (!P.is_zero(r)) return not_member();
  for (auto& e : c) e = P.mul(e, q);
  return member_with(c);
}

// A B-linear model of a ring: a list of multipliers m_k such that the
// ideal is spanned over B by m_k * gens_j, plus a coordinate map.
struct LinearModel {
  std::vector<Elem> multipliers;
  bool exact = false;  // true when the span is the whole ideal
};

std::vector<Int> int_coords(const Ring& R, const Elem& x, std::size_t len, const Int& d) {
  std::vector<Int> out(len, Int(0));
  if (R.kind() == RingKind::Excision) {
    out[0] = x.list()[0].integer();
    out[1] = x.list()[1].integer() / d;
    return out;
  }
  const auto& c = x.list();
  for (std::size_t i = 0; i < c.size() && i < len; ++i) out[i] = c[i].integer();
  return out;
}

Membership linear_membership(const Ideal& I, const Elem& x, const MembershipOptions& opt) {
  const Ring& R = *I.ring;
  const Ring* scalar = nullptr;
  LinearModel model;
  Int exc_d = 1;
  std::size_t len = 0;

  if (R.kind() == RingKind::Excision) {
    const Ring& b = *R.base();
    if (!(b.kind() == RingKind::Integers || b.is_residue_ring()))
      throw Unsupported("membership in " + R.name());
    scalar = &b;
    std::vector<Int> g;
    for (const auto& e : R.ideal_gens()) g.push_back(e.integer());
    if (b.is_residue_ring()) g.push_back(b.modulus_int());
    std::vector<Int> cc;
    exc_d = ext_gcd_list(g, cc);
    if (exc_d == 0) exc_d = 1;
    model.multipliers = {R.one(), R.normalize(Elem(std::vector<Elem>{b.zero(), b.from_int(exc_d)}))};
    model.exact = true;
    len = 2;
  } else {
    scalar = &R.coeff_ring();
    if (!(scalar->kind() == RingKind::Integers || scalar->is_residue_ring() ||
          scalar->kind() == RingKind::Rationals))
      throw Unsupported("membership in " + R.name());
    int maxdeg = R.degree(x);
    for (const auto& g : I.gens) maxdeg = std::max(maxdeg, R.degree(g));
    if (R.kind() == RingKind::Quotient) {
      int d = R.base()->degree(R.modulus_poly());
      for (int k = 0; k < d; ++k) model.multipliers.push_back(R.monomial(scalar->one(), k));
      model.exact = true;
      len = d;
    } else {
      int cap = maxdeg + opt.degree_slack;
      for (int k = 0; k <= cap; ++k) {
        if (R.kind() == RingKind::Graded) {
          for (const auto& c : R.algebra().component(k))
            if (!scalar->is_zero(c)) model.multipliers.push_back(R.monomial(c, k));
        } else {
          model.multipliers.push_back(R.monomial(scalar->one(), k));
        }
      }
      len = static_cast<std::size_t>(2 * cap + 2);
    }
  }

  const std::size_t nm = model.multipliers.size();
  const std::size_t cols = nm * I.gens.size();
  std::vector<Elem> products;
  products.reserve(cols);
  for (const auto& g : I.gens)
    for (const auto& m : model.multipliers) products.push_back(R.mul(m, g));

  std::vector<Elem> coeffs(I.gens.size(), R.zero());
  if (scalar->kind() == RingKind::Rationals) {
    RatSystem A;
    A.rows = len;
    A.cols = cols;
    A.a.assign(len * cols, Rat(0));
    for (std::size_t j = 0; j < cols; ++j) {
      const auto& c = products[j].list();
      for (std::size_t i = 0; i < c.size() && i < len; ++i) A.at(i, j) = c[i].rational();
    }
    std::vector<Rat> b(len, Rat(0));
    const auto& xc = x.list();
    for (std::size_t i = 0; i < xc.size() && i < len; ++i) b[i] = xc[i].rational();
    auto y = solve_rational(A, b);
    if (!y) return model.exact ? not_member() : undecided();
    for (std::size_t j = 0; j < I.gens.size(); ++j)
      for (std::size_t k = 0; k < nm; ++k) {
        const Rat& v = (*y)[j * nm + k];
        if (v != 0)
          coeffs[j] = R.add(coeffs[j], R.mul(R.monomial(Elem(v), 0), model.multipliers[k]));
      }
    return member_with(coeffs);
  }

  const bool modular = scalar->is_residue_ring();
  const Int n = modular ? scalar->modulus_int() : Int(0);
  Int exc_rel = 0;
  if (R.kind() == RingKind::Excision && modular) exc_rel = n / gcd(exc_d, n);
  std::size_t slack = 0;
  if (modular) slack = (R.kind() == RingKind::Excision) ? 2 : len;
  IntSystem A;
  A.rows = len;
  A.cols = cols + slack;
  A.a.assign(A.rows * A.cols, Int(0));
  for (std::size_t j = 0; j < cols; ++j) {
    auto v = int_coords(R, products[j], len, exc_d);
    for (std::size_t i = 0; i < len; ++i) A.at(i, j) = v[i];
  }
  if (modular) {
    if (R.kind() == RingKind::Excision) {
      A.at(0, cols) = n;
      A.at(1, cols + 1) = exc_rel;
    } else {
      for (std::size_t i = 0; i < len; ++i) A.at(i, cols + i) = n;
    }
  }
  auto b = int_coords(R, x, len, exc_d);
  auto y = solve_integer(A, b);
  if (!y) return model.exact ? not_member() : undecided();
  for (std::size_t j = 0; j < I.gens.size(); ++j)
    for (std::size_t k = 0; k < nm; ++k) {
      const Int& v = (*y)[j * nm + k];
      if (v != 0) coeffs[j] = R.add(coeffs[j], R.mul(R.from_int(v), model.multipliers[k]));
    }
  return member_with(coeffs);
}

}  // namespace

Membership ideal_membership(const Ideal& I, const Elem& x, const MembershipOptions& opt) {
  const Ring& R = *I.ring;
  if (R.is_zero(x)) return member_with(std::vector<Elem>(I.gens.size(), R.zero()));
  std::vector<std::size_t> nz;
  for (std::size_t j = 0; j < I.gens.size(); ++j)
    if (!R.is_zero(I.gens[j])) nz.push_back(j);
  if (nz.empty()) return not_member();

  Membership out;
  switch (R.kind()) {
    case RingKind::Integers:
    case RingKind::IntegersMod:
    case RingKind::Quotient:
      if (R.kind() == RingKind::Integers || R.is_residue_ring()) {
        std::vector<Int> g;
        for (const auto& e : I.gens) g.push_back(e.integer());
        if (R.is_residue_ring()) g.push_back(R.modulus_int());
        std::vector<Int> c;
        Int d = ext_gcd_list(g, c);
        if (x.integer() % d != 0) return not_member();
        Int q = x.integer() / d;
        std::vector<Elem> w;
        for (std::size_t j = 0; j < I.gens.size(); ++j) w.push_back(R.normalize(Elem(Int(c[j] * q))));
        out = member_with(w);
        break;
      }
      out = linear_membership(I, x, opt);
      break;
    case RingKind::Rationals: {
      std::vector<Elem> w(I.gens.size(), R.zero());
      w[nz[0]] = Elem(Rat(x.rational() / I.gens[nz[0]].rational()));
      out = member_with(w);
      break;
    }
    case RingKind::Poly:
      if (is_field(R.coeff_ring())) {
        out = poly_field_membership(I, x);
        break;
      }
      out = linear_membership(I, x, opt);
      break;
    case RingKind::Graded:
    case RingKind::Excision:
      out = linear_membership(I, x, opt);
      break;
  }
  if (out.member() && !verify_membership(I, x, out.coeffs))
    throw Error("internal: membership witness failed to re-verify");
  return out;
}

bool verify_membership(const Ideal& I, const Elem& x, const std::vector<Elem>& c) {
  const Ring& R = *I.ring;
  if (c.size() != I.gens.size()) return false;
  Elem s = R.zero();
  for (std::size_t j = 0; j < c.size(); ++j) s = R.add(s, R.mul(c[j], I.gens[j]));
  return s == x;
}

bool in_ideal(const Ideal& I, const Elem& x) {
  Membership m = ideal_membership(I, x);
  if (m.status == MembershipStatus::Undecided)
    throw Undecided("membership undecided in " + I.ring->name());
  return m.member();
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  const Ring& R = *I.ring;
  std::vector<Elem> g;
  std::set<Elem, ElemLess> seen;
  for (const auto& a : I.gens)
    for (const auto& b : J.gens) {
      Elem p = R.mul(a, b);
      if (R.is_zero(p) || seen.count(p)) continue;
      seen.insert(p);
      g.push_back(p);
    }
  if (g.empty()) g.push_back(R.zero());
  return {I.ring, g};
}

Ideal ideal_power(const Ideal& I, int k) {
  Ideal out{I.ring, {I.ring->one()}};
  for (int i = 0; i < k; ++i) out = ideal_product(out, I);
  return out;
}

std::vector<Elem> ideal_elements(const Ideal& I) {
  const Ring& R = *I.ring;
  auto all = R.elements();
  std::set<Elem, ElemLess> span{R.zero()};
  std::vector<Elem> steps;
  for (const auto& g : I.gens)
    for (const auto& r : all) {
      Elem p = R.mul(r, g);
      if (!R.is_zero(p)) steps.push_back(p);
    }
  std::vector<Elem> frontier{R.zero()};
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (const auto& s : frontier)
      for (const auto& d : steps) {
        Elem t = R.add(s, d);
        if (span.insert(t).second) next.push_back(t);
      }
    frontier = std::move(next);
  }
  std::vector<Elem> out;
  for (const auto& e : all)
    if (span.count(e)) out.push_back(e);
  return out;
}

namespace {

std::vector<Elem> minimal_generators(const RingPtr& R, const std::vector<Elem>& members) {
  std::vector<Elem> chosen;
  std::set<Elem, ElemLess> span{R->zero()};
  for (const auto& e : members) {
    if (span.count(e)) continue;
    chosen.push_back(e);
    auto now = ideal_elements({R, chosen});
    span = std::set<Elem, ElemLess>(now.begin(), now.end());
  }
  if (chosen.empty()) chosen.push_back(R->zero());
  return chosen;
}

}  // namespace

Ideal gamma_ideal(const Ideal& I) {
  const RingPtr& R = I.ring;
  if (!R->is_finite()) {
    if (ideal_membership(I, R->one()).member()) return {R, {R->zero()}};
    throw Unsupported("gamma ideal needs a finite ring: " + R->name());
  }
  auto all = R->elements();
  std::vector<Elem> prev;
  for (int n = 1;; ++n) {
    Ideal p = ideal_power(I, n);
    std::vector<Elem> ann;
    for (const auto& x : all) {
      bool kills = true;
      for (const auto& g : p.gens)
        if (!R->is_zero(R->mul(x, g))) {
          kills = false;
          break;
        }
      if (kills) ann.push_back(x);
    }
    if (n > 1 && ann == prev) break;
    prev = std::move(ann);
  }
  return {R, minimal_generators(R, prev)};
}

std::string print_ideal(const Ideal& I) {
  std::string s = "(";
  for (std::size_t i = 0; i < I.gens.size(); ++i) s += (i ? ", " : "") + I.ring->print(I.gens[i]);
  return s + ")";
}

Ideal parse_ideal(const RingPtr& R, std::string_view text) {
  std::size_t pos = 0;
  lex::expect(text, pos, '(');
  Ideal I{R, {}};
  while (!lex::peek(text, pos, ')')) {
    if (pos >= text.size()) throw ParseError("unterminated ideal", pos);
    I.gens.push_back(R->parse_at(text, pos));
    if (lex::peek(text, pos, ',')) ++pos;
  }
  ++pos;
  lex::skip_ws(text, pos);
  if (pos != text.size()) throw ParseError("trailing text after ideal", pos);
  return I;
}

}  // namespace unirow
