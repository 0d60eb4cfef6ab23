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

#include "unirow/rows.hpp"

#include "lex.hpp"
#include "unirow/orbit.hpp"

namespace unirow {

namespace {

ELetter rel(int i, int j, Elem lambda) { return conjugate<Elem>({}, EGen{i, j, std::move(lambda)}); }

Elem dot_ring(const Ring& R, const std::vector<Elem>& a, const std::vector<Elem>& b) {
  return dot(R, a, b);
}

std::vector<Elem> e1(const Ring& R, std::size_t n) {
  std::vector<Elem> v(n, R.zero());
  v[0] = R.one();
  return v;
}

// Least N with x^N = 0, or 0 when none is found within the cap.
int nilpotency_index(const Ring& R, const Elem& x, int cap = 64) {
  Elem p = x;
  for (int k = 1; k <= cap; ++k) {
    if (R.is_zero(p)) return k;
    p = R.mul(p, x);
  }
  return 0;
}

// sum_{k<N} (-x)^k, the truncated inverse of 1 + x.
Elem truncated_inverse(const Ring& R, const Elem& x, int N) {
  Elem u = R.zero();
  Elem p = R.one();
  const Elem m = R.neg(x);
  for (int k = 0; k < N; ++k) {
    u = R.add(u, p);
    p = R.mul(p, m);
  }
  return u;
}

// Clears v_2..v_n against the near-unit v_1 with approximate inverse u,
// then turns v_1 into 1 up to the error of u. Every letter is relative
// when v = e_1 mod I and 1 + x = v_1 with u (1 + x) = 1 mod I^N.
EWord unipotent_word(const Ring& R, std::vector<Elem> cur, const Elem& u) {
  EWord word;
  auto push = [&](ELetter l) {
    apply_word_in_place(R, cur, nullptr, EWord{l});
    word.push_back(std::move(l));
  };
  for (std::size_t j = 1; j < cur.size(); ++j)
    if (!R.is_zero(cur[j])) push(rel(0, static_cast<int>(j), R.neg(R.mul(u, cur[j]))));
  if (!R.is_one(cur[0])) {
    const Elem x = R.sub(cur[0], R.one());
    push(conjugate<Elem>({EGen{1, 0, R.one()}}, EGen{0, 1, R.mul(x, u)}));
    if (!R.is_zero(cur[1])) push(rel(0, 1, R.neg(cur[1])));
  }
  return word;
}

}  // namespace

// ------------------------------------------------------------------ rows

bool congruent_e1(const Ideal& I, const std::vector<Elem>& v) {
  const Ring& R = *I.ring;
  if (v.empty() || !in_ideal(I, R.sub(v[0], R.one()))) return false;
  for (std::size_t j = 1; j < v.size(); ++j)
    if (!in_ideal(I, v[j])) return false;
  return true;
}

UnimodularRow make_row(const RingPtr& R, std::vector<Elem> v, const std::optional<Ideal>& relative) {
  if (v.size() < 2) throw PreconditionError("rows need length at least 2");
  for (const auto& x : v) R->check(x);
  Membership m = ideal_membership(Ideal{R, v}, R->one());
  if (m.status == MembershipStatus::NotMember) throw NotUnimodular("coordinates do not generate the unit ideal");
  if (m.status == MembershipStatus::Undecided) throw Undecided("unimodularity witness search exhausted its budget");
  UnimodularRow row{R, std::move(v), std::move(m.coeffs), std::nullopt};
  if (!row_valid(row)) throw Error("internal: witness does not verify");
  if (relative) {
    if (!congruent_e1(*relative, row.v)) throw PreconditionError("row is not congruent to e_1 modulo the ideal");
    row.relative = relative;
  }
  return row;
}

UnimodularRow row_with_witness(const RingPtr& R, std::vector<Elem> v, std::vector<Elem> w) {
  if (v.size() != w.size() || v.size() < 2) throw PreconditionError("row and witness lengths differ");
  for (const auto& x : v) R->check(x);
  for (const auto& x : w) R->check(x);
  UnimodularRow row{R, std::move(v), std::move(w), std::nullopt};
  if (!row_valid(row)) throw NotUnimodular("witness does not pair to 1");
  return row;
}

bool row_valid(const UnimodularRow& r) {
  return r.v.size() == r.w.size() && r.ring->is_one(dot_ring(*r.ring, r.v, r.w));
}

UnimodularRow apply_word(const UnimodularRow& row, const EWord& word) {
  if (!indices_valid(word, static_cast<int>(row.size()))) throw PreconditionError("word index out of range");
  UnimodularRow out = row;
  apply_word_in_place(*row.ring, out.v, &out.w, word);
  if (out.relative && !congruent_e1(*out.relative, out.v)) out.relative.reset();
  return out;
}

EWord inverse_word(const Ring& R, const EWord& word) { return inverse(R, word); }

bool is_relative(const EWord& word, const Ideal& I) {
  for (const auto& l : word)
    if (!l.conjugated || !in_ideal(I, l.inner.lambda)) return false;
  return true;
}

bool matrix_congruent_identity(const EWord& word, const Ideal& I, std::size_t n) {
  const Ring& R = *I.ring;
  auto M = matrix_of(R, n, word);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Elem d = i == j ? R.sub(M(i, j), R.one()) : M(i, j);
      if (!in_ideal(I, d)) return false;
    }
  return true;
}

// ---------------------------------------------------------- certificates

bool verify_certificate(const EquivalenceCertificate& c) {
  const auto& src = c.source;
  const auto& dst = c.target;
  if (!src.ring || !dst.ring || !src.ring->same(*dst.ring)) return false;
  const Ring& R = *src.ring;
  const std::size_t n = src.size();
  if (dst.size() != n || src.w.size() != n || dst.w.size() != n) return false;
  if (!indices_valid(c.word, static_cast<int>(n))) return false;
  if (!row_valid(src) || !row_valid(dst)) return false;
  auto M = matrix_of(R, n, c.word);
  auto Minv = matrix_of(R, n, inverse(R, c.word));
  if (multiply(R, M, Minv) != identity(R, n)) return false;
  if (row_times(R, src.v, M) != dst.v) return false;
  if (row_times(R, src.w, transpose(Minv)) != dst.w) return false;
  if (c.relative) {
    if (!is_relative(c.word, *c.relative)) return false;
    if (!matrix_congruent_identity(c.word, *c.relative, n)) return false;
  }
  return true;
}

EquivalenceCertificate certify(const UnimodularRow& source, const EWord& word,
                               const std::optional<Ideal>& relative) {
  EquivalenceCertificate c{source, apply_word(source, word), word, relative};
  if (!verify_certificate(c)) throw Error("internal: certificate does not verify");
  return c;
}

// ------------------------------------------------------------ text forms

namespace {

std::string print_gen(const Ring& R, const EGen& g) {
  return "E(" + std::to_string(g.i + 1) + "," + std::to_string(g.j + 1) + ";" + R.print(g.lambda) + ")";
}

EGen parse_gen(const Ring& R, std::string_view s, std::size_t& pos) {
  lex::skip_ws(s, pos);
  if (pos >= s.size() || s[pos] != 'E') throw ParseError("expected 'E'", pos);
  ++pos;
  lex::expect(s, pos, '(');
  std::size_t at = pos;
  Int i = lex::parse_int(s, pos);
  lex::expect(s, pos, ',');
  Int j = lex::parse_int(s, pos);
  lex::expect(s, pos, ';');
  Elem lambda = R.parse_at(s, pos);
  lex::expect(s, pos, ')');
  if (i < 1 || j < 1 || i > 4096 || j > 4096 || i == j) throw ParseError("bad generator indices", at);
  return EGen{static_cast<int>(i) - 1, static_cast<int>(j) - 1, lambda};
}

}  // namespace

std::string print_word(const Ring& R, const EWord& word) {
  if (word.empty()) return "id";
  std::string out;
  for (const auto& l : word) {
    if (!out.empty()) out += " ";
    if (!l.conjugated) {
      out += print_gen(R, l.inner);
      continue;
    }
    out += "C[";
    for (std::size_t k = 0; k < l.outer.size(); ++k) {
      if (k) out += " ";
      out += print_gen(R, l.outer[k]);
    }
    out += "]{" + print_gen(R, l.inner) + "}";
  }
  return out;
}

EWord parse_word(const Ring& R, std::string_view s) {
  std::size_t pos = 0;
  lex::skip_ws(s, pos);
  EWord word;
  if (s.substr(pos, 2) == "id") {
    pos += 2;
    lex::skip_ws(s, pos);
    if (pos != s.size()) throw ParseError("trailing characters", pos);
    return word;
  }
  while (true) {
    lex::skip_ws(s, pos);
    if (pos >= s.size()) break;
    if (s[pos] == 'E') {
      EGen g = parse_gen(R, s, pos);
      word.push_back(ELetter{{}, g, false});
    } else if (s[pos] == 'C') {
      ++pos;
      lex::expect(s, pos, '[');
      std::vector<EGen> outer;
      while (!lex::peek(s, pos, ']')) outer.push_back(parse_gen(R, s, pos));
      ++pos;
      lex::expect(s, pos, '{');
      EGen inner = parse_gen(R, s, pos);
      lex::expect(s, pos, '}');
      word.push_back(ELetter{std::move(outer), inner, true});
    } else {
      throw ParseError("expected letter", pos);
    }
  }
  if (word.empty()) throw ParseError("empty word (write 'id')", pos);
  return word;
}

std::string print_vector(const Ring& R, const std::vector<Elem>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ", ";
    out += R.print(v[k]);
  }
  return out;
}

std::string print_row(const UnimodularRow& r) {
  return "[" + print_vector(*r.ring, r.v) + " | " + print_vector(*r.ring, r.w) + "]";
}

UnimodularRow parse_row(const RingPtr& R, std::string_view s) {
  std::size_t pos = 0;
  lex::expect(s, pos, '[');
  std::vector<Elem> v, w;
  auto list = [&](std::vector<Elem>& out, char stop) {
    while (true) {
      out.push_back(R->parse_at(s, pos));
      if (lex::peek(s, pos, ',')) {
        ++pos;
        continue;
      }
      lex::expect(s, pos, stop);
      return;
    }
  };
  list(v, '|');
  list(w, ']');
  lex::skip_ws(s, pos);
  if (pos != s.size()) throw ParseError("trailing characters", pos);
  return row_with_witness(R, std::move(v), std::move(w));
}

// ------------------------------------------------------ row manipulation

EquivalenceCertificate nil_reduce(const UnimodularRow& row, const Ideal& I, const SearchBudget& budget) {
  const Ring& R = *row.ring;
  const std::size_t n = row.size();
  if (n < 3) throw PreconditionError("nil_reduce needs length at least 3");
  const Elem x = R.sub(row.v[0], R.one());
  const int N = nilpotency_index(R, x);
  if (N == 0) throw NotUnipotent("first coordinate is not 1 plus a nilpotent");
  if (!congruent_e1(I, row.v)) throw PreconditionError("row is not congruent to e_1 modulo the ideal");
  if (row.v == e1(R, n)) return certify(row, {}, I);

  EWord word = unipotent_word(R, row.v, truncated_inverse(R, x, N));
  UnimodularRow out = apply_word(row, word);
  if (out.v != e1(R, n)) {
    // Not reached for exact inverses; kept as the search fallback.
    if (!R.is_finite()) throw BudgetExhausted("direct reduction failed on an infinite ring");
    auto found = bfs_word(row.ring, row.v, e1(R, n), I, budget.nodes);
    if (!found) throw BudgetExhausted("relative search budget exhausted");
    word = *found;
  }
  return certify(row, word, I);
}

ScaleResult scale_last_by_unit_square(const UnimodularRow& row, const Elem& t, const Ideal& I,
                                      const SearchBudget& budget) {
  const RingPtr& Rp = row.ring;
  const Ring& R = *Rp;
  const std::size_t n = row.size();
  if (n < 3) throw PreconditionError("scaling needs length at least 3");
  if (!in_ideal(I, t)) throw PreconditionError("t is not in the ideal");

  // s with t s = 1 modulo (v_0, ..., v_{n-3}).
  std::vector<Elem> gens{t};
  for (std::size_t k = 0; k + 2 < n; ++k) gens.push_back(row.v[k]);
  Membership m = ideal_membership(Ideal{Rp, gens}, R.one());
  if (!m.member()) throw NoUnitWitness("no inverse of t modulo the leading coordinates");
  const Elem s = m.coeffs[0];

  std::vector<Elem> target = row.v;
  target.back() = R.mul(R.mul(t, t), target.back());
  const bool relative = congruent_e1(I, row.v);
  std::optional<Ideal> rel_ideal = relative ? std::optional<Ideal>(I) : std::nullopt;
  if (target == row.v) return {certify(row, {}, rel_ideal), s};

  // Direct route: the change of the last coordinate as a combination of
  // the other coordinates, with coefficients in I when relative.
  const int last = static_cast<int>(n - 1);
  const Elem delta = R.sub(target.back(), row.v.back());
  std::vector<Elem> span;
  std::vector<std::pair<int, Elem>> tags;
  for (int k = 0; k < last; ++k) {
    if (relative) {
      for (const auto& g : I.gens) {
        span.push_back(R.mul(g, row.v[k]));
        tags.emplace_back(k, g);
      }
    } else {
      span.push_back(row.v[k]);
      tags.emplace_back(k, R.one());
    }
  }
  Membership d = ideal_membership(Ideal{Rp, span}, delta);
  EWord word;
  if (d.member()) {
    for (std::size_t q = 0; q < span.size(); ++q) {
      if (R.is_zero(d.coeffs[q])) continue;
      Elem lambda = R.mul(d.coeffs[q], tags[q].second);
      word.push_back(relative ? rel(tags[q].first, last, lambda) : plain(tags[q].first, last, lambda));
    }
  } else if (R.is_finite()) {
    auto found = bfs_word(Rp, row.v, target, rel_ideal, budget.nodes);
    if (!found) throw BudgetExhausted("search for the scaling word exhausted its budget");
    word = *found;
  } else {
    throw BudgetExhausted("no direct scaling word and the ring is infinite");
  }
  return {certify(row, word, rel_ideal), s};
}

EquivalenceCertificate pthick(const UnimodularRow& row, const Ideal& I, int N) {
  const Ring& R = *row.ring;
  const std::size_t n = row.size();
  if (n < 3) throw PreconditionError("pthick needs length at least 3");
  if (N < 1) throw PreconditionError("N must be positive");
  if (!congruent_e1(I, row.v)) throw PreconditionError("row is not congruent to e_1 modulo the ideal");
  if (N == 1 || row.v == e1(R, n)) return certify(row, {}, I);

  const Elem x = R.sub(row.v[0], R.one());
  EWord word = unipotent_word(R, row.v, truncated_inverse(R, x, N));
  EquivalenceCertificate c = certify(row, word, I);
  const Ideal IN = ideal_power(I, N);
  for (std::size_t j = 0; j < n; ++j) {
    Elem r = j == 0 ? R.sub(c.target.v[0], R.one()) : c.target.v[j];
    Membership m = ideal_membership(IN, r);
    if (m.status == MembershipStatus::Undecided) throw Unsupported("no normal form for the ideal power");
    if (!m.member()) throw Error("internal: residual outside the ideal power");
  }
  return c;
}

UnimodularRow power_row(const UnimodularRow& row, int k) {
  if (k < 1) throw PreconditionError("k must be positive");
  const Ring& R = *row.ring;
  if (k == 1) return row;
  // 1 = (v_1 w_1 + s)^k = v_1^k w_1^k + s P with
  // P = sum_{m<k} C(k, m) (v_1 w_1)^m s^{k-1-m}.
  const Elem a = R.mul(row.v[0], row.w[0]);
  Elem s = R.zero();
  for (std::size_t i = 1; i < row.size(); ++i) s = R.add(s, R.mul(row.v[i], row.w[i]));
  Elem P = R.zero();
  Int binom = 1;
  for (int m = 0; m < k; ++m) {
    P = R.add(P, R.mul(R.from_int(binom), R.mul(R.pow(a, m), R.pow(s, k - 1 - m))));
    binom = binom * (k - m) / (m + 1);
  }
  UnimodularRow out = row;
  out.v[0] = R.pow(row.v[0], k);
  out.w[0] = R.pow(row.w[0], k);
  for (std::size_t i = 1; i < row.size(); ++i) out.w[i] = R.mul(row.w[i], P);
  if (!row_valid(out)) throw Error("internal: power witness does not verify");
  if (out.relative && !congruent_e1(*out.relative, out.v)) out.relative.reset();
  return out;
}

}  // namespace unirow
