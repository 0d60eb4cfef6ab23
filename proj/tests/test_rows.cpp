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

#include <deque>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "unirow/rows.hpp"

using namespace unirow;
using unirow::testing::random_elem;
using unirow::testing::Rng;

namespace {

RingPtr P(const char* s) { return parse_descriptor(s); }

std::vector<Elem> ints(std::initializer_list<long> xs) {
  std::vector<Elem> v;
  for (long x : xs) v.push_back(Elem(Int(x)));
  return v;
}

// Reachability of e_1 from v in Z/m under e_ij(q), q in (g), and their
// conjugates by single letters e_kl(r), by a breadth-first search on
// machine integers.
bool reaches_e1_mod(long m, long g, std::vector<long> v) {
  const int n = static_cast<int>(v.size());
  auto step = [m](std::vector<long>& x, int i, int j, long l) { x[j] = ((x[j] + l * x[i]) % m + m) % m; };
  std::set<std::vector<long>> seen{v};
  std::deque<std::vector<long>> queue{v};
  std::vector<long> goal(n, 0);
  goal[0] = 1;
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    if (cur == goal) return true;
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l)
        for (long r = 0; r < m; ++r) {
          if (k == l && r) continue;
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
              if (i != j)
                for (long q = g; q < m; q += g) {
                  auto nxt = cur;
                  if (k != l) step(nxt, k, l, r);
                  step(nxt, i, j, q);
                  if (k != l) step(nxt, k, l, m - r);
                  if (seen.insert(nxt).second) queue.push_back(nxt);
                }
        }
  }
  return false;
}

EWord random_word(const Ring& R, Rng& rng, int n, int len) {
  EWord w;
  std::uniform_int_distribution<int> idx(0, n - 1);
  for (int k = 0; k < len; ++k) {
    int i = idx(rng), j = idx(rng);
    while (j == i) j = idx(rng);
    Elem l = random_elem(R, rng, 3, 2);
    if (k % 3 == 2) {
      int a = idx(rng), b = idx(rng);
      while (b == a) b = idx(rng);
      w.push_back(conjugate<Elem>({EGen{a, b, random_elem(R, rng, 3, 2)}}, EGen{i, j, l}));
    } else {
      w.push_back(plain(i, j, l));
    }
  }
  return w;
}

}  // namespace

TEST_CASE("make_row examples") {
  auto Z = P("Z");
  auto r = make_row(Z, ints({1, 0, 0}));
  CHECK(r.w == ints({1, 0, 0}));
  auto s = make_row(Z, ints({6, 10, 15}));
  CHECK(row_valid(s));
  CHECK_THROWS_AS(make_row(Z, ints({2, 4})), NotUnimodular);
  auto Z4 = P("Z/4");
  CHECK_THROWS_AS(make_row(Z4, ints({3, 1, 2}), Ideal{Z4, {Elem(2)}}), PreconditionError);
  CHECK(make_row(Z4, ints({3, 2, 2}), Ideal{Z4, {Elem(2)}}).relative.has_value());
}

TEST_CASE("apply_word examples and convention") {
  auto Z = P("Z");
  auto r = make_row(Z, ints({3, 2}));
  auto out = apply_word(r, EWord{plain(1, 0, Elem(-1))});
  CHECK(out.v == ints({1, 2}));
  CHECK(row_valid(out));
  CHECK(apply_word(r, {}).v == r.v);
  auto s = make_row(Z, ints({6, 10, 15}));
  CHECK(apply_word(s, EWord{plain(0, 2, Elem(1)), plain(0, 2, Elem(-1))}).v == s.v);
}

TEST_CASE("word and row text round trip") {
  auto Z = P("Z");
  EWord w{plain(0, 2, Elem(5)), conjugate<Elem>({EGen{1, 0, Elem(1)}}, EGen{0, 1, Elem(-2)})};
  std::string text = print_word(*Z, w);
  CHECK(text == "E(1,3;5) C[E(2,1;1)]{E(1,2;-2)}");
  CHECK(parse_word(*Z, text) == w);
  CHECK(print_word(*Z, {}) == "id");
  CHECK(parse_word(*Z, "id").empty());
  auto r = make_row(Z, ints({6, 10, 15}));
  CHECK(print_row(parse_row(Z, print_row(r))) == print_row(r));
  CHECK_THROWS_AS(parse_word(*Z, "E(1,1;2)"), ParseError);
  CHECK_THROWS_AS(parse_row(Z, "[2, 4 | 0, 0]"), NotUnimodular);

  auto T = P("poly(Z;t)");
  EWord pw{plain(1, 0, T->parse("[1, 2@1]"))};
  CHECK(parse_word(*T, print_word(*T, pw)) == pw);
}

TEST_CASE("certificate soundness on random words") {
  Rng rng(17);
  for (const char* d : {"Z", "Z/12", "poly(Z;t)", "excision(Z; 6)", "graded(Z; 2@1)"}) {
    auto R = P(d);
    for (int trial = 0; trial < 200; ++trial) {
      auto row = make_row(R, std::vector<Elem>{R->one(), random_elem(*R, rng), random_elem(*R, rng)});
      row = apply_word(row, random_word(*R, rng, 3, 3));
      EWord w = random_word(*R, rng, 3, 4);
      auto c = certify(row, w);
      CHECK(verify_certificate(c));
      CHECK(row_valid(c.target));
      CHECK(apply_word(c.target, inverse_word(*R, w)).v == row.v);
      CHECK(apply_word(c.target, inverse_word(*R, w)).w == row.w);
      // A mutated letter passes only when it acts identically on the row.
      auto bad = c;
      bad.word[0].inner.lambda = R->add(bad.word[0].inner.lambda, R->one());
      auto moved = apply_word(row, bad.word);
      CHECK(verify_certificate(bad) == (moved.v == c.target.v && moved.w == c.target.w));
    }
  }
}

TEST_CASE("relative syntax implies congruence to the identity") {
  Rng rng(4);
  auto R = P("Z/12");
  Ideal I{R, {Elem(3)}};
  for (int trial = 0; trial < 200; ++trial) {
    EWord w;
    for (int k = 0; k < 4; ++k) {
      Elem q = R->mul(Elem(3), random_elem(*R, rng));
      w.push_back(conjugate<Elem>({EGen{k % 3, (k + 1) % 3, random_elem(*R, rng)}}, EGen{(k + 2) % 3, k % 3, q}));
    }
    CHECK(is_relative(w, I));
    CHECK(matrix_congruent_identity(w, I, 3));
  }
}

TEST_CASE("nil_reduce") {
  auto Z4 = P("Z/4");
  Ideal I{Z4, {Elem(2)}};
  auto e = make_row(Z4, ints({1, 0, 0}));
  CHECK(nil_reduce(e, I).word.empty());

  CHECK(reaches_e1_mod(4, 2, {3, 2, 2}));
  auto c = nil_reduce(make_row(Z4, ints({3, 2, 2})), I);
  CHECK(c.target.v == ints({1, 0, 0}));
  CHECK(verify_certificate(c));
  CHECK(is_relative(c.word, I));

  auto Z8 = P("Z/8");
  Ideal I8{Z8, {Elem(2)}};
  CHECK(reaches_e1_mod(8, 2, {1, 4, 0}));
  auto c8 = nil_reduce(make_row(Z8, ints({1, 4, 0})), I8);
  CHECK(c8.target.v == ints({1, 0, 0}));
  CHECK(is_relative(c8.word, I8));

  CHECK_THROWS_AS(nil_reduce(make_row(P("Z"), ints({3, 2, 2})), Ideal{P("Z"), {Elem(2)}}), NotUnipotent);

  // Every unipotent relative row of Z/8, Z/9 and (Z/4)[t]/(t^2).
  for (const char* d : {"Z/8", "Z/9", "quotient(poly(Z/4;t); [0, 0@1, 1@2])"}) {
    auto R = P(d);
    Ideal J{R, {R->is_polynomial_like() ? R->parse("[2, 1@1]") : Elem(d[2] == '9' ? 3 : 2)}};
    for (const auto& a : ideal_elements(J))
      for (const auto& b : ideal_elements(J))
        for (const auto& x : ideal_elements(J)) {
          auto row = make_row(R, {R->add(R->one(), x), a, b}, J);
          auto cert = nil_reduce(row, J);
          CHECK(verify_certificate(cert));
          CHECK(cert.target.v == std::vector<Elem>{R->one(), R->zero(), R->zero()});
        }
  }
}

TEST_CASE("scale_last_by_unit_square") {
  auto Z = P("Z");
  Ideal I2{Z, {Elem(2)}};
  auto r = make_row(Z, ints({1, 0, 5}));
  CHECK_THROWS_AS(scale_last_by_unit_square(r, Elem(3), I2), PreconditionError);

  Ideal I1{Z, {Elem(1)}};
  auto one = scale_last_by_unit_square(make_row(Z, ints({3, 4, 5})), Elem(1), I1);
  CHECK(one.cert.target.v == ints({3, 4, 5}));

  auto Z9 = P("Z/9");
  Ideal I3{Z9, {Elem(3)}};
  auto res = scale_last_by_unit_square(make_row(Z9, ints({4, 3, 1})), Elem(3), I3);
  CHECK(res.cert.target.v == ints({4, 3, 0}));
  CHECK(verify_certificate(res.cert));
  CHECK(!res.cert.relative.has_value());

  // Relative rows of Z/9 and Z/8: the word is relative and verifies.
  for (const char* d : {"Z/9", "Z/8"}) {
    auto R = P(d);
    const long m = d[2] == '9' ? 3 : 2;
    Ideal J{R, {Elem(Int(m))}};
    for (const auto& a : ideal_elements(J))
      for (const auto& b : ideal_elements(J))
        for (const auto& t : ideal_elements(J)) {
          auto row = make_row(R, {R->add(R->one(), a), b, R->mul(Elem(Int(m)), b)}, J);
          try {
            auto out = scale_last_by_unit_square(row, t, J);
            CHECK(verify_certificate(out.cert));
            CHECK(out.cert.relative.has_value());
            CHECK(out.cert.target.v.back() == R->mul(R->mul(t, t), row.v.back()));
          } catch (const NoUnitWitness&) {
            CHECK(!ideal_membership(Ideal{R, {t, row.v[0]}}, R->one()).member());
          }
        }
  }
}

TEST_CASE("pthick") {
  auto Z = P("Z");
  Ideal I{Z, {Elem(2)}};
  auto row = make_row(Z, ints({3, 2, 2}), I);
  CHECK(pthick(row, I, 1).word.empty());
  CHECK(pthick(make_row(Z, ints({1, 0, 0})), I, 5).word.empty());
  auto c = pthick(row, I, 2);
  CHECK(verify_certificate(c));
  const auto& v = c.target.v;
  CHECK((v[0].integer() - 1) % 4 == 0);
  CHECK(v[1].integer() % 4 == 0);
  CHECK(v[2].integer() % 4 == 0);

  Rng rng(8);
  auto T = P("poly(Z;t)");
  Ideal J{T, {T->parse("[2]"), T->parse("[0, 1@1]")}};
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Elem> v;
    Elem x = T->add(T->mul(Elem(std::vector<Elem>{Elem(2)}), random_elem(*T, rng, 2, 2)),
                    T->mul(T->parse("[0, 1@1]"), random_elem(*T, rng, 2, 2)));
    v.push_back(T->add(T->one(), x));
    for (int k = 0; k < 2; ++k) v.push_back(T->mul(T->parse("[0, 1@1]"), random_elem(*T, rng, 2, 2)));
    std::vector<Elem> w;
    try {
      auto r = make_row(T, v, J);
      for (int N : {2, 3}) {
        auto cert = pthick(r, J, N);
        CHECK(verify_certificate(cert));
      }
    } catch (const NotUnimodular&) {
    } catch (const Undecided&) {
    }
  }
}

TEST_CASE("power_row") {
  auto Z = P("Z");
  auto r = make_row(Z, ints({2, 3, 5}));
  CHECK(power_row(r, 1).v == r.v);
  auto p = power_row(r, 2);
  CHECK(p.v == ints({4, 3, 5}));
  CHECK(row_valid(p));
  Rng rng(1);
  for (const char* d : {"Z/12", "poly(Z;t)", "excision(Z; 6)"}) {
    auto R = P(d);
    for (int trial = 0; trial < 100; ++trial) {
      auto row = make_row(R, {R->one(), random_elem(*R, rng), random_elem(*R, rng)});
      row = apply_word(row, random_word(*R, rng, 3, 3));
      for (int k = 1; k <= 4; ++k) {
        auto q = power_row(row, k);
        CHECK(row_valid(q));
        CHECK(q.v[0] == R->pow(row.v[0], k));
      }
    }
  }
}
