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
#include <numeric>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "unirow/graded.hpp"
#include "unirow/ring.hpp"

using namespace unirow;
using unirow::testing::random_elem;
using unirow::testing::Rng;

namespace {

RingPtr P(const char* s) { return parse_descriptor(s); }

// Annihilator-chain oracle for Z/n: Gamma_(g)(Z/n) as the set of x with
// x g^k = 0 for some k, computed on machine integers.
std::set<long> gamma_oracle(long n, long g) {
  std::set<long> out;
  for (long x = 0; x < n; ++x) {
    long p = x % n;
    for (int k = 0; k < 64; ++k) {
      if (p == 0) {
        out.insert(x);
        break;
      }
      p = (p * g) % n;
    }
  }
  return out;
}

std::set<long> ideal_set_mod(long n, const std::vector<Elem>& gens) {
  std::set<long> out;
  long g = n;
  for (const auto& e : gens) g = std::gcd(g, static_cast<long>(e.integer()));
  for (long x = 0; x < n; x += g) out.insert(x);
  return out;
}

// Numerical-semigroup gaps by direct enumeration of sums.
std::vector<int> gaps_oracle(const std::vector<int>& degs, int bound) {
  std::vector<char> rep(bound + 1, 0);
  rep[0] = 1;
  for (int v = 0; v <= bound; ++v)
    if (rep[v])
      for (int d : degs)
        if (v + d <= bound) rep[v + d] = 1;
  std::vector<int> gaps;
  for (int v = 1; v <= bound; ++v)
    if (!rep[v]) gaps.push_back(v);
  return gaps;
}

}  // namespace

TEST_CASE("ring arithmetic examples") {
  auto E = P("excision(Z; 6)");
  Elem a = E->parse("(1, 6)");
  CHECK(E->print(E->mul(a, a)) == "(1, 48)");
  CHECK(E->print(E->add(E->parse("(2, 6)"), E->parse("(3, -6)"))) == "(5, 0)");
  auto Z4 = P("Z/4");
  CHECK(Z4->print(Z4->mul(Z4->parse("3"), Z4->parse("3"))) == "1");
}

TEST_CASE("ring_arith checks descriptors") {
  RingElement x(P("Z/4"), Elem(3));
  RingElement y(P("Z/5"), Elem(3));
  CHECK_THROWS_AS(ring_arith(ArithOp::Add, x, y), DescriptorMismatch);
  auto r = ring_arith(ArithOp::Mul, x, x);
  CHECK(std::get<RingElement>(r).str() == "1");
  CHECK(std::get<bool>(ring_arith(ArithOp::Eq, x, x)));
}

TEST_CASE("ideal membership over Z against the gcd oracle") {
  auto Z = P("Z");
  Ideal I{Z, {Elem(6), Elem(10)}};
  Membership m = ideal_membership(I, Elem(2));
  REQUIRE(m.member());
  CHECK(6 * m.coeffs[0].integer() + 10 * m.coeffs[1].integer() == 2);
  CHECK(ideal_membership(I, Elem(1)).status == MembershipStatus::NotMember);
  Membership z = ideal_membership(I, Elem(0));
  REQUIRE(z.member());
  CHECK(verify_membership(I, Elem(0), z.coeffs));

  Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Elem> gens;
    long g = 0;
    for (int k = 0; k < 3; ++k) {
      Int x = unirow::testing::small_int(rng, 40);
      gens.push_back(Elem(x));
      g = std::gcd(g, std::abs(static_cast<long>(x)));
    }
    Int x = unirow::testing::small_int(rng, 60);
    Membership r = ideal_membership(Ideal{Z, gens}, Elem(x));
    bool expect = g == 0 ? x == 0 : static_cast<long>(x) % g == 0;
    CHECK(r.member() == expect);
    CHECK(r.status != MembershipStatus::Undecided);
    if (r.member()) CHECK(verify_membership(Ideal{Z, gens}, Elem(x), r.coeffs));
  }
}

TEST_CASE("membership witnesses always re-multiply") {
  Rng rng(5);
  for (const char* d : {"Z/12", "Q", "poly(Q;t)", "poly(Z/5;t)", "poly(Z;t)", "graded(Z; 2@1)",
                        "quotient(poly(Z;t); [1, 0@1, 1@2])", "excision(Z; 6)", "Z/9"}) {
    auto R = P(d);
    for (int trial = 0; trial < 60; ++trial) {
      Ideal I{R, {random_elem(*R, rng, 4, 3), random_elem(*R, rng, 4, 3)}};
      // Half of the targets are members by construction.
      Elem x = trial % 2 ? R->add(R->mul(random_elem(*R, rng, 3, 2), I.gens[0]),
                                  R->mul(random_elem(*R, rng, 3, 2), I.gens[1]))
                         : random_elem(*R, rng, 4, 3);
      Membership m = ideal_membership(I, x);
      if (m.member()) CHECK(verify_membership(I, x, m.coeffs));
      if (trial % 2 && m.status == MembershipStatus::NotMember) FAIL("constructed member reported absent in " << d);
    }
  }
}

TEST_CASE("polynomial membership over a field is decided") {
  auto R = P("poly(Q;t)");
  Ideal I{R, {R->parse("[-1, 1@2]"), R->parse("[1, 1@1]")}};  // (t^2 - 1, t + 1) = (t + 1)
  CHECK(ideal_membership(I, R->parse("[1, 1@1]")).member());
  CHECK(ideal_membership(I, R->parse("[1]")).status == MembershipStatus::NotMember);
}

TEST_CASE("gamma ideal") {
  auto Z8 = P("Z/8");
  Ideal g8 = gamma_ideal(Ideal{Z8, {Elem(2)}});
  CHECK(ideal_membership(g8, Z8->one()).member());

  auto Z6 = P("Z/6");
  Ideal g6 = gamma_ideal(Ideal{Z6, {Elem(2)}});
  CHECK(ideal_set_mod(6, g6.gens) == gamma_oracle(6, 2));
  CHECK(print_ideal(g6) == "(3)");

  for (long n : {12L, 18L, 20L, 27L, 30L})
    for (long g = 0; g < n; ++g) {
      auto R = Ring::integers_mod(n);
      Ideal G = gamma_ideal(Ideal{R, {Elem(Int(g))}});
      CHECK(ideal_set_mod(n, G.gens) == gamma_oracle(n, g));
    }
  CHECK(print_ideal(gamma_ideal(Ideal{Z6, {Elem(1)}})) == "(0)");
  CHECK_THROWS_AS(gamma_ideal(Ideal{P("poly(Z;t)"), {P("poly(Z;t)")->parse("[2]")}}), Unsupported);
}

TEST_CASE("graded components and semigroup") {
  auto A = P("graded(Z; 2@1)");
  CHECK(print_ideal(graded_component(A->algebra(), 3)) == "(8)");
  auto B = P("graded(Z; 1@2, 1@3)");
  CHECK(print_ideal(graded_component(B->algebra(), 1)) == "(0)");
  auto C = P("graded(Z; 2@1, 3@2)");
  CHECK(print_ideal(graded_component(C->algebra(), 2)) == "(4, 3)");
  CHECK(print_ideal(graded_component(C->algebra(), 0)) == "(1)");

  auto s23 = degree_semigroup(B->algebra());
  CHECK(s23.gcd == 1);
  CHECK(s23.conductor == 2);
  auto s46 = degree_semigroup(P("graded(Z; 1@4, 1@6)")->algebra());
  CHECK(s46.gcd == 2);
  CHECK(!s46.conductor);
  auto s357 = degree_semigroup(P("graded(Z; 1@3, 1@5, 1@7)")->algebra());
  CHECK(s357.conductor == 5);
  CHECK(gaps_oracle({3, 5, 7}, 40) == std::vector<int>{1, 2, 4});

  // Conductor against the gap oracle on many degree sets.
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> degs;
    std::vector<std::pair<Elem, int>> gens;
    for (int k = 0; k < 3; ++k) {
      int d = std::uniform_int_distribution<int>(1, 12)(rng);
      degs.push_back(d);
      gens.emplace_back(Elem(1), d);
    }
    GradedAlgebra G(Ring::integers(), gens);
    auto info = G.semigroup();
    int g = 0;
    for (int d : degs) g = std::gcd(g, d);
    CHECK(info.gcd == g);
    if (g == 1) {
      auto gaps = gaps_oracle(degs, 200);
      int expect = gaps.empty() ? 0 : gaps.back() + 1;
      CHECK(info.conductor == expect);
    }
  }
}

TEST_CASE("graded component multiplicativity") {
  for (const char* d : {"graded(Z; 2@1, 3@2)", "graded(Z; 1@2, 1@3)", "graded(Z/8; 2@1)", "graded(Z; 6@2, 10@3)"}) {
    auto A = P(d);
    const auto& G = A->algebra();
    for (int i = 0; i <= 5; ++i)
      for (int j = 0; j <= 5; ++j) {
        Ideal Iij = G.component_ideal(i + j);
        for (const auto& x : G.component(i))
          for (const auto& y : G.component(j)) CHECK(in_ideal(Iij, G.base()->mul(x, y)));
      }
  }
}

TEST_CASE("swan-weibel examples and diagram") {
  auto A = P("graded(Z; 2@1)");
  auto T = swan_weibel_target(A);
  CHECK(T->print(swan_weibel(A, A->parse("[5]"))) == "[[5]]");
  Elem a = A->parse("[3, 2@1, 4@2]");
  CHECK(T->print(swan_weibel(A, a)) == "[[3], [2@1]@1, [4@2]@2]");
  CHECK(swan_weibel_phi(A, swan_weibel(A, A->parse("[3, 2@1]")), 1) == A->parse("[3, 2@1]"));

  Rng rng(9);
  for (const char* d : {"graded(Z; 2@1)", "graded(Z; 1@2, 1@3)", "graded(Z/8; 2@1)", "graded(Z; 2@1, 3@2)",
                        "graded(Z/12; 3@1, 2@2)", "graded(Q; 1@2, 1@5)"}) {
    auto G = P(d);
    for (int trial = 0; trial < 200; ++trial) {
      Elem x = random_elem(*G, rng, 9, 6);
      Elem p = swan_weibel(G, x);
      CHECK(swan_weibel_phi(G, p, 1) == x);
      CHECK(swan_weibel_phi(G, p, 0) == graded_iota(G, graded_eta(G, x)));
    }
  }
}

TEST_CASE("excision maps") {
  auto E = P("excision(Z; 6)");
  CHECK(excision_map(*E, ExcisionMap::Pi, E->parse("(2, 6)")) == Elem(8));
  auto F = P("excision(Z; 12)");
  CHECK(excision_map(*F, ExcisionMap::Epsilon, F->parse("(5, 12)")) == Elem(5));
  Elem f = excision_map(*E, ExcisionMap::FiberIso, E->parse("(1, 6)"));
  CHECK(f.list()[0] == Elem(1));
  CHECK(f.list()[1] == Elem(7));
}

TEST_CASE("excision ring axioms and homomorphisms") {
  Rng rng(21);
  for (const char* d : {"excision(Z; 6)", "excision(Z/12; 4)", "excision(poly(Z;t); [2, 1@1])"}) {
    auto E = P(d);
    const Ring& b = *E->base();
    for (int trial = 0; trial < 10000; ++trial) {
      Elem x = random_elem(*E, rng, 20, 2), y = random_elem(*E, rng, 20, 2), z = random_elem(*E, rng, 20, 2);
      CHECK(E->mul(E->mul(x, y), z) == E->mul(x, E->mul(y, z)));
      CHECK(E->mul(x, E->add(y, z)) == E->add(E->mul(x, y), E->mul(x, z)));
      CHECK(E->mul(x, y) == E->mul(y, x));
      auto pi = [&](const Elem& e) { return excision_map(*E, ExcisionMap::Pi, e); };
      auto eps = [&](const Elem& e) { return excision_map(*E, ExcisionMap::Epsilon, e); };
      CHECK(pi(E->mul(x, y)) == b.mul(pi(x), pi(y)));
      CHECK(pi(E->add(x, y)) == b.add(pi(x), pi(y)));
      CHECK(eps(E->mul(x, y)) == b.mul(eps(x), eps(y)));
      Elem r = eps(x);
      CHECK(eps(excision_map(*E, ExcisionMap::Iota, r)) == r);
      // fiber_iso lands in {(r, s) : r = s mod I} and is injective.
      Elem f = excision_map(*E, ExcisionMap::FiberIso, x);
      CHECK(in_ideal(Ideal{E->base(), E->ideal_gens()}, b.sub(f.list()[1], f.list()[0])));
    }
  }
}

TEST_CASE("canonical forms and text round trip") {
  Rng rng(2);
  for (const char* d : {"Z", "Z/4", "Q", "poly(Z;t)", "poly(Z/7;x)", "quotient(poly(Q;t); [1, 1@3])",
                        "quotient(Z; 10)", "graded(Z; 2@1, 3@2)", "excision(Z; 6)", "excision(Z/9; 3)",
                        "graded(Z/8; 2@1)"}) {
    auto R = P(d);
    CHECK(R->name() == d);
    CHECK(parse_descriptor(R->name())->name() == R->name());
    for (int trial = 0; trial < 200; ++trial) {
      Elem x = random_elem(*R, rng, 7, 4);
      CHECK(R->normalize(R->normalize(x)) == R->normalize(x));
      CHECK(R->parse(R->print(x)) == x);
      CHECK(R->print(R->parse(R->print(x))) == R->print(x));
    }
  }
}

TEST_CASE("descriptor parse errors") {
  CHECK(P("graded(Z; 2@1)")->name() == "graded(Z; 2@1)");
  CHECK(P("excision(Z; 6)")->name() == "excision(Z; 6)");
  try {
    parse_descriptor("graded(Z; 0@1)");
    FAIL("accepted a zero coefficient generator");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("zero coefficient generator") != std::string::npos);
    CHECK(e.position == 10);
  }
  CHECK_THROWS_AS(parse_descriptor("Z/1"), ParseError);
  CHECK_THROWS_AS(parse_descriptor("quotient(poly(Z;t); [1, 2@1])"), ParseError);
  CHECK_THROWS_AS(parse_descriptor("poly(poly(poly(Z;t);u);v)"), ParseError);
  CHECK_THROWS_AS(P("graded(Z; 2@1)")->parse("[1, 1@1]"), ParseError);
}
