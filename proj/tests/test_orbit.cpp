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

#include <chrono>
#include <numeric>

#include "doctest.h"
#include "unirow/orbit.hpp"
#include "unirow/rows.hpp"

using namespace unirow;

namespace {

RingPtr P(const char* s) { return parse_descriptor(s); }

// Unimodular rows of Z/m counted on machine integers: gcd(m, v) = 1.
long um_count_oracle(long m, int n) {
  long total = 1;
  for (int k = 0; k < n; ++k) total *= m;
  long count = 0;
  for (long code = 0; code < total; ++code) {
    long g = m, c = code;
    for (int k = 0; k < n; ++k) {
      g = std::gcd(g, c % m);
      c /= m;
    }
    if (g == 1) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("unimodular row counts") {
  CHECK(enumerate_um(FiniteRing(P("Z/2")), 3).size() == 7);
  CHECK(enumerate_um(FiniteRing(P("Z/4")), 2).size() == 12);
  CHECK(enumerate_um(FiniteRing(P("Z/2")), 2).size() == 3);
  for (long q : {2L, 3L, 5L})
    for (int n : {2, 3}) {
      long expect = 1;
      for (int k = 0; k < n; ++k) expect *= q;
      CHECK(static_cast<long>(enumerate_um(FiniteRing(Ring::integers_mod(q)), n).size()) == expect - 1);
    }
  for (long m : {4L, 6L, 8L, 9L, 12L}) {
    CHECK(static_cast<long>(enumerate_um(FiniteRing(Ring::integers_mod(m)), 2).size()) == um_count_oracle(m, 2));
    CHECK(static_cast<long>(enumerate_um(FiniteRing(Ring::integers_mod(m)), 3).size()) == um_count_oracle(m, 3));
  }
  // F_4 as (Z/2)[t]/(t^2 + t + 1).
  FiniteRing F4(P("quotient(poly(Z/2;t); [1, 1@1, 1@2])"));
  CHECK(enumerate_um(F4, 2).size() == 15);
  CHECK_THROWS_AS(enumerate_um(FiniteRing(Ring::integers_mod(2000)), 3), CapExceeded);
}

TEST_CASE("orbit censuses") {
  FiniteRing Z2(P("Z/2"));
  auto c = orbit_bfs(Z2, 3);
  CHECK(c.orbit_count == 1);
  CHECK(c.rows.size() == 7);
  CHECK(verify_closure(Z2, c));

  FiniteRing Z4(P("Z/4"));
  auto c4 = orbit_bfs(Z4, 2);
  CHECK(c4.orbit_count == 1);
  CHECK(c4.rows.size() == 12);
  CHECK(verify_closure(Z4, c4));

  auto rel0 = orbit_bfs(Z4, 3, Ideal{Z4.ring(), {Elem(0)}});
  CHECK(rel0.rows.size() == 1);
  CHECK(rel0.orbit_count == 1);

  auto rel2 = orbit_bfs(Z4, 3, Ideal{Z4.ring(), {Elem(2)}});
  CHECK(verify_closure(Z4, rel2));
  CHECK(rel2.stabilized);

  // Without conjugation the letters only generate E_n(I), whose orbits
  // are finer than those of the relative group; the exactness check sees it.
  for (auto [d, g, count] : std::vector<std::tuple<const char*, int, std::uint32_t>>{{"Z/4", 2, 2}, {"Z/9", 3, 3}}) {
    FiniteRing F(parse_descriptor(d));
    GeneratorConfig bare;
    bare.outer_length = 0;
    auto narrow = orbit_bfs(F, 3, Ideal{F.ring(), {Elem(g)}}, bare);
    CHECK(narrow.orbit_count == count);
    CHECK_FALSE(narrow.stabilized);
    GeneratorConfig one;
    one.outer_length = 1;
    auto full = orbit_bfs(F, 3, Ideal{F.ring(), {Elem(g)}}, one);
    CHECK(full.orbit_count == 1);
    CHECK(full.stabilized);
  }

  // Determinism.
  auto again = orbit_bfs(Z4, 2);
  CHECK(again.orbit == c4.orbit);
  CHECK(again.parent == c4.parent);
  CHECK(again.letter == c4.letter);
}

TEST_CASE("census of Um_3(Z/4) within a minute") {
  FiniteRing Z4(P("Z/4"));
  auto start = std::chrono::steady_clock::now();
  auto c = orbit_bfs(Z4, 3);
  CHECK(verify_closure(Z4, c));
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(secs < 60.0);
  CHECK(c.orbit_count == 1);
}

TEST_CASE("additive generators give the same partition") {
  for (const char* d : {"Z/4", "Z/6", "Z/9"}) {
    FiniteRing F(P(d));
    GeneratorConfig add;
    add.additive_only = true;
    auto a = orbit_bfs(F, 3);
    auto b = orbit_bfs(F, 3, std::nullopt, add);
    CHECK(a.orbit == b.orbit);
    CHECK(verify_closure(F, b));
  }
}

TEST_CASE("certificate paths") {
  FiniteRing Z2(P("Z/2"));
  auto c = orbit_bfs(Z2, 3);
  auto same = certificate_path(Z2, c, {Elem(1), Elem(1), Elem(0)}, {Elem(1), Elem(1), Elem(0)});
  REQUIRE(same);
  CHECK(same->empty());
  auto w = certificate_path(Z2, c, {Elem(1), Elem(1), Elem(0)}, {Elem(1), Elem(0), Elem(0)});
  REQUIRE(w);
  auto row = make_row(Z2.ring(), {Elem(1), Elem(1), Elem(0)});
  CHECK(verify_certificate(certify(row, *w)));
  CHECK(apply_word(row, *w).v == std::vector<Elem>{Elem(1), Elem(0), Elem(0)});
  CHECK_THROWS_AS(certificate_path(Z2, c, {Elem(0), Elem(0), Elem(0)}, {Elem(1), Elem(0), Elem(0)}), RowAbsent);

  // Restricting every lambda to zero-divisor 2 over Z/4 disconnects rows
  // whose first coordinate differs by a unit not reachable by 2-steps.
  FiniteRing Z4(P("Z/4"));
  GeneratorConfig cfg;
  cfg.lambda_subset = {Z4.index(Elem(2))};
  auto r = orbit_bfs(Z4, 2, std::nullopt, cfg);
  CHECK(r.orbit_count > 1);
  CHECK(verify_closure(Z4, r));
  CHECK(!certificate_path(Z4, r, {Elem(1), Elem(0)}, {Elem(3), Elem(0)}));

  // Every pair in a larger census.
  FiniteRing Z6(P("Z/6"));
  auto c6 = orbit_bfs(Z6, 2);
  for (std::size_t i = 0; i < c6.rows.size(); i += 5)
    for (std::size_t j = 0; j < c6.rows.size(); j += 7) {
      auto x = from_frow(Z6, c6.rows[i]), y = from_frow(Z6, c6.rows[j]);
      auto p = certificate_path(Z6, c6, x, y);
      REQUIRE(p);
      CHECK(verify_certificate(certify(make_row(Z6.ring(), x), *p)));
    }
}

TEST_CASE("census file round trip and tamper detection") {
  FiniteRing Z3(P("Z/3"));
  auto c = orbit_bfs(Z3, 2);
  std::string text = census_to_text(Z3, c);
  CHECK(text == census_to_text(Z3, orbit_bfs(Z3, 2)));
  CHECK(verify_census_text(text).empty());

  FiniteRing Z4(P("Z/4"));
  auto rel = orbit_bfs(Z4, 3, Ideal{Z4.ring(), {Elem(2)}});
  CHECK(verify_census_text(census_to_text(Z4, rel)).empty());

  std::string bad = text;
  auto pos = bad.find("L 0 E(1,2;1)");
  REQUIRE(pos != std::string::npos);
  bad.replace(pos, 12, "L 0 E(1,2;2)");
  CHECK(!verify_census_text(bad).empty());

  std::string bad2 = text;
  bad2.replace(bad2.rfind(" 0\n"), 3, " 7\n");
  CHECK(!verify_census_text(bad2).empty());
}

TEST_CASE("relative search fallback") {
  auto Z9 = P("Z/9");
  Ideal I{Z9, {Elem(3)}};
  auto w = bfs_word(Z9, {Elem(4), Elem(3), Elem(6)}, {Elem(1), Elem(0), Elem(0)}, I, 100000);
  REQUIRE(w);
  CHECK(is_relative(*w, I));
  auto row = make_row(Z9, {Elem(4), Elem(3), Elem(6)});
  CHECK(apply_word(row, *w).v == std::vector<Elem>{Elem(1), Elem(0), Elem(0)});
}
