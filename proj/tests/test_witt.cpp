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

#include "doctest.h"
#include "support.hpp"
#include "unirow/witt.hpp"

using namespace unirow;
using unirow::testing::random_elem;
using unirow::testing::leibniz_det;
using unirow::testing::matching_pf;
using unirow::testing::Rng;

namespace {

RingPtr P(const char* s) { return parse_descriptor(s); }
Elem I(long x) { return Elem(Int(x)); }

AlternatingMatrix random_alt(const RingPtr& ring, Rng& rng, std::size_t n) {
  AlternatingMatrix m(ring, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, random_elem(*ring, rng, 5, 1));
  return m;
}

EWord random_word(const Ring& R, Rng& rng, int n, int len) {
  EWord w;
  std::uniform_int_distribution<int> idx(0, n - 1);
  for (int k = 0; k < len; ++k) {
    int i = idx(rng), j = idx(rng);
    while (j == i) j = idx(rng);
    w.push_back(plain(i, j, random_elem(R, rng, 3, 1)));
  }
  return w;
}

// Random a, b with a . b = 1 over R: a random row, then a witness found
// by membership. Rows that are not unimodular are redrawn.
std::pair<std::vector<Elem>, std::vector<Elem>> random_witnessed(const RingPtr& ring, Rng& rng) {
  const Ring& R = *ring;
  for (;;) {
    auto a = unirow::testing::random_vec(R, rng, 3, 7, 1);
    auto m = ideal_membership(Ideal{ring, a}, R.one());
    if (m.member()) return {a, m.coeffs};
  }
}

}  // namespace

TEST_CASE("pfaffian examples") {
  auto Z = P("Z");
  CHECK(pfaffian(psi(Z, 1)) == I(1));
  for (std::size_t r = 0; r <= 4; ++r) CHECK(pfaffian(psi(Z, r)) == I(1));
  CHECK(perp(psi(Z, 1), psi(Z, 1)) == psi(Z, 2));
  CHECK(perp(psi(Z, 2), AlternatingMatrix(Z, 0)) == psi(Z, 2));
  CHECK(pfaffian(perp(psi(Z, 2), psi(Z, 1))) == I(1));
  CHECK(print_matrix(*Z, psi(Z, 1).dense()) == "2x2 [[0, 1], [-1, 0]]");
}

TEST_CASE("pfaffian of a generic 4x4 matrix") {
  auto Z = P("Z");
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    auto m = random_alt(Z, rng, 4);
    const Ring& R = *Z;
    Elem f = R.add(R.sub(R.mul(m.at(0, 1), m.at(2, 3)), R.mul(m.at(0, 2), m.at(1, 3))), R.mul(m.at(0, 3), m.at(1, 2)));
    CHECK(pfaffian(m) == f);
  }
}

TEST_CASE("pfaffian squared is the determinant") {
  Rng rng(12);
  for (const char* d : {"Z", "Z/9", "poly(Z;t)", "Q"}) {
    auto ring = P(d);
    const Ring& R = *ring;
    for (std::size_t n : {2, 4, 6})
      for (int t = 0; t < 40; ++t) {
        auto m = random_alt(ring, rng, n);
        Elem pf = pfaffian(m);
        CHECK(pf == matching_pf(R, m));
        CHECK(R.mul(pf, pf) == leibniz_det(R, m.dense()));
        CHECK(det(R, m.dense()) == leibniz_det(R, m.dense()));
      }
  }
}

TEST_CASE("pfaffian is multiplicative over perp") {
  Rng rng(13);
  auto Z = P("Z");
  for (int t = 0; t < 100; ++t) {
    auto a = random_alt(Z, rng, 2), b = random_alt(Z, rng, 4);
    CHECK(pfaffian(perp(a, b)) == Z->mul(pfaffian(a), pfaffian(b)));
  }
}

TEST_CASE("alternating structure is enforced") {
  auto Z = P("Z");
  CHECK_THROWS_AS(AlternatingMatrix(Z, 3), SizeMismatch);
  Dense<Elem> m(2, 2, I(0));
  m(0, 1) = I(2);
  m(1, 0) = I(2);
  CHECK_THROWS_AS(AlternatingMatrix::from_dense(Z, m), InvalidElement);
  m(1, 0) = I(-2);
  CHECK(AlternatingMatrix::from_dense(Z, m).at(1, 0) == I(-2));
  m(0, 0) = I(1);
  CHECK_THROWS_AS(AlternatingMatrix::from_dense(Z, m), InvalidElement);
  AlternatingMatrix a(Z, 2);
  CHECK_THROWS_AS(a.set(1, 1, I(1)), InvalidElement);
  a.set(1, 0, I(3));
  CHECK(a.at(0, 1) == I(-3));
}

TEST_CASE("vaserstein matrix") {
  auto Z = P("Z");
  auto V = vaserstein_V(Z, {I(1), I(0), I(0)}, {I(1), I(0), I(0)});
  CHECK(print_matrix(*Z, V.dense()) == "4x4 [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]");
  CHECK(pfaffian(V) == I(1));
  CHECK_THROWS_AS(vaserstein_V(Z, {I(2), I(0), I(0)}, {I(1), I(0), I(0)}), WitnessMismatch);
  CHECK_THROWS_AS(vaserstein_V(Z, {I(1), I(0)}, {I(1), I(0)}), SizeMismatch);

  // First row is (0, -b1, -b2, -b3).
  auto W = vaserstein_V(Z, {I(5), I(2), I(4)}, {I(1), I(-2), I(0)});
  CHECK(W.at(0, 1) == I(-1));
  CHECK(W.at(0, 2) == I(2));
  CHECK(W.at(0, 3) == I(0));
}

TEST_CASE("vaserstein matrices have pfaffian one") {
  Rng rng(14);
  for (const char* d : {"Z", "Z/5", "Z/7", "Z/9", "Q", "poly(Z/3;t)"}) {
    auto ring = P(d);
    for (int t = 0; t < 200; ++t) {
      auto [a, b] = random_witnessed(ring, rng);
      auto V = vaserstein_V(ring, a, b);
      CHECK(pfaffian(V) == ring->one());
      CHECK(matching_pf(*ring, V) == ring->one());
    }
  }
}

TEST_CASE("pfaffian is invariant under elementary congruence") {
  Rng rng(15);
  for (const char* d : {"Z", "Z/9"}) {
    auto ring = P(d);
    for (int t = 0; t < 100; ++t) {
      std::size_t n = t % 2 ? 4 : 6;
      auto m = random_alt(ring, rng, n);
      auto eps = random_word(*ring, rng, static_cast<int>(n), 4);
      CHECK(pfaffian(congruence(m, eps)) == pfaffian(m));
    }
  }
}

TEST_CASE("witt certificates") {
  auto Z = P("Z");
  Rng rng(16);
  auto V = vaserstein_V(Z, {I(5), I(2), I(4)}, {I(1), I(-2), I(0)});
  CHECK(witt_verify(V, V, {}, 0));
  CHECK(witt_verify(psi(Z, 2), psi(Z, 1), {}, 0));
  CHECK(witt_verify(psi(Z, 2), psi(Z, 1), {}, 2));
  CHECK_FALSE(witt_verify(V, psi(Z, 2), {}, 0));
  CHECK_THROWS_AS(witt_verify(V, V, {plain(0, 9, I(1))}, 0), SizeMismatch);

  int forged_rejected = 0;
  for (int t = 0; t < 200; ++t) {
    // A word on the first block leaves the padding untouched.
    auto eps = random_word(*Z, rng, 4, 3);
    auto beta = congruence(V, eps);
    REQUIRE(witt_verify(V, beta, eps, 0));
    // Letters reaching into the padding that cancel out.
    EWord padded = eps;
    padded.push_back(plain(0, 5, I(3)));
    padded.push_back(plain(0, 5, I(-3)));
    CHECK(witt_verify(V, beta, padded, 0));

    auto forged = eps;
    std::size_t k = static_cast<std::size_t>(t) % forged.size();
    forged[k].inner.lambda = Z->add(forged[k].inner.lambda, I(1));
    bool same = congruence(perp(V, psi(Z, 2)), forged) == perp(beta, psi(Z, 2));
    CHECK(witt_verify(V, beta, forged, 0) == same);
    forged_rejected += !same;
  }
  CHECK(forged_rejected > 150);
}

TEST_CASE("length-3 completion examples") {
  auto Z = P("Z");
  const Ring& R = *Z;
  auto id = suslin_complete3(Z, I(1), I(0), I(0));
  CHECK(det(R, id) == I(1));
  CHECK(id(0, 0) == I(1));
  CHECK(id(0, 1) == I(0));
  CHECK(id(0, 2) == I(0));
  CHECK(print_matrix(R, id) == "3x3 [[1, 0, 0], [0, 1, 0], [0, 0, 1]]");

  auto m = suslin_complete3(Z, I(0), I(0), I(1));
  CHECK(det(R, m) == I(1));
  CHECK(m(0, 2) == I(1));

  auto row = make_row(Z, {I(5), I(2), I(4)});
  auto s = suslin_complete3_row(row, I(2));
  CHECK(leibniz_det(R, s) == I(1));
  CHECK(s(0, 0) == I(5));
  CHECK(s(0, 1) == I(2));
  CHECK(s(0, 2) == I(4));
  CHECK_THROWS_AS(suslin_complete3_row(row, I(3)), NotASquarePresentation);
  CHECK_THROWS_AS(suslin_complete3(Z, I(2), I(4), I(2)), NotUnimodular);
  CHECK_THROWS_AS(suslin_complete3(Z, I(5), I(2), I(2), {I(1), I(1), I(1)}), WitnessMismatch);
  CHECK(parse_matrix(R, print_matrix(R, s)) == s);
}

TEST_CASE("length-3 completion on random rows") {
  Rng rng(17);
  for (const char* d : {"Z", "Z/6", "Z/9", "Z/12", "Z/7"}) {
    auto ring = P(d);
    const Ring& R = *ring;
    int done = 0;
    while (done < 300) {
      Elem a = random_elem(R, rng, 40, 1), b = random_elem(R, rng, 40, 1), c = random_elem(R, rng, 12, 1);
      auto m = ideal_membership(Ideal{ring, {a, b, R.mul(c, c)}}, R.one());
      if (!m.member()) continue;
      auto M = suslin_complete3(ring, a, b, c, m.coeffs);
      CHECK(leibniz_det(R, M) == R.one());
      CHECK(M(0, 0) == R.normalize(a));
      CHECK(M(0, 1) == R.normalize(b));
      CHECK(M(0, 2) == R.mul(c, c));
      ++done;
    }
  }
}

TEST_CASE("matrix text rejects malformed input") {
  auto Z = P("Z");
  CHECK_THROWS_AS(parse_matrix(*Z, "2x2 [[0, 1]]"), ParseError);
  CHECK_THROWS_AS(parse_matrix(*Z, "1x1 [[0]] x"), ParseError);
  CHECK(parse_matrix(*Z, "0x0 []").rows() == 0);
}
