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

// Shared random generators for the property tests.

#ifndef UNIROW_TESTS_SUPPORT_HPP_
#define UNIROW_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "unirow/dense.hpp"
#include "unirow/graded.hpp"
#include "unirow/ring.hpp"
#include "unirow/witt.hpp"

namespace unirow::testing {

using Rng = std::mt19937_64;

inline Int small_int(Rng& rng, int bound) {
  return Int(static_cast<long long>(std::uniform_int_distribution<int>(-bound, bound)(rng)));
}

// Random element of R; coefficients of size about bound, degree < deg.
inline Elem random_elem(const Ring& R, Rng& rng, int bound = 6, int deg = 4) {
  switch (R.kind()) {
    case RingKind::Integers:
    case RingKind::IntegersMod:
      return R.normalize(Elem(small_int(rng, bound)));
    case RingKind::Rationals: {
      Int d = 1 + std::uniform_int_distribution<int>(0, bound)(rng);
      return Elem(Rat(small_int(rng, bound), d));
    }
    case RingKind::Excision: {
      const Ring& b = *R.base();
      Elem i = b.zero();
      for (const auto& g : R.ideal_gens()) i = b.add(i, b.mul(random_elem(b, rng, bound, deg), g));
      return R.normalize(Elem(std::vector<Elem>{random_elem(b, rng, bound, deg), i}));
    }
    case RingKind::Graded: {
      const Ring& b = *R.base();
      std::vector<Elem> c;
      for (int i = 0; i < deg; ++i) {
        Elem x = b.zero();
        for (const auto& g : R.algebra().component(i)) x = b.add(x, b.mul(random_elem(b, rng, bound, deg), g));
        c.push_back(x);
      }
      return R.normalize(Elem(std::move(c)));
    }
    case RingKind::Quotient:
      if (!R.is_polynomial_like()) return R.normalize(Elem(small_int(rng, bound * 10)));
      [[fallthrough]];
    default: {
      const Ring& k = R.coeff_ring();
      std::vector<Elem> c;
      for (int i = 0; i < deg; ++i) c.push_back(random_elem(k, rng, bound, deg));
      return R.normalize(Elem(std::move(c)));
    }
  }
}

inline std::vector<Elem> random_vec(const Ring& R, Rng& rng, std::size_t n, int bound = 6, int deg = 3) {
  std::vector<Elem> v;
  for (std::size_t k = 0; k < n; ++k) v.push_back(random_elem(R, rng, bound, deg));
  return v;
}

// Leibniz determinant, independent of the library's elimination.
inline Elem leibniz_det(const Ring& R, const Dense<Elem>& m) {
  std::vector<int> p(m.rows());
  std::iota(p.begin(), p.end(), 0);
  Elem acc = R.zero();
  do {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
    Elem t = R.one();
    for (std::size_t i = 0; i < p.size(); ++i) t = R.mul(t, m(i, p[i]));
    acc = inv % 2 ? R.sub(acc, t) : R.add(acc, t);
  } while (std::next_permutation(p.begin(), p.end()));
  return acc;
}

// Pfaffian as a sum over perfect matchings with the crossing sign.
inline Elem matching_pf(const Ring& R, const AlternatingMatrix& m) {
  Elem acc = R.zero();
  std::vector<std::pair<int, int>> pairs;
  std::vector<bool> used(m.size(), false);
  auto rec = [&](auto&& self) -> void {
    int i = 0;
    while (i < static_cast<int>(m.size()) && used[i]) ++i;
    if (i == static_cast<int>(m.size())) {
      int cross = 0;
      for (auto [a, b] : pairs)
        for (auto [c, e] : pairs) cross += a < c && c < b && b < e;
      Elem t = R.one();
      for (auto [a, b] : pairs) t = R.mul(t, m.at(a, b));
      acc = cross % 2 ? R.sub(acc, t) : R.add(acc, t);
      return;
    }
    used[i] = true;
    for (int j = i + 1; j < static_cast<int>(m.size()); ++j) {
      if (used[j]) continue;
      used[j] = true;
      pairs.emplace_back(i, j);
      self(self);
      pairs.pop_back();
      used[j] = false;
    }
    used[i] = false;
  };
  rec(rec);
  return acc;
}

}  // namespace unirow::testing

#endif  // UNIROW_TESTS_SUPPORT_HPP_
