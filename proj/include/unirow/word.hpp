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

// Elementary words. M(e_ij(l)) has l at entry (i, j) and acts on row
// vectors from the right, so coordinate j gains l * v_i. Indices are
// zero-based in memory and one-based in text.

#ifndef UNIROW_WORD_HPP_
#define UNIROW_WORD_HPP_

#include <vector>

#include "unirow/dense.hpp"

namespace unirow {

template <class T>
struct Gen {
  int i = 0;
  int j = 1;
  T lambda{};
  friend bool operator==(const Gen&, const Gen&) = default;
};

// A plain generator, or the conjugated block outer * inner * outer^{-1}.
template <class T>
struct Letter {
  std::vector<Gen<T>> outer;
  Gen<T> inner;
  bool conjugated = false;
  friend bool operator==(const Letter&, const Letter&) = default;
};

template <class T>
using Word = std::vector<Letter<T>>;

template <class T>
Letter<T> plain(int i, int j, T lambda) {
  return Letter<T>{{}, Gen<T>{i, j, std::move(lambda)}, false};
}

template <class T>
Letter<T> conjugate(std::vector<Gen<T>> outer, Gen<T> inner) {
  return Letter<T>{std::move(outer), std::move(inner), true};
}

template <CommRing R>
Gen<typename R::value_type> inverse_gen(const R& r, const Gen<typename R::value_type>& g) {
  return {g.i, g.j, r.neg(g.lambda)};
}

// Flattens a letter into plain generators in application order.
template <CommRing R>
std::vector<Gen<typename R::value_type>> expand(const R& r,
                                                const Letter<typename R::value_type>& l) {
  std::vector<Gen<typename R::value_type>> out(l.outer.begin(), l.outer.end());
  out.push_back(l.inner);
  for (auto it = l.outer.rbegin(); it != l.outer.rend(); ++it) out.push_back(inverse_gen(r, *it));
  return out;
}

template <CommRing R>
Word<typename R::value_type> inverse(const R& r, const Word<typename R::value_type>& w) {
  Word<typename R::value_type> out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    Letter<typename R::value_type> l = *it;
    l.inner = inverse_gen(r, l.inner);
    out.push_back(std::move(l));
  }
  return out;
}

template <CommRing R>
void apply_gen(const R& r, std::vector<typename R::value_type>& v,
               const Gen<typename R::value_type>& g) {
  v[g.j] = r.add(v[g.j], r.mul(g.lambda, v[g.i]));
}

// Witness update w -> w * M(g)^{-T}: coordinate i loses lambda * w_j.
template <CommRing R>
void apply_gen_dual(const R& r, std::vector<typename R::value_type>& w,
                    const Gen<typename R::value_type>& g) {
  w[g.i] = r.add(w[g.i], r.neg(r.mul(g.lambda, w[g.j])));
}

template <CommRing R>
void apply_word_in_place(const R& r, std::vector<typename R::value_type>& v,
                         std::vector<typename R::value_type>* w,
                         const Word<typename R::value_type>& word) {
  for (const auto& l : word)
    for (const auto& g : expand(r, l)) {
      apply_gen(r, v, g);
      if (w) apply_gen_dual(r, *w, g);
    }
}

template <CommRing R>
Dense<typename R::value_type> gen_matrix(const R& r, std::size_t n,
                                         const Gen<typename R::value_type>& g) {
  auto m = identity(r, n);
  m(g.i, g.j) = g.lambda;
  return m;
}

// M(word) as an explicit product of generator matrices.
template <CommRing R>
Dense<typename R::value_type> matrix_of(const R& r, std::size_t n,
                                        const Word<typename R::value_type>& word) {
  auto m = identity(r, n);
  for (const auto& l : word)
    for (const auto& g : expand(r, l)) m = multiply(r, m, gen_matrix(r, n, g));
  return m;
}

template <class T>
bool indices_valid(const Word<T>& word, int n) {
  auto ok = [n](const Gen<T>& g) { return g.i >= 0 && g.j >= 0 && g.i < n && g.j < n && g.i != g.j; };
  for (const auto& l : word) {
    if (!ok(l.inner)) return false;
    for (const auto& g : l.outer)
      if (!ok(g)) return false;
  }
  return true;
}

}  // namespace unirow

#endif  // UNIROW_WORD_HPP_
