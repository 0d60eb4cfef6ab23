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

// Group law on elementary orbits of unimodular rows. Classes are carried
// by representatives; equalities between classes are carried by words.

#ifndef UNIROW_VDK_HPP_
#define UNIROW_VDK_HPP_

#include <optional>
#include <string>

#include "unirow/rows.hpp"

namespace unirow {

struct ShapeMismatch : Error {
  using Error::Error;
};

// A representative row; its relative ideal is the ambient one.
using OrbitClassRep = UnimodularRow;

// x = (a, a_1, ..., a_d), y = (b, a_1, ..., a_d) and a p = 1 mod
// (a_1, ..., a_d) give (a(b + p) - 1, a_1(b + p), a_2, ..., a_d). p
// defaults to the first witness coordinate of x.
OrbitClassRep vdk_product(const OrbitClassRep& x, const OrbitClassRep& y,
                          const std::optional<Elem>& p = std::nullopt);

// [(b, a_1, ...)] [(a'^2, a_1, ...)] = [(b a'^2, a_1, ...)].
OrbitClassRep vdk_square_product(const OrbitClassRep& y, const Elem& a_prime);

// r with r^2 = a, over Z and finite rings; nullopt elsewhere or when a is
// not a square.
std::optional<Elem> square_root(const Ring& R, const Elem& a);

struct CommonShape {
  EquivalenceCertificate x;  // x -> (a, a_1, ..., a_d)
  EquivalenceCertificate y;  // y -> (b, a_1, ..., a_d)
};

// Identity certificates when the tails already agree; otherwise a search
// over the orbit census on finite rings. BudgetExhausted elsewhere.
CommonShape common_shape(const OrbitClassRep& x, const OrbitClassRep& y,
                         const SearchBudget& budget = {});

// True when x and y lie in the same orbit according to the census
// (finite rings), with a certificate; nullopt when the census is not
// conclusive (relative partition not stabilized).
struct OrbitComparison {
  bool same = false;
  std::optional<EquivalenceCertificate> certificate;
};
std::optional<OrbitComparison> compare_orbits(const OrbitClassRep& x, const OrbitClassRep& y);

// Bounded search for a word from x to y with small parameters; works
// over any ring and never proves absence.
std::optional<EquivalenceCertificate> search_certificate(const OrbitClassRep& x,
                                                         const OrbitClassRep& y,
                                                         const SearchBudget& budget = {});

// k-fold product [x]^k through repeated common shapes.
OrbitClassRep vdk_power(const OrbitClassRep& x, int k, const SearchBudget& budget = {});

enum class Verdict { Confirmed, Inconclusive, Refuted };
std::string verdict_name(Verdict v);

struct GoodnessResult {
  Verdict verdict = Verdict::Inconclusive;
  std::string route;  // trivial, square, census, search, none
  UnimodularRow power;                  // the row (v_1^k, v_2, ..., v_n)
  std::optional<UnimodularRow> product;  // a representative of [x]^k
  std::optional<EquivalenceCertificate> certificate;  // power -> product
};

// Is [x^(k)] = [x]^k? Refuted only from an exhaustive finite census.
GoodnessResult goodness_experiment(const OrbitClassRep& x, int k, const SearchBudget& budget = {});

}  // namespace unirow

#endif  // UNIROW_VDK_HPP_
