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

#ifndef UNIROW_ROWS_HPP_
#define UNIROW_ROWS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unirow/ring.hpp"
#include "unirow/word.hpp"

namespace unirow {

struct NotUnimodular : Error {
  using Error::Error;
};
struct NotUnipotent : Error {
  using Error::Error;
};
struct BudgetExhausted : Error {
  using Error::Error;
};
struct NoUnitWitness : Error {
  using Error::Error;
};
struct PreconditionError : Error {
  using Error::Error;
};

using EWord = Word<Elem>;
using ELetter = Letter<Elem>;
using EGen = Gen<Elem>;

struct UnimodularRow {
  RingPtr ring;
  std::vector<Elem> v;
  std::vector<Elem> w;
  std::optional<Ideal> relative;

  std::size_t size() const { return v.size(); }
};

// Finds a witness through ideal membership of 1. With an ideal, also
// checks v_1 - 1 and v_2, ..., v_n against it.
UnimodularRow make_row(const RingPtr& R, std::vector<Elem> v,
                       const std::optional<Ideal>& relative = std::nullopt);
// Wraps a row with a caller-supplied witness after checking sum v_i w_i = 1.
UnimodularRow row_with_witness(const RingPtr& R, std::vector<Elem> v, std::vector<Elem> w);
bool row_valid(const UnimodularRow& r);
// v == e_1 mod I, membership-checked.
bool congruent_e1(const Ideal& I, const std::vector<Elem>& v);

UnimodularRow apply_word(const UnimodularRow& row, const EWord& word);
EWord inverse_word(const Ring& R, const EWord& word);

// Every letter is a conjugated block, or a plain letter (empty outer word),
// with inner parameter in I.
bool is_relative(const EWord& word, const Ideal& I);
// M(word) - Id has all entries in I.
bool matrix_congruent_identity(const EWord& word, const Ideal& I, std::size_t n);

struct EquivalenceCertificate {
  UnimodularRow source;
  UnimodularRow target;
  EWord word;
  std::optional<Ideal> relative;  // set when the word is claimed I-relative
};

// Exact check by explicit matrix products: source * M = target, M times
// the matrix of the inverse word is the identity, target witness equals
// source witness * M^{-T}, and the relative claim holds syntactically.
bool verify_certificate(const EquivalenceCertificate& c);
// Certificate from applying word to source; target computed.
EquivalenceCertificate certify(const UnimodularRow& source, const EWord& word,
                               const std::optional<Ideal>& relative = std::nullopt);

std::string print_word(const Ring& R, const EWord& word);
EWord parse_word(const Ring& R, std::string_view text);
std::string print_row(const UnimodularRow& r);
std::string print_vector(const Ring& R, const std::vector<Elem>& v);
UnimodularRow parse_row(const RingPtr& R, std::string_view text);

struct SearchBudget {
  std::size_t nodes = 200000;  // BFS fallback node cap (finite rings only)
};

// Row with unipotent v_1 and v = e_1 mod I reduced to e_1 by an I-relative
// word.
EquivalenceCertificate nil_reduce(const UnimodularRow& row, const Ideal& I,
                                  const SearchBudget& budget = {});

struct ScaleResult {
  EquivalenceCertificate cert;
  Elem s;  // t s = 1 mod (v_0, ..., v_{n-2})
};
// (v_0, ..., v_{n-1}, v_n) to (v_0, ..., v_{n-1}, t^2 v_n). The word is
// I-relative whenever the row lies in Um(R, I); otherwise the certificate
// is absolute and flagged as such.
ScaleResult scale_last_by_unit_square(const UnimodularRow& row, const Elem& t, const Ideal& I,
                                      const SearchBudget& budget = {});

// Row = e_1 mod I moved to a row = e_1 mod I^N by an I-relative word.
EquivalenceCertificate pthick(const UnimodularRow& row, const Ideal& I, int N);

// (v_1^k, v_2, ..., v_n) with the witness from the binomial expansion of
// (sum v_i w_i)^k.
UnimodularRow power_row(const UnimodularRow& row, int k);

}  // namespace unirow

#endif  // UNIROW_ROWS_HPP_
