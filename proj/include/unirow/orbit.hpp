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

#ifndef UNIROW_ORBIT_HPP_
#define UNIROW_ORBIT_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "unirow/ring.hpp"
#include "unirow/word.hpp"

namespace unirow {

struct CapExceeded : Error {
  using Error::Error;
};
struct RowAbsent : Error {
  using Error::Error;
};
struct HypothesisViolated : Error {
  using Error::Error;
};

// Lookup-table model of a finite ring. Elements are indices into the
// canonical element order of the descriptor.
class FiniteRing {
 public:
  using value_type = std::uint32_t;

  explicit FiniteRing(RingPtr ring, std::uint32_t cap = 4096);

  const RingPtr& ring() const { return ring_; }
  std::uint32_t size() const { return q_; }
  value_type zero() const { return zero_; }
  value_type one() const { return one_; }
  value_type add(value_type a, value_type b) const { return add_[a * q_ + b]; }
  value_type mul(value_type a, value_type b) const { return mul_[a * q_ + b]; }
  value_type neg(value_type a) const { return neg_[a]; }
  bool is_unit(value_type a) const { return unit_[a] != 0; }
  const Elem& elem(value_type a) const { return elems_[a]; }
  value_type index(const Elem& e) const;

  // Element set of the ideal generated by gens, as a membership mask.
  std::vector<char> ideal_mask(const std::vector<value_type>& gens) const;

 private:
  RingPtr ring_;
  std::uint32_t q_ = 0;
  value_type zero_ = 0, one_ = 0;
  std::vector<Elem> elems_;
  std::map<Elem, value_type, ElemLess> index_;
  std::vector<value_type> add_, mul_, neg_;
  std::vector<char> unit_;
};

using FRow = std::vector<std::uint32_t>;
using FLetter = Letter<std::uint32_t>;
using FWord = Word<std::uint32_t>;

struct EnumerateOptions {
  std::uint64_t cap = 0;  // 0 = default (1e4 elements for n = 2, 1e3 for n = 3)
};

// All rows of Um_n(R), or of Um_n(R, I) when relative is set, in
// lexicographic order of element indices.
std::vector<FRow> enumerate_um(const FiniteRing& F, int n,
                               const std::optional<Ideal>& relative = std::nullopt,
                               const EnumerateOptions& opt = {});

struct GeneratorConfig {
  bool relative = false;
  int outer_length = 2;        // relative mode: outer words up to this length
  bool additive_only = false;  // restrict lambda to additive generators
  std::vector<std::uint32_t> lambda_subset;  // test hook: restrict lambdas
  std::string describe() const;
};

struct OrbitCensus {
  RingPtr ring;
  int n = 0;
  std::optional<Ideal> relative;
  GeneratorConfig config;
  std::vector<FRow> rows;
  std::vector<std::uint32_t> orbit;   // per row
  std::vector<std::int64_t> parent;   // per row, -1 for representatives
  std::vector<std::int64_t> letter;   // index into letters, -1 for roots
  std::vector<FLetter> letters;
  std::uint32_t orbit_count = 0;
  // Relative mode: the partition is the orbit partition of the full
  // relative group, checked by compatibility with E_n(R).
  bool stabilized = true;

  std::int64_t find(const FRow& r) const;
};

// Generator letters for the given configuration.
std::vector<FLetter> generator_letters(const FiniteRing& F, int n, const GeneratorConfig& cfg,
                                       const std::optional<Ideal>& relative);

OrbitCensus orbit_bfs(const FiniteRing& F, int n, const std::optional<Ideal>& relative = std::nullopt,
                      GeneratorConfig cfg = {}, const EnumerateOptions& opt = {});

// Every letter keeps every row inside its orbit; parents reproduce rows.
bool verify_closure(const FiniteRing& F, const OrbitCensus& c);

FRow to_frow(const FiniteRing& F, const std::vector<Elem>& v);
std::vector<Elem> from_frow(const FiniteRing& F, const FRow& r);
Word<Elem> to_elem_word(const FiniteRing& F, const FWord& w);

// Word taking x to y, assembled from parent chains; nullopt if the rows
// lie in different orbits (exhaustive for the census generator set).
std::optional<Word<Elem>> certificate_path(const FiniteRing& F, const OrbitCensus& c,
                                           const std::vector<Elem>& x,
                                           const std::vector<Elem>& y);

// Breadth-first search for a word from source to target using census
// letters; used as the fallback of the constructive row operations.
std::optional<Word<Elem>> bfs_word(const RingPtr& R, const std::vector<Elem>& source,
                                   const std::vector<Elem>& target,
                                   const std::optional<Ideal>& relative, std::size_t budget,
                                   int outer_length = 1);

std::string census_to_text(const FiniteRing& F, const OrbitCensus& c);
// Re-verifies a serialized census without repeating the search. Returns
// an empty string on success, else a description of the first mismatch.
std::string verify_census_text(const std::string& text);

// ----------------------------------------------------- lemma experiments

struct ExperimentReport {
  std::string name;
  bool passed = false;
  std::vector<std::string> assertions;  // each verified statement
};

struct ExperimentConfig {
  std::string ring;        // descriptor text
  int n = 3;
  std::vector<std::string> ideal_i;  // generators of I
  std::vector<std::string> ideal_j;  // generators of J
  std::string retract_target;        // retract: descriptor of S
};

// name in {retract, exact_seq, nil_product, sum_split}.
ExperimentReport lemma_experiment(const std::string& name, const ExperimentConfig& cfg);

}  // namespace unirow

#endif  // UNIROW_ORBIT_HPP_
