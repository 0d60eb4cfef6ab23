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

#ifndef UNIROW_WITT_HPP_
#define UNIROW_WITT_HPP_

#include <string>
#include <vector>

#include "unirow/dense.hpp"
#include "unirow/ring.hpp"
#include "unirow/rows.hpp"

namespace unirow {

struct WitnessMismatch : Error {
  using Error::Error;
};
struct SizeMismatch : Error {
  using Error::Error;
};
struct NotASquarePresentation : Error {
  using Error::Error;
};

// Even-size skew matrix with zero diagonal. Only the strict upper triangle
// is stored; the lower triangle is its negation by construction.
class AlternatingMatrix {
 public:
  AlternatingMatrix(RingPtr ring, std::size_t size);
  // Validates skew symmetry, zero diagonal and even size.
  static AlternatingMatrix from_dense(RingPtr ring, const Dense<Elem>& m);

  const RingPtr& ring() const { return ring_; }
  std::size_t size() const { return n_; }
  Elem at(std::size_t i, std::size_t j) const;
  // Sets entry (i, j) and, implicitly, (j, i) = -x. Requires i != j.
  void set(std::size_t i, std::size_t j, const Elem& x);
  Dense<Elem> dense() const;

  friend bool operator==(const AlternatingMatrix& a, const AlternatingMatrix& b) {
    return a.n_ == b.n_ && a.upper_ == b.upper_;
  }

 private:
  std::size_t slot(std::size_t i, std::size_t j) const { return i * n_ + j; }
  RingPtr ring_;
  std::size_t n_;
  std::vector<Elem> upper_;  // n x n, used for i < j only
};

// Expansion along the first row with memoization over index subsets.
Elem pfaffian(const AlternatingMatrix& m);
AlternatingMatrix perp(const AlternatingMatrix& a, const AlternatingMatrix& b);
// Psi_1 = [[0, 1], [-1, 0]], Psi_{r+1} = Psi_r perp Psi_1; Psi_0 is empty.
AlternatingMatrix psi(const RingPtr& ring, std::size_t r);

// The 4 x 4 matrix attached to a length-3 row a with witness b.
AlternatingMatrix vaserstein_V(const RingPtr& ring, const std::vector<Elem>& a,
                               const std::vector<Elem>& b);

// eps^T (alpha perp Psi_{s+l}) eps == beta perp Psi_{r+l}, where alpha is
// 2r x 2r, beta is 2s x 2s and eps is a word on 2(r + s + l) coordinates.
bool witt_verify(const AlternatingMatrix& alpha, const AlternatingMatrix& beta, const EWord& eps,
                 std::size_t l);

// Congruence eps^T m eps by the matrix of a word.
AlternatingMatrix congruence(const AlternatingMatrix& m, const EWord& eps);

// A 3 x 3 matrix of determinant 1 with first row (a, b, c^2). The witness
// is optional and only used to seed the search.
Dense<Elem> suslin_complete3(const RingPtr& ring, const Elem& a, const Elem& b, const Elem& c,
                             const std::vector<Elem>& witness = {});
// Same, with the third coordinate given directly and checked against c^2.
Dense<Elem> suslin_complete3_row(const UnimodularRow& row, const Elem& c);

// Row-major text with a size header, e.g. "2x2 [[0, 1], [-1, 0]]".
std::string print_matrix(const Ring& R, const Dense<Elem>& m);
Dense<Elem> parse_matrix(const Ring& R, const std::string& text);

}  // namespace unirow

#endif  // UNIROW_WITT_HPP_
