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

#include "unirow/witt.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>

#include "lex.hpp"

namespace unirow {

AlternatingMatrix::AlternatingMatrix(RingPtr ring, std::size_t size)
    : ring_(std::move(ring)), n_(size), upper_(size * size, ring_->zero()) {
  if (size % 2) throw SizeMismatch("alternating matrices have even size");
}

AlternatingMatrix AlternatingMatrix::from_dense(RingPtr ring, const Dense<Elem>& m) {
  if (m.rows() != m.cols()) throw SizeMismatch("not square");
  AlternatingMatrix out(ring, m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!ring->is_zero(m(i, i))) throw InvalidElement("nonzero diagonal");
    for (std::size_t j = i + 1; j < m.rows(); ++j) {
      if (m(j, i) != ring->neg(m(i, j))) throw InvalidElement("not skew-symmetric");
      out.set(i, j, m(i, j));
    }
  }
  return out;
}

Elem AlternatingMatrix::at(std::size_t i, std::size_t j) const {
  if (i == j) return ring_->zero();
  return i < j ? upper_[slot(i, j)] : ring_->neg(upper_[slot(j, i)]);
}

void AlternatingMatrix::set(std::size_t i, std::size_t j, const Elem& x) {
  if (i == j) throw InvalidElement("diagonal of an alternating matrix is zero");
  if (i < j)
    upper_[slot(i, j)] = ring_->normalize(x);
  else
    upper_[slot(j, i)] = ring_->neg(ring_->normalize(x));
}

Dense<Elem> AlternatingMatrix::dense() const {
  Dense<Elem> m(n_, n_, ring_->zero());
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = at(i, j);
  return m;
}

Elem pfaffian(const AlternatingMatrix& m) {
  const Ring& R = *m.ring();
  const std::size_t n = m.size();
  if (n == 0) return R.one();
  if (n > 40) throw SizeMismatch("pfaffian expansion limited to size 40");
  std::unordered_map<std::uint64_t, Elem> memo;
  // pf over the index set `mask`, expanding along its least index.
  auto rec = [&](auto&& self, std::uint64_t mask) -> Elem {
    if (mask == 0) return R.one();
    auto hit = memo.find(mask);
    if (hit != memo.end()) return hit->second;
    const int i = __builtin_ctzll(mask);
    std::uint64_t rest = mask & ~(std::uint64_t(1) << i);
    Elem acc = R.zero();
    int pos = 0;
    for (std::uint64_t r = rest; r; r &= r - 1) {
      const int j = __builtin_ctzll(r);
      const Elem& e = m.at(i, j);
      if (!R.is_zero(e)) {
        Elem term = R.mul(e, self(self, rest & ~(std::uint64_t(1) << j)));
        acc = pos % 2 == 0 ? R.add(acc, term) : R.sub(acc, term);
      }
      ++pos;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1);
}

AlternatingMatrix perp(const AlternatingMatrix& a, const AlternatingMatrix& b) {
  if (!a.ring()->same(*b.ring())) throw DescriptorMismatch("perp of matrices over different rings");
  AlternatingMatrix out(a.ring(), a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) out.set(i, j, a.at(i, j));
  const std::size_t o = a.size();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) out.set(o + i, o + j, b.at(i, j));
  return out;
}

AlternatingMatrix psi(const RingPtr& ring, std::size_t r) {
  AlternatingMatrix out(ring, 2 * r);
  for (std::size_t k = 0; k < r; ++k) out.set(2 * k, 2 * k + 1, ring->one());
  return out;
}

AlternatingMatrix vaserstein_V(const RingPtr& ring, const std::vector<Elem>& a, const std::vector<Elem>& b) {
  const Ring& R = *ring;
  if (a.size() != 3 || b.size() != 3) throw SizeMismatch("V(a, b) needs rows of length 3");
  if (!R.is_one(dot(R, a, b))) throw WitnessMismatch("sum a_i b_i is not 1");
  AlternatingMatrix V(ring, 4);
  V.set(0, 1, R.neg(b[0]));
  V.set(0, 2, R.neg(b[1]));
  V.set(0, 3, R.neg(b[2]));
  V.set(1, 2, R.neg(a[2]));
  V.set(1, 3, a[1]);
  V.set(2, 3, R.neg(a[0]));
  return V;
}

AlternatingMatrix congruence(const AlternatingMatrix& m, const EWord& eps) {
  const Ring& R = *m.ring();
  if (!indices_valid(eps, static_cast<int>(m.size()))) throw SizeMismatch("word does not fit the matrix");
  auto E = matrix_of(R, m.size(), eps);
  return AlternatingMatrix::from_dense(m.ring(), multiply(R, multiply(R, transpose(E), m.dense()), E));
}

bool witt_verify(const AlternatingMatrix& alpha, const AlternatingMatrix& beta, const EWord& eps, std::size_t l) {
  const std::size_t r = alpha.size() / 2, s = beta.size() / 2;
  const RingPtr& ring = alpha.ring();
  if (!ring->same(*beta.ring())) throw DescriptorMismatch("matrices over different rings");
  auto lhs_base = perp(alpha, psi(ring, s + l));
  auto rhs = perp(beta, psi(ring, r + l));
  if (!indices_valid(eps, static_cast<int>(lhs_base.size()))) throw SizeMismatch("word does not fit the padded size");
  return congruence(lhs_base, eps) == rhs;
}

// ------------------------------------------------------- length-3 completion

namespace {

// Small shifts in a deterministic order: by |g| + |h|, then lexicographic.
std::vector<std::pair<Elem, Elem>> shift_candidates(const Ring& R, int bound) {
  std::vector<std::pair<Elem, Elem>> out;
  if (R.is_finite() && R.cardinality() && *R.cardinality() <= 64) {
    auto els = R.elements();
    for (const auto& g : els)
      for (const auto& h : els) out.emplace_back(g, h);
    return out;
  }
  for (int s = 0; s <= 2 * bound; ++s)
    for (int g = -bound; g <= bound; ++g) {
      int h = s - std::abs(g);
      if (h < 0 || h > bound) continue;
      out.emplace_back(R.from_int(g), R.from_int(h));
      if (h) out.emplace_back(R.from_int(g), R.from_int(-h));
    }
  return out;
}

}  // namespace

Dense<Elem> suslin_complete3(const RingPtr& ring, const Elem& a, const Elem& b, const Elem& c,
                             const std::vector<Elem>& witness) {
  const Ring& R = *ring;
  const Elem c2 = R.mul(c, c);
  const std::vector<Elem> x{a, b, c2};
  if (!witness.empty() && !R.is_one(dot(R, x, witness))) throw WitnessMismatch("witness does not pair to 1");
  if (witness.empty() && !ideal_membership(Ideal{ring, x}, R.one()).member())
    throw NotUnimodular("(a, b, c^2) is not unimodular");

  // With A = a + g c^2 and B = b + h c^2 comaximal, pick z1 A + z2 B = 1
  // and z3 = g z1 + h z2. Then x . z = 1 and z = u x w for
  // u = (-z2, z1, 0), w = (-A z3, -B z3, 1), so det [x; u; w] = 1.
  for (int bound : {8, 64, 512}) {
    for (const auto& [g, h] : shift_candidates(R, bound)) {
      const Elem A = R.add(a, R.mul(g, c2));
      const Elem B = R.add(b, R.mul(h, c2));
      Membership m = ideal_membership(Ideal{ring, {A, B}}, R.one());
      if (!m.member()) continue;
      const Elem& z1 = m.coeffs[0];
      const Elem& z2 = m.coeffs[1];
      const Elem z3 = R.add(R.mul(g, z1), R.mul(h, z2));
      Dense<Elem> M(3, 3, R.zero());
      M(0, 0) = a;
      M(0, 1) = b;
      M(0, 2) = c2;
      M(1, 0) = R.neg(z2);
      M(1, 1) = z1;
      M(2, 0) = R.neg(R.mul(A, z3));
      M(2, 1) = R.neg(R.mul(B, z3));
      M(2, 2) = R.one();
      if (!R.is_one(det(R, M))) throw Error("internal: completion determinant is not 1");
      return M;
    }
    if (R.is_finite()) break;
  }
  throw BudgetExhausted("no comaximal shift of the first two coordinates found");
}

Dense<Elem> suslin_complete3_row(const UnimodularRow& row, const Elem& c) {
  if (row.size() != 3) throw SizeMismatch("completion needs a row of length 3");
  const Ring& R = *row.ring;
  if (R.mul(c, c) != row.v[2]) throw NotASquarePresentation("third coordinate is not c^2");
  return suslin_complete3(row.ring, row.v[0], row.v[1], c, row.w);
}

// ------------------------------------------------------------- text form

std::string print_matrix(const Ring& R, const Dense<Elem>& m) {
  std::string out = std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " [";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? ", " : "") + R.print(m(i, j));
    out += "]";
  }
  return out + "]";
}

Dense<Elem> parse_matrix(const Ring& R, const std::string& text) {
  std::string_view s = text;
  std::size_t pos = 0;
  Int rows = lex::parse_int(s, pos);
  lex::expect(s, pos, 'x');
  Int cols = lex::parse_int(s, pos);
  if (rows < 0 || cols < 0 || rows > 1024 || cols > 1024) throw ParseError("bad matrix size", 0);
  Dense<Elem> m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), R.zero());
  lex::expect(s, pos, '[');
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) lex::expect(s, pos, ',');
    lex::expect(s, pos, '[');
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) lex::expect(s, pos, ',');
      m(i, j) = R.parse_at(s, pos);
    }
    lex::expect(s, pos, ']');
  }
  lex::expect(s, pos, ']');
  lex::skip_ws(s, pos);
  if (pos != s.size()) throw ParseError("trailing characters", pos);
  return m;
}

}  // namespace unirow
