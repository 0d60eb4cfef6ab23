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

#include "unirow/integer.hpp"

#include <utility>

namespace unirow {

Int mod_floor(const Int& a, const Int& n) {
  Int m = abs(n);
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

Int ext_gcd_list(const std::vector<Int>& a, std::vector<Int>& c) {
  c.assign(a.size(), Int(0));
  Int g = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Int x, y;
    Int ng = ext_gcd(g, a[i], x, y);
    for (std::size_t j = 0; j < i; ++j) c[j] *= x;
    c[i] = y;
    g = ng;
  }
  return g;
}

std::string to_string(const Int& a) { return a.str(); }

std::string to_string(const Rat& a) {
  Int num = boost::multiprecision::numerator(a);
  Int den = boost::multiprecision::denominator(a);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

struct HermiteSolution {
  std::vector<Int> y;
};

std::optional<HermiteSolution> hermite_solve(const IntSystem& A, const std::vector<Int>& b) {
  IntSystem H = A;
  IntSystem U;
  U.rows = U.cols = A.cols;
  U.a.assign(A.cols * A.cols, Int(0));
  for (std::size_t i = 0; i < A.cols; ++i) U.at(i, i) = 1;

  std::vector<Int> z(A.cols, Int(0));
  std::size_t piv = 0;
  for (std::size_t i = 0; i < H.rows; ++i) {
    // Euclid steps with the smallest nonzero entry as pivot: the same
    // unimodular reduction as an extended-gcd combination, with far less
    // entry growth.
    while (piv < H.cols) {
      std::size_t best = H.cols;
      for (std::size_t j = piv; j < H.cols; ++j)
        if (H.at(i, j) != 0 && (best == H.cols || abs(H.at(i, j)) < abs(H.at(i, best)))) best = j;
      if (best == H.cols) break;
      if (best != piv) {
        for (std::size_t r = 0; r < H.rows; ++r) std::swap(H.at(r, piv), H.at(r, best));
        for (std::size_t r = 0; r < U.rows; ++r) std::swap(U.at(r, piv), U.at(r, best));
      }
      bool done = true;
      for (std::size_t j = piv + 1; j < H.cols; ++j) {
        if (H.at(i, j) == 0) continue;
        Int q = H.at(i, j) / H.at(i, piv);
        if (q != 0) {
          for (std::size_t r = 0; r < H.rows; ++r) H.at(r, j) -= q * H.at(r, piv);
          for (std::size_t r = 0; r < U.rows; ++r) U.at(r, j) -= q * U.at(r, piv);
        }
        if (H.at(i, j) != 0) done = false;
      }
      if (done) break;
    }
    Int residual = b[i];
    for (std::size_t j = 0; j < piv; ++j) residual -= H.at(i, j) * z[j];
    if (piv < H.cols && H.at(i, piv) != 0) {
      if (residual % H.at(i, piv) != 0) return std::nullopt;
      z[piv] = residual / H.at(i, piv);
      ++piv;
    } else if (residual != 0) {
      return std::nullopt;
    }
  }
  HermiteSolution out;
  out.y.assign(A.cols, Int(0));
  for (std::size_t r = 0; r < A.cols; ++r)
    for (std::size_t c = 0; c < A.cols; ++c) out.y[r] += U.at(r, c) * z[c];
  return out;
}

Int dot(const std::vector<Int>& x, const std::vector<Int>& y) {
  Int s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

// Nearest integer to p / q for q > 0.
Int round_div(const Int& p, const Int& q) {
  Int n = 2 * p + q, d = 2 * q;
  Int r = n / d;
  if ((n % d != 0) && (n < 0)) r -= 1;
  return r;
}

// Integral LLL (delta = 3/4) on independent vectors, exact throughout.
// Returns the reduced basis with its Gram-Schmidt data (d, lambda).
struct Reduced {
  std::vector<std::vector<Int>> b;
  std::vector<Int> d;                 // d[0] = 1, d[i] for i = 1..n
  std::vector<std::vector<Int>> lam;  // lam[k][j], j < k (1-based)
};

Reduced lll(std::vector<std::vector<Int>> basis) {
  const std::size_t n = basis.size();
  Reduced R;
  R.b.assign(n + 1, {});
  for (std::size_t i = 0; i < n; ++i) R.b[i + 1] = std::move(basis[i]);
  R.d.assign(n + 1, Int(0));
  R.lam.assign(n + 1, std::vector<Int>(n + 1, Int(0)));
  if (n == 0) {
    R.d[0] = 1;
    return R;
  }
  auto& b = R.b;
  auto& d = R.d;
  auto& lam = R.lam;
  d[0] = 1;
  d[1] = dot(b[1], b[1]);
  std::size_t k = 2, kmax = 1;
  auto redi = [&](std::size_t kk, std::size_t l) {
    if (abs(2 * lam[kk][l]) <= d[l]) return;
    Int q = round_div(lam[kk][l], d[l]);
    for (std::size_t t = 0; t < b[kk].size(); ++t) b[kk][t] -= q * b[l][t];
    lam[kk][l] -= q * d[l];
    for (std::size_t i = 1; i < l; ++i) lam[kk][i] -= q * lam[l][i];
  };
  auto swapi = [&](std::size_t kk) {
    std::swap(b[kk], b[kk - 1]);
    for (std::size_t j = 1; j + 2 <= kk; ++j) std::swap(lam[kk][j], lam[kk - 1][j]);
    Int l = lam[kk][kk - 1];
    Int B = (d[kk - 2] * d[kk] + l * l) / d[kk - 1];
    for (std::size_t i = kk + 1; i <= kmax; ++i) {
      Int t = lam[i][kk];
      lam[i][kk] = (d[kk] * lam[i][kk - 1] - l * t) / d[kk - 1];
      lam[i][kk - 1] = (B * t + l * lam[i][kk]) / d[kk];
    }
    d[kk - 1] = B;
  };
  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 1; j <= k; ++j) {
        Int u = dot(b[k], b[j]);
        for (std::size_t i = 1; i < j; ++i) u = (d[i] * u - lam[k][i] * lam[j][i]) / d[i - 1];
        if (j < k)
          lam[k][j] = u;
        else
          d[k] = u;
      }
    }
    while (true) {
      redi(k, k - 1);
      if (4 * d[k] * d[k - 2] < 3 * d[k - 1] * d[k - 1] - 4 * lam[k][k - 1] * lam[k][k - 1]) {
        swapi(k);
        if (k > 2) --k;
        continue;
      }
      for (std::size_t l = k - 1; l-- > 1;) redi(k, l);
      ++k;
      break;
    }
  }
  return R;
}

}  // namespace

std::optional<std::vector<Int>> solve_integer(const IntSystem& A,
                                              const std::vector<Int>& b) {
  auto s = hermite_solve(A, b);
  if (!s) return std::nullopt;
  return std::move(s->y);
}

namespace {

// Primitive integer vectors spanning the rational kernel of A. They span
// a finite-index sublattice of the integer kernel, with entries bounded
// by minors of A.
std::vector<std::vector<Int>> rational_kernel(const IntSystem& A) {
  RatSystem M;
  M.rows = A.rows;
  M.cols = A.cols;
  M.a.assign(A.a.begin(), A.a.end());
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < M.cols && row < M.rows; ++col) {
    std::size_t sel = row;
    while (sel < M.rows && M.at(sel, col) == 0) ++sel;
    if (sel == M.rows) continue;
    if (sel != row)
      for (std::size_t j = 0; j < M.cols; ++j) std::swap(M.at(sel, j), M.at(row, j));
    Rat inv = 1 / M.at(row, col);
    for (std::size_t j = 0; j < M.cols; ++j) M.at(row, j) *= inv;
    for (std::size_t i = 0; i < M.rows; ++i) {
      if (i == row || M.at(i, col) == 0) continue;
      Rat f = M.at(i, col);
      for (std::size_t j = 0; j < M.cols; ++j) M.at(i, j) -= f * M.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(M.cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Int>> out;
  for (std::size_t f = 0; f < M.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(M.cols, Rat(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -M.at(i, f);
    Int den = 1;
    for (const auto& x : v) den = lcm(den, denominator(x));
    std::vector<Int> w(M.cols);
    Int g = 0;
    for (std::size_t j = 0; j < M.cols; ++j) {
      w[j] = numerator(v[j]) * (den / denominator(v[j]));
      g = gcd(g, w[j]);
    }
    if (g > 1)
      for (auto& x : w) x /= g;
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace

std::optional<std::vector<Int>> solve_integer_small(const IntSystem& A, const std::vector<Int>& b) {
  auto s = hermite_solve(A, b);
  if (!s) return std::nullopt;
  auto kernel = rational_kernel(A);
  if (kernel.empty()) return std::move(s->y);
  Reduced R = lll(std::move(kernel));
  const std::size_t n = R.b.size() - 1;
  // Nearest-plane reduction of y against the reduced kernel vectors.
  std::vector<Int>& y = s->y;
  std::vector<Int> mu(n + 1, Int(0));
  for (std::size_t j = 1; j <= n; ++j) {
    Int u = dot(y, R.b[j]);
    for (std::size_t i = 1; i < j; ++i) u = (R.d[i] * u - mu[i] * R.lam[j][i]) / R.d[i - 1];
    mu[j] = u;
  }
  for (std::size_t l = n; l >= 1; --l) {
    if (abs(2 * mu[l]) > R.d[l]) {
      Int q = round_div(mu[l], R.d[l]);
      for (std::size_t t = 0; t < y.size(); ++t) y[t] -= q * R.b[l][t];
      mu[l] -= q * R.d[l];
      for (std::size_t i = 1; i < l; ++i) mu[i] -= q * R.lam[l][i];
    }
  }
  return std::move(y);
}

std::optional<std::vector<Rat>> solve_rational(const RatSystem& A,
                                               const std::vector<Rat>& b) {
  RatSystem M = A;
  std::vector<Rat> rhs = b;
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < M.cols && row < M.rows; ++col) {
    std::size_t sel = row;
    while (sel < M.rows && M.at(sel, col) == 0) ++sel;
    if (sel == M.rows) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < M.cols; ++j) std::swap(M.at(sel, j), M.at(row, j));
      std::swap(rhs[sel], rhs[row]);
    }
    Rat inv = 1 / M.at(row, col);
    for (std::size_t j = 0; j < M.cols; ++j) M.at(row, j) *= inv;
    rhs[row] *= inv;
    for (std::size_t i = 0; i < M.rows; ++i) {
      if (i == row || M.at(i, col) == 0) continue;
      Rat f = M.at(i, col);
      for (std::size_t j = 0; j < M.cols; ++j) M.at(i, j) -= f * M.at(row, j);
      rhs[i] -= f * rhs[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < M.rows; ++i)
    if (rhs[i] != 0) return std::nullopt;
  std::vector<Rat> y(M.cols, Rat(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) y[pivot_col[i]] = rhs[i];
  return y;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace unirow
