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

// Dense matrices over an arbitrary commutative ring. The scalar type is a
// template parameter and every algorithm takes the ring as its first
// argument, so the same code serves the exact tower (Elem) and the finite
// lookup tables of the orbit engine (small integer indices).

#ifndef UNIROW_DENSE_HPP_
#define UNIROW_DENSE_HPP_

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace unirow {

template <class R>
concept CommRing = requires(const R& r, const typename R::value_type& a) {
  { r.zero() } -> std::convertible_to<typename R::value_type>;
  { r.one() } -> std::convertible_to<typename R::value_type>;
  { r.add(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.mul(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.neg(a) } -> std::convertible_to<typename R::value_type>;
};

template <class T>
class Dense {
 public:
  Dense() = default;
  Dense(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<T>& data() const { return data_; }

  friend bool operator==(const Dense& a, const Dense& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <CommRing R>
Dense<typename R::value_type> identity(const R& r, std::size_t n) {
  Dense<typename R::value_type> m(n, n, r.zero());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = r.one();
  return m;
}

template <CommRing R>
Dense<typename R::value_type> multiply(const R& r, const Dense<typename R::value_type>& a,
                                       const Dense<typename R::value_type>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  Dense<typename R::value_type> c(a.rows(), b.cols(), r.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (aik == r.zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = r.add(c(i, j), r.mul(aik, b(k, j)));
    }
  return c;
}

template <class T>
Dense<T> transpose(const Dense<T>& a) {
  Dense<T> t(a.cols(), a.rows(), a.rows() && a.cols() ? a(0, 0) : T{});
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

// Row vector times matrix.
template <CommRing R>
std::vector<typename R::value_type> row_times(const R& r,
                                              const std::vector<typename R::value_type>& v,
                                              const Dense<typename R::value_type>& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("row_times: shape mismatch");
  std::vector<typename R::value_type> out(m.cols(), r.zero());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == r.zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] = r.add(out[j], r.mul(v[i], m(i, j)));
  }
  return out;
}

template <CommRing R>
typename R::value_type dot(const R& r, const std::vector<typename R::value_type>& a,
                           const std::vector<typename R::value_type>& b) {
  auto s = r.zero();
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) s = r.add(s, r.mul(a[i], b[i]));
  return s;
}

// Division-free determinant by Laplace expansion over column subsets,
// O(n 2^n) ring operations. Intended for n <= 16.
template <CommRing R>
typename R::value_type det(const R& r, const Dense<typename R::value_type>& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("det: not square");
  if (n == 0) return r.one();
  if (n > 20) throw std::invalid_argument("det: size too large for expansion");
  // minor[mask] = determinant of the bottom |mask| rows restricted to the
  // columns in mask.
  std::vector<typename R::value_type> minor(std::size_t(1) << n, r.zero());
  minor[0] = r.one();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const std::size_t k = static_cast<std::size_t>(__builtin_popcount(mask));
    const std::size_t row = n - k;
    auto acc = r.zero();
    int sign_pos = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask & (1u << c))) continue;
      auto term = r.mul(a(row, c), minor[mask & ~(1u << c)]);
      acc = (sign_pos % 2 == 0) ? r.add(acc, term) : r.add(acc, r.neg(term));
      ++sign_pos;
    }
    minor[mask] = acc;
  }
  return minor[(1u << n) - 1];
}

}  // namespace unirow

#endif  // UNIROW_DENSE_HPP_
