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

#ifndef UNIROW_INTEGER_HPP_
#define UNIROW_INTEGER_HPP_

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace unirow {

// Expression templates are disabled so that arithmetic results are plain
// values and convert cleanly into ring elements.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                          boost::multiprecision::et_off>;

// Floor-style residue in [0, |n|).
Int mod_floor(const Int& a, const Int& n);

// Returns g = gcd(a, b) >= 0 and sets x, y with a*x + b*y = g.
Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y);

// Bezout coefficients for a list: returns g >= 0 and c with sum c_i a_i = g.
Int ext_gcd_list(const std::vector<Int>& a, std::vector<Int>& c);

std::string to_string(const Int& a);
std::string to_string(const Rat& a);

// Dense integer matrix used by the linear solvers (row-major).
struct IntSystem {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Int> a;  // rows * cols
  Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// Solves A y = b over Z by column Hermite reduction. nullopt means the
// system has no integer solution (a certified negative answer).
std::optional<std::vector<Int>> solve_integer(const IntSystem& A,
                                              const std::vector<Int>& b);
// Same system, with the solution size-reduced against an LLL-reduced
// basis of the integer kernel, so entries stay small.
std::optional<std::vector<Int>> solve_integer_small(const IntSystem& A,
                                                    const std::vector<Int>& b);

struct RatSystem {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rat> a;
  Rat& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// Gaussian elimination over Q. nullopt means inconsistent.
std::optional<std::vector<Rat>> solve_rational(const RatSystem& A,
                                               const std::vector<Rat>& b);

bool is_prime(const Int& n);

}  // namespace unirow

#endif  // UNIROW_INTEGER_HPP_
