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

#ifndef UNIROW_GRADED_HPP_
#define UNIROW_GRADED_HPP_

#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "unirow/ring.hpp"

namespace unirow {

struct SemigroupInfo {
  Int gcd;
  std::optional<int> conductor;  // only when gcd == 1
};

// A = R[c_1 t^{n_1}, ..., c_k t^{n_k}] inside R[t].
class GradedAlgebra {
 public:
  GradedAlgebra(RingPtr base, std::vector<std::pair<Elem, int>> gens);

  const RingPtr& base() const { return base_; }
  const std::vector<std::pair<Elem, int>>& gens() const { return gens_; }

  // Generators of the component ideal I_i; I_0 = (1). Zero ideal is [0].
  std::vector<Elem> component(int i) const;
  Ideal component_ideal(int i) const { return {base_, component(i)}; }
  SemigroupInfo semigroup() const;

  // Per-coefficient membership witnesses for f in R[t]; nullopt if some
  // coefficient falls outside its component.
  std::optional<std::vector<std::vector<Elem>>> certificate(const std::vector<Elem>& f) const;
  bool contains(const std::vector<Elem>& f) const { return certificate(f).has_value(); }

 private:
  RingPtr base_;
  std::vector<std::pair<Elem, int>> gens_;
  mutable std::mutex mu_;
  mutable std::map<int, std::vector<Elem>> cache_;
};

SemigroupInfo degree_semigroup(const GradedAlgebra& A);
Ideal graded_component(const GradedAlgebra& A, int i);

// psi : A -> A[u], a_0 + a_1 t + ... maps to a_0 + (a_1 t) u + ... .
// Returns the target ring Poly(A; u) and the image.
RingPtr swan_weibel_target(const RingPtr& graded);
Elem swan_weibel(const RingPtr& graded, const Elem& a);
// phi_m : A[u] -> A evaluates u at m (m in {0, 1}).
Elem swan_weibel_phi(const RingPtr& graded, const Elem& p, int m);
// eta : A -> R, degree-zero part; iota : R -> A.
Elem graded_eta(const RingPtr& graded, const Elem& a);
Elem graded_iota(const RingPtr& graded, const Elem& r);

}  // namespace unirow

#endif  // UNIROW_GRADED_HPP_
