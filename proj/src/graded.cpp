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

#include "unirow/graded.hpp"

#include <set>

namespace unirow {

GradedAlgebra::GradedAlgebra(RingPtr base, std::vector<std::pair<Elem, int>> gens)
    : base_(std::move(base)), gens_(std::move(gens)) {}

std::vector<Elem> GradedAlgebra::component(int i) const {
  if (i < 0) return {base_->zero()};
  std::lock_guard<std::mutex> lock(mu_);
  auto hit = cache_.find(i);
  if (hit != cache_.end()) return hit->second;

  // comp(i) = union over j of c_j * comp(i - n_j), built bottom-up. The
  // raw (possibly zero) products are kept per degree so that a product
  // vanishing in a torsion base does not hide higher ones.
  std::map<int, std::vector<Elem>> raw;
  raw[0] = {base_->one()};
  for (int d = 1; d <= i; ++d) {
    std::vector<Elem> out;
    std::set<Elem, ElemLess> seen;
    for (const auto& [c, n] : gens_) {
      if (n > d) continue;
      for (const auto& e : raw[d - n]) {
        Elem p = base_->mul(c, e);
        if (base_->is_zero(p) || seen.count(p)) continue;
        seen.insert(p);
        out.push_back(p);
      }
    }
    raw[d] = std::move(out);
  }
  std::vector<Elem> result = raw[i];
  if (result.empty()) result.push_back(base_->zero());
  cache_[i] = result;
  return result;
}

SemigroupInfo GradedAlgebra::semigroup() const {
  SemigroupInfo info;
  info.gcd = 0;
  int smallest = 0;
  std::vector<int> degs;
  for (const auto& [c, n] : gens_) {
    if (base_->is_zero(c)) continue;
    degs.push_back(n);
    info.gcd = gcd(info.gcd, Int(n));
    if (!smallest || n < smallest) smallest = n;
  }
  if (info.gcd != 1) return info;
  // With gcd 1 the Frobenius number is below smallest * largest.
  int largest = 0;
  for (int d : degs) largest = std::max(largest, d);
  const int bound = smallest * largest + smallest + 1;
  std::vector<char> rep(bound + 1, 0);
  rep[0] = 1;
  for (int v = 1; v <= bound; ++v)
    for (int d : degs)
      if (d <= v && rep[v - d]) {
        rep[v] = 1;
        break;
      }
  int p = bound;
  while (p > 0 && rep[p - 1]) --p;
  info.conductor = p;
  return info;
}

std::optional<std::vector<std::vector<Elem>>> GradedAlgebra::certificate(
    const std::vector<Elem>& f) const {
  std::vector<std::vector<Elem>> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    Ideal Ii = component_ideal(static_cast<int>(i));
    Membership m = ideal_membership(Ii, f[i]);
    if (!m.member()) return std::nullopt;
    out.push_back(std::move(m.coeffs));
  }
  return out;
}

SemigroupInfo degree_semigroup(const GradedAlgebra& A) { return A.semigroup(); }

Ideal graded_component(const GradedAlgebra& A, int i) { return A.component_ideal(i); }

RingPtr swan_weibel_target(const RingPtr& graded) { return Ring::poly(graded, "u"); }

Elem swan_weibel(const RingPtr& graded, const Elem& a) {
  RingPtr target = swan_weibel_target(graded);
  const auto& c = a.list();
  std::vector<Elem> out;
  for (std::size_t i = 0; i < c.size(); ++i) out.push_back(graded->monomial(c[i], static_cast<int>(i)));
  return target->normalize(Elem(std::move(out)));
}

Elem swan_weibel_phi(const RingPtr& graded, const Elem& p, int m) {
  if (m != 0 && m != 1) throw Unsupported("phi_m is implemented for m in {0, 1}");
  const auto& c = p.list();
  if (m == 0) return c.empty() ? graded->zero() : c[0];
  Elem s = graded->zero();
  for (const auto& e : c) s = graded->add(s, e);
  return s;
}

Elem graded_eta(const RingPtr& graded, const Elem& a) { return graded->coeff(a, 0); }

Elem graded_iota(const RingPtr& graded, const Elem& r) { return graded->monomial(r, 0); }

}  // namespace unirow
