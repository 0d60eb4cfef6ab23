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

// The computable-ring tower. A Ring is an immutable descriptor shared by
// pointer; an Elem is a canonical payload interpreted by its Ring.

#ifndef UNIROW_RING_HPP_
#define UNIROW_RING_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "unirow/integer.hpp"

namespace unirow {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DescriptorMismatch : Error {
  using Error::Error;
};
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};
struct Unsupported : Error {
  using Error::Error;
};
struct InvalidElement : Error {
  using Error::Error;
};
struct Undecided : Error {
  using Error::Error;
};

// Canonical payload. Integers and residues use Int, rationals use Rat,
// polynomials are dense coefficient vectors without trailing zeros and
// excision pairs are two-element vectors.
struct Elem {
  std::variant<Int, Rat, std::vector<Elem>> v;

  Elem() : v(Int(0)) {}
  Elem(Int x) : v(std::move(x)) {}  // NOLINT(runtime/explicit)
  Elem(int x) : v(Int(x)) {}        // NOLINT(runtime/explicit)
  Elem(Rat x) : v(std::move(x)) {}  // NOLINT(runtime/explicit)
  Elem(std::vector<Elem> x) : v(std::move(x)) {}  // NOLINT(runtime/explicit)

  const Int& integer() const { return std::get<Int>(v); }
  const Rat& rational() const { return std::get<Rat>(v); }
  const std::vector<Elem>& list() const { return std::get<std::vector<Elem>>(v); }

  friend bool operator==(const Elem& a, const Elem& b) { return a.v == b.v; }
  friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }
};

// Strict weak order on payloads; used for deterministic containers.
bool elem_less(const Elem& a, const Elem& b);
struct ElemLess {
  bool operator()(const Elem& a, const Elem& b) const { return elem_less(a, b); }
};

enum class RingKind { Integers, IntegersMod, Rationals, Poly, Quotient, Graded, Excision };

class Ring;
class GradedAlgebra;
using RingPtr = std::shared_ptr<const Ring>;

class Ring : public std::enable_shared_from_this<Ring> {
 public:
  using value_type = Elem;

  static RingPtr integers();
  static RingPtr integers_mod(const Int& n);
  static RingPtr rationals();
  static RingPtr poly(RingPtr base, std::string var = "t");
  static RingPtr quotient(RingPtr base, const Elem& modulus);
  static RingPtr graded(RingPtr base, std::vector<std::pair<Elem, int>> gens);
  static RingPtr excision(RingPtr base, std::vector<Elem> gens);

  RingKind kind() const { return kind_; }
  const RingPtr& base() const { return base_; }
  const Int& modulus_int() const { return n_; }
  const Elem& modulus_poly() const { return modulus_; }
  const std::string& var() const { return var_; }
  const std::vector<Elem>& ideal_gens() const { return ideal_gens_; }
  const GradedAlgebra& algebra() const { return *algebra_; }
  std::shared_ptr<const GradedAlgebra> algebra_ptr() const { return algebra_; }
  RingPtr self() const { return shared_from_this(); }

  // True for variants whose payload is a coefficient vector in t.
  bool is_polynomial_like() const;
  // Residue rings of Z (IntegersMod and integer Quotient).
  bool is_residue_ring() const;

  Elem zero() const;
  Elem one() const;
  Elem from_int(const Int& k) const;
  Elem add(const Elem& x, const Elem& y) const;
  Elem sub(const Elem& x, const Elem& y) const;
  Elem neg(const Elem& x) const;
  Elem mul(const Elem& x, const Elem& y) const;
  Elem pow(const Elem& x, std::uint64_t k) const;
  bool eq(const Elem& x, const Elem& y) const { return x == y; }
  bool is_zero(const Elem& x) const { return x == zero(); }
  bool is_one(const Elem& x) const { return x == one(); }

  // Brings an arbitrary payload of the right shape into canonical form and
  // validates membership constraints (graded components, excision ideal).
  Elem normalize(const Elem& x) const;
  // Throws InvalidElement unless x is already canonical.
  void check(const Elem& x) const;

  std::string print(const Elem& x) const;
  Elem parse(std::string_view text) const;
  // Parses an element at pos, advancing pos.
  Elem parse_at(std::string_view text, std::size_t& pos) const;

  // Canonical descriptor text.
  std::string name() const;
  bool same(const Ring& other) const { return name() == other.name(); }

  bool is_finite() const;
  // Number of elements, when finite.
  std::optional<std::uint64_t> cardinality() const;
  // All elements in the fixed canonical order (finite rings only).
  std::vector<Elem> elements() const;
  // Polynomial helpers (polynomial-like rings).
  int degree(const Elem& f) const;  // -1 for zero
  Elem coeff(const Elem& f, int i) const;
  Elem leading(const Elem& f) const;
  Elem monomial(const Elem& c, int deg) const;
  const Ring& coeff_ring() const;  // base scalar ring of a polynomial-like ring

  // Lower-level constructor; use the static factories.
  Ring(RingKind k) : kind_(k) {}  // NOLINT(runtime/explicit)

 private:
  Elem poly_mul(const Elem& x, const Elem& y) const;
  Elem reduce_mod_poly(std::vector<Elem> c) const;

  RingKind kind_;
  RingPtr base_;
  Int n_ = 0;
  Elem modulus_;
  std::string var_;
  std::vector<Elem> ideal_gens_;
  std::shared_ptr<const GradedAlgebra> algebra_;
  std::string name_;
};

// Parses descriptor text such as `Z/4` or `graded(Z; 2@1, 3@2)`.
RingPtr parse_descriptor(std::string_view text);
RingPtr parse_descriptor_at(std::string_view text, std::size_t& pos);

// Element with its descriptor; arithmetic checks descriptor agreement.
class RingElement {
 public:
  RingElement(RingPtr r, Elem v) : ring_(std::move(r)), v_(ring_->normalize(v)) {}
  const RingPtr& ring() const { return ring_; }
  const Elem& value() const { return v_; }
  std::string str() const { return ring_->print(v_); }

  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a);
  friend bool operator==(const RingElement& a, const RingElement& b);

 private:
  RingPtr ring_;
  Elem v_;
};

enum class ArithOp { Add, Mul, Neg, Eq };
// Dispatching entry point; returns a RingElement or a boolean for Eq.
std::variant<RingElement, bool> ring_arith(ArithOp op, const RingElement& x,
                                           const RingElement& y);

// Ideal given by a finite generator list.
struct Ideal {
  RingPtr ring;
  std::vector<Elem> gens;
};

enum class MembershipStatus { Member, NotMember, Undecided };

struct Membership {
  MembershipStatus status = MembershipStatus::Undecided;
  std::vector<Elem> coeffs;  // sum coeffs[j] * gens[j] == x when Member
  bool member() const { return status == MembershipStatus::Member; }
};

struct MembershipOptions {
  int degree_slack = 6;  // extra multiplier degree for polynomial solves
};

// Witness search. Undecided is distinct from NotMember: it is only
// returned by the degree-bounded solvers.
Membership ideal_membership(const Ideal& I, const Elem& x,
                            const MembershipOptions& opt = {});
// Re-multiplies the witness.
bool verify_membership(const Ideal& I, const Elem& x, const std::vector<Elem>& c);
// Convenience: Member -> true, NotMember -> false, Undecided -> throws.
bool in_ideal(const Ideal& I, const Elem& x);

// Generators of I^k (products of k generators).
Ideal ideal_power(const Ideal& I, int k);
Ideal ideal_product(const Ideal& I, const Ideal& J);

// Gamma_I(R), the union of annihilators of powers of I (finite rings).
Ideal gamma_ideal(const Ideal& I);
// Full element set of the ideal (finite rings).
std::vector<Elem> ideal_elements(const Ideal& I);
std::string print_ideal(const Ideal& I);
// Inverse of print_ideal: "(g1, g2, ...)" over R.
Ideal parse_ideal(const RingPtr& R, std::string_view text);

// Excision maps on R + I.
enum class ExcisionMap { Pi, Iota, Epsilon, FiberIso };
// pi(m, i) = m + i and epsilon(r, i) = r land in the base; iota(r) = (r, 0)
// lands in the excision ring; fiber_iso(r, i) = (r, r + i) is returned as a
// two-element list of base elements.
Elem excision_map(const Ring& exc, ExcisionMap which, const Elem& x);

}  // namespace unirow

#endif  // UNIROW_RING_HPP_
