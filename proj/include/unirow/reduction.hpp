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

// Degree reduction of relative unimodular rows over graded subalgebras
// A of R[t], R = Z or Z/n, and the supporting finiteness tools.

#ifndef UNIROW_REDUCTION_HPP_
#define UNIROW_REDUCTION_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unirow/graded.hpp"
#include "unirow/rows.hpp"

namespace unirow {

struct SaturationUndecided : Error {
  using Error::Error;
};
struct NoMonicFound : Error {
  using Error::Error;
};
struct NoExponentInWindow : Error {
  using Error::Error;
};
struct WindowViolation : Error {
  using Error::Error;
};
struct QuotientUnsupported : Error {
  using Error::Error;
};
struct ConductorUnsatisfied : Error {
  using Error::Error;
};

// c = a^n for some n >= 0; the least such n.
std::optional<int> a_power_exponent(const Ring& R, const Elem& c, const Elem& a);
// Leading coefficient of f is a power of a (f in a polynomial-like ring).
std::optional<int> a_monic_exponent(const Ring& A, const Elem& f, const Elem& a);

// A re-checkable statement about one coordinate of a row.
struct TraceClaim {
  enum class Kind { AMonic, DegreeAtMost, DegreeEquals, ConstantInAR, HeightOne };
  Kind kind = Kind::DegreeAtMost;
  int coord = 0;
  int value = 0;  // exponent for AMonic, degree for the degree claims
};
std::string claim_text(const TraceClaim& c);

struct TraceStep {
  std::string name;
  EWord word;
  UnimodularRow row;  // row after the word
  std::vector<TraceClaim> claims;
};

struct ReductionTrace {
  Elem a;  // in the base ring
  UnimodularRow initial;
  std::vector<TraceStep> steps;
  std::vector<std::string> flags;  // skipped or unsupported sub-steps

  const UnimodularRow& final_row() const { return steps.empty() ? initial : steps.back().row; }
};

// Every word is aA-relative and maps the previous row onto the recorded
// one (witness included), and every claim holds. On failure, *why says
// which step broke.
bool verify_trace(const ReductionTrace& t, std::string* why = nullptr);

// Line-oriented text with a schema header; parse_trace throws ParseError.
std::string trace_to_text(const ReductionTrace& t);
ReductionTrace parse_trace(const std::string& text);
// Empty on success, otherwise the first problem found.
std::string verify_trace_text(const std::string& text);

struct ReductionOptions {
  SearchBudget budget{4000};   // linear solves and shift candidates
  int degree_slack = 4;         // extra multiplier degree in the solves
  int max_exponent = 12;        // a^M searched for M <= degree + this
  int saturation_exponent = 24; // a^e in the tail content for e <= this
  int shift_bound = 2;          // shifts a (at)^j, j <= this, and small x
};

// v ~ (u_0, ..., u_d) with u_0 a-monic. a is an element of the base ring
// with a t in A.
ReductionTrace make_a_monic(const UnimodularRow& row, const Elem& a, const ReductionOptions& opt = {});
// One degree-reduction round: v_1 a-monic of degree <= m, tails of
// degree <= m - 1, where m is the largest tail degree.
ReductionTrace rt0_reduce(const UnimodularRow& row, const Elem& a, const ReductionOptions& opt = {});
// Iterated rounds until v_1 is linear a-monic and the tails are constants
// in aR, followed by the height step where minimal primes are known.
ReductionTrace roitman_machine(const UnimodularRow& row, const Elem& a, const ReductionOptions& opt = {});

// The height step alone, for rows whose tails are constants in aR: over
// Z the last coordinate is made nonzero, over Z/n it is moved off every
// minimal prime when some w_d + a y with y w_d nilpotent allows it, and
// a flag records why not otherwise.
ReductionTrace height_normalize(const UnimodularRow& row, const Elem& a, const ReductionOptions& opt = {});

// A row of Um_n(A, aA) obtained from e_1 by `letters` random relative
// letters whose parameters have degree <= max_deg.
UnimodularRow random_relative_row(const RingPtr& A, const Elem& a, int n, std::uint64_t seed, int letters = 5,
                                  int max_deg = 2);

// ------------------------------------------------------------ Artin-Rees

// Cell (n, m): I^n I_m cap J = (lhs) and J I^{n-k} I_m = (rhs) in the
// base ring, with lhs = witness * rhs.
struct ArtinReesCell {
  int n = 0;
  int m = 0;
  Elem lhs, rhs, witness;
};

struct ArtinReesWitness {
  RingPtr algebra;
  Ideal I, J;  // ideals of the base ring
  int k = 0;
  int N = 0;  // n ranges over [k, N]
  int D = 0;  // m ranges over [0, D]
  std::vector<ArtinReesCell> cells;
};

// Least k <= N with I^n I_m cap J inside J I^{n-k} I_m for all n in [k, N]
// and m in [0, D]. Base ring Z or Z/n; I must lie in I_1.
ArtinReesWitness artin_rees_exponent(const RingPtr& A, const Ideal& I, const Ideal& J, int N, int D);
bool verify_artin_rees(const ArtinReesWitness& w);

// ---------------------------------------------------------------- theta

struct ThetaMap {
  RingPtr algebra;
  Ideal I;   // in the base ring
  Elem v_d;  // constant last coordinate, in I
  int l = 0;
  int n = 0;  // length of the image rows
  ArtinReesWitness window;
};

// Built from a row of Um_{d+1}(A, IA) whose last coordinate is a constant
// in I. Requires l >= k + 1 for the windowed exponent k with J = (v_d).
ThetaMap theta_map(const UnimodularRow& v, const Ideal& I, int l, int N = 8, int D = 8);
// Lift (a_0, ..., a_{d-1}) = e_1 mod I^l A to (a_0, ..., a_{d-1}, v_d).
UnimodularRow theta_apply(const ThetaMap& map, const std::vector<Elem>& lift);

// ----------------------------------------------------- subintegral step

struct SubintegralExtension {
  RingPtr algebra;  // B = A[u]
  Elem c;           // u = c t^{p-1}
  int degree = 0;   // p - 1
  Elem u;           // as an element of B
};

// Requires A_i != 0 for all i >= p >= 2. Checks u^2, u^3 in A, B_i = A_i
// for p <= i <= check_degree and B_{p-1} != 0.
SubintegralExtension subintegral_extend(const RingPtr& A, int p, int check_degree = 0);

}  // namespace unirow

#endif  // UNIROW_REDUCTION_HPP_
