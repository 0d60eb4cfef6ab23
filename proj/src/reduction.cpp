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

#include "unirow/reduction.hpp"

#include <algorithm>
#include <random>
#include <sstream>


namespace unirow {

std::optional<int> a_power_exponent(const Ring& R, const Elem& c, const Elem& a) {
  Elem p = R.one();
  for (int n = 0; n <= 256; ++n) {
    if (p == c) return n;
    Elem q = R.mul(p, a);
    if (q == p) break;
    if (R.kind() == RingKind::Integers && c.integer() != 0 && abs(q.integer()) > abs(c.integer())) break;
    p = std::move(q);
  }
  return std::nullopt;
}

std::optional<int> a_monic_exponent(const Ring& A, const Elem& f, const Elem& a) {
  if (A.is_zero(f)) return std::nullopt;
  return a_power_exponent(A.coeff_ring(), A.leading(f), a);
}

namespace {

using Kind = TraceClaim::Kind;

const char* kind_word(Kind k) {
  switch (k) {
    case Kind::AMonic:
      return "a_monic";
    case Kind::DegreeAtMost:
      return "deg_le";
    case Kind::DegreeEquals:
      return "deg_eq";
    case Kind::ConstantInAR:
      return "const_in_aR";
    case Kind::HeightOne:
      return "height_one";
  }
  return "?";
}

void require_supported(const Ring& A) {
  if (A.kind() != RingKind::Graded && A.kind() != RingKind::Poly)
    throw Unsupported("degree reduction needs a graded or polynomial ring, got " + A.name());
  const Ring& R = A.coeff_ring();
  if (R.kind() != RingKind::Integers && !R.is_residue_ring())
    throw Unsupported("degree reduction needs coefficients in Z or Z/n, got " + R.name());
}

Ideal a_ideal(const RingPtr& A, const Elem& a) { return {A, {A->monomial(a, 0)}}; }

ELetter rel(int i, int j, Elem lambda) { return conjugate<Elem>({}, EGen{i, j, std::move(lambda)}); }

struct Spend {
  std::size_t left;
  const char* what;
  void take() {
    if (left == 0) throw BudgetExhausted(std::string("search budget exhausted in ") + what);
    --left;
  }
};

// Component ideal I_k of a graded ring; the whole base for polynomial rings.
std::vector<Elem> component_gens(const Ring& A, int k) {
  if (A.kind() == RingKind::Graded) return A.algebra().component(k);
  return {A.coeff_ring().one()};
}

std::vector<Elem> multipliers(const Ring& A, int cap) {
  std::vector<Elem> out;
  const Ring& R = A.coeff_ring();
  for (int k = 0; k <= cap; ++k)
    for (const auto& c : component_gens(A, k))
      if (!R.is_zero(c)) out.push_back(A.monomial(c, k));
  return out;
}

struct Combination {
  std::vector<Elem> beta;
  Elem result;
};

// f + sum_j s beta_j g_j with zero coefficients above D and, when lead is
// set, coefficient lead at D. Multipliers have degree <= cap. With
// skip_lead the row for D is dropped even if lead is set (a feasibility
// pre-check for the higher rows).
std::optional<Combination> affine_solve(const Ring& A, const Elem& f, const std::vector<Elem>& g, const Elem& s,
                                        int D, const std::optional<Elem>& lead, int cap, bool skip_lead = false) {
  const Ring& R = A.coeff_ring();
  auto mult = multipliers(A, cap);
  const std::size_t nm = mult.size();
  std::vector<Elem> prods;
  prods.reserve(nm * g.size());
  int L = std::max(A.degree(f), D);
  for (const auto& gj : g)
    for (const auto& m : mult) {
      prods.push_back(A.mul(A.mul(s, m), gj));
      L = std::max(L, A.degree(prods.back()));
    }
  int lo = (lead && !skip_lead) ? D : D + 1;
  lo = std::max(lo, 0);
  std::vector<Elem> beta(g.size(), A.zero());
  if (lo > L) return Combination{beta, f};

  const bool modular = R.is_residue_ring();
  const std::size_t rows = static_cast<std::size_t>(L - lo + 1);
  const std::size_t cols = prods.size();
  IntSystem M;
  M.rows = rows;
  M.cols = cols + (modular ? rows : 0);
  M.a.assign(M.rows * M.cols, Int(0));
  std::vector<Int> b(rows, Int(0));
  for (std::size_t c = 0; c < cols; ++c)
    for (int i = lo; i <= L; ++i) M.at(i - lo, c) = A.coeff(prods[c], i).integer();
  if (modular)
    for (std::size_t r = 0; r < rows; ++r) M.at(r, cols + r) = R.modulus_int();
  for (int i = lo; i <= L; ++i) {
    Int target = (lead && i == D) ? lead->integer() : Int(0);
    b[i - lo] = target - A.coeff(f, i).integer();
  }
  auto y = solve_integer_small(M, b);
  if (!y) return std::nullopt;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t k = 0; k < nm; ++k) {
      const Int& v = (*y)[j * nm + k];
      if (v != 0) beta[j] = A.add(beta[j], A.mul(A.monomial(R.from_int(v), 0), mult[k]));
    }
  Elem r = f;
  for (std::size_t j = 0; j < g.size(); ++j) r = A.add(r, A.mul(A.mul(s, beta[j]), g[j]));
  if (A.degree(r) > D) return std::nullopt;
  if (lead && !skip_lead && A.coeff(r, D) != *lead) return std::nullopt;
  return Combination{beta, r};
}

bool in_base_ideal(const Ring& R, const std::vector<Elem>& gens, const Elem& x) {
  if (gens.empty()) return R.is_zero(x);
  return ideal_membership(Ideal{R.self(), gens}, x).member();
}

// f in (base_gens) A, decided degree by degree: the t^i coefficient must
// lie in (base_gens) A_i.
bool in_extended(const Ring& A, const std::vector<Elem>& base_gens, const Elem& f) {
  const Ring& R = A.coeff_ring();
  for (int i = 0; i <= A.degree(f); ++i) {
    std::vector<Elem> gens;
    for (const auto& g : base_gens)
      for (const auto& c : component_gens(A, i)) gens.push_back(R.mul(g, c));
    if (!in_base_ideal(R, gens, A.coeff(f, i))) return false;
  }
  return true;
}

bool congruent_e1_exact(const Ring& A, const std::vector<Elem>& base_gens, const std::vector<Elem>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!in_extended(A, base_gens, i == 0 ? A.sub(v[0], A.one()) : v[i])) return false;
  return true;
}

bool claim_holds(const Ring& A, const Elem& a, const UnimodularRow& row, const TraceClaim& c) {
  if (c.coord < 0 || c.coord >= static_cast<int>(row.size())) return false;
  const Elem& f = row.v[c.coord];
  const Ring& R = A.coeff_ring();
  switch (c.kind) {
    case Kind::AMonic: {
      auto e = a_monic_exponent(A, f, a);
      return e && *e == c.value;
    }
    case Kind::DegreeAtMost:
      return A.degree(f) <= c.value;
    case Kind::DegreeEquals:
      return A.degree(f) == c.value;
    case Kind::ConstantInAR:
      return A.degree(f) <= 0 && in_base_ideal(R, {a}, A.coeff(f, 0));
    case Kind::HeightOne: {
      if (A.degree(f) > 0) return false;
      Int x = A.coeff(f, 0).integer();
      if (R.kind() == RingKind::Integers) return x != 0;
      return gcd(x, R.modulus_int()) == 1;
    }
  }
  return false;
}

struct Run {
  RingPtr A;
  Elem a;
  Ideal aA;
  ReductionOptions opt;
  Spend spend;
  ReductionTrace trace;
  UnimodularRow cur;

  Run(const UnimodularRow& row, const Elem& a_in, const ReductionOptions& o, const char* what)
      : A(row.ring), a(a_in), aA(a_ideal(row.ring, a_in)), opt(o), spend{o.budget.nodes, what} {
    require_supported(*A);
    const Ring& R = A->coeff_ring();
    a = R.normalize(a);
    aA = a_ideal(A, a);
    if (R.is_zero(a)) throw PreconditionError("a must be nonzero");
    if (!in_base_ideal(R, component_gens(*A, 1), a)) throw PreconditionError("a t is not in the algebra");
    if (R.is_residue_ring()) {
      Elem p = R.pow(a, 64);
      if (!R.is_zero(p)) throw PreconditionError("a is not in the radical of " + R.name());
    }
    if (row.size() < 3) throw PreconditionError("rows of length >= 3 are required");
    if (!row_valid(row)) throw NotUnimodular("row witness does not verify");
    if (!congruent_e1_exact(*A, {a}, row.v)) throw PreconditionError("row is not congruent to e_1 modulo aA");
    cur = row;
    cur.relative = aA;
    trace.a = a;
    trace.initial = cur;
  }

  int d() const { return static_cast<int>(cur.size()) - 1; }
  int deg(int i) const { return A->degree(cur.v[i]); }
  int tail_degree() const {
    int m = -1;
    for (int j = 2; j <= d(); ++j) m = std::max(m, deg(j));
    return m;
  }

  void record(std::string name, EWord word, std::vector<TraceClaim> claims) {
    auto cert = certify(cur, word, aA);
    cur = cert.target;
    cur.relative = aA;
    trace.steps.push_back({std::move(name), std::move(word), cur, std::move(claims)});
  }

  std::vector<Elem> others(int skip) const {
    std::vector<Elem> g;
    for (int i = 0; i <= d(); ++i)
      if (i != skip) g.push_back(cur.v[i]);
    return g;
  }
  std::vector<int> other_index(int skip) const {
    std::vector<int> g;
    for (int i = 0; i <= d(); ++i)
      if (i != skip) g.push_back(i);
    return g;
  }

  // Word adding s * beta_k * v_{idx_k} to coordinate target.
  EWord add_word(int target, const std::vector<int>& idx, const std::vector<Elem>& beta, const Elem& s) const {
    EWord w;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      Elem lam = A->mul(s, beta[k]);
      if (!A->is_zero(lam)) w.push_back(rel(idx[k], target, lam));
    }
    return w;
  }

  Elem a_const() const { return A->monomial(a, 0); }

  // Makes coordinate j a-monic of degree D in [lo_deg, hi_deg] (searched in
  // the given order) by adding aA-multiples of the other coordinates.
  std::optional<std::pair<int, int>> make_monic(int j, const std::vector<int>& degrees) {
    const Ring& R = A->coeff_ring();
    auto g = others(j);
    int maxdeg = deg(j);
    for (const auto& x : g) maxdeg = std::max(maxdeg, A->degree(x));
    for (int D : degrees) {
      if (D < 0) continue;
      int cap = std::max(maxdeg, D) + opt.degree_slack;
      spend.take();
      if (!affine_solve(*A, cur.v[j], g, a_const(), D, R.one(), cap, /*skip_lead=*/true)) continue;
      auto comp = component_gens(*A, D);
      for (int M = 0; M <= D + opt.max_exponent; ++M) {
        Elem lead = R.pow(a, M);
        if (R.is_zero(lead)) break;
        if (!in_base_ideal(R, comp, lead)) continue;
        spend.take();
        auto sol = affine_solve(*A, cur.v[j], g, a_const(), D, lead, cap);
        if (!sol) continue;
        EWord w = add_word(j, other_index(j), sol->beta, a_const());
        pending_word = std::move(w);
        return std::make_pair(D, M);
      }
    }
    return std::nullopt;
  }
  EWord pending_word;

  std::vector<Elem> tail_coefficients() const {
    std::vector<Elem> c;
    const Ring& R = A->coeff_ring();
    for (int j = 2; j <= d(); ++j)
      for (int i = 0; i <= deg(j); ++i) {
        Elem x = A->coeff(cur.v[j], i);
        if (!R.is_zero(x)) c.push_back(x);
      }
    return c;
  }

  bool saturates(const std::vector<Elem>& gens) const {
    const Ring& R = A->coeff_ring();
    if (gens.empty()) return false;
    Elem p = R.one();
    for (int e = 0; e <= opt.saturation_exponent; ++e) {
      if (in_base_ideal(R, gens, p)) return true;
      p = R.mul(p, a);
    }
    return false;
  }
};

// Shift vectors for the tail coordinates, fewest nonzero entries first.
std::vector<std::vector<Elem>> shift_vectors(const Ring& A, const Elem& a, int count, int bound) {
  const Ring& R = A.coeff_ring();
  std::vector<Elem> cand{A.zero()};
  for (int j = 0; j <= bound; ++j) {
    Elem m = A.mul(A.monomial(a, 0), A.monomial(R.pow(a, j), j));
    cand.push_back(m);
    cand.push_back(A.neg(m));
  }
  std::vector<std::vector<Elem>> out;
  std::vector<std::size_t> idx(count, 0);
  while (true) {
    std::vector<Elem> v;
    for (auto i : idx) v.push_back(cand[i]);
    out.push_back(std::move(v));
    int p = 0;
    while (p < count && ++idx[p] == cand.size()) idx[p++] = 0;
    if (p == count) break;
    if (out.size() > 4096) break;
  }
  std::stable_sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
    auto nz = [&](const auto& v) { return std::count_if(v.begin(), v.end(), [&](const Elem& e) { return !A.is_zero(e); }); };
    return nz(x) < nz(y);
  });
  return out;
}

void make_monic_first(Run& run) {
  if (a_monic_exponent(*run.A, run.cur.v[0], run.a)) return;
  const Ring& A = *run.A;
  int d = run.d();
  UnimodularRow start = run.cur;
  std::vector<int> degrees;
  int d0 = std::max(run.deg(0), 0);
  for (int D = d0; D <= d0 + run.opt.degree_slack; ++D) degrees.push_back(D);
  for (int D = d0 - 1; D >= 0; --D) degrees.push_back(D);
  for (const auto& c : shift_vectors(A, run.a, d, run.opt.shift_bound)) {
    run.spend.take();
    run.cur = start;
    EWord shift;
    for (int i = 1; i <= d; ++i)
      if (!A.is_zero(c[i - 1])) shift.push_back(rel(0, i, c[i - 1]));
    if (!shift.empty()) run.cur = apply_word(run.cur, shift);
    auto got = run.make_monic(0, degrees);
    if (!got) continue;
    run.cur = start;
    if (!shift.empty()) run.record("shift", shift, {});
    run.record("a_monic", run.pending_word, {{Kind::AMonic, 0, got->second}});
    return;
  }
  run.cur = start;
  throw NoMonicFound("no a-monic combination for the first coordinate within the search bounds");
}

void rt0_round(Run& run) {
  const Ring& A = *run.A;
  if (!a_monic_exponent(A, run.cur.v[0], run.a)) throw PreconditionError("first coordinate is not a-monic");
  int m = run.tail_degree();
  if (m < 0) throw SaturationUndecided("the tail coefficients are all zero");
  if (!run.saturates(run.tail_coefficients()))
    throw SaturationUndecided("tail coefficients do not generate R_a within the exponent bound");

  std::vector<int> degrees;
  for (int D = 1; D <= m; ++D) degrees.push_back(D);
  degrees.push_back(0);
  auto got = run.make_monic(1, degrees);
  if (!got) throw NoMonicFound("no a-monic second coordinate of degree <= " + std::to_string(m));
  std::vector<TraceClaim> claims{{Kind::AMonic, 1, got->second}, {Kind::DegreeAtMost, 1, m}};
  run.record("rt0_second", run.pending_word, claims);

  for (int j = 2; j <= run.d(); ++j) {
    if (run.deg(j) <= m - 1) continue;
    auto g = run.others(j);
    int maxdeg = run.deg(j);
    for (const auto& x : g) maxdeg = std::max(maxdeg, A.degree(x));
    run.spend.take();
    auto sol = affine_solve(A, run.cur.v[j], g, run.a_const(), m - 1, std::nullopt, maxdeg + run.opt.degree_slack);
    if (!sol) throw NoMonicFound("tail coordinate " + std::to_string(j + 1) + " not reducible below degree " + std::to_string(m));
    run.record("rt0_tail", run.add_word(j, run.other_index(j), sol->beta, run.a_const()), {});
  }
  claims.clear();
  claims.push_back({Kind::AMonic, 1, got->second});
  for (int j = 2; j <= run.d(); ++j) claims.push_back({Kind::DegreeAtMost, j, m - 1});
  run.trace.steps.back().claims = claims;
}

// Sylvester resultant over Z by fraction-free elimination.
Int resultant(std::vector<Int> f, std::vector<Int> g) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  while (!g.empty() && g.back() == 0) g.pop_back();
  if (f.empty() || g.empty()) return 0;
  int m = static_cast<int>(f.size()) - 1, n = static_cast<int>(g.size()) - 1;
  int N = m + n;
  if (N == 0) return 1;
  std::vector<std::vector<Int>> S(N, std::vector<Int>(N, Int(0)));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) S[r][r + m - i] = f[i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) S[n + r][r + n - i] = g[i];
  Int prev = 1, sign = 1;
  for (int k = 0; k < N; ++k) {
    int piv = k;
    while (piv < N && S[piv][k] == 0) ++piv;
    if (piv == N) return 0;
    if (piv != k) {
      std::swap(S[piv], S[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < N; ++i) {
      for (int j = k + 1; j < N; ++j) S[i][j] = (S[i][j] * S[k][k] - S[i][k] * S[k][j]) / prev;
      S[i][k] = 0;
    }
    prev = S[k][k];
  }
  return sign * S[N - 1][N - 1];
}

std::vector<Int> int_coeffs(const Ring& A, const Elem& f) {
  std::vector<Int> c;
  for (int i = 0; i <= A.degree(f); ++i) c.push_back(A.coeff(f, i).integer());
  return c;
}

// Moves the tail content to a set generating R_a: v_j += a^{m+1} x B_j(t)
// with x a constant of (v_0, v_1)A. Small x are tried first, then
// a^e Res(v_0, v_1), which is comaximal with every odd prime of the
// content because v_0 has a unit leading coefficient there. With force,
// the result has a tail of degree exactly m even when already saturated.
void saturate_tails(Run& run, int m, bool force) {
  const Ring& A = *run.A;
  const Ring& R = A.coeff_ring();
  auto content = run.tail_coefficients();
  if (!force && run.saturates(content)) return;

  std::vector<Elem> xs;
  int bound = std::max(4, 6 * run.opt.shift_bound);
  for (int xi = 1; xi <= bound; ++xi)
    for (int sign : {1, -1}) xs.push_back(R.from_int(Int(sign * xi)));
  Int res = resultant(int_coeffs(A, run.cur.v[0]), int_coeffs(A, run.cur.v[1]));
  if (res != 0) {
    int top = std::max(run.deg(0), run.deg(1)) + run.opt.max_exponent;
    Elem p = R.from_int(res);
    for (int e = 0; e <= top; ++e) {
      xs.push_back(p);
      p = R.mul(p, run.a);
    }
  }

  for (const auto& x : xs) {
    if (R.is_zero(x)) continue;
    auto with_x = content;
    with_x.push_back(x);
    if (!run.saturates(with_x)) continue;
    run.spend.take();
    int cap = std::max(run.deg(0), run.deg(1)) + run.opt.degree_slack;
    auto mem = affine_solve(A, A.zero(), {run.cur.v[0], run.cur.v[1]}, A.one(), 0, x, cap);
    if (!mem) continue;
    // Coefficient vectors b for one tail at a time, small entries first.
    for (int j = 2; j <= run.d(); ++j) {
      const int len = m + 1, range = 2, width = 2 * range + 1;
      std::size_t total = 1;
      for (int i = 0; i < len && total < 100000; ++i) total *= width;
      std::vector<int> b(len, 0);
      for (std::size_t code = 1; code < total; ++code) {
        std::size_t c = code;
        for (int i = 0; i < len; ++i) {
          b[i] = static_cast<int>(c % width) - range;
          c /= width;
        }
        if (force && b[m] == 0) continue;
        std::vector<Elem> poly(len, R.zero());
        Elem am = R.pow(run.a, m);
        for (int i = 0; i < len; ++i) poly[i] = R.mul(am, R.from_int(Int(b[i])));
        Elem s = A.mul(run.a_const(), A.normalize(Elem(poly)));
        Elem nv = A.add(run.cur.v[j], A.mul(s, A.monomial(x, 0)));
        if (force && A.degree(nv) != m) continue;
        std::vector<Elem> trial;
        for (int k = 2; k <= run.d(); ++k) {
          const Elem& f = (k == j) ? nv : run.cur.v[k];
          for (int i = 0; i <= A.degree(f); ++i)
            if (!R.is_zero(A.coeff(f, i))) trial.push_back(A.coeff(f, i));
        }
        if (!run.saturates(trial)) continue;
        std::vector<TraceClaim> claims;
        for (int k = 2; k <= run.d(); ++k) claims.push_back({Kind::DegreeAtMost, k, m});
        run.record("saturate", run.add_word(j, {0, 1}, mem->beta, s), claims);
        return;
      }
    }
  }
  throw SaturationUndecided("no constant x in (v_1, v_2)A making the tail content generate R_a");
}

void linearize(Run& run) {
  const Ring& A = *run.A;
  auto e = a_monic_exponent(A, run.cur.v[1], run.a);
  if (e && run.deg(1) == 1) return;
  auto got = run.make_monic(1, {1});
  if (!got) {
    // Raise the tail to a saturating linear one and run a last round.
    try {
      saturate_tails(run, 1, true);
      rt0_round(run);
    } catch (const SaturationUndecided& e) {
      throw NoMonicFound(std::string("no linear a-monic second coordinate: ") + e.what());
    }
    e = a_monic_exponent(A, run.cur.v[1], run.a);
    if (e && run.deg(1) == 1) return;
    got = run.make_monic(1, {1});
  }
  if (!got) throw NoMonicFound("no linear a-monic second coordinate");
  run.record("linearize", run.pending_word, {{Kind::AMonic, 1, got->second}, {Kind::DegreeEquals, 1, 1}});
}

void height_step(Run& run) {
  const Ring& A = *run.A;
  const Ring& R = A.coeff_ring();
  int d = run.d();
  Elem wd = A.coeff(run.cur.v[d], 0);
  if (R.kind() == RingKind::Integers) {
    if (!R.is_zero(wd)) return;
    // (nil : 0) = Z; y = 1 gives w_d + a = a, and the nilpotent correction
    // a y w_d p_d vanishes.
    EWord w;
    for (int i = 0; i < d; ++i) {
      Elem lam = A.mul(run.a_const(), run.cur.w[i]);
      if (!A.is_zero(lam)) w.push_back(rel(i, d, lam));
    }
    run.record("height", w, {{Kind::HeightOne, d, 0}});
    return;
  }
  if (!R.is_residue_ring()) {
    run.trace.flags.push_back("height step skipped: minimal primes not computable over " + R.name());
    return;
  }
  const Int n = R.modulus_int();
  auto is_unit_mod_primes = [&](const Elem& x) { return gcd(x.integer(), n) == 1; };
  if (is_unit_mod_primes(wd)) return;
  for (const auto& y : R.elements()) {
    if (!R.is_zero(R.pow(R.mul(y, wd), 64))) continue;
    Elem cand = R.add(wd, R.mul(run.a, y));
    if (!is_unit_mod_primes(cand)) continue;
    Elem ay = A.monomial(R.mul(run.a, y), 0);
    Elem x = A.mul(A.mul(ay, run.cur.v[d]), run.cur.w[d]);
    EWord w;
    for (int i = 0; i < d; ++i) {
      Elem lam = A.mul(ay, run.cur.w[i]);
      if (!A.is_zero(lam)) w.push_back(rel(i, d, lam));
    }
    if (!A.is_zero(x)) {
      run.record("height_partial", w, {});
      run.trace.flags.push_back("height step: nilpotent correction left in place");
      return;
    }
    run.record("height", w, {{Kind::HeightOne, d, 0}});
    return;
  }
  run.trace.flags.push_back("height step: every element of w_d + a (nil : w_d) lies in a minimal prime");
}

}  // namespace

std::string claim_text(const TraceClaim& c) {
  return std::string(kind_word(c.kind)) + " " + std::to_string(c.coord + 1) + " " + std::to_string(c.value);
}

ReductionTrace make_a_monic(const UnimodularRow& row, const Elem& a, const ReductionOptions& opt) {
  Run run(row, a, opt, "make_a_monic");
  make_monic_first(run);
  return run.trace;
}

ReductionTrace rt0_reduce(const UnimodularRow& row, const Elem& a, const ReductionOptions& opt) {
  Run run(row, a, opt, "rt0_reduce");
  rt0_round(run);
  return run.trace;
}

ReductionTrace roitman_machine(const UnimodularRow& row, const Elem& a, const ReductionOptions& opt) {
  Run run(row, a, opt, "roitman_machine");
  make_monic_first(run);
  for (int m = run.tail_degree(); m >= 1; m = run.tail_degree()) {
    saturate_tails(run, m, false);
    rt0_round(run);
    if (run.tail_degree() >= m) throw Error("internal: tail degree did not decrease");
  }
  linearize(run);
  height_step(run);

  const Ring& A = *run.A;
  std::vector<TraceClaim> final_claims{{Kind::AMonic, 0, *a_monic_exponent(A, run.cur.v[0], run.a)},
                                       {Kind::AMonic, 1, *a_monic_exponent(A, run.cur.v[1], run.a)},
                                       {Kind::DegreeEquals, 1, 1}};
  for (int j = 2; j <= run.d(); ++j) final_claims.push_back({Kind::ConstantInAR, j, 0});
  if (run.trace.steps.empty()) run.record("check", {}, {});
  auto& cl = run.trace.steps.back().claims;
  for (const auto& c : final_claims) {
    bool dup = std::any_of(cl.begin(), cl.end(), [&](const TraceClaim& x) {
      return x.kind == c.kind && x.coord == c.coord && x.value == c.value;
    });
    if (!dup) cl.push_back(c);
  }
  return run.trace;
}

ReductionTrace height_normalize(const UnimodularRow& row, const Elem& a, const ReductionOptions& opt) {
  Run run(row, a, opt, "height_normalize");
  for (int j = 2; j <= run.d(); ++j)
    if (run.deg(j) > 0) throw PreconditionError("tail coordinates must be constants");
  height_step(run);
  return run.trace;
}

UnimodularRow random_relative_row(const RingPtr& A, const Elem& a, int n, std::uint64_t seed, int letters,
                                  int max_deg) {
  require_supported(*A);
  const Ring& R = A->coeff_ring();
  std::mt19937_64 rng(seed);
  std::vector<Elem> e1(n, A->zero());
  e1[0] = A->one();
  UnimodularRow row = row_with_witness(A, e1, e1);
  Ideal aA = a_ideal(A, a);
  std::uniform_int_distribution<int> pos(0, n - 1), coef(-2, 2), degd(0, max_deg);
  EWord w;
  while (static_cast<int>(w.size()) < letters) {
    int i = pos(rng), j = pos(rng);
    if (i == j) continue;
    Elem beta = A->zero();
    int terms = 1 + degd(rng);
    for (int k = 0; k < terms; ++k) {
      int dg = degd(rng);
      auto comp = component_gens(*A, dg);
      Elem c = R.mul(comp[rng() % comp.size()], R.from_int(Int(coef(rng))));
      if (!R.is_zero(c)) beta = A->add(beta, A->monomial(c, dg));
    }
    Elem lam = A->mul(A->monomial(a, 0), beta);
    if (A->is_zero(lam)) continue;
    w.push_back(rel(i, j, lam));
  }
  auto out = certify(row, w, aA).target;
  out.relative = aA;
  return out;
}

// ------------------------------------------------------------ traces

bool verify_trace(const ReductionTrace& t, std::string* why) {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  try {
    const RingPtr& A = t.initial.ring;
    if (!A) return fail("trace has no ring");
    Ideal aA = a_ideal(A, t.a);
    if (!row_valid(t.initial)) return fail("initial row witness does not verify");
    if (!congruent_e1_exact(*A, {t.a}, t.initial.v)) return fail("initial row is not e_1 modulo aA");
    UnimodularRow cur = t.initial;
    for (std::size_t s = 0; s < t.steps.size(); ++s) {
      const auto& st = t.steps[s];
      EquivalenceCertificate c{cur, st.row, st.word, aA};
      if (!verify_certificate(c)) return fail("step " + std::to_string(s + 1) + " (" + st.name + ") does not verify");
      for (const auto& cl : st.claims)
        if (!claim_holds(*A, t.a, st.row, cl))
          return fail("step " + std::to_string(s + 1) + " (" + st.name + "): claim '" + claim_text(cl) + "' fails");
      cur = st.row;
    }
  } catch (const Error& e) {
    return fail(std::string("error while verifying: ") + e.what());
  }
  if (why) why->clear();
  return true;
}

std::string trace_to_text(const ReductionTrace& t) {
  const Ring& A = *t.initial.ring;
  std::ostringstream out;
  out << "# unirow reduction trace v1\n";
  out << "ring " << A.name() << "\n";
  out << "a " << A.coeff_ring().print(t.a) << "\n";
  out << "initial " << print_row(t.initial) << "\n";
  for (const auto& s : t.steps) {
    out << "step " << s.name << "\n";
    out << "word " << print_word(A, s.word) << "\n";
    out << "row " << print_row(s.row) << "\n";
    for (const auto& c : s.claims) out << "claim " << claim_text(c) << "\n";
  }
  for (const auto& f : t.flags) out << "flag " << f << "\n";
  out << "end\n";
  return out.str();
}

ReductionTrace parse_trace(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  ReductionTrace t;
  RingPtr A;
  bool header = false, ended = false;
  auto err = [&](const std::string& what) { return ParseError("trace line " + std::to_string(lineno) + ": " + what, 0); };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (!header) {
      if (line != "# unirow reduction trace v1") throw err("missing schema header");
      header = true;
      continue;
    }
    auto sp = line.find(' ');
    std::string key = line.substr(0, sp);
    std::string rest = sp == std::string::npos ? "" : line.substr(sp + 1);
    if (ended) throw err("content after end");
    if (key == "ring") {
      A = parse_descriptor(rest);
    } else if (key == "a") {
      if (!A) throw err("a before ring");
      t.a = A->coeff_ring().parse(rest);
    } else if (key == "initial") {
      if (!A) throw err("row before ring");
      t.initial = parse_row(A, rest);
    } else if (key == "step") {
      t.steps.push_back({rest, {}, {}, {}});
    } else if (key == "word") {
      if (t.steps.empty() || !A) throw err("word outside a step");
      t.steps.back().word = parse_word(*A, rest);
    } else if (key == "row") {
      if (t.steps.empty() || !A) throw err("row outside a step");
      t.steps.back().row = parse_row(A, rest);
    } else if (key == "claim") {
      if (t.steps.empty()) throw err("claim outside a step");
      std::istringstream cs(rest);
      std::string k;
      int coord = 0, value = 0;
      if (!(cs >> k >> coord >> value)) throw err("malformed claim");
      TraceClaim c;
      bool found = false;
      for (Kind kk : {Kind::AMonic, Kind::DegreeAtMost, Kind::DegreeEquals, Kind::ConstantInAR, Kind::HeightOne})
        if (k == kind_word(kk)) {
          c.kind = kk;
          found = true;
        }
      if (!found) throw err("unknown claim kind '" + k + "'");
      c.coord = coord - 1;
      c.value = value;
      t.steps.back().claims.push_back(c);
    } else if (key == "flag") {
      t.flags.push_back(rest);
    } else if (key == "end") {
      ended = true;
    } else {
      throw err("unknown key '" + key + "'");
    }
  }
  if (!header) throw ParseError("empty trace", 0);
  if (!ended) throw ParseError("trace is truncated (no end line)", 0);
  if (!A || !t.initial.ring) throw ParseError("trace lacks ring or initial row", 0);
  for (auto& s : t.steps)
    if (!s.row.ring) throw ParseError("step '" + s.name + "' has no row", 0);
  return t;
}

std::string verify_trace_text(const std::string& text) {
  ReductionTrace t;
  try {
    t = parse_trace(text);
  } catch (const Error& e) {
    return e.what();
  }
  std::string why;
  if (!verify_trace(t, &why)) return why;
  return {};
}

// ------------------------------------------------------------ Artin-Rees

namespace {

struct PrincipalBase {
  const Ring& R;
  bool modular;
  Int n;

  explicit PrincipalBase(const Ring& r)
      : R(r), modular(r.is_residue_ring()), n(r.is_residue_ring() ? r.modulus_int() : Int(0)) {
    if (r.kind() != RingKind::Integers && !modular)
      throw Unsupported("Artin-Rees exponents need base Z or Z/n, got " + r.name());
  }
  // Nonnegative generator; for Z/n a divisor of n, with n standing for (0).
  Int gen(const std::vector<Elem>& gens) const {
    Int g = modular ? n : Int(0);
    for (const auto& x : gens) g = gcd(g, x.integer());
    return abs(g);
  }
  Int prod(const Int& x, const Int& y) const { return modular ? gcd(x * y, n) : x * y; }
  Int inter(const Int& x, const Int& y) const {
    if (x == 0 || y == 0) return 0;
    return lcm(x, y);
  }
  bool divides(const Int& x, const Int& y) const {  // (y) inside (x)
    if (x == 0) return y == 0 || (modular && y == n);
    return y % x == 0;
  }
};

struct ArCells {
  std::vector<Int> Ipow, comp;
  Int gJ;
};

ArCells ar_data(const PrincipalBase& B, const Ring& A, const Ideal& I, const Ideal& J, int N, int D) {
  ArCells c;
  Int gI = B.gen(I.gens);
  c.gJ = B.gen(J.gens);
  c.Ipow.push_back(B.modular ? gcd(Int(1), B.n) : Int(1));
  for (int k = 1; k <= N; ++k) c.Ipow.push_back(B.prod(c.Ipow.back(), gI));
  for (int m = 0; m <= D; ++m) c.comp.push_back(B.gen(component_gens(A, m)));
  return c;
}

std::pair<Int, Int> ar_cell(const PrincipalBase& B, const ArCells& c, int n, int m, int k) {
  Int lhs = B.inter(B.prod(c.Ipow[n], c.comp[m]), c.gJ);
  Int rhs = B.prod(B.prod(c.gJ, c.Ipow[n - k]), c.comp[m]);
  return {lhs, rhs};
}

bool ar_holds(const PrincipalBase& B, const ArCells& c, int k, int N, int D) {
  for (int n = k; n <= N; ++n)
    for (int m = 0; m <= D; ++m) {
      auto [l, r] = ar_cell(B, c, n, m, k);
      if (!B.divides(r, l)) return false;
    }
  return true;
}

}  // namespace

ArtinReesWitness artin_rees_exponent(const RingPtr& A, const Ideal& I, const Ideal& J, int N, int D) {
  require_supported(*A);
  if (N < 0 || D < 0) throw PreconditionError("window bounds must be nonnegative");
  const Ring& R = A->coeff_ring();
  PrincipalBase B(R);
  for (const auto& g : I.gens)
    if (!in_base_ideal(R, component_gens(*A, 1), R.normalize(g)))
      throw PreconditionError("I is not contained in I_1");
  ArCells c = ar_data(B, *A, I, J, N, D);
  for (int k = 0; k <= N; ++k) {
    if (!ar_holds(B, c, k, N, D)) continue;
    ArtinReesWitness w{A, I, J, k, N, D, {}};
    for (int n = k; n <= N; ++n)
      for (int m = 0; m <= D; ++m) {
        auto [l, r] = ar_cell(B, c, n, m, k);
        Elem le = R.from_int(l), re = R.from_int(r);
        auto mem = ideal_membership(Ideal{R.self(), {re}}, le);
        if (!mem.member()) throw Error("internal: Artin-Rees containment lost its witness");
        w.cells.push_back({n, m, le, re, mem.coeffs[0]});
      }
    return w;
  }
  throw NoExponentInWindow("no Artin-Rees exponent k <= " + std::to_string(N) + " on the window");
}

bool verify_artin_rees(const ArtinReesWitness& w) {
  try {
    const Ring& R = w.algebra->coeff_ring();
    PrincipalBase B(R);
    ArCells c = ar_data(B, *w.algebra, w.I, w.J, w.N, w.D);
    std::size_t expect = static_cast<std::size_t>(w.N - w.k + 1) * static_cast<std::size_t>(w.D + 1);
    if (w.cells.size() != expect) return false;
    std::size_t idx = 0;
    for (int n = w.k; n <= w.N; ++n)
      for (int m = 0; m <= w.D; ++m) {
        const auto& cell = w.cells[idx++];
        if (cell.n != n || cell.m != m) return false;
        auto [l, r] = ar_cell(B, c, n, m, w.k);
        if (cell.lhs != R.from_int(l) || cell.rhs != R.from_int(r)) return false;
        if (R.mul(cell.witness, cell.rhs) != cell.lhs) return false;
      }
    if (w.k > 0 && ar_holds(B, c, w.k - 1, w.N, w.D)) return false;  // not least
    return true;
  } catch (const Error&) {
    return false;
  }
}

// ---------------------------------------------------------------- theta

ThetaMap theta_map(const UnimodularRow& v, const Ideal& I, int l, int N, int D) {
  const RingPtr& A = v.ring;
  if (A->kind() != RingKind::Graded && A->kind() != RingKind::Poly)
    throw QuotientUnsupported("theta needs a graded or polynomial ring, got " + A->name());
  const Ring& R = A->coeff_ring();
  if (R.kind() != RingKind::IntegersMod)
    throw QuotientUnsupported("the quotient by v_d R[t] cap A is only computed over Z/n");
  if (v.size() < 2) throw PreconditionError("row too short");
  const Elem& last = v.v.back();
  if (A->degree(last) > 0) throw PreconditionError("last coordinate must be a constant");
  Elem vd = A->coeff(last, 0);
  std::vector<Elem> Ig;
  for (const auto& g : I.gens) Ig.push_back(R.normalize(g));
  if (!in_base_ideal(R, Ig, vd)) throw PreconditionError("last coordinate is not in I");
  Ideal IA{A, {}};
  for (const auto& g : Ig) IA.gens.push_back(A->monomial(g, 0));
  if (!row_valid(v) || !congruent_e1_exact(*A, Ig, v.v)) throw PreconditionError("row is not in Um(A, IA)");
  ArtinReesWitness ar;
  try {
    ar = artin_rees_exponent(A, Ideal{R.self(), Ig}, Ideal{R.self(), {vd}}, N, D);
  } catch (const NoExponentInWindow& e) {
    throw WindowViolation(std::string("no exponent on the window: ") + e.what());
  }
  if (l < ar.k + 1)
    throw WindowViolation("l = " + std::to_string(l) + " is below k + 1 = " + std::to_string(ar.k + 1));
  return ThetaMap{A, Ideal{R.self(), Ig}, vd, l, static_cast<int>(v.size()), ar};
}

UnimodularRow theta_apply(const ThetaMap& map, const std::vector<Elem>& lift) {
  const Ring& A = *map.algebra;
  const Ring& R = A.coeff_ring();
  if (static_cast<int>(lift.size()) + 1 != map.n) throw PreconditionError("lift has the wrong length");
  Ideal Il = ideal_power(map.I, map.l);
  for (std::size_t i = 0; i < lift.size(); ++i) {
    Elem diff = i == 0 ? A.sub(lift[i], A.one()) : A.normalize(lift[i]);
    for (int m = 0; m <= A.degree(diff); ++m) {
      Ideal part = ideal_product(Il, Ideal{R.self(), component_gens(A, m)});
      if (!in_base_ideal(R, part.gens, A.coeff(diff, m)))
        throw PreconditionError("lift is not congruent to e_1 modulo I^l A");
    }
  }
  std::vector<Elem> row = lift;
  row.push_back(A.monomial(map.v_d, 0));
  Ideal IA{map.algebra, {}};
  for (const auto& g : map.I.gens) IA.gens.push_back(A.monomial(g, 0));
  return make_row(map.algebra, row, IA);
}

// ----------------------------------------------------- subintegral step

SubintegralExtension subintegral_extend(const RingPtr& A, int p, int check_degree) {
  if (A->kind() != RingKind::Graded) throw Unsupported("subintegral step needs a graded subalgebra");
  const Ring& R = A->coeff_ring();
  if (R.kind() != RingKind::Integers) throw Unsupported("subintegral step needs the domain Z as base");
  if (p < 2) throw PreconditionError("p must be at least 2");
  const GradedAlgebra& G = A->algebra();
  auto sg = G.semigroup();
  if (sg.gcd != 1 || !sg.conductor || *sg.conductor > p)
    throw ConductorUnsatisfied("A_i vanishes for some i >= " + std::to_string(p));
  auto pick = [&](int i) {
    for (const auto& c : G.component(i))
      if (!R.is_zero(c)) return c;
    throw ConductorUnsatisfied("A_" + std::to_string(i) + " is zero");
  };
  Elem c = pick(2 * (p - 1));
  for (const auto& g : G.gens()) c = R.mul(c, pick(g.second + p - 1));
  auto gens = G.gens();
  gens.push_back({c, p - 1});
  RingPtr Bp = Ring::graded(G.base(), gens);
  const Ring& B = *Bp;
  Elem u = B.monomial(c, p - 1);
  if (!G.contains(B.mul(u, u).list()) || !G.contains(B.pow(u, 3).list()))
    throw Error("internal: u^2 or u^3 escaped A");
  int maxg = 0;
  for (const auto& g : G.gens()) maxg = std::max(maxg, g.second);
  int top = check_degree > 0 ? check_degree : p + 2 * maxg + 2;
  for (int i = p; i <= top; ++i) {
    auto a = G.component(i), b = B.algebra().component(i);
    for (const auto& x : b)
      if (!in_base_ideal(R, a, x)) throw Error("internal: B_" + std::to_string(i) + " exceeds A_" + std::to_string(i));
    for (const auto& x : a)
      if (!in_base_ideal(R, b, x)) throw Error("internal: A_" + std::to_string(i) + " exceeds B_" + std::to_string(i));
  }
  bool nonzero = false;
  for (const auto& x : B.algebra().component(p - 1)) nonzero |= !R.is_zero(x);
  if (!nonzero) throw Error("internal: B_{p-1} is zero");
  return SubintegralExtension{Bp, c, p - 1, u};
}

}  // namespace unirow
