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

// Census-level checks of the orbit-space maps: quotients by an ideal,
// retractions, the excision embedding and the diagonal sum map.

#include <functional>
#include <map>
#include <set>

#include "unirow/orbit.hpp"
#include "unirow/rows.hpp"

namespace unirow {

namespace {

using RowMap = std::function<std::vector<Elem>(const std::vector<Elem>&)>;

struct Side {
  std::string label;
  std::shared_ptr<FiniteRing> F;
  OrbitCensus c;
};

Side census(const std::string& label, const RingPtr& R, int n, const std::optional<Ideal>& I) {
  Side s{label, std::make_shared<FiniteRing>(R), {}};
  GeneratorConfig cfg;
  cfg.relative = I.has_value();
  s.c = orbit_bfs(*s.F, n, I, cfg);
  return s;
}

std::vector<Elem> row_of(const Side& s, std::size_t k) { return from_frow(*s.F, s.c.rows[k]); }

std::int64_t orbit_of(const Side& s, const std::vector<Elem>& v) {
  auto k = s.c.find(to_frow(*s.F, v));
  return k < 0 ? -1 : s.c.orbit[static_cast<std::size_t>(k)];
}

struct Report {
  ExperimentReport& out;
  void claim(bool ok, const std::string& what) {
    out.assertions.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    if (!ok) out.passed = false;
  }
};

// Induced map on orbits. Rows are mapped one by one; every census edge
// (row, parent) must land in a single target orbit, witnessed by a
// verified certificate. Returns the orbit map, -1 where undefined.
std::vector<std::int64_t> induced(Report& rep, const std::string& name, const Side& src, const Side& dst,
                                  const RowMap& f) {
  std::vector<std::int64_t> image(src.c.orbit_count, -1);
  bool rows_ok = true, defined = true;
  std::size_t certs = 0;
  for (std::size_t k = 0; k < src.c.rows.size(); ++k) {
    auto img = f(row_of(src, k));
    auto o = orbit_of(dst, img);
    if (o < 0) {
      rows_ok = false;
      continue;
    }
    auto& slot = image[src.c.orbit[k]];
    if (slot >= 0 && slot != o) defined = false;
    slot = o;
    if (src.c.parent[k] < 0) continue;
    auto pimg = f(row_of(src, static_cast<std::size_t>(src.c.parent[k])));
    auto w = certificate_path(*dst.F, dst.c, img, pimg);
    if (!w) {
      defined = false;
      continue;
    }
    auto from = make_row(dst.F->ring(), img, dst.c.relative);
    if (verify_certificate(certify(from, *w, dst.c.relative))) ++certs;
    else defined = false;
  }
  rep.claim(rows_ok, name + " sends " + src.label + " rows into " + dst.label);
  rep.claim(defined, name + " is well defined on orbits (" + std::to_string(certs) + " certificates verified)");
  return image;
}

void claim_stable(Report& rep, const Side& s) {
  if (s.c.relative) rep.claim(s.c.stabilized, s.label + " partition is the full relative orbit partition");
}

std::string counts(const std::vector<std::int64_t>& image, std::uint32_t target) {
  std::set<std::int64_t> hit(image.begin(), image.end());
  return std::to_string(image.size()) + " -> " + std::to_string(hit.size()) + " of " + std::to_string(target);
}

bool injective(const std::vector<std::int64_t>& image) {
  std::set<std::int64_t> hit(image.begin(), image.end());
  return hit.size() == image.size() && !hit.count(-1);
}

bool surjective(const std::vector<std::int64_t>& image, std::uint32_t target) {
  std::set<std::int64_t> hit(image.begin(), image.end());
  hit.erase(-1);
  return hit.size() == target;
}

std::vector<Elem> parse_gens(const RingPtr& R, const std::vector<std::string>& text) {
  std::vector<Elem> g;
  for (const auto& t : text) g.push_back(R->parse(t));
  return g;
}

bool nilpotent(const FiniteRing& F, std::uint32_t x) {
  std::uint32_t p = x;
  for (std::uint32_t k = 0; k <= F.size(); ++k) {
    if (p == F.zero()) return true;
    p = F.mul(p, x);
  }
  return false;
}

// R/J for a residue ring R = Z/n: Z/m with m = gcd(n, J).
RingPtr residue_quotient(const RingPtr& R, const std::vector<Elem>& J) {
  if (!R->is_residue_ring()) throw PreconditionError("quotient experiments need a residue ring of Z");
  Int m = R->modulus_int();
  for (const auto& g : J) m = gcd(m, g.integer());
  if (m <= 1) throw PreconditionError("quotient by the unit ideal");
  return Ring::integers_mod(m);
}

RowMap reduce_to(const RingPtr& target) {
  return [target](const std::vector<Elem>& v) {
    std::vector<Elem> out;
    for (const auto& x : v) out.push_back(target->normalize(x));
    return out;
  };
}

std::vector<Elem> image_gens(const RingPtr& target, const std::vector<Elem>& gens) {
  std::vector<Elem> out;
  for (const auto& g : gens) out.push_back(target->normalize(g));
  return out;
}

std::vector<Elem> e1(const Ring& R, int n) {
  std::vector<Elem> v(n, R.zero());
  v[0] = R.one();
  return v;
}

// --------------------------------------------------------- nil_product

void run_nil_product(Report& rep, const RingPtr& R, int n, const std::vector<Elem>& I, const std::vector<Elem>& J) {
  FiniteRing F(R);
  for (const auto& a : I)
    for (const auto& b : J)
      if (!nilpotent(F, F.index(R->mul(a, b)))) throw HypothesisViolated("IJ is not contained in the nilradical");
  rep.claim(true, "IJ is nilpotent");
  auto Rb = residue_quotient(R, J);
  auto src = census("Um(R, I)", R, n, Ideal{R, I});
  auto dst = census("Um(R/J, I/J)", Rb, n, Ideal{Rb, image_gens(Rb, I)});
  claim_stable(rep, src);
  claim_stable(rep, dst);
  auto image = induced(rep, "reduction mod J", src, dst, reduce_to(Rb));
  rep.claim(injective(image), "reduction is injective on orbits (" + counts(image, dst.c.orbit_count) + ")");
  rep.claim(surjective(image, dst.c.orbit_count), "reduction is surjective on orbits");
  // Row-level surjectivity: every row of the quotient lifts.
  std::size_t lifted = 0;
  std::set<FRow> images;
  for (std::size_t k = 0; k < src.c.rows.size(); ++k) images.insert(to_frow(*dst.F, reduce_to(Rb)(row_of(src, k))));
  for (const auto& r : dst.c.rows) lifted += images.count(r);
  rep.claim(lifted == dst.c.rows.size(), "every row of Um(R/J, I/J) lifts to Um(R, I)");
}

// ----------------------------------------------------------- sum_split

void run_sum_split(Report& rep, const RingPtr& R, int n, const std::vector<Elem>& I, const std::vector<Elem>& J) {
  for (const auto& a : I)
    for (const auto& b : J)
      if (!R->is_zero(R->mul(a, b))) throw HypothesisViolated("IJ is not zero");
  rep.claim(true, "IJ = 0");
  std::vector<Elem> IJsum = I;
  IJsum.insert(IJsum.end(), J.begin(), J.end());
  auto RmodJ = residue_quotient(R, J), RmodI = residue_quotient(R, I);
  auto U = census("Um(R, I+J)", R, n, Ideal{R, IJsum});
  auto A = census("Um(R/J, I)", RmodJ, n, Ideal{RmodJ, image_gens(RmodJ, I)});
  auto B = census("Um(R/I, J)", RmodI, n, Ideal{RmodI, image_gens(RmodI, J)});
  auto SI = census("Um(R, I)", R, n, Ideal{R, I});
  auto SJ = census("Um(R, J)", R, n, Ideal{R, J});
  for (const Side* s : {&U, &A, &B, &SI, &SJ}) claim_stable(rep, *s);

  auto ia = induced(rep, "reduction mod J", U, A, reduce_to(RmodJ));
  auto ib = induced(rep, "reduction mod I", U, B, reduce_to(RmodI));
  std::set<std::pair<std::int64_t, std::int64_t>> pairs;
  for (std::size_t o = 0; o < ia.size(); ++o) pairs.insert({ia[o], ib[o]});
  const std::size_t product = std::size_t(A.c.orbit_count) * B.c.orbit_count;
  rep.claim(pairs.size() == ia.size() && pairs.size() == product && !pairs.count({-1, -1}),
            "natural map is a bijection: " + std::to_string(U.c.orbit_count) + " <-> " +
                std::to_string(A.c.orbit_count) + " x " + std::to_string(B.c.orbit_count));

  // Diagonal map (1 + i_1, i_2, ...), (1 + j_1, j_2, ...) -> sum minus e_1,
  // on all pairs of rows.
  const Ring& r = *R;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::int64_t> diag;
  bool in_u = true, defined = true, composite = true;
  std::size_t checked = 0;
  for (std::size_t x = 0; x < SI.c.rows.size(); ++x)
    for (std::size_t y = 0; y < SJ.c.rows.size(); ++y) {
      auto vx = row_of(SI, x), vy = row_of(SJ, y);
      std::vector<Elem> d(n);
      for (int k = 0; k < n; ++k) d[k] = r.add(vx[k], vy[k]);
      d[0] = r.sub(d[0], r.one());
      auto o = orbit_of(U, d);
      if (o < 0) {
        in_u = false;
        continue;
      }
      auto [it, fresh] = diag.emplace(std::make_pair(SI.c.orbit[x], SJ.c.orbit[y]), o);
      if (!fresh && it->second != o) defined = false;
      if (reduce_to(RmodJ)(d) != reduce_to(RmodJ)(vx) || reduce_to(RmodI)(d) != reduce_to(RmodI)(vy))
        composite = false;
      ++checked;
    }
  rep.claim(in_u, "diagonal sums lie in Um(R, I+J) on all " + std::to_string(checked) + " pairs");
  rep.claim(defined, "diagonal map is well defined on orbit pairs");
  rep.claim(composite, "diagonal map followed by the reductions returns the pair");
  std::set<std::int64_t> hit;
  for (const auto& [k, v] : diag) hit.insert(v);
  rep.claim(diag.size() == std::size_t(SI.c.orbit_count) * SJ.c.orbit_count && hit.size() == diag.size() &&
                hit.size() == U.c.orbit_count,
            "diagonal map is a bijection onto Um(R, I+J) orbits");
}

// ------------------------------------------------------ retract sequence

struct Retraction {
  RowMap q;        // R -> S
  RowMap section;  // S -> R
  std::vector<Elem> kernel;
};

Retraction find_retraction(const RingPtr& R, const RingPtr& S) {
  auto each = [](std::function<Elem(const Elem&)> f) -> RowMap {
    return [f](const std::vector<Elem>& v) {
      std::vector<Elem> out;
      for (const auto& x : v) out.push_back(f(x));
      return out;
    };
  };
  Retraction r;
  if (R->same(*S)) {
    r.q = r.section = each([](const Elem& x) { return x; });
  } else if (R->kind() == RingKind::Excision && R->base()->same(*S)) {
    RingPtr Rc = R;
    r.q = each([Rc](const Elem& x) { return excision_map(*Rc, ExcisionMap::Epsilon, x); });
    r.section = each([Rc](const Elem& x) { return excision_map(*Rc, ExcisionMap::Iota, x); });
  } else if (R->kind() == RingKind::Quotient && R->is_polynomial_like() && R->coeff_ring().same(*S) &&
             R->coeff_ring().is_zero(R->coeff(R->modulus_poly(), 0))) {
    // t -> 0 with the constants as section.
    RingPtr Rc = R;
    r.q = each([Rc](const Elem& x) { return Rc->coeff(x, 0); });
    r.section = each([Rc](const Elem& x) { return Rc->monomial(x, 0); });
  } else {
    throw HypothesisViolated("no retraction " + R->name() + " -> " + S->name() + " is available");
  }
  for (const auto& x : R->elements())
    if (S->is_zero(r.q({x})[0])) r.kernel.push_back(x);
  return r;
}

// 0 -> U(R, I) -> U(R) -> U(S) -> 0 with alpha given by `alpha`.
void exact_three_term(Report& rep, const Side& rel, const Side& mid, const Side& quo, const RowMap& alpha,
                      const RowMap& q, const RowMap& section, const std::string& alpha_name) {
  auto ia = induced(rep, alpha_name, rel, mid, alpha);
  auto iq = induced(rep, "q_*", mid, quo, q);
  rep.claim(injective(ia), alpha_name + " is injective (" + counts(ia, mid.c.orbit_count) + ")");
  rep.claim(surjective(iq, quo.c.orbit_count), "q_* is surjective (" + counts(iq, quo.c.orbit_count) + ")");
  bool split = true;
  for (const auto& row : quo.c.rows) {
    auto v = from_frow(*quo.F, row);
    if (orbit_of(mid, section(v)) < 0 || q(section(v)) != v) split = false;
  }
  rep.claim(split, "the section lifts every row and q o section = id");
  const auto base = orbit_of(quo, e1(*quo.F->ring(), static_cast<int>(quo.c.n)));
  std::set<std::int64_t> kernel, image(ia.begin(), ia.end());
  for (std::size_t o = 0; o < iq.size(); ++o)
    if (iq[o] == base) kernel.insert(static_cast<std::int64_t>(o));
  rep.claim(kernel == image, "image of " + alpha_name + " equals the kernel of q_* (" +
                                 std::to_string(kernel.size()) + " orbits)");
}

void run_retract(Report& rep, const RingPtr& R, const RingPtr& S, int n) {
  auto r = find_retraction(R, S);
  rep.claim(true, "retraction " + R->name() + " -> " + S->name() + " with section");
  Ideal I{R, r.kernel};
  auto rel = census("Um(R, ker q)", R, n, I);
  auto mid = census("Um(R)", R, n, std::nullopt);
  auto quo = census("Um(S)", S, n, std::nullopt);
  claim_stable(rep, rel);
  exact_three_term(rep, rel, mid, quo, [](const std::vector<Elem>& v) { return v; }, r.q, r.section, "alpha");
}

void run_exact_seq(Report& rep, const RingPtr& R, int n, const std::vector<Elem>& I) {
  auto E = Ring::excision(R, I);
  rep.claim(true, "excision ring " + E->name());
  const Ring& b = *R;
  RowMap j = [E, &b](const std::vector<Elem>& v) {
    std::vector<Elem> out;
    out.push_back(E->normalize(Elem(std::vector<Elem>{b.one(), b.sub(v[0], b.one())})));
    for (std::size_t k = 1; k < v.size(); ++k) out.push_back(E->normalize(Elem(std::vector<Elem>{b.zero(), v[k]})));
    return out;
  };
  auto each = [E](ExcisionMap m) -> RowMap {
    return [E, m](const std::vector<Elem>& v) {
      std::vector<Elem> out;
      for (const auto& x : v) out.push_back(excision_map(*E, m, x));
      return out;
    };
  };
  auto rel = census("Um(R, I)", R, n, Ideal{R, I});
  auto mid = census("Um(R + I)", E, n, std::nullopt);
  auto quo = census("Um(R)", R, n, std::nullopt);
  claim_stable(rep, rel);
  exact_three_term(rep, rel, mid, quo, j, each(ExcisionMap::Epsilon), each(ExcisionMap::Iota), "j");
}

}  // namespace

ExperimentReport lemma_experiment(const std::string& name, const ExperimentConfig& cfg) {
  ExperimentReport out;
  out.name = name;
  out.passed = true;
  Report rep{out};
  auto R = parse_descriptor(cfg.ring);
  if (!R->is_finite()) throw PreconditionError("lemma experiments need a finite ring");
  if (cfg.n < 2) throw PreconditionError("row length must be at least 2");
  auto I = parse_gens(R, cfg.ideal_i), J = parse_gens(R, cfg.ideal_j);
  if (name == "nil_product" || name == "sum_split") {
    if (cfg.n < 3) throw HypothesisViolated("the bijection needs n >= 3");
    if (I.empty() || J.empty()) throw PreconditionError("both ideals are required");
    if (name == "nil_product") run_nil_product(rep, R, cfg.n, I, J);
    else run_sum_split(rep, R, cfg.n, I, J);
  } else if (name == "retract") {
    if (cfg.retract_target.empty()) throw PreconditionError("retract needs a target ring");
    run_retract(rep, R, parse_descriptor(cfg.retract_target), cfg.n);
  } else if (name == "exact_seq") {
    if (I.empty()) throw PreconditionError("exact_seq needs the ideal I");
    run_exact_seq(rep, R, cfg.n, I);
  } else {
    throw PreconditionError("unknown experiment " + name);
  }
  return out;
}

}  // namespace unirow
