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

#include "unirow/orbit.hpp"

#include <algorithm>
#include <deque>
#include <iomanip>
#include <set>
#include <sstream>
#include <unordered_map>

#include "lex.hpp"
#include "unirow/rows.hpp"

namespace unirow {

// ------------------------------------------------------------ FiniteRing

FiniteRing::FiniteRing(RingPtr ring, std::uint32_t cap) : ring_(std::move(ring)) {
  auto card = ring_->cardinality();
  if (!card) throw Unsupported("finite ring table needs a finite ring");
  if (*card > cap) throw CapExceeded("ring has " + std::to_string(*card) + " elements, cap " + std::to_string(cap));
  elems_ = ring_->elements();
  q_ = static_cast<std::uint32_t>(elems_.size());
  for (std::uint32_t a = 0; a < q_; ++a) index_.emplace(elems_[a], a);
  zero_ = index(ring_->zero());
  one_ = index(ring_->one());
  if (zero_ == one_) throw Unsupported("zero ring");
  add_.resize(std::size_t(q_) * q_);
  mul_.resize(std::size_t(q_) * q_);
  neg_.resize(q_);
  unit_.assign(q_, 0);
  for (std::uint32_t a = 0; a < q_; ++a) {
    neg_[a] = index(ring_->neg(elems_[a]));
    for (std::uint32_t b = 0; b < q_; ++b) {
      add_[a * q_ + b] = index(ring_->add(elems_[a], elems_[b]));
      mul_[a * q_ + b] = index(ring_->mul(elems_[a], elems_[b]));
    }
  }
  for (std::uint32_t a = 0; a < q_; ++a)
    for (std::uint32_t b = 0; b < q_; ++b)
      if (mul_[a * q_ + b] == one_) {
        unit_[a] = 1;
        break;
      }
}

FiniteRing::value_type FiniteRing::index(const Elem& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) throw InvalidElement("element not in the finite ring table");
  return it->second;
}

std::vector<char> FiniteRing::ideal_mask(const std::vector<value_type>& gens) const {
  std::vector<char> mask(q_, 0);
  std::vector<value_type> members{zero_};
  mask[zero_] = 1;
  for (value_type g : gens)
    for (value_type r = 0; r < q_; ++r) {
      value_type x = mul(r, g);
      if (mask[x]) continue;
      // The set is a subgroup; adjoin the cyclic group of x.
      std::vector<value_type> grown = members;
      for (value_type m = x; m != zero_; m = add(m, x))
        for (value_type s : members) {
          value_type y = add(s, m);
          if (!mask[y]) {
            mask[y] = 1;
            grown.push_back(y);
          }
        }
      members = std::move(grown);
    }
  return mask;
}

// ------------------------------------------------------------ enumeration

namespace {

std::vector<FiniteRing::value_type> mask_members(const std::vector<char>& m) {
  std::vector<FiniteRing::value_type> out;
  for (std::uint32_t k = 0; k < m.size(); ++k)
    if (m[k]) out.push_back(k);
  return out;
}

std::vector<char> relative_mask(const FiniteRing& F, const Ideal& I) {
  std::vector<FiniteRing::value_type> g;
  for (const auto& e : I.gens) g.push_back(F.index(I.ring->normalize(e)));
  return F.ideal_mask(g);
}

// Interned ideals with memoized sums against principal ideals.
class IdealLattice {
 public:
  explicit IdealLattice(const FiniteRing& F) : F_(F) {
    for (std::uint32_t x = 0; x < F.size(); ++x) principal_.push_back(mask_members(F.ideal_mask({x})));
    zero_id_ = intern(F.ideal_mask({}));
  }
  std::size_t zero_id() const { return zero_id_; }
  bool has_one(std::size_t id) const { return ideals_[id][F_.one()] != 0; }
  std::size_t extend(std::size_t id, std::uint32_t x) {
    auto key = std::make_pair(id, x);
    auto hit = memo_.find(key);
    if (hit != memo_.end()) return hit->second;
    std::vector<char> m = ideals_[id];
    auto members = mask_members(m);
    for (auto a : members)
      for (auto b : principal_[x]) m[F_.add(a, b)] = 1;
    std::size_t out = intern(m);
    memo_[key] = out;
    return out;
  }

 private:
  std::size_t intern(const std::vector<char>& m) {
    auto it = ids_.find(m);
    if (it != ids_.end()) return it->second;
    ideals_.push_back(m);
    ids_[m] = ideals_.size() - 1;
    return ideals_.size() - 1;
  }
  const FiniteRing& F_;
  std::vector<std::vector<FiniteRing::value_type>> principal_;
  std::vector<std::vector<char>> ideals_;
  std::map<std::vector<char>, std::size_t> ids_;
  std::map<std::pair<std::size_t, std::uint32_t>, std::size_t> memo_;
  std::size_t zero_id_ = 0;
};

std::uint64_t row_key(const FRow& r, std::uint32_t q) {
  std::uint64_t k = 0;
  for (auto x : r) k = k * q + x;
  return k;
}

}  // namespace

std::vector<FRow> enumerate_um(const FiniteRing& F, int n, const std::optional<Ideal>& relative,
                               const EnumerateOptions& opt) {
  if (n < 1) throw PreconditionError("n must be positive");
  std::uint64_t cap = opt.cap;
  if (cap == 0) cap = n <= 2 ? 10000 : 1000;
  if (F.size() > cap) throw CapExceeded("ring larger than the enumeration cap");
  long double total = 1;
  for (int k = 0; k < n; ++k) total *= F.size();
  if (total > 5e7L) throw CapExceeded("row space too large to enumerate");

  std::vector<char> in_i;
  if (relative) in_i = relative_mask(F, *relative);
  IdealLattice lattice(F);
  std::vector<FRow> out;
  FRow cur(n, 0);
  // Depth-first in lexicographic order, carrying the ideal of the prefix.
  auto rec = [&](auto&& self, int pos, std::size_t ideal) -> void {
    if (pos == n) {
      if (lattice.has_one(ideal)) out.push_back(cur);
      return;
    }
    for (std::uint32_t x = 0; x < F.size(); ++x) {
      if (relative) {
        bool ok = pos == 0 ? in_i[F.add(x, F.neg(F.one()))] != 0 : in_i[x] != 0;
        if (!ok) continue;
      }
      cur[pos] = x;
      self(self, pos + 1, lattice.extend(ideal, x));
    }
  };
  rec(rec, 0, lattice.zero_id());
  return out;
}

// ------------------------------------------------------------ generators

std::string GeneratorConfig::describe() const {
  std::string s = relative ? "relative outer<=" + std::to_string(outer_length) : "absolute";
  s += additive_only ? " lambda=additive" : " lambda=all";
  if (!lambda_subset.empty()) {
    s += " subset=";
    for (std::size_t k = 0; k < lambda_subset.size(); ++k) s += (k ? "," : "") + std::to_string(lambda_subset[k]);
  }
  return s;
}

namespace {

// Greedy additive generating set of a subgroup given as a mask.
std::vector<std::uint32_t> additive_generators(const FiniteRing& F, const std::vector<char>& mask) {
  std::vector<std::uint32_t> gens;
  std::vector<char> span(F.size(), 0);
  span[F.zero()] = 1;
  std::vector<std::uint32_t> members{F.zero()};
  for (std::uint32_t x = 0; x < F.size(); ++x) {
    if (!mask[x] || span[x]) continue;
    gens.push_back(x);
    std::vector<std::uint32_t> grown = members;
    for (std::uint32_t m = x; m != F.zero(); m = F.add(m, x))
      for (auto s : members) {
        auto y = F.add(s, m);
        if (!span[y]) {
          span[y] = 1;
          grown.push_back(y);
        }
      }
    members = std::move(grown);
  }
  return gens;
}

std::vector<std::uint32_t> lambdas_for(const FiniteRing& F, const std::vector<char>& mask,
                                       const GeneratorConfig& cfg) {
  if (!cfg.lambda_subset.empty()) {
    std::vector<std::uint32_t> out;
    for (auto x : cfg.lambda_subset)
      if (x < F.size() && mask[x] && x != F.zero()) out.push_back(x);
    return out;
  }
  if (cfg.additive_only) return additive_generators(F, mask);
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < F.size(); ++x)
    if (mask[x] && x != F.zero()) out.push_back(x);
  return out;
}

Dense<std::uint32_t> letter_matrix(const FiniteRing& F, int n, const FLetter& l) {
  return matrix_of(F, static_cast<std::size_t>(n), FWord{l});
}

}  // namespace

std::vector<FLetter> generator_letters(const FiniteRing& F, int n, const GeneratorConfig& cfg,
                                       const std::optional<Ideal>& relative) {
  std::vector<char> all(F.size(), 1);
  std::vector<std::uint32_t> lam_all = lambdas_for(F, all, cfg);
  std::vector<Gen<std::uint32_t>> plain_gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j)
        for (auto l : lam_all) plain_gens.push_back({i, j, l});

  std::vector<FLetter> out;
  if (!cfg.relative) {
    for (const auto& g : plain_gens) out.push_back(FLetter{{}, g, false});
    return out;
  }
  if (!relative) throw PreconditionError("relative generators need an ideal");
  std::vector<std::uint32_t> lam_i = lambdas_for(F, relative_mask(F, *relative), cfg);
  std::vector<Gen<std::uint32_t>> inner;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j)
        for (auto l : lam_i) inner.push_back({i, j, l});

  // Outer words up to the configured length; letters with equal matrices
  // are kept once (first in generation order).
  std::vector<std::vector<Gen<std::uint32_t>>> outers{{}};
  std::vector<std::vector<Gen<std::uint32_t>>> layer{{}};
  for (int len = 1; len <= cfg.outer_length; ++len) {
    std::vector<std::vector<Gen<std::uint32_t>>> next;
    for (const auto& w : layer)
      for (const auto& g : plain_gens) {
        auto ext = w;
        ext.push_back(g);
        next.push_back(std::move(ext));
      }
    outers.insert(outers.end(), next.begin(), next.end());
    layer = std::move(next);
    if (outers.size() * inner.size() > 2000000) throw CapExceeded("too many conjugated letters");
  }
  std::set<std::vector<std::uint32_t>> seen;
  for (const auto& o : outers)
    for (const auto& g : inner) {
      FLetter l{o, g, true};
      auto m = letter_matrix(F, n, l).data();
      if (seen.insert(m).second) out.push_back(std::move(l));
    }
  return out;
}

// ------------------------------------------------------------ orbit BFS

std::int64_t OrbitCensus::find(const FRow& r) const {
  auto it = std::lower_bound(rows.begin(), rows.end(), r);
  if (it == rows.end() || *it != r) return -1;
  return it - rows.begin();
}

namespace {

struct RowIndex {
  std::unordered_map<std::uint64_t, std::int64_t> map;
  std::uint32_t q;
  std::int64_t get(const FRow& r) const {
    auto it = map.find(row_key(r, q));
    return it == map.end() ? -1 : it->second;
  }
};

void partition(const FiniteRing& F, OrbitCensus& c) {
  const int n = c.n;
  RowIndex idx{{}, F.size()};
  for (std::size_t k = 0; k < c.rows.size(); ++k) idx.map[row_key(c.rows[k], F.size())] = static_cast<std::int64_t>(k);
  std::vector<Dense<std::uint32_t>> mats;
  for (const auto& l : c.letters) mats.push_back(letter_matrix(F, n, l));

  const std::uint32_t none = UINT32_MAX;
  c.orbit.assign(c.rows.size(), none);
  c.parent.assign(c.rows.size(), -1);
  c.letter.assign(c.rows.size(), -1);
  c.orbit_count = 0;
  // Rows are visited in lexicographic order, so each BFS starts at the
  // least row of its orbit.
  for (std::size_t start = 0; start < c.rows.size(); ++start) {
    if (c.orbit[start] != none) continue;
    const std::uint32_t id = c.orbit_count++;
    c.orbit[start] = id;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      std::size_t cur = queue.front();
      queue.pop_front();
      for (std::size_t L = 0; L < mats.size(); ++L) {
        FRow img = row_times(F, c.rows[cur], mats[L]);
        std::int64_t k = idx.get(img);
        if (k < 0) throw Error("internal: letter leaves the row set");
        if (c.orbit[k] != none) continue;
        c.orbit[k] = id;
        c.parent[k] = static_cast<std::int64_t>(cur);
        c.letter[k] = static_cast<std::int64_t>(L);
        queue.push_back(static_cast<std::size_t>(k));
      }
    }
  }
}

// The letters generate a subgroup G of the relative group. Extended to
// all of Um_n(R), the G-orbits are the orbits of the normal closure of G
// exactly when every elementary generator maps G-orbits to G-orbits.
bool normal_closure_exact(const FiniteRing& F, const OrbitCensus& c, const EnumerateOptions& opt) {
  OrbitCensus all;
  all.ring = c.ring;
  all.n = c.n;
  all.letters = c.letters;
  all.rows = enumerate_um(F, c.n, std::nullopt, opt);
  partition(F, all);
  GeneratorConfig abs;
  abs.additive_only = true;
  const std::uint32_t none = UINT32_MAX;
  for (const auto& g : generator_letters(F, c.n, abs, std::nullopt)) {
    auto M = letter_matrix(F, c.n, g);
    std::vector<std::uint32_t> image(all.orbit_count, none);
    for (std::size_t k = 0; k < all.rows.size(); ++k) {
      auto t = all.find(row_times(F, all.rows[k], M));
      if (t < 0) throw Error("internal: generator leaves Um_n");
      auto& slot = image[all.orbit[k]];
      if (slot == none) slot = all.orbit[t];
      else if (slot != all.orbit[t]) return false;
    }
  }
  return true;
}

}  // namespace

OrbitCensus orbit_bfs(const FiniteRing& F, int n, const std::optional<Ideal>& relative,
                      GeneratorConfig cfg, const EnumerateOptions& opt) {
  if (relative) cfg.relative = true;
  OrbitCensus c;
  c.ring = F.ring();
  c.n = n;
  c.relative = relative;
  c.config = cfg;
  c.rows = enumerate_um(F, n, relative, opt);
  c.letters = generator_letters(F, n, cfg, relative);
  partition(F, c);
  if (cfg.relative) c.stabilized = normal_closure_exact(F, c, opt);
  return c;
}

bool verify_closure(const FiniteRing& F, const OrbitCensus& c) {
  RowIndex idx{{}, F.size()};
  for (std::size_t k = 0; k < c.rows.size(); ++k) idx.map[row_key(c.rows[k], F.size())] = static_cast<std::int64_t>(k);
  std::vector<Dense<std::uint32_t>> mats;
  for (const auto& l : c.letters) mats.push_back(letter_matrix(F, c.n, l));
  std::vector<std::int64_t> first(c.orbit_count, -1);
  for (std::size_t k = 0; k < c.rows.size(); ++k) {
    if (c.orbit[k] >= c.orbit_count) return false;
    if (first[c.orbit[k]] < 0) first[c.orbit[k]] = static_cast<std::int64_t>(k);
    for (const auto& M : mats) {
      std::int64_t j = idx.get(row_times(F, c.rows[k], M));
      if (j < 0 || c.orbit[j] != c.orbit[k]) return false;
    }
    if (c.parent[k] < 0) {
      if (first[c.orbit[k]] != static_cast<std::int64_t>(k)) return false;
      continue;
    }
    const auto p = static_cast<std::size_t>(c.parent[k]);
    if (c.letter[k] < 0 || static_cast<std::size_t>(c.letter[k]) >= mats.size()) return false;
    if (c.orbit[p] != c.orbit[k]) return false;
    if (row_times(F, c.rows[p], mats[c.letter[k]]) != c.rows[k]) return false;
  }
  // Parent chains end at the least row of the orbit.
  for (std::size_t k = 0; k < c.rows.size(); ++k) {
    std::size_t cur = k, steps = 0;
    while (c.parent[cur] >= 0 && steps++ <= c.rows.size()) cur = static_cast<std::size_t>(c.parent[cur]);
    if (c.parent[cur] >= 0 || static_cast<std::int64_t>(cur) != first[c.orbit[k]]) return false;
  }
  return true;
}

// ------------------------------------------------------------ conversion

FRow to_frow(const FiniteRing& F, const std::vector<Elem>& v) {
  FRow r;
  for (const auto& e : v) r.push_back(F.index(F.ring()->normalize(e)));
  return r;
}

std::vector<Elem> from_frow(const FiniteRing& F, const FRow& r) {
  std::vector<Elem> v;
  for (auto x : r) v.push_back(F.elem(x));
  return v;
}

Word<Elem> to_elem_word(const FiniteRing& F, const FWord& w) {
  Word<Elem> out;
  for (const auto& l : w) {
    Letter<Elem> e;
    e.conjugated = l.conjugated;
    e.inner = {l.inner.i, l.inner.j, F.elem(l.inner.lambda)};
    for (const auto& g : l.outer) e.outer.push_back({g.i, g.j, F.elem(g.lambda)});
    out.push_back(std::move(e));
  }
  return out;
}

namespace {

// Letters from the orbit root to row k.
FWord chain(const OrbitCensus& c, std::size_t k) {
  FWord w;
  while (c.parent[k] >= 0) {
    w.push_back(c.letters[c.letter[k]]);
    k = static_cast<std::size_t>(c.parent[k]);
  }
  std::reverse(w.begin(), w.end());
  return w;
}

}  // namespace

std::optional<Word<Elem>> certificate_path(const FiniteRing& F, const OrbitCensus& c,
                                           const std::vector<Elem>& x, const std::vector<Elem>& y) {
  const std::int64_t ix = c.find(to_frow(F, x));
  const std::int64_t iy = c.find(to_frow(F, y));
  if (ix < 0 || iy < 0) throw RowAbsent("row not in census");
  if (c.orbit[ix] != c.orbit[iy]) return std::nullopt;
  if (ix == iy) return Word<Elem>{};
  FWord w = inverse(F, chain(c, static_cast<std::size_t>(ix)));
  FWord tail = chain(c, static_cast<std::size_t>(iy));
  w.insert(w.end(), tail.begin(), tail.end());
  Word<Elem> out = to_elem_word(F, w);
  std::vector<Elem> check = x;
  apply_word_in_place(*F.ring(), check, nullptr, out);
  if (check != y) throw Error("internal: census path does not verify");
  return out;
}

std::optional<Word<Elem>> bfs_word(const RingPtr& R, const std::vector<Elem>& source,
                                   const std::vector<Elem>& target, const std::optional<Ideal>& relative,
                                   std::size_t budget, int outer_length) {
  FiniteRing F(R);
  const int n = static_cast<int>(source.size());
  GeneratorConfig cfg;
  cfg.relative = relative.has_value();
  cfg.outer_length = outer_length;
  auto letters = generator_letters(F, n, cfg, relative);
  std::vector<Dense<std::uint32_t>> mats;
  for (const auto& l : letters) mats.push_back(letter_matrix(F, n, l));
  const FRow s = to_frow(F, source), t = to_frow(F, target);
  if (s == t) return Word<Elem>{};
  std::unordered_map<std::uint64_t, std::pair<std::uint64_t, std::int64_t>> parent;
  std::unordered_map<std::uint64_t, FRow> rows;
  const auto sk = row_key(s, F.size()), tk = row_key(t, F.size());
  parent[sk] = {sk, -1};
  rows[sk] = s;
  std::deque<std::uint64_t> queue{sk};
  while (!queue.empty() && parent.size() <= budget) {
    auto cur = queue.front();
    queue.pop_front();
    for (std::size_t L = 0; L < mats.size(); ++L) {
      FRow img = row_times(F, rows[cur], mats[L]);
      auto k = row_key(img, F.size());
      if (parent.count(k)) continue;
      parent[k] = {cur, static_cast<std::int64_t>(L)};
      rows[k] = std::move(img);
      if (k == tk) {
        FWord w;
        for (auto at = tk; at != sk; at = parent[at].first) w.push_back(letters[parent[at].second]);
        std::reverse(w.begin(), w.end());
        return to_elem_word(F, w);
      }
      queue.push_back(k);
    }
  }
  return std::nullopt;
}

// ------------------------------------------------------------ census file

namespace {

std::string frow_text(const FiniteRing& F, const FRow& r) {
  return "[" + print_vector(*F.ring(), from_frow(F, r)) + "]";
}

FWord to_fword(const FiniteRing& F, const Word<Elem>& w) {
  FWord out;
  for (const auto& l : w) {
    FLetter f;
    f.conjugated = l.conjugated;
    f.inner = {l.inner.i, l.inner.j, F.index(l.inner.lambda)};
    for (const auto& g : l.outer) f.outer.push_back({g.i, g.j, F.index(g.lambda)});
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

std::string census_to_text(const FiniteRing& F, const OrbitCensus& c) {
  std::ostringstream os;
  const Ring& R = *F.ring();
  os << "# unirow census v1\n";
  os << "ring: " << R.name() << "\n";
  os << "n: " << c.n << "\n";
  os << "ideal: " << (c.relative ? print_ideal(*c.relative) : std::string("-")) << "\n";
  os << "mode: " << (c.config.relative ? "relative" : "absolute") << "\n";
  os << "outer_length: " << c.config.outer_length << "\n";
  os << "lambda: " << (c.config.additive_only ? "additive" : "all") << "\n";
  os << "lambda_subset:";
  for (auto x : c.config.lambda_subset) os << " " << R.print(F.elem(x));
  os << "\n";
  os << "stabilized: " << (c.stabilized ? "yes" : "no") << "\n";
  os << "letters: " << c.letters.size() << "\n";
  for (std::size_t k = 0; k < c.letters.size(); ++k)
    os << "L " << k << " " << print_word(R, to_elem_word(F, FWord{c.letters[k]})) << "\n";
  os << "rows: " << c.rows.size() << "\n";
  os << "orbits: " << c.orbit_count << "\n";
  std::size_t wr = 0;
  for (const auto& r : c.rows) wr = std::max(wr, frow_text(F, r).size());
  const int wi = static_cast<int>(std::to_string(c.rows.size()).size()) + 1;
  for (std::size_t k = 0; k < c.rows.size(); ++k) {
    os << "R " << std::setw(wi) << k << " " << std::left << std::setw(static_cast<int>(wr)) << frow_text(F, c.rows[k])
       << std::right << " " << std::setw(wi) << c.orbit[k] << " " << std::setw(wi) << c.parent[k] << " "
       << std::setw(wi) << c.letter[k] << "\n";
  }
  return os.str();
}

std::string verify_census_text(const std::string& text) {
  try {
    std::istringstream is(text);
    std::string line;
    std::map<std::string, std::string> head;
    std::vector<std::string> letter_lines, row_lines;
    if (!std::getline(is, line) || line != "# unirow census v1") return "missing schema header";
    while (std::getline(is, line)) {
      if (line.rfind("L ", 0) == 0) {
        letter_lines.push_back(line);
      } else if (line.rfind("R ", 0) == 0) {
        row_lines.push_back(line);
      } else {
        auto colon = line.find(':');
        if (colon == std::string::npos) return "unrecognized line: " + line;
        std::string key = line.substr(0, colon);
        std::string val = colon + 1 < line.size() ? line.substr(colon + 2) : "";
        static const std::set<std::string> keys{"ring", "n", "ideal", "mode", "outer_length", "lambda",
                                                "lambda_subset", "stabilized", "letters", "rows", "orbits"};
        if (!keys.count(key)) return "unknown header key: " + key;
        head[key] = val;
      }
    }
    for (const char* k : {"ring", "n", "ideal", "mode", "outer_length", "lambda", "letters", "rows", "orbits"})
      if (!head.count(k)) return std::string("missing header key: ") + k;
    RingPtr R = parse_descriptor(head["ring"]);
    FiniteRing F(R);
    OrbitCensus c;
    c.ring = R;
    c.n = std::stoi(head["n"]);
    if (head["ideal"] != "-") {
      // Ideal text is "(g1, g2, ...)".
      std::string_view s = head["ideal"];
      std::size_t pos = 0;
      lex::expect(s, pos, '(');
      Ideal I{R, {}};
      while (!lex::peek(s, pos, ')')) {
        I.gens.push_back(R->parse_at(s, pos));
        if (lex::peek(s, pos, ',')) ++pos;
      }
      c.relative = I;
    }
    c.config.relative = head["mode"] == "relative";
    c.config.outer_length = std::stoi(head["outer_length"]);
    c.config.additive_only = head["lambda"] == "additive";
    {
      std::string_view s = head["lambda_subset"];
      std::size_t pos = 0;
      while (lex::skip_ws(s, pos), pos < s.size()) c.config.lambda_subset.push_back(F.index(R->parse_at(s, pos)));
    }
    // The letter list must be the configured generator set.
    auto expected = generator_letters(F, c.n, c.config, c.relative);
    if (letter_lines.size() != expected.size() || std::stoul(head["letters"]) != expected.size())
      return "letter count differs from the configured generator set";
    for (std::size_t k = 0; k < letter_lines.size(); ++k) {
      std::istringstream ls(letter_lines[k]);
      std::string tag;
      std::size_t idx = 0;
      ls >> tag >> idx;
      std::string rest;
      std::getline(ls, rest);
      FWord w = to_fword(F, parse_word(*R, rest));
      if (idx != k || w.size() != 1 || !(w[0] == expected[k])) return "letter " + std::to_string(k) + " mismatch";
      c.letters.push_back(w[0]);
    }
    // Rows: exactly the enumerated set, in order.
    auto rows = enumerate_um(F, c.n, c.relative);
    if (row_lines.size() != rows.size() || std::stoul(head["rows"]) != rows.size()) return "row count mismatch";
    for (std::size_t k = 0; k < row_lines.size(); ++k) {
      std::string_view s = row_lines[k];
      std::size_t pos = 1;
      Int idx = lex::parse_int(s, pos);
      lex::expect(s, pos, '[');
      std::vector<Elem> v;
      while (!lex::peek(s, pos, ']')) {
        v.push_back(R->parse_at(s, pos));
        if (lex::peek(s, pos, ',')) ++pos;
      }
      ++pos;
      Int orb = lex::parse_int(s, pos), par = lex::parse_int(s, pos), let = lex::parse_int(s, pos);
      if (idx != Int(k) || to_frow(F, v) != rows[k]) return "row " + std::to_string(k) + " mismatch";
      // Unimodularity by an explicit witness over the exact ring.
      make_row(R, v);
      c.rows.push_back(rows[k]);
      c.orbit.push_back(static_cast<std::uint32_t>(orb));
      c.parent.push_back(static_cast<std::int64_t>(par));
      c.letter.push_back(static_cast<std::int64_t>(let));
    }
    c.orbit_count = static_cast<std::uint32_t>(std::stoul(head["orbits"]));
    if (!verify_closure(F, c)) return "closure or parent check failed";
    return "";
  } catch (const std::exception& e) {
    return std::string("malformed census: ") + e.what();
  }
}

}  // namespace unirow
