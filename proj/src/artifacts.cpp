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

#include "unirow/artifacts.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "unirow/orbit.hpp"

namespace unirow {

namespace {

const char* const kPrefix = "# unirow ";
const char* const kSuffix = " v1";

std::string header(const std::string& kind) { return kPrefix + kind + kSuffix + "\n"; }

// Records in file order; keys may repeat.
struct Records {
  std::vector<std::pair<std::string, std::string>> lines;

  const std::string& one(const std::string& key) const {
    const std::string* hit = nullptr;
    for (const auto& [k, v] : lines)
      if (k == key) {
        if (hit) throw ParseError("duplicate record '" + key + "'", 0);
        hit = &v;
      }
    if (!hit) throw ParseError("missing record '" + key + "'", 0);
    return *hit;
  }
  std::vector<std::string> all(const std::string& key) const {
    std::vector<std::string> out;
    for (const auto& [k, v] : lines)
      if (k == key) out.push_back(v);
    return out;
  }
};

Records read_records(const std::string& text, const std::string& kind, const std::vector<std::string>& keys) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line + "\n" != header(kind)) throw ParseError("missing schema header for " + kind, 0);
  Records r;
  bool ended = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (ended) throw ParseError("content after end", 0);
    if (line == "end") {
      ended = true;
      continue;
    }
    auto sp = line.find(' ');
    std::string key = line.substr(0, sp);
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) throw ParseError("unknown record '" + key + "'", 0);
    r.lines.emplace_back(key, sp == std::string::npos ? "" : line.substr(sp + 1));
  }
  if (!ended) throw ParseError("truncated " + kind + " (no end line)", 0);
  return r;
}

std::string ideal_text(const std::optional<Ideal>& I) { return I ? print_ideal(*I) : "-"; }

std::optional<Ideal> ideal_from(const RingPtr& R, const std::string& s) {
  if (s == "-") return std::nullopt;
  return parse_ideal(R, s);
}

bool same_row(const UnimodularRow& a, const UnimodularRow& b) { return a.v == b.v && a.w == b.w; }

std::string verify_certificate_text(const std::string& text) {
  auto c = parse_certificate(text);
  if (!verify_certificate(c)) return "certificate does not verify";
  return {};
}

std::string verify_artin_rees_text(const std::string& text) {
  if (!verify_artin_rees(parse_artin_rees(text))) return "Artin-Rees witness table does not verify";
  return {};
}

std::string verify_witt_text(const std::string& text) {
  auto r = read_records(text, "witt", {"ring", "row", "matrix", "pfaffian"});
  RingPtr R = parse_descriptor(r.one("ring"));
  auto row = parse_row(R, r.one("row"));
  if (row.size() != 3 || !row_valid(row)) return "row is not a witnessed length-3 unimodular row";
  auto V = vaserstein_V(R, row.v, row.w);
  if (print_matrix(*R, V.dense()) != r.one("matrix")) return "stored matrix differs from the Vaserstein matrix";
  Elem pf = pfaffian(V);
  if (R->print(pf) != r.one("pfaffian")) return "stored Pfaffian differs";
  if (!R->is_one(pf)) return "Pfaffian is not 1";
  return {};
}

std::string verify_group_text(const std::string& text) {
  auto r = read_records(text, "group",
                        {"ring", "x", "y", "x_word", "y_word", "x_shape", "y_shape", "product"});
  RingPtr R = parse_descriptor(r.one("ring"));
  auto x = parse_row(R, r.one("x")), y = parse_row(R, r.one("y"));
  auto sx = parse_row(R, r.one("x_shape")), sy = parse_row(R, r.one("y_shape"));
  auto cx = certify(x, parse_word(*R, r.one("x_word")));
  auto cy = certify(y, parse_word(*R, r.one("y_word")));
  if (!verify_certificate(cx) || !same_row(cx.target, sx)) return "x does not reach its recorded shape";
  if (!verify_certificate(cy) || !same_row(cy.target, sy)) return "y does not reach its recorded shape";
  for (std::size_t i = 1; i < sx.size(); ++i)
    if (i >= sy.size() || sx.v[i] != sy.v[i]) return "shapes do not share their tail";
  auto product = vdk_product(sx, sy);
  if (!same_row(product, parse_row(R, r.one("product")))) return "product differs from the group-law formula";
  if (!row_valid(product)) return "product witness fails";
  return {};
}

std::string verify_power_text(const std::string& text) {
  auto r = read_records(text, "power",
                        {"ring", "x", "k", "verdict", "route", "power", "product", "square_root", "word"});
  RingPtr R = parse_descriptor(r.one("ring"));
  auto x = parse_row(R, r.one("x"));
  int k = std::stoi(r.one("k"));
  auto power = parse_row(R, r.one("power"));
  if (!same_row(power, power_row(x, k))) return "power row differs from the binomial formula";
  std::string verdict = r.one("verdict"), route = r.one("route");
  auto words = r.all("word");
  auto products = r.all("product");
  if (route == "square") {
    Elem s = R->parse(r.one("square_root"));
    if (R->mul(s, s) != x.v[0]) return "recorded square root is wrong";
    OrbitClassRep acc = x;
    for (int i = 1; i < k; ++i) acc = vdk_square_product(acc, s);
    if (products.size() != 1 || !same_row(acc, parse_row(R, products[0]))) return "square-law product differs";
    if (acc.v != power.v) return "square-law product is not the power row";
  }
  if (verdict == "Confirmed" && route != "square") {
    if (words.size() != 1 || products.size() != 1) return "confirmed verdict without a certificate";
    auto c = certify(power, parse_word(*R, words[0]));
    if (!verify_certificate(c) || c.target.v != parse_row(R, products[0]).v)
      return "certificate does not take the power row to the product";
  }
  if (verdict == "Refuted" && !R->is_finite()) return "refutation over an infinite ring";
  return {};
}

}  // namespace

std::string certificate_to_text(const EquivalenceCertificate& c) {
  const Ring& R = *c.source.ring;
  std::ostringstream out;
  out << header("certificate");
  out << "ring " << R.name() << "\n";
  out << "relative " << ideal_text(c.relative) << "\n";
  out << "source " << print_row(c.source) << "\n";
  out << "target " << print_row(c.target) << "\n";
  out << "word " << print_word(R, c.word) << "\n";
  out << "end\n";
  return out.str();
}

EquivalenceCertificate parse_certificate(const std::string& text) {
  auto r = read_records(text, "certificate", {"ring", "relative", "source", "target", "word"});
  RingPtr R = parse_descriptor(r.one("ring"));
  EquivalenceCertificate c;
  c.relative = ideal_from(R, r.one("relative"));
  c.source = parse_row(R, r.one("source"));
  c.target = parse_row(R, r.one("target"));
  c.source.relative = c.target.relative = c.relative;
  c.word = parse_word(*R, r.one("word"));
  return c;
}

std::string artin_rees_to_text(const ArtinReesWitness& w) {
  const Ring& R = w.algebra->coeff_ring();
  std::ostringstream out;
  out << header("artin-rees");
  out << "ring " << w.algebra->name() << "\n";
  out << "I " << print_ideal(w.I) << "\n";
  out << "J " << print_ideal(w.J) << "\n";
  out << "window " << w.N << " " << w.D << "\n";
  out << "k " << w.k << "\n";
  for (const auto& c : w.cells)
    out << "cell " << c.n << " " << c.m << " " << R.print(c.lhs) << " " << R.print(c.rhs) << " "
        << R.print(c.witness) << "\n";
  out << "end\n";
  return out.str();
}

ArtinReesWitness parse_artin_rees(const std::string& text) {
  auto r = read_records(text, "artin-rees", {"ring", "I", "J", "window", "k", "cell"});
  ArtinReesWitness w;
  w.algebra = parse_descriptor(r.one("ring"));
  RingPtr R = w.algebra->coeff_ring().self();
  w.I = parse_ideal(R, r.one("I"));
  w.J = parse_ideal(R, r.one("J"));
  std::istringstream win(r.one("window"));
  if (!(win >> w.N >> w.D)) throw ParseError("malformed window", 0);
  w.k = std::stoi(r.one("k"));
  for (const auto& line : r.all("cell")) {
    std::istringstream cs(line);
    ArtinReesCell c;
    std::string lhs, rhs, wit;
    if (!(cs >> c.n >> c.m >> lhs >> rhs >> wit)) throw ParseError("malformed cell", 0);
    c.lhs = R->parse(lhs);
    c.rhs = R->parse(rhs);
    c.witness = R->parse(wit);
    w.cells.push_back(c);
  }
  return w;
}

std::string witt_record(const UnimodularRow& row) {
  const Ring& R = *row.ring;
  auto V = vaserstein_V(row.ring, row.v, row.w);
  std::ostringstream out;
  out << header("witt");
  out << "ring " << R.name() << "\n";
  out << "row " << print_row(row) << "\n";
  out << "matrix " << print_matrix(R, V.dense()) << "\n";
  out << "pfaffian " << R.print(pfaffian(V)) << "\n";
  out << "end\n";
  return out.str();
}

std::string group_record(const OrbitClassRep& x, const OrbitClassRep& y, const SearchBudget& budget) {
  const Ring& R = *x.ring;
  auto shape = common_shape(x, y, budget);
  auto product = vdk_product(shape.x.target, shape.y.target);
  std::ostringstream out;
  out << header("group");
  out << "ring " << R.name() << "\n";
  out << "x " << print_row(x) << "\n";
  out << "y " << print_row(y) << "\n";
  out << "x_word " << print_word(R, shape.x.word) << "\n";
  out << "x_shape " << print_row(shape.x.target) << "\n";
  out << "y_word " << print_word(R, shape.y.word) << "\n";
  out << "y_shape " << print_row(shape.y.target) << "\n";
  out << "product " << print_row(product) << "\n";
  out << "end\n";
  return out.str();
}

std::string power_record(const OrbitClassRep& x, int k, const SearchBudget& budget) {
  const Ring& R = *x.ring;
  auto g = goodness_experiment(x, k, budget);
  std::ostringstream out;
  out << header("power");
  out << "ring " << R.name() << "\n";
  out << "x " << print_row(x) << "\n";
  out << "k " << k << "\n";
  out << "verdict " << verdict_name(g.verdict) << "\n";
  out << "route " << g.route << "\n";
  out << "power " << print_row(g.power) << "\n";
  if (g.product) out << "product " << print_row(*g.product) << "\n";
  if (g.route == "square") out << "square_root " << R.print(*square_root(R, x.v[0])) << "\n";
  if (g.certificate && g.route != "square") out << "word " << print_word(R, g.certificate->word) << "\n";
  out << "end\n";
  return out.str();
}

std::string artifact_kind(const std::string& text) {
  auto nl = text.find('\n');
  std::string first = text.substr(0, nl);
  std::string pre(kPrefix), suf(kSuffix);
  if (first.size() <= pre.size() + suf.size() || first.rfind(pre, 0) != 0 ||
      first.compare(first.size() - suf.size(), suf.size(), suf) != 0)
    return {};
  return first.substr(pre.size(), first.size() - pre.size() - suf.size());
}

std::string verify_artifact_text(const std::string& text) {
  std::string kind = artifact_kind(text);
  try {
    if (kind == "census") return verify_census_text(text);
    if (kind == "reduction trace") return verify_trace_text(text);
    if (kind == "certificate") return verify_certificate_text(text);
    if (kind == "artin-rees") return verify_artin_rees_text(text);
    if (kind == "witt") return verify_witt_text(text);
    if (kind == "group") return verify_group_text(text);
    if (kind == "power") return verify_power_text(text);
  } catch (const Error& e) {
    return e.what();
  } catch (const std::exception& e) {
    return std::string("malformed record: ") + e.what();
  }
  return kind.empty() ? "missing schema header" : "unknown artifact kind '" + kind + "'";
}

}  // namespace unirow
