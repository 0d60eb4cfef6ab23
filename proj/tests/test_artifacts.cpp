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

#include "doctest.h"
#include "unirow/artifacts.hpp"
#include "unirow/orbit.hpp"

using namespace unirow;

namespace {

RingPtr P(const char* s) { return parse_descriptor(s); }

// Replaces the first occurrence of from after the line starting with key.
std::string mutate(std::string text, const std::string& key, const std::string& from, const std::string& to) {
  auto line = text.find("\n" + key + " ");
  REQUIRE(line != std::string::npos);
  auto pos = text.find(from, line + key.size() + 2);
  REQUIRE(pos != std::string::npos);
  return text.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("ideal text round trip") {
  auto A = P("graded(Z; 2@1)");
  Ideal I{A, {A->parse("[2]"), A->parse("[0, 4@1]")}};
  auto J = parse_ideal(A, print_ideal(I));
  CHECK(J.gens == I.gens);
  CHECK(parse_ideal(P("Z"), "()").gens.empty());
  CHECK_THROWS_AS(parse_ideal(P("Z"), "(2"), ParseError);
  CHECK_THROWS_AS(parse_ideal(P("Z"), "(2) x"), ParseError);
}

TEST_CASE("certificate files") {
  auto Z4 = P("Z/4");
  FiniteRing F(Z4);
  auto c = orbit_bfs(F, 3);
  std::vector<Elem> x{Elem(1), Elem(2), Elem(0)}, y{Elem(1), Elem(0), Elem(0)};
  auto w = certificate_path(F, c, x, y);
  REQUIRE(w);
  auto cert = certify(make_row(Z4, x), *w);
  std::string text = certificate_to_text(cert);
  CHECK(artifact_kind(text) == "certificate");
  CHECK(verify_artifact_text(text).empty());
  CHECK(certificate_to_text(parse_certificate(text)) == text);
  CHECK(!verify_artifact_text(mutate(text, "target", "[1, 0, 0", "[1, 1, 0")).empty());
  CHECK(!verify_artifact_text(text.substr(0, text.size() - 4)).empty());

  // Relative certificates keep their ideal.
  auto Z = P("Z");
  Ideal I{Z, {Elem(2)}};
  auto row = make_row(Z, {Elem(3), Elem(2), Elem(2)}, I);
  auto rc = pthick(row, I, 2);
  std::string rt = certificate_to_text(rc);
  CHECK(rt.find("relative (2)") != std::string::npos);
  CHECK(verify_artifact_text(rt).empty());
}

TEST_CASE("Artin-Rees files") {
  auto A = P("graded(Z; 2@1)");
  auto R = A->coeff_ring().self();
  auto w = artin_rees_exponent(A, Ideal{R, {Elem(2)}}, Ideal{R, {Elem(4)}}, 8, 8);
  std::string text = artin_rees_to_text(w);
  CHECK(verify_artifact_text(text).empty());
  CHECK(artin_rees_to_text(parse_artin_rees(text)) == text);
  CHECK(parse_artin_rees(text).cells.size() == w.cells.size());
  CHECK(!verify_artifact_text(mutate(text, "k", "2", "1")).empty());
  CHECK(!verify_artifact_text(mutate(text, "cell", "2 0", "2 1")).empty());
}

TEST_CASE("Witt, group and power records") {
  auto Z9 = P("Z/9");
  auto witt = witt_record(make_row(Z9, {Elem(2), Elem(3), Elem(4)}));
  CHECK(verify_artifact_text(witt).empty());
  CHECK(!verify_artifact_text(mutate(witt, "matrix", "[[0, ", "[[0, 1")).empty());

  auto Z3 = P("Z/3");
  auto g = group_record(make_row(Z3, {Elem(1), Elem(1), Elem(0)}), make_row(Z3, {Elem(2), Elem(1), Elem(0)}));
  CHECK(verify_artifact_text(g).empty());
  CHECK(g == group_record(make_row(Z3, {Elem(1), Elem(1), Elem(0)}), make_row(Z3, {Elem(2), Elem(1), Elem(0)})));
  auto gp = g;
  auto pos = gp.find("\nproduct [");
  REQUIRE(pos != std::string::npos);
  gp.insert(pos + 10, "1+");
  CHECK(!verify_artifact_text(gp).empty());

  auto Z4 = P("Z/4");
  auto p = power_record(make_row(Z4, {Elem(3), Elem(2), Elem(1)}), 2);
  CHECK(p.find("verdict Confirmed") != std::string::npos);
  CHECK(verify_artifact_text(p).empty());
  auto sq = power_record(make_row(P("Z"), {Elem(4), Elem(3), Elem(0)}), 3);
  CHECK(sq.find("route square") != std::string::npos);
  CHECK(verify_artifact_text(sq).empty());
  CHECK(!verify_artifact_text(mutate(sq, "square_root", "2", "-3")).empty());
}

TEST_CASE("artifact dispatch") {
  CHECK(artifact_kind("# unirow census v1\nring: Z/2\n") == "census");
  CHECK(artifact_kind("# unirow reduction trace v1\n") == "reduction trace");
  CHECK(artifact_kind("garbage").empty());
  CHECK(verify_artifact_text("garbage\n") == "missing schema header");
  CHECK(verify_artifact_text("# unirow nonsense v1\nend\n").find("unknown artifact kind") != std::string::npos);
}
