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

#include <iostream>

#include "doctest.h"
#include "unirow/orbit.hpp"
#include "unirow/rows.hpp"

using namespace unirow;

namespace {

ExperimentReport run(const std::string& name, ExperimentConfig cfg) {
  auto r = lemma_experiment(name, cfg);
  if (!r.passed)
    for (const auto& a : r.assertions) std::cerr << "  " << a << "\n";
  return r;
}

}  // namespace

TEST_CASE("sum splitting with IJ = 0") {
  auto r = run("sum_split", {"Z/6", 3, {"3"}, {"2"}, ""});
  CHECK(r.passed);
  CHECK(r.assertions.size() >= 10);
  bool bijection = false;
  for (const auto& a : r.assertions) bijection |= a.find("bijection: 1 <-> 1 x 1") != std::string::npos;
  CHECK(bijection);
  CHECK(run("sum_split", {"Z/12", 3, {"4"}, {"3"}, ""}).passed);
  CHECK_THROWS_AS(lemma_experiment("sum_split", {"Z/4", 3, {"2"}, {"1"}, ""}), HypothesisViolated);
  CHECK_THROWS_AS(lemma_experiment("sum_split", {"Z/12", 3, {"2"}, {"3"}, ""}), HypothesisViolated);
  CHECK_THROWS_AS(lemma_experiment("sum_split", {"Z/6", 2, {"3"}, {"2"}, ""}), HypothesisViolated);
}

TEST_CASE("reduction modulo J with IJ nilpotent") {
  CHECK(run("nil_product", {"Z/4", 3, {"2"}, {"2"}, ""}).passed);
  CHECK(run("nil_product", {"Z/8", 3, {"2"}, {"4"}, ""}).passed);
  CHECK(run("nil_product", {"Z/12", 3, {"2"}, {"6"}, ""}).passed);
  CHECK(run("nil_product", {"Z/6", 3, {"2"}, {"3"}, ""}).passed);
  CHECK_THROWS_AS(lemma_experiment("nil_product", {"Z/6", 3, {"2"}, {"2"}, ""}), HypothesisViolated);
}

TEST_CASE("retract sequence") {
  auto r = run("retract", {"excision(Z/4; 2)", 3, {}, {}, "Z/4"});
  CHECK(r.passed);
  CHECK(run("retract", {"quotient(poly(Z/2;t); [1@2])", 3, {}, {}, "Z/2"}).passed);
  CHECK(run("retract", {"Z/3", 3, {}, {}, "Z/3"}).passed);
  CHECK_THROWS_AS(lemma_experiment("retract", {"Z/4", 3, {}, {}, "Z/2"}), HypothesisViolated);
  CHECK_THROWS_AS(lemma_experiment("retract", {"Z/4", 3, {}, {}, ""}), PreconditionError);
}

TEST_CASE("excision exact sequence") {
  CHECK(run("exact_seq", {"Z/4", 3, {"2"}, {}, ""}).passed);
  CHECK(run("exact_seq", {"Z/6", 3, {"2"}, {}, ""}).passed);
  CHECK_THROWS_AS(lemma_experiment("nonsense", {"Z/4", 3, {"2"}, {}, ""}), PreconditionError);
}
