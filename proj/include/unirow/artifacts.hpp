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

// Line-oriented evidence files. Each starts with a one-line schema header
// "# unirow <kind> v1" and ends with "end" (censuses end with their last
// row record). Verification never repeats a search: certificates, closed
// formulas and stored witnesses are re-checked directly.

#ifndef UNIROW_ARTIFACTS_HPP_
#define UNIROW_ARTIFACTS_HPP_

#include <string>

#include "unirow/reduction.hpp"
#include "unirow/rows.hpp"
#include "unirow/vdk.hpp"
#include "unirow/witt.hpp"

namespace unirow {

std::string certificate_to_text(const EquivalenceCertificate& c);
EquivalenceCertificate parse_certificate(const std::string& text);

std::string artin_rees_to_text(const ArtinReesWitness& w);
ArtinReesWitness parse_artin_rees(const std::string& text);

// Vaserstein matrix of a witnessed length-3 row with its Pfaffian.
std::string witt_record(const UnimodularRow& row);

// Product of x and y through common-shape certificates.
std::string group_record(const OrbitClassRep& x, const OrbitClassRep& y, const SearchBudget& budget = {});

// Goodness experiment for (x, k).
std::string power_record(const OrbitClassRep& x, int k, const SearchBudget& budget = {});

// Schema kind from the header line ("census", "reduction trace", ...), or
// empty when the header is missing.
std::string artifact_kind(const std::string& text);

// Dispatches on the header. Empty on success, else the first mismatch.
std::string verify_artifact_text(const std::string& text);

}  // namespace unirow

#endif  // UNIROW_ARTIFACTS_HPP_
