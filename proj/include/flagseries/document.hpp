/*
   Copyright 2026 The flagseries Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FLAGSERIES_DOCUMENT_HPP
#define FLAGSERIES_DOCUMENT_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "flagseries/identities.hpp"
#include "flagseries/polynomial.hpp"
#include "flagseries/rootsystem.hpp"
#include "flagseries/series.hpp"

namespace flagseries {

// Structured output. Key order is fixed and every number that can grow
// beyond machine range is a decimal string ("a" or "a/b", lowest terms), so
// identical requests serialize to identical bytes.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

struct Request {
  DynkinType type;
  DominantWeight weight;
};

Json polynomial_to_json(const RationalPolynomial& p);
RationalPolynomial polynomial_from_json(const Json& j);

Json analysis_document(const Request& request, const HilbertData& data);

struct SeriesRow {
  long n;
  BigInteger dimension;
};
Json series_document(const Request& request, const ExpPolynomial& p, const std::vector<SeriesRow>& rows);

Json roots_document(const RootSystem& system);

Json verify_document(const std::vector<IdentityReport>& reports);

/// Inverse of analysis_document's "results" block.
HilbertData hilbert_data_from_json(const Json& results);

}  // namespace flagseries

#endif  // FLAGSERIES_DOCUMENT_HPP
