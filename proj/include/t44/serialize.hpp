/*
   Copyright 2026 The t44mf Authors

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

#ifndef T44_SERIALIZE_HPP
#define T44_SERIALIZE_HPP

#include <json.hpp>
#include <optional>
#include <string>

#include "t44/factorizations.hpp"
#include "t44/families.hpp"
#include "t44/relations.hpp"

namespace t44 {

using Json = nlohmann::ordered_json;

Json poly_to_json(const BiPoly& p);
BiPoly poly_from_json(const Json& j);
Json matrix_to_json(const PolyMatrix& m);
PolyMatrix matrix_from_json(const Json& j);
Json profile_to_json(const DetProfile& p);
Json word_to_json(const WordSpec& w);
WordSpec word_from_json(const Json& j);
Json ext_to_json(const ExtBlockMatrix& x);
ExtBlockMatrix ext_from_json(const Json& j);
Json report_to_json(const VerificationReport& r);
Json presentation_to_json(const Presentation& p, const Context& ctx);
Json ar_report_to_json(const ARReport& r);

/// A (phi, psi) pair with its parameters, not necessarily a valid factorization.
struct FactorizationRecord {
  std::optional<WordSpec> word;
  Rational lambda = 2;
  std::optional<Rational> mu;
  PolyMatrix phi;
  PolyMatrix psi;

  Context context() const { return Context::create(lambda, mu); }
};

FactorizationRecord make_record(const Factorization& f, const std::optional<WordSpec>& word);
/// Document with meta, phi, psi, determinant profiles and the verification report.
Json record_to_json(const FactorizationRecord& r);
/// Throws ParseError on malformed input.
FactorizationRecord record_from_json(const Json& j);

/// Canonical text form of a document (2-space indent, trailing newline).
std::string dump(const Json& j);
/// Throws ParseError.
Json parse_json(const std::string& text);

}  // namespace t44

#endif
