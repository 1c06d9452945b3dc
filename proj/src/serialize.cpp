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

#include "t44/serialize.hpp"

namespace t44 {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

Rational rational_field(const Json& j) {
  if (!j.is_string()) bad("rational values must be strings such as \"3/2\"");
  return parse_rational(j.get<std::string>());
}

std::uint32_t exponent_field(const Json& j) {
  if (!j.is_number_unsigned()) bad("exponents must be non-negative integers");
  return j.get<std::uint32_t>();
}

}  // namespace

Json poly_to_json(const BiPoly& p) {
  Json terms = Json::array();
  for (const auto& t : p.terms()) terms.push_back({{"ex", t.m.ex}, {"ey", t.m.ey}, {"c", rational_to_string(t.c)}});
  return {{"terms", terms}};
}

BiPoly poly_from_json(const Json& j) {
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) bad("'terms' must be an array");
  std::vector<BiPoly::Term> out;
  for (const auto& t : terms)
    out.push_back({{exponent_field(field(t, "ex")), exponent_field(field(t, "ey"))}, rational_field(field(t, "c"))});
  return BiPoly(std::move(out));
}

Json matrix_to_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(poly_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

PolyMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) bad("a matrix must be an array of rows");
  std::vector<std::vector<BiPoly>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) bad("a matrix row must be an array");
    std::vector<BiPoly> row;
    for (const auto& e : r) row.push_back(poly_from_json(e));
    rows.push_back(std::move(row));
  }
  try {
    return PolyMatrix::from_rows(rows);
  } catch (const Error&) {
    bad("matrix rows have different lengths");
  }
}

Json profile_to_json(const DetProfile& p) {
  return {{"unit", rational_to_string(p.unit)},
          {"z", {p.exponents[0], p.exponents[1], p.exponents[2], p.exponents[3]}}};
}

Json word_to_json(const WordSpec& w) {
  Json j;
  j["family"] = kind_name(w.kind);
  j["n"] = w.n ? Json(*w.n) : Json(nullptr);
  j["marks"] = marks_string(w.marks);
  j["transposed"] = w.transposed;
  j["mu"] = w.mu ? Json(rational_to_string(*w.mu)) : Json(nullptr);
  return j;
}

WordSpec word_from_json(const Json& j) {
  const Json& fam = field(j, "family");
  if (!fam.is_string()) bad("'family' must be a string");
  std::optional<unsigned> n;
  if (j.contains("n") && !j.at("n").is_null()) n = exponent_field(j.at("n"));
  std::string marks = j.contains("marks") && j.at("marks").is_string() ? j.at("marks").get<std::string>() : "";
  bool transposed = j.contains("transposed") && j.at("transposed").is_boolean() && j.at("transposed").get<bool>();
  std::optional<Rational> mu;
  if (j.contains("mu") && !j.at("mu").is_null()) mu = rational_field(j.at("mu"));
  return word_new(parse_kind(fam.get<std::string>()), n, transposed, parse_marks(marks), mu);
}

Json ext_to_json(const ExtBlockMatrix& x) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < x.entries.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < x.entries.cols(); ++j) row.push_back(rational_to_string(x.entries(i, j)));
    entries.push_back(std::move(row));
  }
  return {{"row_stripes", {x.rows.size[0], x.rows.size[1], x.rows.size[2]}},
          {"col_stripes", {x.cols.size[0], x.cols.size[1], x.cols.size[2]}},
          {"entries", entries}};
}

ExtBlockMatrix ext_from_json(const Json& j) {
  ExtBlockMatrix x;
  for (std::size_t s = 0; s < 3; ++s) {
    x.rows.size[s] = exponent_field(field(j, "row_stripes").at(s));
    x.cols.size[s] = exponent_field(field(j, "col_stripes").at(s));
  }
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : field(j, "entries")) {
    std::vector<Rational> row;
    for (const auto& e : r) row.push_back(rational_field(e));
    rows.push_back(std::move(row));
  }
  x.entries = ScalarMatrix::from_rows(rows);
  if (rows.empty()) x.entries = ScalarMatrix(0, x.cols.total());
  check_shape(x);
  return x;
}

Json report_to_json(const VerificationReport& r) {
  Json j;
  j["ok"] = r.ok();
  j["d"] = r.d;
  j["phi_psi"] = r.phi_psi_ok;
  j["psi_phi"] = r.psi_phi_ok;
  j["phi_reduced"] = r.phi_reduced;
  j["psi_reduced"] = r.psi_reduced;
  j["det_identity"] = r.det_identity_ok;
  j["det_phi"] = r.det_phi ? profile_to_json(*r.det_phi) : Json(nullptr);
  j["det_psi"] = r.det_psi ? profile_to_json(*r.det_psi) : Json(nullptr);
  return j;
}

Json presentation_to_json(const Presentation& p, const Context& ctx) {
  Json gens = Json::array();
  for (const auto& g : p.generators) gens.push_back(generator_name(g));
  Json rels = Json::array();
  for (const auto& r : p.relations) rels.push_back(render_relation(p, r, ctx));
  return {{"generators", gens}, {"relations", rels}};
}

Json ar_report_to_json(const ARReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json conv = Json::object();
    for (std::size_t i = 0; i < 2; ++i)
      conv[convention_name(static_cast<MarkConvention>(i))] = {{"source_psi", profile_to_json(c.source_psi[i])},
                                                                {"target_phi", profile_to_json(c.target_phi[i])},
                                                                {"match", c.match[i]}};
    checks.push_back({{"rule", c.rule}, {"n", c.n}, {"source", c.source}, {"target", c.target},
                      {"passed", c.passed()}, {"conventions", conv}});
  }
  Json consistent = Json::array();
  for (auto c : r.consistent) consistent.push_back(convention_name(c));
  return {{"ok", r.ok()},
          {"consistent_conventions", consistent},
          {"self_pairs", r.self_pairs_ok},
          {"involution", r.involution_ok},
          {"failures", r.failures},
          {"checks", checks}};
}

FactorizationRecord make_record(const Factorization& f, const std::optional<WordSpec>& word) {
  FactorizationRecord r;
  r.word = word;
  r.lambda = f.context().lambda();
  r.mu = word && word->mu ? word->mu : f.context().mu();
  r.phi = f.phi();
  r.psi = f.psi();
  return r;
}

Json record_to_json(const FactorizationRecord& r) {
  Context ctx = r.context();
  Json meta;
  meta["family"] = r.word ? Json(kind_name(r.word->kind)) : Json(nullptr);
  meta["n"] = r.word && r.word->n ? Json(*r.word->n) : Json(nullptr);
  meta["marks"] = r.word ? Json(marks_string(r.word->marks)) : Json(nullptr);
  meta["transposed"] = r.word ? Json(r.word->transposed) : Json(nullptr);
  meta["lambda"] = rational_to_string(r.lambda);
  meta["mu"] = r.mu ? Json(rational_to_string(*r.mu)) : Json(nullptr);
  meta["d"] = r.phi.rows();
  Json j;
  j["meta"] = meta;
  j["phi"] = matrix_to_json(r.phi);
  j["psi"] = matrix_to_json(r.psi);
  VerificationReport rep = verify_factorization(ctx, r.phi, r.psi);
  j["det_phi"] = rep.det_phi ? profile_to_json(*rep.det_phi) : Json(nullptr);
  j["det_psi"] = rep.det_psi ? profile_to_json(*rep.det_psi) : Json(nullptr);
  j["report"] = report_to_json(rep);
  return j;
}

FactorizationRecord record_from_json(const Json& j) {
  FactorizationRecord r;
  const Json& meta = field(j, "meta");
  r.lambda = rational_field(field(meta, "lambda"));
  if (meta.contains("mu") && !meta.at("mu").is_null()) r.mu = rational_field(meta.at("mu"));
  if (meta.contains("family") && !meta.at("family").is_null()) {
    Json w = {{"family", meta.at("family")},
              {"n", meta.value("n", Json(nullptr))},
              {"marks", meta.value("marks", Json(""))},
              {"transposed", meta.value("transposed", Json(false))},
              {"mu", Json(nullptr)}};
    if (meta.at("family") == "w0" && r.mu) w["mu"] = rational_to_string(*r.mu);
    r.word = word_from_json(w);
  }
  r.phi = matrix_from_json(field(j, "phi"));
  r.psi = matrix_from_json(field(j, "psi"));
  // Validates the parameters.
  (void)r.context();
  return r;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace t44
