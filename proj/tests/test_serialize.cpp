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


#include "doctest.h"
#include "t44/checks.hpp"
#include "t44/render.hpp"

using namespace t44;

TEST_CASE("polynomial format") {
  BiPoly p({{{1, 1}, Rational(3, 2)}, {{0, 0}, -1}});
  CHECK(poly_to_json(p).dump() == R"({"terms":[{"ex":1,"ey":1,"c":"3/2"},{"ex":0,"ey":0,"c":"-1"}]})");
  CHECK(poly_from_json(poly_to_json(p)) == p);
  CHECK(poly_from_json(parse_json(R"({"terms":[{"ex":0,"ey":0,"c":"1"},{"ex":2,"ey":0,"c":"1"}]})")) ==
        BiPoly({{{2, 0}, 1}, {{0, 0}, 1}}));
  CHECK(poly_to_json(BiPoly()).dump() == R"({"terms":[]})");
}

TEST_CASE("malformed input is a parse error") {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::VerificationFailed;
  };
  CHECK(code([] { parse_json("{"); }) == ErrorCode::ParseError);
  CHECK(code([] { poly_from_json(parse_json(R"({"terms":[{"ex":1,"ey":0,"c":1.5}]})")); }) == ErrorCode::ParseError);
  CHECK(code([] { poly_from_json(parse_json(R"({"terms":[{"ex":-1,"ey":0,"c":"1"}]})")); }) == ErrorCode::ParseError);
  CHECK(code([] { poly_from_json(parse_json(R"({"terms":[{"ex":1,"ey":0,"c":"0.5"}]})")); }) == ErrorCode::ParseError);
  CHECK(code([] { matrix_from_json(parse_json(R"([[{"terms":[]}],[]])")); }) == ErrorCode::ParseError);
  CHECK(code([] { record_from_json(parse_json(R"({"meta":{}})")); }) == ErrorCode::ParseError);
  CHECK(code([] { word_from_json(parse_json(R"({"family":"w2","n":1,"marks":"+*"})")); }) == ErrorCode::ParseError);
  CHECK(code([] { word_from_json(parse_json(R"({"family":"w6","n":0})")); }) == ErrorCode::InvalidSize);
}

TEST_CASE("factorization records round-trip byte for byte") {
  Context ctx = Context::create(Rational(-7, 3), Rational(5, 2));
  for (const auto& w : enumerate_words(2)) {
    Factorization f = make_factorization(w, ctx);
    std::string text = dump(record_to_json(make_record(f, w)));
    FactorizationRecord back = record_from_json(parse_json(text));
    CHECK(back.phi == f.phi());
    CHECK(back.psi == f.psi());
    CHECK(back.word == std::optional<WordSpec>(w.kind == WordKind::W0 ? word_new(w.kind, w.n, false, {}, Rational(5, 2)) : w));
    CHECK(dump(record_to_json(back)) == text);
  }
}

TEST_CASE("record layout") {
  Context ctx = Context::create(2);
  WordSpec w = word_new(WordKind::W2, 2u, false, {Sign::Plus});
  Json j = record_to_json(make_record(make_factorization(w, ctx), w));
  CHECK(j["meta"]["family"] == "w2");
  CHECK(j["meta"]["n"] == 2);
  CHECK(j["meta"]["marks"] == "+");
  CHECK(j["meta"]["transposed"] == false);
  CHECK(j["meta"]["lambda"] == "2");
  CHECK(j["meta"]["mu"].is_null());
  CHECK(j["meta"]["d"] == 5);
  CHECK(j["det_phi"]["z"] == Json::array({2, 2, 3, 2}));
  CHECK(j["det_phi"]["unit"] == "1");
  CHECK(j["det_psi"]["z"] == Json::array({3, 3, 2, 3}));
  CHECK(j["report"]["ok"] == true);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"meta", "phi", "psi", "det_phi", "det_psi", "report"});
}

TEST_CASE("block matrices round-trip") {
  Context ctx = Context::create(2, Rational(3));
  for (const auto& w : enumerate_words(3)) {
    ExtBlockMatrix x = build_X(w, ctx);
    CHECK(ext_from_json(ext_to_json(x)) == x);
  }
  CHECK_THROWS_AS(ext_from_json(parse_json(R"({"row_stripes":[1,0,0],"col_stripes":[1,0,0],"entries":[["1","2"]]})")),
                  Error);
}

TEST_CASE("words round-trip") {
  for (const auto& w : enumerate_words(3)) CHECK(word_from_json(word_to_json(w)) == w);
  WordSpec w0 = word_new(WordKind::W0, 2u, false, {}, Rational(-2));
  CHECK(word_from_json(word_to_json(w0)) == w0);
}

TEST_CASE("text rendering") {
  Context ctx = Context::create(2);
  PolyMatrix m = PolyMatrix::from_rows({{ctx.z(3), BiPoly()}, {-ctx.z(4), ctx.z(1) * ctx.z(4)}});
  CHECK(render_matrix(ctx, m) == "[ z3   0     ]\n[ -z4  z1*z4 ]\n");
  CHECK(render_matrix(ctx, m, true) == "[ x - y     0           ]\n[ -x + 2*y  x*y - 2*y^2 ]\n");
  DetProfile p{1, {3, 2, 3, 3}};
  CHECK(render_profile(p) == "z1^3*z2^2*z3^3*z4^3  (3, 2, 3, 3)");
}
