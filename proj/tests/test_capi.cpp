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


#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include "doctest.h"
#include "t44/t44.h"

namespace {

struct Str {
  char* p = nullptr;
  ~Str() { t44_string_free(p); }
  std::string s() const { return p ? p : ""; }
};

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("status names and input classification") {
  CHECK(std::string(t44_status_name(T44_OK)) == "Ok");
  CHECK(std::string(t44_status_name(T44_ERR_INVALID_SIZE)) == "InvalidSize");
  CHECK(std::string(t44_status_name(T44_ERR_PARSE)) == "ParseError");
  CHECK(std::string(t44_status_name(T44_ERR_VERIFICATION_FAILED)) == "VerificationFailed");
  CHECK(std::string(t44_status_name(T44_ERR_INTERNAL)) == "Internal");
  CHECK(t44_status_is_input_error(T44_ERR_INVALID_EIGENVALUE));
  CHECK(t44_status_is_input_error(T44_ERR_NULL_ARGUMENT));
  CHECK_FALSE(t44_status_is_input_error(T44_ERR_VERIFICATION_FAILED));
  CHECK_FALSE(t44_status_is_input_error(T44_ERR_SINGULAR));
  CHECK(std::strlen(t44_version()) > 0);
}

TEST_CASE("contexts and words") {
  t44_context* ctx = nullptr;
  CHECK(t44_context_create("2", nullptr, &ctx) == T44_OK);
  t44_context_destroy(ctx);
  CHECK(t44_context_create("1.5", nullptr, &ctx) == T44_ERR_PARSE);
  CHECK(contains(t44_last_error(), "1.5"));
  CHECK(t44_context_create("1", nullptr, &ctx) != T44_OK);
  CHECK(t44_context_create(nullptr, nullptr, &ctx) == T44_ERR_NULL_ARGUMENT);

  t44_word* w = nullptr;
  CHECK(t44_word_create("w6", 0, nullptr, 0, nullptr, &w) == T44_ERR_INVALID_SIZE);
  CHECK(t44_word_create("w0", 1, nullptr, 0, "1", &w) == T44_ERR_INVALID_EIGENVALUE);
  CHECK(t44_word_create("w2", 1, "", 0, nullptr, &w) == T44_ERR_INVALID_MARKS);
  CHECK(t44_word_create("w12", 1, "", 0, nullptr, &w) == T44_ERR_PARSE);
  REQUIRE(t44_word_create("w2", 2, "+", 1, nullptr, &w) == T44_OK);
  Str label, word;
  CHECK(t44_word_label(w, &label.p) == T44_OK);
  CHECK(t44_word_string(w, &word.p) == T44_OK);
  CHECK(label.s() == "w2^T(2)+");
  CHECK(word.s() == "(f1 ~ f1 - e1 ~ e1)^2 - f1");
  t44_word_destroy(w);
  t44_word_destroy(nullptr);
  t44_context_destroy(nullptr);

  Str list, json;
  CHECK(t44_words_enumerate(2, T44_FORMAT_TEXT, &list.p) == T44_OK);
  std::size_t lines = 0;
  for (char c : list.s()) lines += c == '\n';
  CHECK(lines == 73);
  CHECK(t44_words_enumerate(0, T44_FORMAT_JSON, &json.p) == T44_OK);
  CHECK(contains(json.s(), "\"label\": \"w10\""));
}

TEST_CASE("generate, serialize, verify and translate") {
  t44_context* ctx = nullptr;
  t44_word* w = nullptr;
  REQUIRE(t44_context_create("2", nullptr, &ctx) == T44_OK);
  REQUIRE(t44_word_create("w2", 2, "+", 0, nullptr, &w) == T44_OK);
  t44_factorization* f = nullptr;
  REQUIRE(t44_factorization_generate(ctx, w, nullptr, &f) == T44_OK);
  size_t d = 0;
  CHECK(t44_factorization_size(f, &d) == T44_OK);
  CHECK(d == 5);
  Str e, x;
  CHECK(t44_factorization_entry(f, 0, 1, 1, 0, &e.p) == T44_OK);
  CHECK(e.s() == "z1*z4");
  CHECK(t44_factorization_entry(f, 1, 0, 0, 1, &x.p) == T44_OK);
  CHECK(x.s() == "x^2*y - 2*x*y^2");
  Str bad;
  CHECK(t44_factorization_entry(f, 2, 0, 0, 0, &bad.p) == T44_ERR_INVALID_PARAMETER);
  CHECK(t44_factorization_entry(f, 0, 5, 0, 0, &bad.p) == T44_ERR_INVALID_PARAMETER);

  Str json;
  REQUIRE(t44_factorization_to_json(f, &json.p) == T44_OK);
  t44_factorization* g = nullptr;
  REQUIRE(t44_factorization_from_json(json.p, &g) == T44_OK);
  Str json2;
  CHECK(t44_factorization_to_json(g, &json2.p) == T44_OK);
  CHECK(json.s() == json2.s());

  int ok = 0;
  Str report;
  CHECK(t44_factorization_verify(g, T44_FORMAT_TEXT, &ok, &report.p) == T44_OK);
  CHECK(ok == 1);
  CHECK(contains(report.s(), "(2, 2, 3, 2)"));

  t44_factorization* t = nullptr;
  REQUIRE(t44_factorization_translate(f, &t) == T44_OK);
  Str tj;
  CHECK(t44_factorization_to_json(t, &tj.p) == T44_OK);
  CHECK(contains(tj.s(), "\"z\": [\n      3,\n      3,\n      2,\n      3\n    ]"));
  Str text;
  CHECK(t44_factorization_to_text(t, 0, &text.p) == T44_OK);
  CHECK(contains(text.s(), "verification      : ok"));

  std::string broken = json.s();
  auto pos = broken.find("\"c\": \"1\"");
  REQUIRE(pos != std::string::npos);
  broken.replace(pos, 8, "\"c\": \"2\"");
  t44_factorization* h = nullptr;
  REQUIRE(t44_factorization_from_json(broken.c_str(), &h) == T44_OK);
  CHECK(t44_factorization_verify(h, T44_FORMAT_JSON, &ok, nullptr) == T44_OK);
  CHECK(ok == 0);
  t44_factorization* ht = nullptr;
  CHECK(t44_factorization_translate(h, &ht) == T44_ERR_VERIFICATION_FAILED);
  CHECK(t44_factorization_from_json("{", &ht) == T44_ERR_PARSE);
  CHECK(t44_factorization_from_json("{\"meta\":{\"lambda\":\"2\"},\"phi\":[],\"psi\":[]}", &ht) == T44_OK);
  t44_factorization_destroy(ht);

  t44_factorization_destroy(h);
  t44_factorization_destroy(t);
  t44_factorization_destroy(g);
  t44_factorization_destroy(f);
  t44_word_destroy(w);
  t44_context_destroy(ctx);
}

TEST_CASE("derive, pairing report and check suite") {
  t44_context* ctx = nullptr;
  t44_word* w = nullptr;
  REQUIRE(t44_context_create("5", "3", &ctx) == T44_OK);
  REQUIRE(t44_word_create("w3", 1, "+", 0, nullptr, &w) == T44_OK);
  Str trace;
  t44_agreement a = T44_AGREE_DIFFERS;
  CHECK(t44_derive(ctx, w, T44_FORMAT_TEXT, 0, &trace.p, &a) == T44_OK);
  CHECK(a != T44_AGREE_DIFFERS);
  CHECK(contains(trace.s(), "minimal presentation:"));

  Str ar;
  int ok = 0;
  CHECK(t44_ar_report(ctx, 2, T44_FORMAT_JSON, &ar.p, &ok) == T44_OK);
  CHECK(ok == 1);
  CHECK(contains(ar.s(), "\"consistent_conventions\": [\n    \"stripe-assigned\"\n  ]"));

  const char* lambdas[] = {"2", "-1"};
  t44_check_options opts{};
  opts.max_n = 1;
  opts.lambdas = lambdas;
  opts.lambda_count = 2;
  opts.seed = 3;
  opts.transform_trials = 2;
  Str summary;
  CHECK(t44_check_all(&opts, T44_FORMAT_TEXT, &summary.p, &ok) == T44_OK);
  CHECK(ok == 1);
  CHECK(contains(summary.s(), "all checks passed"));

  const char* bad[] = {"0"};
  opts.lambdas = bad;
  opts.lambda_count = 1;
  Str s2;
  CHECK(t44_check_all(&opts, T44_FORMAT_TEXT, &s2.p, &ok) != T44_OK);
  CHECK(t44_check_all(nullptr, T44_FORMAT_TEXT, &s2.p, &ok) == T44_ERR_NULL_ARGUMENT);

  std::ifstream in(std::string(T44_DATA_DIR) + "/worked_example.json");
  std::string golden{std::istreambuf_iterator<char>(in), {}};
  opts.lambdas = nullptr;
  opts.lambda_count = 0;
  opts.max_n = 0;
  opts.golden_json = golden.c_str();
  Str s3;
  CHECK(t44_check_all(&opts, T44_FORMAT_JSON, &s3.p, &ok) == T44_OK);
  CHECK(ok == 1);

  t44_word_destroy(w);
  t44_context_destroy(ctx);
}
