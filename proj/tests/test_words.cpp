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


#include <set>

#include "doctest.h"
#include "t44/words.hpp"

using namespace t44;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::VerificationFailed;
}

}  // namespace

TEST_CASE("kind and mark parsing") {
  CHECK(parse_kind("w0") == WordKind::W0);
  CHECK(parse_kind("w10") == WordKind::W10);
  CHECK(kind_name(WordKind::W7) == "w7");
  CHECK_THROWS_AS(parse_kind("w11"), Error);
  CHECK_THROWS_AS(parse_kind(""), Error);
  CHECK(parse_marks("+-") == std::vector<Sign>{Sign::Plus, Sign::Minus});
  CHECK(parse_marks("").empty());
  CHECK(marks_string({Sign::Minus, Sign::Plus}) == "-+");
  CHECK_THROWS_AS(parse_marks("+x"), Error);
}

TEST_CASE("word validation") {
  CHECK(code_of([] { word_new(WordKind::W6, 0u, false, {}); }) == ErrorCode::InvalidSize);
  CHECK(code_of([] { word_new(WordKind::W9, 0u, false, {}); }) == ErrorCode::InvalidSize);
  CHECK(code_of([] { word_new(WordKind::W0, 0u, false, {}); }) == ErrorCode::InvalidSize);
  CHECK(code_of([] { word_new(WordKind::W7, 0u, false, {}); }) == ErrorCode::InvalidSize);
  CHECK(code_of([] { word_new(WordKind::W10, 1u, false, {}); }) == ErrorCode::InvalidSize);
  CHECK(code_of([] { word_new(WordKind::W2, std::nullopt, false, {Sign::Plus}); }) == ErrorCode::InvalidSize);
  CHECK(code_of([] { word_new(WordKind::W2, 1u, false, {}); }) == ErrorCode::InvalidMarks);
  CHECK(code_of([] { word_new(WordKind::W1, 1u, false, {Sign::Plus}); }) == ErrorCode::InvalidMarks);
  CHECK(code_of([] { word_new(WordKind::W8, 1u, false, {Sign::Plus}); }) == ErrorCode::InvalidMarks);
  CHECK(code_of([] { word_new(WordKind::W0, 1u, false, {}, Rational(1)); }) == ErrorCode::InvalidEigenvalue);
  CHECK(code_of([] { word_new(WordKind::W0, 1u, false, {}, Rational(0)); }) == ErrorCode::InvalidEigenvalue);
  CHECK(code_of([] { word_new(WordKind::W2, 1u, false, {Sign::Plus}, Rational(3)); }) == ErrorCode::InvalidEigenvalue);
  CHECK(code_of([] { word_new(WordKind::W6, 1u, true, {}); }) == ErrorCode::InvalidTranspose);
  CHECK(code_of([] { word_new(WordKind::W10, std::nullopt, true, {}); }) == ErrorCode::InvalidTranspose);
  CHECK_NOTHROW(word_new(WordKind::W2, 0u, true, {Sign::Minus}));
  CHECK_NOTHROW(word_new(WordKind::W0, 2u, false, {}, Rational(-2)));
}

TEST_CASE("word strings and labels") {
  WordSpec w2 = word_new(WordKind::W2, 2u, false, {Sign::Plus});
  CHECK(word_string(w2) == "(e1 ~ e1 - f1 ~ f1)^2 - e1");
  CHECK(word_label(w2) == "w2(2)+");
  WordSpec w2t = word_transpose(w2);
  CHECK(word_label(w2t) == "w2^T(2)+");
  CHECK(word_string(w2t) == "(f1 ~ f1 - e1 ~ e1)^2 - f1");
  CHECK(word_transpose(w2t) == w2);
  CHECK(word_string(word_new(WordKind::W0, 1u, false, {})) == "e1 ~ e1 - f1 ~ f1");
  CHECK(word_label(word_new(WordKind::W10, std::nullopt, false, {})) == "w10");
  CHECK(word_label(word_new(WordKind::W1, 1u, false, {Sign::Plus, Sign::Minus})) == "w1(1)+-");
  CHECK_THROWS_AS(word_transpose(word_new(WordKind::W9, 1u, false, {})), Error);
  CHECK(special_ends(w2) == std::vector<SpecialEnd>{SpecialEnd::E1});
  CHECK(special_ends(w2t) == std::vector<SpecialEnd>{SpecialEnd::F1});
}

TEST_CASE("enumeration matches an independent count") {
  // Per kind: smallest n (-1 for no size), number of marks, whether a transpose exists.
  struct Row {
    int lo;
    unsigned marks;
    bool transposable;
  };
  const Row table[11] = {{1, 0, false}, {1, 2, false}, {0, 1, true}, {0, 1, true}, {0, 1, true}, {0, 1, true},
                         {1, 0, false}, {1, 0, true},  {0, 0, true}, {1, 0, false}, {-1, 0, false}};
  for (unsigned max_n : {0u, 1u, 2u, 4u, 6u}) {
    std::size_t expected = 0;
    for (const auto& r : table) {
      std::size_t sizes = r.lo < 0 ? 1 : (max_n >= static_cast<unsigned>(r.lo) ? max_n - r.lo + 1 : 0);
      expected += sizes * (std::size_t{1} << r.marks) * (r.transposable ? 2 : 1);
    }
    auto words = enumerate_words(max_n);
    CHECK(words.size() == expected);
    std::set<std::string> labels;
    for (const auto& w : words) labels.insert(word_label(w));
    CHECK(labels.size() == words.size());
  }
  CHECK(enumerate_words(2).size() == 73);
  CHECK(word_label(enumerate_words(2).front()) == "w0(1)");
  CHECK(word_label(enumerate_words(2).back()) == "w10");
}
