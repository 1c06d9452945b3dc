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

#ifndef T44_WORDS_HPP
#define T44_WORDS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "t44/arith.hpp"

namespace t44 {

enum class WordKind { W0, W1, W2, W3, W4, W5, W6, W7, W8, W9, W10 };
enum class Sign { Plus, Minus };
/// End of a word carrying a mark: e1 marks act on row stripes, f1 marks on column stripes.
enum class SpecialEnd { E1, F1 };

constexpr int kind_index(WordKind k) { return static_cast<int>(k); }
/// "w0".."w10"; throws ParseError on anything else.
WordKind parse_kind(std::string_view name);
std::string kind_name(WordKind k);
/// "+", "-", "+-", ...; throws ParseError on other characters.
std::vector<Sign> parse_marks(std::string_view text);
std::string marks_string(const std::vector<Sign>& marks);

struct WordSpec {
  WordKind kind = WordKind::W10;
  std::optional<unsigned> n;
  bool transposed = false;
  std::vector<Sign> marks;
  /// Eigenvalue of the cycle W0; when absent it is taken from the Context.
  std::optional<Rational> mu;

  friend bool operator==(const WordSpec&, const WordSpec&) = default;
};

/// Validates and builds. Throws InvalidSize, InvalidMarks, InvalidEigenvalue, InvalidTranspose.
WordSpec word_new(WordKind kind, std::optional<unsigned> n, bool transposed, std::vector<Sign> marks,
                  std::optional<Rational> mu = std::nullopt);

bool is_self_transpose(WordKind kind);
/// Smallest admissible n, or nullopt for W10.
std::optional<unsigned> min_size(WordKind kind);
std::size_t mark_arity(WordKind kind);

/// Word in the alphabet {e1, e2, f1, f2, -, ~}, e.g. "(e1 ~ e1 - f1 ~ f1) - e1".
std::string word_string(const WordSpec& w);
/// Special ends of the word as written (after transposition).
std::vector<SpecialEnd> special_ends(const WordSpec& w);
/// Short label such as "w2(2)+", "w2^T(0)-", "w0(3)", "w10".
std::string word_label(const WordSpec& w);

/// Throws SelfTranspose for W0, W1, W6, W9, W10.
WordSpec word_transpose(const WordSpec& w);

/// All valid specs with n <= max_n in (kind, n, transposed, marks) order; mu left unset.
std::vector<WordSpec> enumerate_words(unsigned max_n);

}  // namespace t44

#endif
