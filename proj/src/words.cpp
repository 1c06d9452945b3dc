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

#include "t44/words.hpp"

#include <algorithm>

namespace t44 {

WordKind parse_kind(std::string_view name) {
  for (int k = 0; k <= 10; ++k)
    if (name == "w" + std::to_string(k) || name == "W" + std::to_string(k)) return static_cast<WordKind>(k);
  throw Error(ErrorCode::ParseError, "unknown family '" + std::string(name) + "' (expected w0..w10)");
}

std::string kind_name(WordKind k) { return "w" + std::to_string(kind_index(k)); }

std::vector<Sign> parse_marks(std::string_view text) {
  std::vector<Sign> out;
  for (char c : text) {
    if (c == '+') out.push_back(Sign::Plus);
    else if (c == '-') out.push_back(Sign::Minus);
    else throw Error(ErrorCode::ParseError, "marks must be '+' or '-', got '" + std::string(text) + "'");
  }
  return out;
}

std::string marks_string(const std::vector<Sign>& marks) {
  std::string s;
  for (Sign m : marks) s += m == Sign::Plus ? '+' : '-';
  return s;
}

bool is_self_transpose(WordKind kind) {
  switch (kind) {
    case WordKind::W0:
    case WordKind::W1:
    case WordKind::W6:
    case WordKind::W9:
    case WordKind::W10:
      return true;
    default:
      return false;
  }
}

std::optional<unsigned> min_size(WordKind kind) {
  switch (kind) {
    case WordKind::W10: return std::nullopt;
    case WordKind::W0:
    case WordKind::W1:
    case WordKind::W6:
    case WordKind::W7:
    case WordKind::W9: return 1u;
    default: return 0u;
  }
}

std::size_t mark_arity(WordKind kind) {
  switch (kind) {
    case WordKind::W1: return 2;
    case WordKind::W2:
    case WordKind::W3:
    case WordKind::W4:
    case WordKind::W5: return 1;
    default: return 0;
  }
}

WordSpec word_new(WordKind kind, std::optional<unsigned> n, bool transposed, std::vector<Sign> marks,
                  std::optional<Rational> mu) {
  const std::string name = kind_name(kind);
  auto lo = min_size(kind);
  if (!lo) {
    if (n) throw Error(ErrorCode::InvalidSize, name + " takes no size");
  } else if (!n) {
    throw Error(ErrorCode::InvalidSize, name + " needs a size n >= " + std::to_string(*lo));
  } else if (*n < *lo) {
    std::string rule = kind == WordKind::W0   ? "a cycle has at least one period"
                       : kind == WordKind::W1 ? "a bispecial word has size n >= 1"
                       : kind == WordKind::W7 ? "w7 needs n >= 1 so that k = n - m - 1 >= 0"
                                              : "n >= 1 for w6 and w9";
    throw Error(ErrorCode::InvalidSize, name + "(" + std::to_string(*n) + "): " + rule);
  }
  if (marks.size() != mark_arity(kind)) {
    std::string rule = kind == WordKind::W1 ? "a bispecial word carries two marks"
                       : mark_arity(kind) == 1 ? "a special word carries exactly one mark"
                                               : "only special and bispecial words carry marks";
    throw Error(ErrorCode::InvalidMarks, name + ": " + rule);
  }
  if (mu) {
    if (kind != WordKind::W0) throw Error(ErrorCode::InvalidEigenvalue, name + ": only the cycle w0 has an eigenvalue");
    if (*mu == 0 || *mu == 1)
      throw Error(ErrorCode::InvalidEigenvalue, "eigenvalue mu must not be 0 or 1 (got " + rational_to_string(*mu) + ")");
  }
  if (transposed && is_self_transpose(kind))
    throw Error(ErrorCode::InvalidTranspose, name + " coincides with its transpose");
  return WordSpec{kind, n, transposed, std::move(marks), std::move(mu)};
}

namespace {

const char* kPeriod = "e1 ~ e1 - f1 ~ f1";

// "(P)^n - rest", with the power dropped for n = 0.
std::string with_power(unsigned n, const std::string& head, const std::string& tail) {
  std::string out = head;
  if (n > 0) {
    if (!out.empty()) out += " - ";
    out += std::string("(") + kPeriod + ")";
    if (n > 1) out += "^" + std::to_string(n);
  }
  if (!tail.empty()) {
    if (!out.empty()) out += " - ";
    out += tail;
  }
  return out;
}

std::string swap_letters(std::string s) {
  for (char& c : s) {
    if (c == 'e') c = 'f';
    else if (c == 'f') c = 'e';
  }
  return s;
}

}  // namespace

std::string word_string(const WordSpec& w) {
  unsigned n = w.n.value_or(0);
  std::string s;
  switch (w.kind) {
    case WordKind::W0:
    case WordKind::W6:
      s = n == 1 ? std::string(kPeriod) : with_power(n, "", "");
      break;
    case WordKind::W1: s = "e1 - f1"; break;
    case WordKind::W2: s = with_power(n, "", "e1"); break;
    case WordKind::W3: s = with_power(n, "f2", "e1"); break;
    case WordKind::W4: s = with_power(n, "", "e1 ~ e1 - f1"); break;
    case WordKind::W5: s = with_power(n, "f2", "e1 ~ e1 - f1"); break;
    case WordKind::W7: s = with_power(n, "", "e2"); break;
    case WordKind::W8: s = with_power(n, "", "e1 ~ e1 - f2"); break;
    case WordKind::W9: s = with_power(n, "f2", "e2"); break;
    case WordKind::W10: s = "e2 - f2"; break;
  }
  return w.transposed ? swap_letters(s) : s;
}

std::vector<SpecialEnd> special_ends(const WordSpec& w) {
  auto flip = [&](SpecialEnd e) {
    if (!w.transposed) return e;
    return e == SpecialEnd::E1 ? SpecialEnd::F1 : SpecialEnd::E1;
  };
  switch (w.kind) {
    case WordKind::W1: return {SpecialEnd::E1, SpecialEnd::F1};
    case WordKind::W2:
    case WordKind::W3: return {flip(SpecialEnd::E1)};
    case WordKind::W4:
    case WordKind::W5: return {flip(SpecialEnd::F1)};
    default: return {};
  }
}

std::string word_label(const WordSpec& w) {
  std::string s = kind_name(w.kind);
  if (w.transposed) s += "^T";
  if (w.n) s += "(" + std::to_string(*w.n) + ")";
  s += marks_string(w.marks);
  return s;
}

WordSpec word_transpose(const WordSpec& w) {
  if (is_self_transpose(w.kind))
    throw Error(ErrorCode::SelfTranspose, kind_name(w.kind) + " coincides with its transpose");
  WordSpec t = w;
  t.transposed = !t.transposed;
  return t;
}

std::vector<WordSpec> enumerate_words(unsigned max_n) {
  std::vector<WordSpec> out;
  const std::vector<std::vector<Sign>> one = {{Sign::Plus}, {Sign::Minus}};
  const std::vector<std::vector<Sign>> two = {
      {Sign::Plus, Sign::Plus}, {Sign::Plus, Sign::Minus}, {Sign::Minus, Sign::Plus}, {Sign::Minus, Sign::Minus}};
  for (int k = 0; k <= 10; ++k) {
    WordKind kind = static_cast<WordKind>(k);
    std::vector<std::vector<Sign>> marks = mark_arity(kind) == 2 ? two : mark_arity(kind) == 1 ? one : std::vector<std::vector<Sign>>{{}};
    std::vector<bool> orientations = is_self_transpose(kind) ? std::vector<bool>{false} : std::vector<bool>{false, true};
    auto lo = min_size(kind);
    if (!lo) {
      out.push_back(word_new(kind, std::nullopt, false, {}));
      continue;
    }
    for (unsigned n = *lo; n <= max_n; ++n)
      for (bool t : orientations)
        for (const auto& m : marks) out.push_back(word_new(kind, n, t, m));
  }
  return out;
}

}  // namespace t44
