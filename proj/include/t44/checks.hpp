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

#ifndef T44_CHECKS_HPP
#define T44_CHECKS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "t44/serialize.hpp"

namespace t44 {

/// A printed (phi, psi) pair in z-form, compared entry for entry.
struct GoldenExample {
  std::string name;
  WordSpec word;
  std::vector<std::vector<std::string>> phi;
  std::vector<std::vector<std::string>> psi;
};

/// The worked example and its transpose.
std::vector<GoldenExample> builtin_goldens();
Json goldens_to_json(const std::vector<GoldenExample>& g);
/// Throws ParseError.
std::vector<GoldenExample> goldens_from_json(const Json& j);
PolyMatrix golden_matrix(const Context& ctx, const std::vector<std::vector<std::string>>& rows);

enum class Agreement { Identity, Permutation, Profile, Differs };
std::string agreement_text(Agreement a);

struct Derivation {
  WordSpec word;
  ExtBlockMatrix x;
  Presentation initial;
  std::vector<EliminationStep> steps;
  Presentation reduced;
  PolyMatrix phi;
  PolyMatrix closed_form;
  Agreement agreement = Agreement::Differs;
  std::optional<PermutationPair> permutation;
};

/// Runs the relations pipeline and compares with the closed form.
/// Permutation search is attempted up to perm_limit.
Derivation derive(const WordSpec& w, const Context& ctx, std::size_t perm_limit = 12);
std::string render_derivation(const Derivation& d, const Context& ctx, bool expanded = false);
Json derivation_to_json(const Derivation& d, const Context& ctx);

struct CheckConfig {
  unsigned max_n = 4;
  std::vector<Rational> lambdas{Rational(2)};
  std::vector<Rational> mus{Rational(3), Rational(-2)};
  std::uint64_t seed = 1;
  unsigned transform_trials = 100;
  unsigned degree_bound = 4;
  std::vector<GoldenExample> goldens = builtin_goldens();
};

struct CheckLine {
  std::string name;
  bool ok = true;
  std::vector<std::string> failures;
};

struct CheckSummary {
  std::vector<CheckLine> lines;
  bool ok() const;
};

/// Worked-example goldens, family sweep, size laws, cross-pipeline agreement,
/// translation pairings and transform invariance, all up to max_n.
CheckSummary run_checks(const CheckConfig& cfg);
std::string render_summary(const CheckSummary& s);
Json summary_to_json(const CheckSummary& s);

}  // namespace t44

#endif
