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

#ifndef T44_FACTORIZATIONS_HPP
#define T44_FACTORIZATIONS_HPP

#include <array>
#include <string>
#include <vector>

#include "t44/matrix.hpp"
#include "t44/words.hpp"

namespace t44 {

/// How a minus mark acts on the closed-form matrix.
enum class MarkConvention {
  /// e1 end interchanges z3/z4, f1 end interchanges z1/z2 (the stripes the mark swaps). Default.
  StripeAssigned,
  /// e1 end interchanges z1/z2, f1 end interchanges z3/z4.
  Literal,
};

std::string convention_name(MarkConvention c);

/// z1..z4 after the interchanges required by the marks of w.
std::array<BiPoly, 4> marked_forms(const WordSpec& w, const Context& ctx, MarkConvention conv);

/// Closed-form relation matrix of the word's module.
PolyMatrix closed_form_phi(const WordSpec& w, const Context& ctx,
                           MarkConvention conv = MarkConvention::StripeAssigned);

/// Closed-form phi with its solved psi, verified. Errors carry the word label.
Factorization make_factorization(const WordSpec& w, const Context& ctx, const SolveOptions& opts = {},
                                 MarkConvention conv = MarkConvention::StripeAssigned);

/// Throws NotSquare, Singular (det = 0) or NotZMonomial.
DetProfile det_profile(const Context& ctx, const PolyMatrix& a);

/// (phi, psi) -> (psi, phi), re-verified.
Factorization ar_translate(const Factorization& f);

struct ARCheck {
  std::string rule;
  unsigned n = 0;
  std::string source;
  std::string target;
  /// Indexed by convention (StripeAssigned, Literal).
  std::array<DetProfile, 2> source_psi;
  std::array<DetProfile, 2> target_phi;
  std::array<bool, 2> match{false, false};
  bool passed() const { return match[0] || match[1]; }
};

struct ARReport {
  std::vector<ARCheck> checks;
  /// Conventions under which every check matches.
  std::vector<MarkConvention> consistent;
  bool self_pairs_ok = true;
  bool involution_ok = true;
  std::vector<std::string> failures;

  bool ok() const {
    return consistent.size() == 1 && self_pairs_ok && involution_ok && failures.empty();
  }
};

/// Determinant-level check of the translation pairings for n <= max_n.
ARReport check_ar_pairings(const Context& ctx, unsigned max_n, const SolveOptions& opts = {});

}  // namespace t44

#endif
