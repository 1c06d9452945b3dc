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

#ifndef T44_RELATIONS_HPP
#define T44_RELATIONS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "t44/families.hpp"
#include "t44/matrix.hpp"

namespace t44 {

enum class Species { U, V };

struct Generator {
  Species species = Species::U;
  /// 3, 4, 34 for u; 1, 2, 12 for v.
  int stripe = 3;
  /// Zero-based position within the stripe.
  std::size_t index = 0;
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// "u3_1", "v12_2" (one-based index).
std::string generator_name(const Generator& g);

struct Relation {
  /// The generator this relation was written for.
  Generator owner;
  /// Generator position in Presentation::generators -> nonzero coefficient.
  std::map<std::size_t, BiPoly> coeffs;
};

struct Presentation {
  std::vector<Generator> generators;
  std::vector<Relation> relations;
};

/// One u per row and one v per column of X. u-relations z_r u = 0 and
/// v-relations z_s v - sum_i X[i, j] u_i = 0, with z_34 = z3 z4 and z_12 = z1 z2.
Presentation presentation_from_ext(const ExtBlockMatrix& x, const Context& ctx);

/// Stripe preferences of the elimination. A mark that interchanges stripes 3 and 4
/// (or 1 and 2) interchanges the preferences too, so the result is relabeled consistently.
struct EliminationOptions {
  int u_primary = 3;
  int v_primary = 1;
  /// When set, pivots are drawn at random instead of by the deterministic rule.
  std::optional<std::uint64_t> random_seed;

  static EliminationOptions for_swaps(const StripeSwaps& swaps);
};

struct EliminationStep {
  Generator eliminated;
  Generator via;
  /// eliminated = sum of coeff * generator, over generators alive at that step.
  std::vector<std::pair<Generator, BiPoly>> expression;
};

/// Eliminates unit-pivot u-generators until every coefficient lies in (x, y).
/// The result lists generators in the default order (surviving u's, then the v
/// of each pivot in elimination order, then the remaining v's), and relation k is
/// paired with generator k. Throws NonSquareResult if the invariants break.
Presentation eliminate_units(const Presentation& p, const EliminationOptions& opts = {},
                             std::vector<EliminationStep>* trace = nullptr);

/// Rows are relations, columns the generators in the given order (a permutation
/// of generator positions) or in stored order. Throws BadOrdering.
PolyMatrix relation_matrix(const Presentation& p, const std::optional<std::vector<std::size_t>>& ordering = std::nullopt);

/// One relation per line, e.g. "z4*(z1*v1_1 - u3_1) = 0".
std::string dump_presentation(const Presentation& p, const Context& ctx);
std::string render_relation(const Presentation& p, const Relation& r, const Context& ctx);

/// The whole pipeline: build_X, presentation, elimination with mark-aware preferences, relation matrix.
PolyMatrix derive_phi(const WordSpec& w, const Context& ctx);

}  // namespace t44

#endif
