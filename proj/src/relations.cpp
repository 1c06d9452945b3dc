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

#include "t44/relations.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace t44 {

std::string generator_name(const Generator& g) {
  return std::string(g.species == Species::U ? "u" : "v") + std::to_string(g.stripe) + "_" +
         std::to_string(g.index + 1);
}

namespace {

const int kRowStripes[3] = {3, 4, 34};
const int kColStripes[3] = {1, 2, 12};

BiPoly stripe_form(const Context& ctx, int stripe) {
  switch (stripe) {
    case 34: return ctx.z(3) * ctx.z(4);
    case 12: return ctx.z(1) * ctx.z(2);
    default: return ctx.z(stripe);
  }
}

}  // namespace

Presentation presentation_from_ext(const ExtBlockMatrix& x, const Context& ctx) {
  check_shape(x);
  Presentation p;
  for (std::size_t s = 0; s < 3; ++s)
    for (std::size_t i = 0; i < x.rows.size[s]; ++i) p.generators.push_back({Species::U, kRowStripes[s], i});
  const std::size_t nu = p.generators.size();
  for (std::size_t s = 0; s < 3; ++s)
    for (std::size_t j = 0; j < x.cols.size[s]; ++j) p.generators.push_back({Species::V, kColStripes[s], j});

  for (std::size_t i = 0; i < nu; ++i) {
    Relation r{p.generators[i], {}};
    r.coeffs[i] = stripe_form(ctx, p.generators[i].stripe);
    p.relations.push_back(std::move(r));
  }
  for (std::size_t j = 0; j < x.entries.cols(); ++j) {
    const std::size_t g = nu + j;
    Relation r{p.generators[g], {}};
    r.coeffs[g] = stripe_form(ctx, p.generators[g].stripe);
    for (std::size_t i = 0; i < nu; ++i)
      if (x.entries(i, j) != 0) r.coeffs[i] = BiPoly::constant(-x.entries(i, j));
    p.relations.push_back(std::move(r));
  }
  return p;
}

EliminationOptions EliminationOptions::for_swaps(const StripeSwaps& swaps) {
  EliminationOptions o;
  o.u_primary = swaps.rows ? 4 : 3;
  o.v_primary = swaps.cols ? 2 : 1;
  return o;
}

namespace {

// Rank of a stripe in the preference order primary, secondary, third.
int stripe_rank(int stripe, int primary) {
  if (stripe == primary) return 0;
  if (stripe == 34 || stripe == 12) return 2;
  return 1;
}

bool is_unit(const BiPoly& c) { return !c.is_zero() && c.is_constant(); }

}  // namespace

Presentation eliminate_units(const Presentation& p, const EliminationOptions& opts,
                             std::vector<EliminationStep>* trace) {
  const auto& gens = p.generators;
  std::vector<Relation> rels = p.relations;
  std::vector<bool> rel_alive(rels.size(), true);
  std::vector<bool> gen_alive(gens.size(), true);
  std::optional<std::mt19937_64> rng;
  if (opts.random_seed) rng.emplace(*opts.random_seed);

  auto units_of = [&](const Relation& r) {
    std::vector<std::size_t> out;
    for (const auto& [g, c] : r.coeffs)
      if (gens[g].species == Species::U && is_unit(c)) out.push_back(g);
    return out;
  };
  auto v_key = [&](std::size_t g) {
    return std::make_pair(stripe_rank(gens[g].stripe, opts.v_primary), gens[g].index);
  };
  // The v-relation owned by generator g.
  std::vector<std::optional<std::size_t>> rel_of_v(gens.size());
  for (std::size_t r = 0; r < rels.size(); ++r)
    if (rels[r].owner.species == Species::V)
      for (std::size_t g = 0; g < gens.size(); ++g)
        if (gens[g] == rels[r].owner) rel_of_v[g] = r;

  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (v generator, eliminated u)
  std::optional<int> last_stripe;
  for (;;) {
    struct Candidate {
      std::size_t v;
      std::size_t rel;
      std::vector<std::size_t> units;
    };
    std::vector<Candidate> cands;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (!rel_of_v[g] || !rel_alive[*rel_of_v[g]]) continue;
      auto u = units_of(rels[*rel_of_v[g]]);
      if (!u.empty()) cands.push_back({g, *rel_of_v[g], std::move(u)});
    }
    if (cands.empty()) break;

    const Candidate* pick = nullptr;
    std::size_t u = 0;
    if (rng) {
      pick = &cands[(*rng)() % cands.size()];
      u = pick->units[(*rng)() % pick->units.size()];
    } else {
      // Fewest unit pivots first; ties prefer a stripe other than the previous
      // pivot's, then generator order.
      auto better = [&](const Candidate& a, const Candidate& b) {
        if (a.units.size() != b.units.size()) return a.units.size() < b.units.size();
        if (last_stripe) {
          bool a_alt = gens[a.v].stripe != *last_stripe, b_alt = gens[b.v].stripe != *last_stripe;
          if (a_alt != b_alt) return a_alt;
        }
        return v_key(a.v) < v_key(b.v);
      };
      pick = &*std::min_element(cands.begin(), cands.end(), better);
      // Within the relation: secondary stripe, then primary, then 34; highest index.
      auto u_key = [&](std::size_t g) {
        int r = stripe_rank(gens[g].stripe, opts.u_primary);
        int order = r == 1 ? 0 : r == 0 ? 1 : 2;
        return std::make_pair(order, -static_cast<long>(gens[g].index));
      };
      u = *std::min_element(pick->units.begin(), pick->units.end(),
                            [&](std::size_t a, std::size_t b) { return u_key(a) < u_key(b); });
    }

    Relation def = rels[pick->rel];
    rel_alive[pick->rel] = false;
    const Rational c = def.coeffs.at(u).constant_term();
    std::vector<std::pair<std::size_t, BiPoly>> expr;
    for (const auto& [g, coef] : def.coeffs)
      if (g != u) expr.emplace_back(g, coef.scaled(-1 / c));

    for (std::size_t r = 0; r < rels.size(); ++r) {
      if (!rel_alive[r]) continue;
      auto it = rels[r].coeffs.find(u);
      if (it == rels[r].coeffs.end()) continue;
      BiPoly cu = std::move(it->second);
      rels[r].coeffs.erase(it);
      for (const auto& [g, e] : expr) {
        BiPoly& slot = rels[r].coeffs[g];
        slot += cu * e;
        if (slot.is_zero()) rels[r].coeffs.erase(g);
      }
    }
    gen_alive[u] = false;
    pivots.emplace_back(pick->v, u);
    last_stripe = gens[pick->v].stripe;
    if (trace) {
      EliminationStep step{gens[u], gens[pick->v], {}};
      for (const auto& [g, e] : expr) step.expression.emplace_back(gens[g], e);
      trace->push_back(std::move(step));
    }
  }

  // Default order: surviving u's, pivot v's, leftover v's.
  std::vector<std::size_t> order;
  std::vector<std::size_t> row_of;  // relation index paired with each column
  auto rel_owned_by = [&](std::size_t g) {
    for (std::size_t r = 0; r < rels.size(); ++r)
      if (rels[r].owner == gens[g]) return r;
    throw Error(ErrorCode::NonSquareResult, "generator without a relation");
  };
  std::vector<std::size_t> us;
  for (std::size_t g = 0; g < gens.size(); ++g)
    if (gen_alive[g] && gens[g].species == Species::U) us.push_back(g);
  std::stable_sort(us.begin(), us.end(), [&](std::size_t a, std::size_t b) {
    return std::make_pair(stripe_rank(gens[a].stripe, opts.u_primary), gens[a].index) <
           std::make_pair(stripe_rank(gens[b].stripe, opts.u_primary), gens[b].index);
  });
  for (std::size_t g : us) {
    order.push_back(g);
    row_of.push_back(rel_owned_by(g));
  }
  std::set<std::size_t> pivot_vs;
  for (auto [v, u] : pivots) {
    order.push_back(v);
    row_of.push_back(rel_owned_by(u));
    pivot_vs.insert(v);
  }
  std::vector<std::size_t> rest;
  for (std::size_t g = 0; g < gens.size(); ++g)
    if (gens[g].species == Species::V && !pivot_vs.count(g)) rest.push_back(g);
  std::stable_sort(rest.begin(), rest.end(), [&](std::size_t a, std::size_t b) { return v_key(a) < v_key(b); });
  for (std::size_t g : rest) {
    order.push_back(g);
    row_of.push_back(rel_owned_by(g));
  }

  std::size_t alive_rels = static_cast<std::size_t>(std::count(rel_alive.begin(), rel_alive.end(), true));
  if (alive_rels != order.size())
    throw Error(ErrorCode::NonSquareResult, std::to_string(alive_rels) + " relations for " +
                                                std::to_string(order.size()) + " generators");

  Presentation out;
  std::vector<std::optional<std::size_t>> new_id(gens.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    new_id[order[k]] = k;
    out.generators.push_back(gens[order[k]]);
  }
  for (std::size_t r : row_of) {
    if (!rel_alive[r]) throw Error(ErrorCode::NonSquareResult, "paired relation was eliminated");
    Relation nr{rels[r].owner, {}};
    for (const auto& [g, c] : rels[r].coeffs) {
      if (!new_id[g]) throw Error(ErrorCode::NonSquareResult, "relation refers to an eliminated generator");
      if (!in_max_ideal(c))
        throw Error(ErrorCode::NonSquareResult, "unit coefficient survives on " + generator_name(gens[g]));
      nr.coeffs[*new_id[g]] = c;
    }
    out.relations.push_back(std::move(nr));
  }
  return out;
}

PolyMatrix relation_matrix(const Presentation& p, const std::optional<std::vector<std::size_t>>& ordering) {
  const std::size_t n = p.generators.size();
  std::vector<std::size_t> cols(n);
  for (std::size_t k = 0; k < n; ++k) cols[k] = k;
  if (ordering) {
    std::vector<std::size_t> sorted = *ordering;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != cols) throw Error(ErrorCode::BadOrdering, "ordering is not a permutation of the generators");
    cols = *ordering;
  }
  PolyMatrix m(p.relations.size(), n);
  for (std::size_t i = 0; i < p.relations.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto it = p.relations[i].coeffs.find(cols[j]);
      if (it != p.relations[i].coeffs.end()) m(i, j) = it->second;
    }
  return m;
}

std::string render_relation(const Presentation& p, const Relation& r, const Context& ctx) {
  // Common z-monomial factor of all coefficients.
  std::array<unsigned, 4> common{~0u, ~0u, ~0u, ~0u};
  bool all_decompose = true;
  for (const auto& [g, c] : r.coeffs) {
    auto zm = z_monomial_decompose(ctx, c);
    if (!zm) {
      all_decompose = false;
      break;
    }
    for (std::size_t i = 0; i < 4; ++i) common[i] = std::min(common[i], zm->exponents[i]);
  }
  ZMonomial factor;
  if (all_decompose && !r.coeffs.empty()) factor.exponents = common;
  BiPoly f = z_monomial(ctx, factor);

  std::vector<std::size_t> order;
  for (Species s : {Species::V, Species::U})
    for (const auto& [g, c] : r.coeffs)
      if (p.generators[g].species == s) order.push_back(g);

  std::string inner;
  bool first = true;
  for (std::size_t g : order) {
    BiPoly c = poly_exact_div(r.coeffs.at(g), f);
    std::string body = render_entry(ctx, c);
    bool negative = !body.empty() && body[0] == '-';
    if (negative) body.erase(0, 1);
    bool compound = body.find(' ') != std::string::npos;
    std::string term = body == "1" ? generator_name(p.generators[g])
                       : compound  ? "(" + body + ")*" + generator_name(p.generators[g])
                                   : body + "*" + generator_name(p.generators[g]);
    if (first) inner += negative ? "-" + term : term;
    else inner += (negative ? " - " : " + ") + term;
    first = false;
  }
  if (first) return "0 = 0";
  bool trivial = factor.exponents == std::array<unsigned, 4>{0, 0, 0, 0};
  if (trivial) return inner + " = 0";
  std::string fs = to_string(factor);
  return order.size() == 1 && inner[0] != '-' ? fs + "*" + inner + " = 0" : fs + "*(" + inner + ") = 0";
}

std::string dump_presentation(const Presentation& p, const Context& ctx) {
  std::string out;
  for (const auto& r : p.relations) out += render_relation(p, r, ctx) + "\n";
  return out;
}

PolyMatrix derive_phi(const WordSpec& w, const Context& ctx) {
  ExtBlockMatrix x = build_X(w, ctx);
  Presentation p = eliminate_units(presentation_from_ext(x, ctx), EliminationOptions::for_swaps(stripe_swaps(w)));
  return relation_matrix(p);
}

}  // namespace t44
