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

#include "t44/checks.hpp"

#include <algorithm>

#include "t44/render.hpp"

namespace t44 {

std::vector<GoldenExample> builtin_goldens() {
  GoldenExample plain{"worked example",
                      word_new(WordKind::W2, 2u, false, {Sign::Plus}),
                      {{"z3", "0", "0", "0", "0"},
                       {"-z4", "z1*z4", "0", "0", "0"},
                       {"0", "-z1*z3", "z2*z3", "0", "0"},
                       {"0", "z1*z4", "-z2*z4", "z1*z4", "0"},
                       {"0", "0", "0", "-z1*z3", "z2*z3"}},
                      {{"z1*z2*z4", "0", "0", "0", "0"},
                       {"z2*z4", "z2*z3", "0", "0", "0"},
                       {"z1*z4", "z1*z3", "z1*z4", "0", "0"},
                       {"0", "0", "z2*z4", "z2*z3", "0"},
                       {"0", "0", "z1*z4", "z1*z3", "z1*z4"}}};
  GoldenExample transposed{"worked example, transposed",
                           word_new(WordKind::W2, 2u, true, {Sign::Plus}),
                           {{"z1*z4", "0", "0", "0", "0"},
                            {"-z1*z3", "z2*z3", "0", "0", "0"},
                            {"0", "-z2*z4", "z1*z4", "0", "0"},
                            {"0", "z2*z3", "-z1*z3", "z2*z3", "0"},
                            {"0", "0", "0", "-z2", "z1"}},
                           {{"z2*z3", "0", "0", "0", "0"},
                            {"z1*z3", "z1*z4", "0", "0", "0"},
                            {"z2*z3", "z2*z4", "z2*z3", "0", "0"},
                            {"0", "0", "z1*z3", "z1*z4", "0"},
                            {"0", "0", "z2*z3", "z2*z4", "z2*z3*z4"}}};
  return {plain, transposed};
}

Json goldens_to_json(const std::vector<GoldenExample>& g) {
  Json arr = Json::array();
  for (const auto& e : g) arr.push_back({{"name", e.name}, {"word", word_to_json(e.word)}, {"phi", e.phi}, {"psi", e.psi}});
  return {{"examples", arr}};
}

std::vector<GoldenExample> goldens_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("examples") || !j.at("examples").is_array())
    throw Error(ErrorCode::ParseError, "golden file needs an 'examples' array");
  std::vector<GoldenExample> out;
  try {
    for (const auto& e : j.at("examples"))
      out.push_back({e.at("name").get<std::string>(), word_from_json(e.at("word")),
                     e.at("phi").get<std::vector<std::vector<std::string>>>(),
                     e.at("psi").get<std::vector<std::vector<std::string>>>()});
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::ParseError, std::string("malformed golden file: ") + ex.what());
  }
  return out;
}

PolyMatrix golden_matrix(const Context& ctx, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<BiPoly>> polys;
  for (const auto& r : rows) {
    std::vector<BiPoly> row;
    for (const auto& s : r) row.push_back(parse_zform(ctx, s));
    polys.push_back(std::move(row));
  }
  return PolyMatrix::from_rows(polys);
}

std::string agreement_text(Agreement a) {
  switch (a) {
    case Agreement::Identity: return "matches closed-form family matrix (identity permutation)";
    case Agreement::Permutation: return "matches closed-form family matrix up to a row/column permutation";
    case Agreement::Profile: return "agrees with closed-form family matrix in size and determinant profile";
    case Agreement::Differs: return "DIFFERS from closed-form family matrix";
  }
  return "";
}

Derivation derive(const WordSpec& w, const Context& ctx, std::size_t perm_limit) {
  Derivation d;
  d.word = w;
  d.x = build_X(w, ctx);
  d.initial = presentation_from_ext(d.x, ctx);
  d.reduced = eliminate_units(d.initial, EliminationOptions::for_swaps(stripe_swaps(w)), &d.steps);
  d.phi = relation_matrix(d.reduced);
  d.closed_form = closed_form_phi(w, ctx);
  if (d.phi == d.closed_form) {
    d.agreement = Agreement::Identity;
    return d;
  }
  if (d.phi.rows() != d.closed_form.rows()) return d;
  if (d.phi.rows() <= perm_limit) {
    d.permutation = match_up_to_permutation(d.closed_form, d.phi, perm_limit);
    if (d.permutation) {
      d.agreement = Agreement::Permutation;
      return d;
    }
  }
  BiPoly a = mat_det(d.phi), b = mat_det(d.closed_form);
  if (a.is_zero() || b.is_zero()) return d;
  auto pa = z_monomial_decompose(ctx, a), pb = z_monomial_decompose(ctx, b);
  if (pa && pb && pa->exponents == pb->exponents) d.agreement = Agreement::Profile;
  return d;
}

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i] + 1);
  return s;
}

std::string step_text(const EliminationStep& s, const Context& ctx) {
  std::string rhs;
  for (std::size_t i = 0; i < s.expression.size(); ++i) {
    std::string c = render_entry(ctx, s.expression[i].second);
    bool neg = c[0] == '-';
    if (neg) c.erase(0, 1);
    std::string term = c == "1" ? generator_name(s.expression[i].first)
                       : c.find(' ') != std::string::npos ? "(" + c + ")*" + generator_name(s.expression[i].first)
                                                          : c + "*" + generator_name(s.expression[i].first);
    rhs += i == 0 ? (neg ? "-" : "") + term : (neg ? " - " : " + ") + term;
  }
  if (rhs.empty()) rhs = "0";
  return generator_name(s.eliminated) + " = " + rhs + "   (from the relation of " + generator_name(s.via) + ")";
}

}  // namespace

std::string render_derivation(const Derivation& d, const Context& ctx, bool expanded) {
  std::string out = "word: " + word_label(d.word) + "  " + word_string(d.word) + "\n\nX =\n" + render_ext(d.x);
  out += "\ninitial presentation:\n" + dump_presentation(d.initial, ctx);
  out += "\nelimination:\n";
  for (const auto& s : d.steps) out += "  " + step_text(s, ctx) + "\n";
  out += "\nminimal presentation:\n" + dump_presentation(d.reduced, ctx);
  out += "\ngenerator order:";
  for (const auto& g : d.reduced.generators) out += " " + generator_name(g);
  out += "\n\nphi =\n" + render_matrix(ctx, d.phi, expanded);
  if (d.agreement != Agreement::Identity) out += "\nclosed-form phi =\n" + render_matrix(ctx, d.closed_form, expanded);
  if (d.permutation)
    out += "\npermutation witness: derived(i, j) = closed(rows[i], cols[j]) with rows = (" + join(d.permutation->rows) +
           "), cols = (" + join(d.permutation->cols) + ")\n";
  out += "\n" + agreement_text(d.agreement) + "\n";
  return out;
}

Json derivation_to_json(const Derivation& d, const Context& ctx) {
  Json steps = Json::array();
  for (const auto& s : d.steps) steps.push_back(step_text(s, ctx));
  Json j;
  j["word"] = word_to_json(d.word);
  j["lambda"] = rational_to_string(ctx.lambda());
  j["X"] = ext_to_json(d.x);
  j["initial"] = presentation_to_json(d.initial, ctx);
  j["steps"] = steps;
  j["minimal"] = presentation_to_json(d.reduced, ctx);
  j["phi"] = matrix_to_json(d.phi);
  j["closed_form_phi"] = matrix_to_json(d.closed_form);
  j["agreement"] = agreement_text(d.agreement);
  if (d.permutation) j["permutation"] = {{"rows", d.permutation->rows}, {"cols", d.permutation->cols}};
  return j;
}

bool CheckSummary::ok() const {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.ok; });
}

namespace {

void fail(CheckLine& line, const std::string& why) {
  line.ok = false;
  line.failures.push_back(why);
}

std::string lam(const Rational& l) { return "lambda=" + rational_to_string(l); }

CheckLine check_goldens(const CheckConfig& cfg) {
  CheckLine line{"worked example golden", true, {}};
  for (const auto& l : cfg.lambdas) {
    Context ctx = Context::create(l);
    for (const auto& g : cfg.goldens) {
      try {
        PolyMatrix want_phi = golden_matrix(ctx, g.phi);
        PolyMatrix want_psi = golden_matrix(ctx, g.psi);
        PolyMatrix phi = derive_phi(g.word, ctx);
        if (phi != want_phi) fail(line, "worked example golden mismatch: " + g.name + " phi, " + lam(l));
        else if (solve_psi(ctx, phi, {cfg.degree_bound, 1}) != want_psi)
          fail(line, "worked example golden mismatch: " + g.name + " psi, " + lam(l));
      } catch (const Error& e) {
        fail(line, "worked example golden mismatch: " + g.name + ": " + e.what());
      }
    }
  }
  return line;
}

CheckLine check_sweep(const CheckConfig& cfg) {
  CheckLine line{"family sweep", true, {}};
  SolveOptions opts{cfg.degree_bound, 1};
  for (const auto& l : cfg.lambdas)
    for (const auto& w : enumerate_words(cfg.max_n)) {
      std::vector<std::optional<Rational>> mus{std::nullopt};
      if (w.kind == WordKind::W0) mus.assign(cfg.mus.begin(), cfg.mus.end());
      for (const auto& mu : mus) {
        WordSpec spec = w;
        spec.mu = mu;
        std::string tag = word_label(spec) + (mu ? " mu=" + rational_to_string(*mu) : "") + " " + lam(l);
        try {
          Context ctx = Context::create(l);
          Factorization f = make_factorization(spec, ctx, opts);
          const auto& r = f.report();
          if (!r.phi_reduced) fail(line, tag + ": phi has a unit entry");
          if (w.kind != WordKind::W10 && !r.psi_reduced) fail(line, tag + ": psi has a unit entry");
          if (!r.det_phi) fail(line, tag + ": det phi is not a z-monomial up to unit");
        } catch (const Error& e) {
          fail(line, tag + ": " + e.what());
        }
      }
    }
  return line;
}

CheckLine check_laws(const CheckConfig& cfg) {
  CheckLine line{"size and determinant laws", true, {}};
  for (const auto& l : cfg.lambdas) {
    Context ctx = Context::create(l);
    for (unsigned n = 0; n <= cfg.max_n; ++n) {
      try {
        PolyMatrix p2 = closed_form_phi(word_new(WordKind::W2, n, false, {Sign::Plus}), ctx);
        if (p2.rows() != 2 * n + 1) fail(line, "W2(" + std::to_string(n) + ")+ has size " + std::to_string(p2.rows()));
        PolyMatrix p3 = closed_form_phi(word_new(WordKind::W3, n, false, {Sign::Plus}), ctx);
        if (p3.rows() != 2 * n + 3) fail(line, "W3(" + std::to_string(n) + ")+ has size " + std::to_string(p3.rows()));
        Factorization f4 = make_factorization(word_new(WordKind::W4, n, false, {Sign::Plus}), ctx);
        if (f4.d() != 2 * n + 2) fail(line, "W4(" + std::to_string(n) + ")+ has size " + std::to_string(f4.d()));
        std::array<unsigned, 4> want{n + 1, n, n + 1, n + 1}, want_t{n + 1, n + 2, n + 1, n + 1};
        if (det_profile(ctx, f4.phi()).exponents != want)
          fail(line, "det phi of W4(" + std::to_string(n) + ")+ has the wrong exponents, " + lam(l));
        if (det_profile(ctx, ar_translate(f4).phi()).exponents != want_t)
          fail(line, "translated det of W4(" + std::to_string(n) + ")+ has the wrong exponents, " + lam(l));
      } catch (const Error& e) {
        fail(line, std::string("n=") + std::to_string(n) + ": " + e.what());
      }
    }
  }
  return line;
}

CheckLine check_cross(const CheckConfig& cfg) {
  CheckLine line{"cross-pipeline agreement", true, {}};
  const unsigned exact_n = std::min(cfg.max_n, 4u), profile_n = std::min(cfg.max_n, 3u);
  for (const auto& l : cfg.lambdas) {
    Context ctx = Context::create(l, cfg.mus.empty() ? Rational(3) : cfg.mus.front());
    for (const auto& w : enumerate_words(cfg.max_n)) {
      bool exact = w.kind == WordKind::W2 || w.kind == WordKind::W10;
      if (w.n && *w.n > (exact ? exact_n : profile_n)) continue;
      try {
        Derivation d = derive(w, ctx, 16);
        bool ok = exact ? (d.agreement == Agreement::Identity || d.agreement == Agreement::Permutation)
                        : d.agreement != Agreement::Differs;
        if (!ok) fail(line, word_label(w) + " " + lam(l) + ": " + agreement_text(d.agreement));
      } catch (const Error& e) {
        fail(line, word_label(w) + ": " + e.what());
      }
    }
  }
  return line;
}

CheckLine check_pairings(const CheckConfig& cfg) {
  CheckLine line{"translation pairings", true, {}};
  for (const auto& l : cfg.lambdas) {
    try {
      ARReport r = check_ar_pairings(Context::create(l, cfg.mus.empty() ? Rational(3) : cfg.mus.front()), cfg.max_n,
                                     {cfg.degree_bound, 1});
      for (const auto& f : r.failures) fail(line, lam(l) + ": " + f);
      if (r.consistent.size() != 1)
        fail(line, lam(l) + ": " + std::to_string(r.consistent.size()) + " consistent mark conventions");
      if (!r.self_pairs_ok) fail(line, lam(l) + ": self pairing failed");
      if (!r.involution_ok) fail(line, lam(l) + ": tau^2 != id");
    } catch (const Error& e) {
      fail(line, e.what());
    }
  }
  return line;
}

CheckLine check_transforms(const CheckConfig& cfg) {
  CheckLine line{"transform invariance", true, {}};
  Context ctx = Context::create(cfg.lambdas.empty() ? Rational(2) : cfg.lambdas.front());
  std::vector<WordSpec> words{word_new(WordKind::W2, std::min(cfg.max_n, 3u), false, {Sign::Plus}),
                              word_new(WordKind::W4, std::min(cfg.max_n, 2u), false, {Sign::Plus})};
  for (const auto& w : words) {
    ExtBlockMatrix x = build_X(w, ctx);
    PolyMatrix base = relation_matrix(eliminate_units(presentation_from_ext(x, ctx)));
    DetProfile want = det_profile(ctx, base);
    for (unsigned t = 0; t < cfg.transform_trials; ++t) {
      std::uint64_t seed = cfg.seed * 1000003u + t;
      try {
        ExtBlockMatrix y = apply_transform(x, random_admissible(Side::Row, x.rows, seed),
                                           random_admissible(Side::Column, x.cols, seed ^ 0x9e3779b97f4a7c15ull));
        PolyMatrix phi = relation_matrix(eliminate_units(presentation_from_ext(y, ctx)));
        if (phi.rows() != base.rows() || det_profile(ctx, phi).exponents != want.exponents)
          fail(line, word_label(w) + " seed " + std::to_string(seed) + ": size or determinant profile changed");
      } catch (const Error& e) {
        fail(line, word_label(w) + " seed " + std::to_string(seed) + ": " + e.what());
      }
    }
  }
  return line;
}

}  // namespace

CheckSummary run_checks(const CheckConfig& cfg) {
  CheckSummary s;
  s.lines.push_back(check_goldens(cfg));
  s.lines.push_back(check_sweep(cfg));
  s.lines.push_back(check_laws(cfg));
  s.lines.push_back(check_cross(cfg));
  s.lines.push_back(check_pairings(cfg));
  s.lines.push_back(check_transforms(cfg));
  return s;
}

std::string render_summary(const CheckSummary& s) {
  std::string out;
  for (const auto& l : s.lines) {
    out += std::string(l.ok ? "PASS " : "FAIL ") + l.name + "\n";
    for (const auto& f : l.failures) out += "     " + f + "\n";
  }
  out += s.ok() ? "all checks passed\n" : "some checks FAILED\n";
  return out;
}

Json summary_to_json(const CheckSummary& s) {
  Json lines = Json::array();
  for (const auto& l : s.lines) lines.push_back({{"name", l.name}, {"ok", l.ok}, {"failures", l.failures}});
  return {{"ok", s.ok()}, {"checks", lines}};
}

}  // namespace t44
