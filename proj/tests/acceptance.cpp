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


// Acceptance driver: one PASS/FAIL line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "t44/checks.hpp"

using namespace t44;

namespace {

Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

using Table = std::vector<std::vector<std::string>>;

const Table kPhi = {{"z3", "0", "0", "0", "0"},
                    {"-z4", "z1*z4", "0", "0", "0"},
                    {"0", "-z1*z3", "z2*z3", "0", "0"},
                    {"0", "z1*z4", "-z2*z4", "z1*z4", "0"},
                    {"0", "0", "0", "-z1*z3", "z2*z3"}};
const Table kPsi = {{"z1*z2*z4", "0", "0", "0", "0"},
                    {"z2*z4", "z2*z3", "0", "0", "0"},
                    {"z1*z4", "z1*z3", "z1*z4", "0", "0"},
                    {"0", "0", "z2*z4", "z2*z3", "0"},
                    {"0", "0", "z1*z4", "z1*z3", "z1*z4"}};
const Table kPhiStar = {{"z1*z4", "0", "0", "0", "0"},
                        {"-z1*z3", "z2*z3", "0", "0", "0"},
                        {"0", "-z2*z4", "z1*z4", "0", "0"},
                        {"0", "z2*z3", "-z1*z3", "z2*z3", "0"},
                        {"0", "0", "0", "-z2", "z1"}};
const Table kPsiStar = {{"z2*z3", "0", "0", "0", "0"},
                        {"z1*z3", "z1*z4", "0", "0", "0"},
                        {"z2*z3", "z2*z4", "z2*z3", "0", "0"},
                        {"0", "0", "z1*z3", "z1*z4", "0"},
                        {"0", "0", "z2*z3", "z2*z4", "z2*z3*z4"}};

const std::vector<Rational> kLambdas{2, 5, -1};
const std::vector<Rational> kMus{3, -2};

PolyMatrix table(const Context& ctx, const Table& t) {
  std::vector<std::vector<BiPoly>> rows;
  for (const auto& r : t) {
    rows.emplace_back();
    for (const auto& s : r) rows.back().push_back(parse_zform(ctx, s));
  }
  return PolyMatrix::from_rows(rows);
}

WordSpec plus(WordKind k, unsigned n, bool t = false) { return word_new(k, n, t, {Sign::Plus}); }

std::array<unsigned, 4> profile(const Context& ctx, const PolyMatrix& m) { return det_profile(ctx, m).exponents; }

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

bool golden(const Table& phi, const Table& psi, bool transposed, Outcome& out) {
  for (const Rational& l : {Rational(2), Rational(5)}) {
    Context ctx = Context::create(l);
    PolyMatrix derived = derive_phi(plus(WordKind::W2, 2, transposed), ctx);
    if (derived != table(ctx, phi)) out.fail("derived phi differs at lambda=" + rational_to_string(l));
    else if (solve_psi(ctx, derived) != table(ctx, psi)) out.fail("psi differs at lambda=" + rational_to_string(l));
  }
  return out.ok;
}

void criterion_sweep(Outcome& out) {
  std::size_t count = 0;
  for (const auto& l : kLambdas)
    for (const auto& w : enumerate_words(6)) {
      std::vector<std::optional<Rational>> mus{std::nullopt};
      if (w.kind == WordKind::W0) mus.assign(kMus.begin(), kMus.end());
      for (const auto& mu : mus) {
        Context ctx = Context::create(l, mu);
        std::string tag = word_label(w) + " lambda=" + rational_to_string(l);
        try {
          Factorization f = make_factorization(w, ctx, {4, 1});
          const auto& r = f.report();
          if (!r.ok()) out.fail(tag + ": identities fail");
          if (!r.phi_reduced) out.fail(tag + ": phi not reduced");
          if (w.kind != WordKind::W10 && !r.psi_reduced) out.fail(tag + ": psi not reduced");
          ++count;
        } catch (const Error& e) {
          out.fail(tag + ": " + e.what());
        }
      }
    }
  if (out.ok) out.detail = std::to_string(count) + " factorizations";
}

void criterion_laws(Outcome& out) {
  Context ctx = Context::create(2);
  for (unsigned n = 0; n <= 6; ++n) {
    if (closed_form_phi(plus(WordKind::W2, n), ctx).rows() != 2 * n + 1) out.fail("w2 size at n=" + std::to_string(n));
    if (closed_form_phi(plus(WordKind::W3, n), ctx).rows() != 2 * n + 3) out.fail("w3 size at n=" + std::to_string(n));
    Factorization f = make_factorization(plus(WordKind::W4, n), ctx);
    if (f.d() != 2 * n + 2) out.fail("w4 size at n=" + std::to_string(n));
    if (profile(ctx, f.phi()) != std::array<unsigned, 4>{n + 1, n, n + 1, n + 1})
      out.fail("w4 det at n=" + std::to_string(n));
    if (profile(ctx, ar_translate(f).phi()) != std::array<unsigned, 4>{n + 1, n + 2, n + 1, n + 1})
      out.fail("translated w4 det at n=" + std::to_string(n));
  }
}

void criterion_cross(Outcome& out) {
  std::size_t exact = 0, profiles = 0;
  for (const Rational& l : {Rational(2), Rational(5)}) {
    Context ctx = Context::create(l, Rational(3));
    for (const auto& w : enumerate_words(4)) {
      bool strict = w.kind == WordKind::W2 || w.kind == WordKind::W10;
      if (!strict && w.n && *w.n > 3) continue;
      PolyMatrix derived = derive_phi(w, ctx);
      PolyMatrix closed = closed_form_phi(w, ctx);
      std::string tag = word_label(w) + " lambda=" + rational_to_string(l);
      if (derived.rows() != closed.rows()) {
        out.fail(tag + ": sizes differ");
        continue;
      }
      if (strict) {
        if (derived != closed && !match_up_to_permutation(closed, derived, 16)) out.fail(tag + ": no permutation");
        ++exact;
      } else {
        if (profile(ctx, derived) != profile(ctx, closed)) out.fail(tag + ": det profiles differ");
        ++profiles;
      }
    }
  }
  if (out.ok) out.detail = std::to_string(exact) + " exact, " + std::to_string(profiles) + " profile";
}

void criterion_pairings(Outcome& out) {
  for (const Rational& l : {Rational(2), Rational(5)}) {
    ARReport r = check_ar_pairings(Context::create(l, Rational(3)), 4);
    std::string tag = "lambda=" + rational_to_string(l);
    for (const auto& c : r.checks)
      if (c.match[0] == c.match[1] && !c.match[0]) out.fail(tag + ": " + c.rule + " n=" + std::to_string(c.n));
    if (r.consistent.size() != 1) out.fail(tag + ": " + std::to_string(r.consistent.size()) + " consistent conventions");
    else if (out.ok) out.detail = "convention " + convention_name(r.consistent.front());
    if (!r.self_pairs_ok) out.fail(tag + ": self pairing");
    if (!r.involution_ok) out.fail(tag + ": tau^2");
    if (!r.failures.empty()) out.fail(tag + ": " + r.failures.front());
  }
}

void criterion_transforms(Outcome& out) {
  Context ctx = Context::create(2);
  for (const auto& w : {plus(WordKind::W2, 3), plus(WordKind::W4, 2)}) {
    ExtBlockMatrix x = build_X(w, ctx);
    PolyMatrix base = relation_matrix(eliminate_units(presentation_from_ext(x, ctx)));
    auto want = profile(ctx, base);
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      ExtBlockMatrix y = apply_transform(x, random_admissible(Side::Row, x.rows, seed),
                                         random_admissible(Side::Column, x.cols, seed + 1000));
      PolyMatrix phi = relation_matrix(eliminate_units(presentation_from_ext(y, ctx)));
      if (phi.rows() != base.rows() || profile(ctx, phi) != want)
        out.fail(word_label(w) + " seed " + std::to_string(seed));
    }
  }
}

// Property suites, 1000 cases each.
struct Gen {
  std::mt19937_64 rng;
  long small(long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); }
  Rational q() { return frac(small(-5, 5), small(1, 4)); }
  BiPoly poly(int deg, int terms) {
    std::vector<BiPoly::Term> t;
    for (int k = 0; k < terms; ++k) {
      auto ex = static_cast<std::uint32_t>(small(0, deg));
      auto ey = static_cast<std::uint32_t>(small(0, deg - static_cast<long>(ex)));
      t.push_back({{ex, ey}, q()});
    }
    return BiPoly(t);
  }
  PolyMatrix matrix(std::size_t n, int deg) {
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = poly(deg, 2);
    return m;
  }
  // Unimodular over the rationals: unit lower times unit upper triangular.
  std::pair<PolyMatrix, PolyMatrix> scalar_pair(std::size_t n) {
    PolyMatrix l = PolyMatrix::identity(n), u = PolyMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) {
        l(i, j) = BiPoly::constant(small(-2, 2));
        u(j, i) = BiPoly::constant(small(-2, 2));
      }
    PolyMatrix li = PolyMatrix::identity(n), ui = PolyMatrix::identity(n);
    // Forward substitution for L^-1, back substitution for U^-1.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) {
        BiPoly s;
        for (std::size_t k = j; k < i; ++k) s += l(i, k) * li(k, j);
        li(i, j) = -s;
      }
    for (std::size_t i = n; i-- > 0;)
      for (std::size_t j = i + 1; j < n; ++j) {
        BiPoly s;
        for (std::size_t k = i + 1; k <= j; ++k) s += u(i, k) * ui(k, j);
        ui(i, j) = -s;
      }
    return {mat_mul(l, u), mat_mul(ui, li)};
  }
};

void criterion_properties(Outcome& out) {
  Gen g{std::mt19937_64(2026)};
  const int cases = 1000;
  int ring = 0, division = 0, det = 0, unique = 0, serial = 0;
  for (int i = 0; i < cases; ++i) {
    BiPoly a = g.poly(3, 4), b = g.poly(3, 4), c = g.poly(2, 3);
    ring += a + b == b + a && a * b == b * a && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
            (a - a).is_zero();
    BiPoly d = c.is_zero() ? BiPoly::constant(1) : c;
    division += poly_exact_div(a * d, d) == a;
    std::size_t n = static_cast<std::size_t>(g.small(1, 3));
    PolyMatrix m1 = g.matrix(n, 1), m2 = g.matrix(n, 1);
    det += mat_det(mat_mul(m1, m2)) == mat_det(m1) * mat_det(m2);
    std::string text = dump(poly_to_json(a));
    serial += poly_from_json(parse_json(text)) == a && dump(poly_to_json(poly_from_json(parse_json(text)))) == text;
  }
  auto words = enumerate_words(2);
  std::vector<Context> ctxs{Context::create(2, Rational(3)), Context::create(5, Rational(-2)),
                            Context::create(-1, Rational(3))};
  for (int i = 0; i < cases; ++i) {
    const Context& ctx = ctxs[i % 3];
    Factorization f = make_factorization(words[g.rng() % words.size()], ctx);
    auto [s, s_inv] = g.scalar_pair(f.d());
    auto [t, t_inv] = g.scalar_pair(f.d());
    PolyMatrix psi = solve_psi(ctx, mat_mul(mat_mul(s, f.phi()), t));
    unique += psi == mat_mul(mat_mul(t_inv, f.psi()), s_inv);
  }
  auto check = [&](const char* name, int passed) {
    if (passed != cases) out.fail(std::string(name) + ": " + std::to_string(cases - passed) + " failures");
  };
  check("ring axioms", ring);
  check("exact division", division);
  check("det multiplicativity", det);
  check("solve_psi uniqueness", unique);
  check("serialization", serial);
  if (out.ok) out.detail = "5 suites x 1000 cases";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    long long budget_ms;  // 0 for none
    std::function<void(Outcome&)> body;
  };
  std::vector<Criterion> criteria{
      {"worked example golden", 1000, [](Outcome& o) { golden(kPhi, kPsi, false, o); }},
      {"worked example golden, transposed", 1000, [](Outcome& o) { golden(kPhiStar, kPsiStar, true, o); }},
      {"family sweep n<=6", 60000, criterion_sweep},
      {"size and determinant laws", 0, criterion_laws},
      {"cross-pipeline agreement", 0, criterion_cross},
      {"translation pairings", 0, criterion_pairings},
      {"transform invariance", 30000, criterion_transforms},
      {"property suites", 0, criterion_properties},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].body(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    if (criteria[i].budget_ms > 0 && ms > criteria[i].budget_ms)
      o.fail("over the time budget");
    all = all && o.ok;
    std::ostringstream line;
    line << (o.ok ? "PASS " : "FAIL ") << i + 1 << ". " << criteria[i].name << "  [" << ms << " ms]";
    if (!o.detail.empty()) line << "  " << o.detail;
    std::cout << line.str() << "\n";
  }
  std::cout << (all ? "acceptance: all criteria passed" : "acceptance: FAILED") << "\n";
  return all ? 0 : 1;
}
