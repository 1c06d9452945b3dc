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

#include "t44/factorizations.hpp"

#include <functional>
#include <map>

namespace t44 {

std::string convention_name(MarkConvention c) {
  return c == MarkConvention::StripeAssigned ? "stripe-assigned" : "literal";
}

std::array<BiPoly, 4> marked_forms(const WordSpec& w, const Context& ctx, MarkConvention conv) {
  std::array<BiPoly, 4> z = ctx.zs();
  auto ends = special_ends(w);
  for (std::size_t i = 0; i < ends.size() && i < w.marks.size(); ++i) {
    if (w.marks[i] != Sign::Minus) continue;
    bool swap_12 = (ends[i] == SpecialEnd::F1) == (conv == MarkConvention::StripeAssigned);
    if (swap_12) std::swap(z[0], z[1]);
    else std::swap(z[2], z[3]);
  }
  return z;
}

namespace {

// Builders take the (possibly interchanged) forms a, b, c, d in place of z1..z4.
struct Forms {
  BiPoly a, b, c, d;
};

PolyMatrix phi2(unsigned n, const Forms& z) {
  const std::size_t N = 2 * n + 1;
  PolyMatrix m(N, N);
  m(0, 0) = z.c;
  if (N > 1) {
    m(1, 0) = -z.d;
    m(1, 1) = z.a * z.d;
  }
  for (std::size_t j = 1; j <= n; ++j) {
    m(2 * j, 2 * j - 1) = -(z.a * z.c);
    m(2 * j, 2 * j) = z.b * z.c;
    if (2 * j + 1 < N) {
      m(2 * j + 1, 2 * j - 1) = z.a * z.d;
      m(2 * j + 1, 2 * j) = -(z.b * z.d);
      m(2 * j + 1, 2 * j + 1) = z.a * z.d;
    }
  }
  return m;
}

PolyMatrix phi2_star(unsigned n, const Forms& z) {
  const std::size_t N = 2 * n + 1;
  PolyMatrix m(N, N);
  for (std::size_t j = 0; j <= n; ++j) {
    const std::size_t r = 2 * j;
    if (j == n) {
      if (j >= 1) m(r, r - 1) = -z.b;
      m(r, r) = z.a;
    } else {
      if (j >= 1) {
        m(r, r - 1) = -(z.b * z.d);
        m(r + 1, r - 1) = z.b * z.c;
      }
      m(r, r) = z.a * z.d;
      m(r + 1, r) = -(z.a * z.c);
      m(r + 1, r + 1) = z.b * z.c;
    }
  }
  return m;
}

PolyMatrix phi0(unsigned n, const Rational& mu, const Forms& z) {
  PolyMatrix m(2 * n, 2 * n);
  const Rational s = 1 / (mu - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = 2 * i;
    m(r, r) = z.a * z.c;
    m(r, r + 1) = -(z.b * z.c);
    m(r + 1, r) = (z.a * z.d).scaled(-mu);
    m(r + 1, r + 1) = z.b * z.d;
    if (i > 0) {
      m(r, r - 2) = (z.a * z.c).scaled(s);
      m(r, r - 1) = (z.b * z.c).scaled(-s);
      m(r + 1, r - 2) = (z.a * z.c).scaled(-s);
      m(r + 1, r - 1) = (z.b * z.c).scaled(s);
    }
  }
  return m;
}

PolyMatrix phi1(unsigned n, const Forms& z) {
  const std::size_t N = n + (n % 2);
  PolyMatrix m(N, N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      if (i % 2 == 0) m(i, j) = j % 2 == 0 ? z.b * z.d : -(z.a * z.d);
      else m(i, j) = j % 2 == 0 ? -(z.b * z.c) : z.a * z.c;
    }
  return n % 2 ? m.block(1, N, 1, N) : m;
}

PolyMatrix drop_first_last(const PolyMatrix& m) { return m.block(1, m.rows() - 1, 1, m.cols() - 1); }
PolyMatrix drop_last(const PolyMatrix& m) { return m.block(0, m.rows() - 1, 0, m.cols() - 1); }
PolyMatrix drop_first(const PolyMatrix& m) { return m.block(1, m.rows(), 1, m.cols()); }

PolyMatrix phi4(unsigned n, const Forms& z) { return drop_last(phi2(n + 1, z)); }
PolyMatrix phi4_star(unsigned n, const Forms& z) { return drop_first(phi2_star(n + 1, z)); }

PolyMatrix phi8_star(unsigned n, const Forms& z) {
  PolyMatrix m = phi4_star(n, z);
  m.multiply_row(0, z.d);
  return m;
}

PolyMatrix phi7(unsigned n, bool transposed, const Forms& z) {
  const unsigned m = n / 2, k = n - m - 1;
  if (!transposed) {
    PolyMatrix p7 = phi4_star(k, z);
    p7.multiply_row(0, z.d);
    p7.multiply_row(p7.rows() - 1, z.d);
    PolyMatrix p2 = phi2(m, z);
    const PolyMatrix& top = n % 2 == 0 ? p2 : p7;
    const PolyMatrix& bottom = n % 2 == 0 ? p7 : p2;
    PolyMatrix link(bottom.rows(), top.cols());
    // Nonzero only in the last row; the odd case uses the last column of the top block.
    link(bottom.rows() - 1, top.cols() - 1) = n % 2 == 0 ? z.b * z.d : z.a * z.c;
    return block_lower(top, link, bottom);
  }
  PolyMatrix p7 = phi4(k, z);
  p7.multiply_col(0, z.b);
  p7.multiply_col(p7.cols() - 1, z.b);
  PolyMatrix p2 = phi2_star(m, z);
  const PolyMatrix& top = n % 2 == 1 ? p2 : p7;
  const PolyMatrix& bottom = n % 2 == 1 ? p7 : p2;
  PolyMatrix link(bottom.rows(), top.cols());
  link(0, 0) = n % 2 == 1 ? -(z.a * z.c) : -(z.b * z.d);
  return block_lower(top, link, bottom);
}

Rational cycle_eigenvalue(const WordSpec& w, const Context& ctx) {
  if (w.mu) return *w.mu;
  if (ctx.mu()) return *ctx.mu();
  throw Error(ErrorCode::InvalidEigenvalue, "w0 needs an eigenvalue mu");
}

}  // namespace

PolyMatrix closed_form_phi(const WordSpec& spec, const Context& ctx, MarkConvention conv) {
  WordSpec w = word_new(spec.kind, spec.n, spec.transposed, spec.marks, spec.mu);
  auto zs = marked_forms(w, ctx, conv);
  Forms z{zs[0], zs[1], zs[2], zs[3]};
  const unsigned n = w.n.value_or(0);
  const bool t = w.transposed;
  switch (w.kind) {
    case WordKind::W0: return phi0(n, cycle_eigenvalue(w, ctx), z);
    case WordKind::W1: return phi1(n, z);
    case WordKind::W2: return t ? phi2_star(n, z) : phi2(n, z);
    case WordKind::W3: {
      if (!t) {
        PolyMatrix m = drop_first_last(phi2_star(n + 2, z));
        m.multiply_col(m.cols() - 1, z.a);
        return m;
      }
      PolyMatrix m = drop_first_last(phi2(n + 2, z));
      m.multiply_row(0, z.c);
      return m;
    }
    case WordKind::W4: return t ? phi4_star(n, z) : phi4(n, z);
    case WordKind::W5: {
      if (!t) {
        PolyMatrix m = phi4(n, z);
        m.multiply_col(0, z.a);
        m.multiply_col(m.cols() - 1, z.b);
        return m;
      }
      PolyMatrix m = phi4_star(n, z);
      m.multiply_row(0, z.d);
      m.multiply_row(m.rows() - 1, z.c);
      return m;
    }
    case WordKind::W6: {
      PolyMatrix m = phi2(n, z);
      m.divide_row(m.rows() - 1, z.c);
      return m;
    }
    case WordKind::W7: return phi7(n, t, z);
    case WordKind::W8: {
      if (t) return phi8_star(n, z);
      PolyMatrix m = phi4(n, z);
      m.multiply_col(m.cols() - 1, z.b);
      return m;
    }
    case WordKind::W9: {
      PolyMatrix m = drop_last(phi8_star(n + 1, z));
      m.multiply_col(m.cols() - 1, z.a);
      return m;
    }
    case WordKind::W10: {
      PolyMatrix m(1, 1);
      m(0, 0) = z.a * z.b * z.c * z.d;
      return m;
    }
  }
  throw Error(ErrorCode::InvalidParameter, "unknown word kind");
}

Factorization make_factorization(const WordSpec& w, const Context& ctx, const SolveOptions& opts,
                                 MarkConvention conv) {
  try {
    PolyMatrix phi = closed_form_phi(w, ctx, conv);
    PolyMatrix psi = solve_psi(ctx, phi, opts);
    return Factorization::create(ctx, std::move(phi), std::move(psi));
  } catch (const Error& e) {
    throw Error(e.code(), word_label(w) + ": " + e.what());
  }
}

DetProfile det_profile(const Context& ctx, const PolyMatrix& a) {
  BiPoly d = mat_det(a);
  if (d.is_zero()) throw Error(ErrorCode::Singular, "determinant is zero");
  auto zm = z_monomial_decompose(ctx, d);
  if (!zm) throw Error(ErrorCode::NotZMonomial, "determinant " + to_string(d) + " is not a z-monomial");
  return *zm;
}

Factorization ar_translate(const Factorization& f) { return Factorization::create(f.context(), f.psi(), f.phi()); }

namespace {

WordSpec flip_marks(WordSpec w) {
  for (auto& m : w.marks) m = m == Sign::Plus ? Sign::Minus : Sign::Plus;
  return w;
}

struct RuleInstance {
  std::string rule;
  unsigned n;
  WordSpec source;
  WordSpec target;
  bool self;
};

std::vector<RuleInstance> pairing_rules(unsigned max_n) {
  std::vector<RuleInstance> out;
  const std::vector<Sign> plus{Sign::Plus}, minus{Sign::Minus};
  for (unsigned n = 0; n <= max_n; ++n) {
    if (n >= 1) {
      WordSpec m0 = word_new(WordKind::W0, n, false, {});
      out.push_back({"tau M0(n) = M0(n)", n, m0, m0, true});
    }
    WordSpec m8 = word_new(WordKind::W8, n, false, {});
    out.push_back({"tau M8(n) = M8(n)", n, m8, m8, true});
    WordSpec m8t = word_new(WordKind::W8, n, true, {});
    out.push_back({"tau M8*(n) = M8*(n)", n, m8t, m8t, true});
    if (n >= 1) {
      out.push_back({"tau M1(n)++ = M1(n)--", n, word_new(WordKind::W1, n, false, {Sign::Plus, Sign::Plus}),
                     word_new(WordKind::W1, n, false, {Sign::Minus, Sign::Minus}), false});
      out.push_back({"tau M1(n)+- = M1(n)-+", n, word_new(WordKind::W1, n, false, {Sign::Plus, Sign::Minus}),
                     word_new(WordKind::W1, n, false, {Sign::Minus, Sign::Plus}), false});
      for (bool t : {false, true})
        for (const auto& s : {plus, minus}) {
          WordSpec src = word_new(WordKind::W2, n, t, s);
          WordSpec dst = flip_marks(word_new(WordKind::W3, n - 1, t, s));
          out.push_back({t ? "tau M2*(n)+- = M3*(n-1)-+" : "tau M2(n)+- = M3(n-1)-+", n, src, dst, false});
        }
    }
    for (const auto& s : {plus, minus})
      out.push_back({"tau M4(n)+- = M5(n)-+", n, word_new(WordKind::W4, n, false, s),
                     flip_marks(word_new(WordKind::W5, n, false, s)), false});
    if (n >= 2)
      out.push_back({"tau M6(n) = M9(n-1)", n, word_new(WordKind::W6, n, false, {}),
                     word_new(WordKind::W9, n - 1, false, {}), false});
    if (n >= 1)
      out.push_back({"tau M7(n) = M7*(n)", n, word_new(WordKind::W7, n, false, {}),
                     word_new(WordKind::W7, n, true, {}), false});
  }
  return out;
}

}  // namespace

ARReport check_ar_pairings(const Context& ctx_in, unsigned max_n, const SolveOptions& opts) {
  Context ctx = ctx_in.mu() ? ctx_in : Context::create(ctx_in.lambda(), Rational(3));
  ARReport report;
  const MarkConvention convs[2] = {MarkConvention::StripeAssigned, MarkConvention::Literal};
  std::map<std::pair<std::string, int>, Factorization> cache;
  auto factor = [&](const WordSpec& w, int c) -> const Factorization& {
    auto key = std::make_pair(word_label(w), c);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, make_factorization(w, ctx, opts, convs[c])).first;
    return it->second;
  };

  std::array<bool, 2> all_match{true, true};
  for (const auto& inst : pairing_rules(max_n)) {
    ARCheck chk;
    chk.rule = inst.rule;
    chk.n = inst.n;
    chk.source = word_label(inst.source);
    chk.target = word_label(inst.target);
    try {
      for (int c = 0; c < 2; ++c) {
        const Factorization& src = factor(inst.source, c);
        const Factorization& dst = factor(inst.target, c);
        chk.source_psi[static_cast<std::size_t>(c)] = det_profile(ctx, src.psi());
        chk.target_phi[static_cast<std::size_t>(c)] = det_profile(ctx, dst.phi());
        chk.match[static_cast<std::size_t>(c)] =
            chk.source_psi[static_cast<std::size_t>(c)].exponents == chk.target_phi[static_cast<std::size_t>(c)].exponents;
        all_match[static_cast<std::size_t>(c)] = all_match[static_cast<std::size_t>(c)] && chk.match[static_cast<std::size_t>(c)];
        Factorization back = ar_translate(ar_translate(src));
        if (back.phi() != src.phi() || back.psi() != src.psi()) {
          report.involution_ok = false;
          report.failures.push_back("tau^2 != id for " + chk.source);
        }
      }
    } catch (const Error& e) {
      report.failures.push_back(chk.rule + " n=" + std::to_string(inst.n) + ": " + e.what());
      all_match = {false, false};
      continue;
    }
    if (inst.self && !(chk.match[0] && chk.match[1])) report.self_pairs_ok = false;
    if (!chk.passed()) report.failures.push_back(chk.rule + " n=" + std::to_string(inst.n) + ": no convention matches");
    report.checks.push_back(std::move(chk));
  }
  for (int c = 0; c < 2; ++c)
    if (all_match[static_cast<std::size_t>(c)]) report.consistent.push_back(convs[c]);
  return report;
}

}  // namespace t44
