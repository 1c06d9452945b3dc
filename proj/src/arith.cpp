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

#include "t44/arith.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace t44 {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NoPolynomialSolution: return "NoPolynomialSolution";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidSize: return "InvalidSize";
    case ErrorCode::InvalidMarks: return "InvalidMarks";
    case ErrorCode::InvalidEigenvalue: return "InvalidEigenvalue";
    case ErrorCode::InvalidTranspose: return "InvalidTranspose";
    case ErrorCode::SelfTranspose: return "SelfTranspose";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::NonSquareResult: return "NonSquareResult";
    case ErrorCode::BadOrdering: return "BadOrdering";
    case ErrorCode::NotZMonomial: return "NotZMonomial";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidParameter:
    case ErrorCode::InvalidSize:
    case ErrorCode::InvalidMarks:
    case ErrorCode::InvalidEigenvalue:
    case ErrorCode::InvalidTranspose:
    case ErrorCode::SelfTranspose:
    case ErrorCode::ParseError:
    case ErrorCode::BadOrdering:
    case ErrorCode::ShapeMismatch:
    case ErrorCode::NotSquare:
    case ErrorCode::TooLarge:
      return true;
    default:
      return false;
  }
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorCode::ParseError, "not an exact rational: '" + std::string(text) + "'");
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::string rational_to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str(10);
}

BiPoly::BiPoly(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return grlex_greater(a.m, b.m); });
  for (auto& t : terms) {
    t.c.canonicalize();
    if (!terms_.empty() && terms_.back().m == t.m) {
      terms_.back().c += t.c;
    } else {
      if (!terms_.empty() && terms_.back().c == 0) terms_.pop_back();
      terms_.push_back(std::move(t));
    }
  }
  if (!terms_.empty() && terms_.back().c == 0) terms_.pop_back();
}

BiPoly BiPoly::constant(const Rational& c) { return monomial(c, 0, 0); }

BiPoly BiPoly::monomial(const Rational& c, std::uint32_t ex, std::uint32_t ey) {
  BiPoly p;
  Rational k = c;
  k.canonicalize();
  if (k != 0) p.terms_.push_back({{ex, ey}, std::move(k)});
  return p;
}

Rational BiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().m.degree() == 0) return terms_.back().c;
  return 0;
}

Rational BiPoly::coeff(std::uint32_t ex, std::uint32_t ey) const {
  for (const auto& t : terms_)
    if (t.m.ex == ex && t.m.ey == ey) return t.c;
  return 0;
}

int BiPoly::total_degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.front().m.degree()); }

bool BiPoly::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.m.degree() == terms_.front().m.degree(); });
}

BiPoly BiPoly::scaled(const Rational& c) const {
  BiPoly r;
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.m, t.c * c});
  return r;
}

void BiPoly::add_scaled_shifted(const BiPoly& o, const Rational& c, const Monomial& m) {
  if (c == 0 || o.is_zero()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end()) {
      out.push_back(std::move(*a++));
      continue;
    }
    Monomial mb{b->m.ex + m.ex, b->m.ey + m.ey};
    if (a == terms_.end() || grlex_greater(mb, a->m)) {
      out.push_back({mb, b->c * c});
      ++b;
    } else if (a->m == mb) {
      Rational s = a->c + b->c * c;
      if (s != 0) out.push_back({mb, std::move(s)});
      ++a;
      ++b;
    } else {
      out.push_back(std::move(*a++));
    }
  }
  terms_ = std::move(out);
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  add_scaled_shifted(o, 1, {0, 0});
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  add_scaled_shifted(o, -1, {0, 0});
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const BiPoly& small = a.terms_.size() <= b.terms_.size() ? a : b;
  const BiPoly& large = &small == &a ? b : a;
  BiPoly r;
  for (const auto& t : small.terms_) r.add_scaled_shifted(large, t.c, t.m);
  return r;
}

BiPoly poly_mul(const BiPoly& p, const BiPoly& q) { return p * q; }

BiPoly poly_pow(const BiPoly& p, unsigned e) {
  BiPoly r = BiPoly::constant(1);
  for (unsigned i = 0; i < e; ++i) r = r * p;
  return r;
}

std::optional<BiPoly> try_exact_div(const BiPoly& p, const BiPoly& q) {
  if (q.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero polynomial");
  BiPoly r = p;
  std::vector<BiPoly::Term> quot;
  const auto& lq = q.leading();
  while (!r.is_zero()) {
    const auto& lr = r.leading();
    if (!lq.m.divides(lr.m)) return std::nullopt;
    BiPoly::Term t{{lr.m.ex - lq.m.ex, lr.m.ey - lq.m.ey}, lr.c / lq.c};
    r.add_scaled_shifted(q, -t.c, t.m);
    quot.push_back(std::move(t));
  }
  return BiPoly(std::move(quot));
}

BiPoly poly_exact_div(const BiPoly& p, const BiPoly& q) {
  auto r = try_exact_div(p, q);
  if (!r) throw Error(ErrorCode::NotDivisible, to_string(p) + " is not divisible by " + to_string(q));
  return *r;
}

bool in_max_ideal(const BiPoly& p) { return p.constant_term() == 0; }

namespace {

std::string monomial_string(const Monomial& m) {
  std::string s;
  auto factor = [&](const char* v, std::uint32_t e) {
    if (e == 0) return;
    if (!s.empty()) s += '*';
    s += v;
    if (e > 1) s += '^' + std::to_string(e);
  };
  factor("x", m.ex);
  factor("y", m.ey);
  return s;
}

// Appends "c*body" with the sign handled by the caller's separator.
void append_term(std::string& out, bool first, const Rational& c, const std::string& body) {
  bool neg = c < 0;
  Rational a = neg ? Rational(-c) : c;
  if (first) {
    if (neg) out += '-';
  } else {
    out += neg ? " - " : " + ";
  }
  if (body.empty()) {
    out += rational_to_string(a);
  } else {
    if (a != 1) out += rational_to_string(a) + "*";
    out += body;
  }
}

}  // namespace

std::string to_string(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    append_term(out, first, t.c, monomial_string(t.m));
    first = false;
  }
  return out;
}

Context Context::create(const Rational& lambda_in, std::optional<Rational> mu) {
  Rational lambda = lambda_in;
  lambda.canonicalize();
  if (mu) mu->canonicalize();
  if (lambda == 0 || lambda == 1)
    throw Error(ErrorCode::InvalidParameter, "lambda must not be 0 or 1 (got " + rational_to_string(lambda) + ")");
  if (mu && (*mu == 0 || *mu == 1))
    throw Error(ErrorCode::InvalidParameter, "mu must not be 0 or 1 (got " + rational_to_string(*mu) + ")");
  Context ctx;
  ctx.lambda_ = lambda;
  ctx.mu_ = std::move(mu);
  BiPoly x = BiPoly::x(), y = BiPoly::y();
  ctx.z_ = {y, x, x - y, x - y.scaled(lambda)};
  ctx.F_ = ctx.z_[0] * ctx.z_[1] * ctx.z_[2] * ctx.z_[3];
  return ctx;
}

std::optional<ZMonomial> z_monomial_decompose(const Context& ctx, const BiPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "cannot decompose the zero polynomial");
  ZMonomial out;
  BiPoly r = p;
  for (int i = 0; i < 4; ++i) {
    while (r.total_degree() > 0) {
      auto q = try_exact_div(r, ctx.zs()[static_cast<std::size_t>(i)]);
      if (!q) break;
      r = std::move(*q);
      ++out.exponents[static_cast<std::size_t>(i)];
    }
  }
  if (!r.is_constant()) return std::nullopt;
  out.unit = r.constant_term();
  return out;
}

BiPoly z_monomial(const Context& ctx, const ZMonomial& zm) {
  BiPoly r = BiPoly::constant(zm.unit);
  for (std::size_t i = 0; i < 4; ++i) r = r * poly_pow(ctx.zs()[i], zm.exponents[i]);
  return r;
}

std::string to_string(const ZMonomial& zm) {
  std::string body;
  for (std::size_t i = 0; i < 4; ++i) {
    if (zm.exponents[i] == 0) continue;
    if (!body.empty()) body += '*';
    body += "z" + std::to_string(i + 1);
    if (zm.exponents[i] > 1) body += '^' + std::to_string(zm.exponents[i]);
  }
  std::string out;
  append_term(out, true, zm.unit, body);
  return out;
}

std::string render_entry(const Context& ctx, const BiPoly& p, bool expanded) {
  if (p.is_zero()) return "0";
  if (!expanded)
    if (auto zm = z_monomial_decompose(ctx, p)) return to_string(*zm);
  return to_string(p);
}

namespace {

class ZFormParser {
 public:
  ZFormParser(const Context& ctx, std::string_view s) : ctx_(ctx), s_(s) {}

  BiPoly parse() {
    BiPoly sum;
    skip();
    bool first = true;
    while (pos_ < s_.size()) {
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      sum += term().scaled(sign);
      first = false;
      skip();
    }
    if (first) fail("empty expression");
    return sum;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, why + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  std::uint32_t integer() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return static_cast<std::uint32_t>(std::stoul(std::string(s_.substr(start, pos_ - start))));
  }

  BiPoly factor() {
    skip();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') ++pos_;
      return BiPoly::constant(parse_rational(s_.substr(start, pos_ - start)));
    }
    BiPoly base;
    if (c == 'z') {
      ++pos_;
      int i = static_cast<int>(integer());
      if (i < 1 || i > 4) fail("z index out of range");
      base = ctx_.z(i);
    } else if (c == 'x' || c == 'y') {
      ++pos_;
      base = c == 'x' ? BiPoly::x() : BiPoly::y();
    } else {
      fail("unexpected character");
    }
    if (peek() == '^') {
      ++pos_;
      base = poly_pow(base, integer());
    }
    return base;
  }

  BiPoly term() {
    BiPoly t = factor();
    skip();
    while (peek() == '*') {
      ++pos_;
      t = t * factor();
      skip();
    }
    return t;
  }

  const Context& ctx_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

BiPoly parse_zform(const Context& ctx, std::string_view text) { return ZFormParser(ctx, text).parse(); }

}  // namespace t44
