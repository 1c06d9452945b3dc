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

#ifndef T44_ARITH_HPP
#define T44_ARITH_HPP

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "t44/error.hpp"

namespace t44 {

/// Exact rational number, always canonical (positive denominator, reduced).
using Rational = mpq_class;

/// Parses "p" or "p/q" (optional leading sign). Rejects decimals and q = 0.
Rational parse_rational(std::string_view text);
/// Renders as "p" or "p/q".
std::string rational_to_string(const Rational& r);

/// Exponent pair of x^ex * y^ey.
struct Monomial {
  std::uint32_t ex = 0;
  std::uint32_t ey = 0;

  std::uint32_t degree() const { return ex + ey; }
  bool divides(const Monomial& other) const { return ex <= other.ex && ey <= other.ey; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order with x > y. Returns true if a comes before b
/// in the descending term order (a is the larger monomial).
inline bool grlex_greater(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  return a.ex > b.ex;
}

/// Sparse bivariate polynomial over the rationals.
///
/// Terms are kept sorted in descending grlex order with no zero coefficients,
/// so structural equality is polynomial equality.
class BiPoly {
 public:
  struct Term {
    Monomial m;
    Rational c;
    friend bool operator==(const Term&, const Term&) = default;
  };

  BiPoly() = default;
  /// Builds from arbitrary terms; sorts, merges and drops zeros.
  explicit BiPoly(std::vector<Term> terms);

  static BiPoly constant(const Rational& c);
  static BiPoly monomial(const Rational& c, std::uint32_t ex, std::uint32_t ey);
  static BiPoly x() { return monomial(1, 1, 0); }
  static BiPoly y() { return monomial(1, 0, 1); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.degree() == 0); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  Rational constant_term() const;
  Rational coeff(std::uint32_t ex, std::uint32_t ey) const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;

  BiPoly scaled(const Rational& c) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  /// this += c * m * o, the inner step of exact division and elimination.
  void add_scaled_shifted(const BiPoly& o, const Rational& c, const Monomial& m);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator-(const BiPoly& a) { return a.scaled(-1); }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  std::vector<Term> terms_;
};

BiPoly poly_mul(const BiPoly& p, const BiPoly& q);
BiPoly poly_pow(const BiPoly& p, unsigned e);
/// Exact quotient p / q. Throws DivisionByZero or NotDivisible.
BiPoly poly_exact_div(const BiPoly& p, const BiPoly& q);
/// As poly_exact_div but returns nullopt instead of NotDivisible.
std::optional<BiPoly> try_exact_div(const BiPoly& p, const BiPoly& q);
/// p lies in the ideal (x, y), i.e. has zero constant term. 0 counts.
bool in_max_ideal(const BiPoly& p);

/// Expanded rendering, e.g. "x^3*y - 3*x^2*y^2 + 2*x*y^3".
std::string to_string(const BiPoly& p);

/// Parameters of the curve and the four branch forms.
class Context {
 public:
  /// Throws InvalidParameter if lambda or mu lies in {0, 1}.
  static Context create(const Rational& lambda, std::optional<Rational> mu = std::nullopt);

  const Rational& lambda() const { return lambda_; }
  const std::optional<Rational>& mu() const { return mu_; }
  /// i in 1..4.
  const BiPoly& z(int i) const { return z_.at(static_cast<std::size_t>(i - 1)); }
  const std::array<BiPoly, 4>& zs() const { return z_; }
  const BiPoly& F() const { return F_; }

 private:
  Context() = default;
  Rational lambda_;
  std::optional<Rational> mu_;
  std::array<BiPoly, 4> z_;
  BiPoly F_;
};

/// unit * z1^a1 * z2^a2 * z3^a3 * z4^a4.
struct ZMonomial {
  Rational unit = 1;
  std::array<unsigned, 4> exponents{0, 0, 0, 0};
  friend bool operator==(const ZMonomial&, const ZMonomial&) = default;
};

/// Throws ZeroInput for p = 0; nullopt if p is not a scalar times a z-monomial.
std::optional<ZMonomial> z_monomial_decompose(const Context& ctx, const BiPoly& p);
BiPoly z_monomial(const Context& ctx, const ZMonomial& zm);
/// "z1*z3", "-2*z1^2*z4", "1/2", "-z2".
std::string to_string(const ZMonomial& zm);
/// Z-form when the entry decomposes, expanded form otherwise. "0" for zero.
std::string render_entry(const Context& ctx, const BiPoly& p, bool expanded = false);
/// Parses a sum of z-monomial terms such as "-z1*z3 + 2*z2^2" or "0".
BiPoly parse_zform(const Context& ctx, std::string_view text);

}  // namespace t44

#endif
