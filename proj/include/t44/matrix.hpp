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

#ifndef T44_MATRIX_HPP
#define T44_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "t44/arith.hpp"

namespace t44 {

/// Dense row-major matrix of polynomials.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Throws ShapeMismatch on ragged input.
  static PolyMatrix from_rows(const std::vector<std::vector<BiPoly>>& rows);
  static PolyMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  BiPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BiPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  PolyMatrix transposed() const;
  PolyMatrix scaled(const BiPoly& p) const;
  /// Sub-matrix of rows [r0, r1) and columns [c0, c1).
  PolyMatrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;
  void multiply_row(std::size_t i, const BiPoly& p);
  void multiply_col(std::size_t j, const BiPoly& p);
  /// Throws NotDivisible if some entry of the row is not a multiple of p.
  void divide_row(std::size_t i, const BiPoly& p);
  /// Every entry lies in (x, y).
  bool is_reduced() const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BiPoly> data_;
};

/// [[A, 0], [C, B]] with C of shape B.rows x A.cols.
PolyMatrix block_lower(const PolyMatrix& a, const PolyMatrix& c, const PolyMatrix& b);

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);
/// Fraction-free (Bareiss) determinant. Throws NotSquare.
BiPoly mat_det(const PolyMatrix& a);

struct SolveOptions {
  unsigned degree_bound = 4;
  /// Columns are independent; more than one thread solves them concurrently.
  unsigned threads = 1;
};

/// The unique Psi with phi * Psi = F * I, solved column by column over the
/// coefficients of all monomials of degree <= degree_bound.
/// Throws NotSquare, Singular, NoPolynomialSolution, VerificationFailed.
PolyMatrix solve_psi(const Context& ctx, const PolyMatrix& phi, const SolveOptions& opts = {});
/// As above when det(phi) is already known.
PolyMatrix solve_psi(const Context& ctx, const PolyMatrix& phi, const BiPoly& det_phi, const SolveOptions& opts);

using DetProfile = ZMonomial;

struct VerificationReport {
  std::size_t d = 0;
  bool shapes_ok = false;
  bool phi_psi_ok = false;
  bool psi_phi_ok = false;
  bool phi_reduced = false;
  bool psi_reduced = false;
  bool det_identity_ok = false;
  std::optional<DetProfile> det_phi;
  std::optional<DetProfile> det_psi;

  /// Both products equal F*I and det(phi)*det(psi) = F^d. Reducedness is reported separately.
  bool ok() const { return shapes_ok && phi_psi_ok && psi_phi_ok && det_identity_ok; }
};

VerificationReport verify_factorization(const Context& ctx, const PolyMatrix& phi, const PolyMatrix& psi);

/// A verified pair (phi, psi) with phi*psi = psi*phi = F*I.
class Factorization {
 public:
  /// Throws VerificationFailed if the identities do not hold.
  static Factorization create(const Context& ctx, PolyMatrix phi, PolyMatrix psi);

  const Context& context() const { return ctx_; }
  const PolyMatrix& phi() const { return phi_; }
  const PolyMatrix& psi() const { return psi_; }
  std::size_t d() const { return phi_.rows(); }
  const VerificationReport& report() const { return report_; }

 private:
  Factorization(Context ctx, PolyMatrix phi, PolyMatrix psi, VerificationReport report)
      : ctx_(std::move(ctx)), phi_(std::move(phi)), psi_(std::move(psi)), report_(std::move(report)) {}
  Context ctx_;
  PolyMatrix phi_;
  PolyMatrix psi_;
  VerificationReport report_;
};

/// B(i, j) = A(rows[i], cols[j]).
struct PermutationPair {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

/// Backtracking search for row and column permutations taking A to B.
/// Throws ShapeMismatch or TooLarge (size above limit).
std::optional<PermutationPair> match_up_to_permutation(const PolyMatrix& a, const PolyMatrix& b,
                                                       std::size_t limit = 8);

}  // namespace t44

#endif
