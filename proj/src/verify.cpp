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

#include <algorithm>
#include <functional>

#include "t44/matrix.hpp"

namespace t44 {

VerificationReport verify_factorization(const Context& ctx, const PolyMatrix& phi, const PolyMatrix& psi) {
  VerificationReport r;
  r.d = phi.rows();
  r.shapes_ok = phi.is_square() && psi.is_square() && phi.rows() == psi.rows();
  if (!r.shapes_ok) return r;
  PolyMatrix fi = PolyMatrix::identity(r.d).scaled(ctx.F());
  r.phi_psi_ok = mat_mul(phi, psi) == fi;
  r.psi_phi_ok = mat_mul(psi, phi) == fi;
  r.phi_reduced = phi.is_reduced();
  r.psi_reduced = psi.is_reduced();
  BiPoly dphi = mat_det(phi);
  BiPoly dpsi = mat_det(psi);
  r.det_identity_ok = dphi * dpsi == poly_pow(ctx.F(), static_cast<unsigned>(r.d));
  if (!dphi.is_zero()) r.det_phi = z_monomial_decompose(ctx, dphi);
  if (!dpsi.is_zero()) r.det_psi = z_monomial_decompose(ctx, dpsi);
  return r;
}

Factorization Factorization::create(const Context& ctx, PolyMatrix phi, PolyMatrix psi) {
  VerificationReport rep = verify_factorization(ctx, phi, psi);
  if (!rep.ok()) {
    std::string why = !rep.shapes_ok      ? "shapes differ"
                      : !rep.phi_psi_ok   ? "phi * psi != F * I"
                      : !rep.psi_phi_ok   ? "psi * phi != F * I"
                                          : "det(phi) * det(psi) != F^d";
    throw Error(ErrorCode::VerificationFailed, why);
  }
  return Factorization(ctx, std::move(phi), std::move(psi), std::move(rep));
}

namespace {

// Replaces every entry by a small integer id; equal polynomials share an id.
std::vector<std::vector<int>> intern(const PolyMatrix& m, std::vector<BiPoly>& table) {
  std::vector<std::vector<int>> ids(m.rows(), std::vector<int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      auto it = std::find(table.begin(), table.end(), m(i, j));
      if (it == table.end()) {
        table.push_back(m(i, j));
        it = table.end() - 1;
      }
      ids[i][j] = static_cast<int>(it - table.begin());
    }
  return ids;
}

}  // namespace

std::optional<PermutationPair> match_up_to_permutation(const PolyMatrix& a, const PolyMatrix& b, std::size_t limit) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::ShapeMismatch, "matrices differ in shape");
  if (std::max(a.rows(), a.cols()) > limit)
    throw Error(ErrorCode::TooLarge, "size " + std::to_string(std::max(a.rows(), a.cols())) + " exceeds limit " +
                                         std::to_string(limit));
  const std::size_t n = a.rows(), m = a.cols();
  std::vector<BiPoly> table;
  auto ia = intern(a, table);
  auto ib = intern(b, table);

  auto column_signature = [&](const std::vector<std::vector<int>>& x, std::size_t j) {
    std::vector<int> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = x[i][j];
    std::sort(s.begin(), s.end());
    return s;
  };
  std::vector<std::vector<int>> sig_a(m), sig_b(m);
  for (std::size_t j = 0; j < m; ++j) {
    sig_a[j] = column_signature(ia, j);
    sig_b[j] = column_signature(ib, j);
  }

  std::vector<std::size_t> cols(m);
  std::vector<bool> used(m, false);

  // Rows of A restricted to the assigned columns must form the same multiset as rows of B.
  auto prefix_ok = [&](std::size_t k) {
    std::vector<std::vector<int>> ra(n, std::vector<int>(k)), rb(n, std::vector<int>(k));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        ra[i][j] = ia[i][cols[j]];
        rb[i][j] = ib[i][j];
      }
    std::sort(ra.begin(), ra.end());
    std::sort(rb.begin(), rb.end());
    return ra == rb;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t j) {
    if (j == m) return true;
    for (std::size_t c = 0; c < m; ++c) {
      if (used[c] || sig_a[c] != sig_b[j]) continue;
      cols[j] = c;
      used[c] = true;
      if (prefix_ok(j + 1) && search(j + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  if (!search(0)) return std::nullopt;
  if (m == 0 && n > 0 && !prefix_ok(0)) return std::nullopt;

  PermutationPair p;
  p.cols = cols;
  p.rows.resize(n);
  std::vector<bool> row_used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < n; ++r) {
      if (row_used[r]) continue;
      bool same = true;
      for (std::size_t j = 0; j < m && same; ++j) same = ia[r][cols[j]] == ib[i][j];
      if (same) {
        p.rows[i] = r;
        row_used[r] = true;
        break;
      }
    }
  }
  return p;
}

}  // namespace t44
