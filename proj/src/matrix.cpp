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

#include "t44/matrix.hpp"

#include <algorithm>
#include <map>

namespace t44 {

PolyMatrix PolyMatrix::from_rows(const std::vector<std::vector<BiPoly>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows.front().size();
  PolyMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw Error(ErrorCode::ShapeMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = BiPoly::constant(1);
  return m;
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

PolyMatrix PolyMatrix::scaled(const BiPoly& p) const {
  PolyMatrix r = *this;
  for (auto& e : r.data_) e = e * p;
  return r;
}

PolyMatrix PolyMatrix::block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
  PolyMatrix b(r1 - r0, c1 - c0);
  for (std::size_t i = r0; i < r1; ++i)
    for (std::size_t j = c0; j < c1; ++j) b(i - r0, j - c0) = (*this)(i, j);
  return b;
}

void PolyMatrix::multiply_row(std::size_t i, const BiPoly& p) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = (*this)(i, j) * p;
}

void PolyMatrix::multiply_col(std::size_t j, const BiPoly& p) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = (*this)(i, j) * p;
}

void PolyMatrix::divide_row(std::size_t i, const BiPoly& p) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = poly_exact_div((*this)(i, j), p);
}

bool PolyMatrix::is_reduced() const {
  return std::all_of(data_.begin(), data_.end(), [](const BiPoly& e) { return in_max_ideal(e); });
}

PolyMatrix block_lower(const PolyMatrix& a, const PolyMatrix& c, const PolyMatrix& b) {
  if (c.rows() != b.rows() || c.cols() != a.cols()) throw Error(ErrorCode::ShapeMismatch, "block_lower shapes");
  PolyMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < c.cols(); ++j) m(a.rows() + i, j) = c(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  }
  return m;
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::ShapeMismatch, "cannot multiply " + std::to_string(a.rows()) + "x" +
                                              std::to_string(a.cols()) + " by " + std::to_string(b.rows()) + "x" +
                                              std::to_string(b.cols()));
  PolyMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const BiPoly& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
    }
  return c;
}

BiPoly mat_det(const PolyMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::NotSquare, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return BiPoly::constant(1);
  PolyMatrix m = a;
  BiPoly prev = BiPoly::constant(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return {};
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(p, j));
      negate = !negate;
    }
    const BiPoly& pivot = m(k, k);
    bool trivial_prev = prev.is_constant() && prev.constant_term() == 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      const BiPoly lead = m(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        BiPoly v = m(i, j) * pivot;
        if (!lead.is_zero() && !m(k, j).is_zero()) v -= lead * m(k, j);
        m(i, j) = trivial_prev ? std::move(v) : poly_exact_div(v, prev);
      }
    }
    prev = m(k, k);
  }
  BiPoly d = m(n - 1, n - 1);
  return negate ? -d : d;
}

}  // namespace t44
