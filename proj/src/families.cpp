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

#include "t44/families.hpp"

#include <random>
#include <utility>

namespace t44 {

ScalarMatrix ScalarMatrix::identity(std::size_t n) {
  ScalarMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ScalarMatrix ScalarMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows.front().size();
  ScalarMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw Error(ErrorCode::ShapeMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

ScalarMatrix ScalarMatrix::transposed() const {
  ScalarMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ScalarMatrix ScalarMatrix::block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
  ScalarMatrix b(r1 - r0, c1 - c0);
  for (std::size_t i = r0; i < r1; ++i)
    for (std::size_t j = c0; j < c1; ++j) b(i - r0, j - c0) = (*this)(i, j);
  return b;
}

void ScalarMatrix::set_block(std::size_t r0, std::size_t c0, const ScalarMatrix& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

std::size_t ScalarMatrix::rank() const {
  ScalarMatrix m = *this;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && m(p, c) == 0) ++p;
    if (p == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(m(r, j), m(p, j));
    for (std::size_t i = r + 1; i < rows_; ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::ShapeMismatch, "scalar matrix product shapes");
  ScalarMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

void check_shape(const ExtBlockMatrix& x) {
  if (x.entries.rows() != x.rows.total() || x.entries.cols() != x.cols.total())
    throw Error(ErrorCode::ShapeMismatch, "entries do not match stripe sizes");
}

ExtBlockMatrix swap_row_stripes(const ExtBlockMatrix& x) {
  check_shape(x);
  const std::size_t a = x.rows.size[0], b = x.rows.size[1];
  ExtBlockMatrix y{{{b, a, x.rows.size[2]}}, x.cols, ScalarMatrix(x.entries.rows(), x.entries.cols())};
  const std::size_t c = x.entries.cols();
  y.entries.set_block(0, 0, x.entries.block(a, a + b, 0, c));
  y.entries.set_block(b, 0, x.entries.block(0, a, 0, c));
  y.entries.set_block(a + b, 0, x.entries.block(a + b, x.entries.rows(), 0, c));
  return y;
}

ExtBlockMatrix swap_col_stripes(const ExtBlockMatrix& x) {
  return transpose_ext(swap_row_stripes(transpose_ext(x)));
}

ExtBlockMatrix transpose_ext(const ExtBlockMatrix& x) {
  check_shape(x);
  return {x.cols, x.rows, x.entries.transposed()};
}

namespace {

using M = ScalarMatrix;

M eye(std::size_t n) { return M::identity(n); }
M zero(std::size_t r, std::size_t c) { return M(r, c); }

// Lower Jordan block with eigenvalue ev.
M jordan(std::size_t n, const Rational& ev) {
  M j(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    j(i, i) = ev;
    if (i > 0) j(i, i - 1) = 1;
  }
  return j;
}

// Row vectors (0, ..., 0, 1) and (1, 0, ..., 0).
M e_last(std::size_t n, const Rational& c = 1) {
  M r(1, n);
  if (n > 0) r(0, n - 1) = c;
  return r;
}
M e_first(std::size_t n) {
  M r(1, n);
  if (n > 0) r(0, 0) = 1;
  return r;
}

M hcat(const std::vector<M>& parts) {
  std::size_t rows = parts.front().rows(), cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) throw Error(ErrorCode::ShapeMismatch, "hcat heights differ");
    cols += p.cols();
  }
  M out(rows, cols);
  std::size_t c = 0;
  for (const auto& p : parts) {
    out.set_block(0, c, p);
    c += p.cols();
  }
  return out;
}

M vcat(const std::vector<M>& parts) {
  std::size_t cols = parts.front().cols(), rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) throw Error(ErrorCode::ShapeMismatch, "vcat widths differ");
    rows += p.rows();
  }
  M out(rows, cols);
  std::size_t r = 0;
  for (const auto& p : parts) {
    out.set_block(r, 0, p);
    r += p.rows();
  }
  return out;
}

ExtBlockMatrix make(M entries, std::array<std::size_t, 3> rows, std::array<std::size_t, 3> cols) {
  ExtBlockMatrix x{{rows}, {cols}, std::move(entries)};
  check_shape(x);
  return x;
}

Rational cycle_eigenvalue(const WordSpec& w, const Context& ctx) {
  if (w.mu) return *w.mu;
  if (ctx.mu()) return *ctx.mu();
  throw Error(ErrorCode::InvalidEigenvalue, "w0 needs an eigenvalue mu");
}

// Untransposed, unmarked matrix of the word.
ExtBlockMatrix base_matrix(const WordSpec& w, const Context& ctx) {
  const std::size_t n = w.n.value_or(0);
  switch (w.kind) {
    case WordKind::W0:
      return make(vcat({hcat({eye(n), jordan(n, cycle_eigenvalue(w, ctx))}), hcat({eye(n), eye(n)})}), {n, n, 0},
                  {n, n, 0});
    case WordKind::W1: {
      const std::size_t m = n / 2;
      if (n % 2 == 0)
        return make(vcat({hcat({eye(m), jordan(m, 0)}), hcat({eye(m), eye(m)})}), {m, m, 0}, {m, m, 0});
      return make(vcat({hcat({eye(m), zero(m, 1), jordan(m, 0)}), hcat({zero(1, m), eye(1), e_last(m)}),
                        hcat({eye(m), zero(m, 1), eye(m)})}),
                  {m + 1, m, 0}, {m + 1, m, 0});
    }
    case WordKind::W2:
      return make(vcat({hcat({eye(n), jordan(n, 1)}), hcat({zero(1, n), e_last(n)}), hcat({eye(n), eye(n)})}),
                  {n + 1, n, 0}, {n, n, 0});
    case WordKind::W3: {
      M x = vcat({hcat({eye(n), zero(n, 1), eye(n), zero(n, 1), zero(n, 1)}),
                  hcat({zero(1, n), eye(1), zero(1, n), eye(1), zero(1, 1)}),
                  hcat({zero(1, n), zero(1, 1), zero(1, n), zero(1, 1), eye(1)}),
                  hcat({jordan(n, 1), e_first(n).transposed(), eye(n), zero(n, 1), zero(n, 1)}),
                  hcat({e_last(n), zero(1, 1), zero(1, n), zero(1, 1), eye(1)})});
      // The e_1^T block is empty for n = 0; its 1 moves to the e_n row.
      if (n == 0) x(2, 0) = 1;
      return make(std::move(x), {n + 2, n + 1, 0}, {n + 1, n + 1, 1});
    }
    case WordKind::W4:
      return make(vcat({hcat({eye(n), zero(n, 1), jordan(n, 1)}), hcat({zero(1, n), eye(1), e_last(n)}),
                        hcat({eye(n), zero(n, 1), eye(n)}), hcat({zero(1, n), eye(1), zero(1, n)})}),
                  {n + 1, n + 1, 0}, {n + 1, n, 0});
    case WordKind::W5: {
      M x = vcat({hcat({eye(n), e_first(n).transposed(), jordan(n, 1), zero(n, 1)}),
                  hcat({zero(1, n), zero(1, 1), e_last(n), eye(1)}), hcat({eye(n), zero(n, 1), eye(n), zero(n, 1)}),
                  hcat({zero(1, n), zero(1, 1), zero(1, n), eye(1)})});
      if (n == 0) x(0, 0) = 1;
      return make(std::move(x), {n + 1, n + 1, 0}, {n + 1, n, 1});
    }
    case WordKind::W6:
      return make(vcat({hcat({eye(n), jordan(n, 1)}), hcat({eye(n), eye(n)})}), {n, n, 0}, {n, n, 0});
    case WordKind::W7: {
      const std::size_t m = n / 2, k = n - m - 1;
      const Rational eps = n % 2;
      M x = vcat({hcat({eye(m), zero(m, k), zero(m, 1), jordan(m, 1), zero(m, k), zero(m, 1)}),
                  hcat({zero(k, m), eye(k), zero(k, 1), zero(k, m), eye(k), zero(k, 1)}),
                  hcat({zero(1, m), e_last(k, 1 - eps), zero(1, 1), e_last(m), zero(1, k), zero(1, 1)}),
                  hcat({eye(m), zero(m, k), zero(m, 1), eye(m), zero(m, k), zero(m, 1)}),
                  hcat({zero(k, m), jordan(k, 1), e_first(k).transposed(), zero(k, m), eye(k), zero(k, 1)}),
                  hcat({zero(1, m), e_last(k), zero(1, 1), e_last(m, eps), zero(1, k), zero(1, 1)}),
                  hcat({zero(1, m), zero(1, k), eye(1), zero(1, m), zero(1, k), eye(1)})});
      if (k == 0) x(2 * m + 1, m) = 1;
      return make(std::move(x), {n, n, 1}, {n, n, 0});
    }
    case WordKind::W8:
      return make(vcat({hcat({eye(n), jordan(n, 1), zero(n, 1)}), hcat({zero(1, n), e_last(n), eye(1)}),
                        hcat({eye(n), eye(n), zero(n, 1)}), hcat({zero(1, n), zero(1, n), eye(1)})}),
                  {n + 1, n + 1, 0}, {n, n, 1});
    case WordKind::W9:
      return make(vcat({hcat({eye(n), zero(n, 1), eye(n), zero(n, 1), zero(n, 1)}),
                        hcat({zero(1, n), zero(1, 1), zero(1, n), zero(1, 1), eye(1)}),
                        hcat({jordan(n, 1), e_first(n).transposed(), eye(n), zero(n, 1), zero(n, 1)}),
                        hcat({e_last(n), zero(1, 1), zero(1, n), zero(1, 1), eye(1)}),
                        hcat({zero(1, n), eye(1), zero(1, n), eye(1), zero(1, 1)})}),
                  {n + 1, n + 1, 1}, {n + 1, n + 1, 1});
    case WordKind::W10:
      return make(eye(1), {0, 0, 1}, {0, 0, 1});
  }
  throw Error(ErrorCode::InvalidParameter, "unknown word kind");
}

// Marks of the untransposed word: (row swap, column swap).
std::pair<bool, bool> untransposed_swaps(const WordSpec& w) {
  bool rows = false, cols = false;
  auto minus = [&](std::size_t i) { return i < w.marks.size() && w.marks[i] == Sign::Minus; };
  switch (w.kind) {
    case WordKind::W1:
      rows = minus(0);
      cols = minus(1);
      break;
    case WordKind::W2:
    case WordKind::W3:
      rows = minus(0);
      break;
    case WordKind::W4:
    case WordKind::W5:
      cols = minus(0);
      break;
    default:
      break;
  }
  return {rows, cols};
}

}  // namespace

StripeSwaps stripe_swaps(const WordSpec& w) {
  auto [r, c] = untransposed_swaps(w);
  return w.transposed ? StripeSwaps{c, r} : StripeSwaps{r, c};
}

ExtBlockMatrix build_X(const WordSpec& w, const Context& ctx) {
  WordSpec checked = word_new(w.kind, w.n, w.transposed, w.marks, w.mu);
  ExtBlockMatrix x = base_matrix(checked, ctx);
  auto [r, c] = untransposed_swaps(checked);
  if (r) x = swap_row_stripes(x);
  if (c) x = swap_col_stripes(x);
  return checked.transposed ? transpose_ext(x) : x;
}

Stripes AdmissibleTransform::stripes() const {
  return {{within[0].rows(), within[1].rows(), within[2].rows()}};
}

ScalarMatrix AdmissibleTransform::full() const {
  Stripes s = stripes();
  ScalarMatrix m(s.total(), s.total());
  for (std::size_t i = 0; i < 3; ++i) m.set_block(s.offset(i), s.offset(i), within[i]);
  if (side == Side::Row) {
    m.set_block(0, s.offset(2), third_into[0]);
    m.set_block(s.offset(1), s.offset(2), third_into[1]);
  } else {
    m.set_block(s.offset(2), 0, third_into[0]);
    m.set_block(s.offset(2), s.offset(1), third_into[1]);
  }
  return m;
}

AdmissibleTransform AdmissibleTransform::identity(Side side, const Stripes& s) {
  AdmissibleTransform t;
  t.side = side;
  for (std::size_t i = 0; i < 3; ++i) t.within[i] = ScalarMatrix::identity(s.size[i]);
  for (std::size_t i = 0; i < 2; ++i)
    t.third_into[i] = side == Side::Row ? ScalarMatrix(s.size[i], s.size[2]) : ScalarMatrix(s.size[2], s.size[i]);
  return t;
}

namespace {

void check_transform(const AdmissibleTransform& t, Side side, const Stripes& expected) {
  if (t.side != side) throw Error(ErrorCode::ShapeMismatch, "transform applied on the wrong side");
  for (std::size_t i = 0; i < 3; ++i)
    if (t.within[i].rows() != expected.size[i] || t.within[i].cols() != expected.size[i])
      throw Error(ErrorCode::ShapeMismatch, "within-stripe block does not match the stripe size");
  for (std::size_t i = 0; i < 2; ++i) {
    std::size_t r = side == Side::Row ? expected.size[i] : expected.size[2];
    std::size_t c = side == Side::Row ? expected.size[2] : expected.size[i];
    if (t.third_into[i].rows() != r || t.third_into[i].cols() != c)
      throw Error(ErrorCode::ShapeMismatch, "third-stripe block does not match the stripe sizes");
  }
  for (std::size_t i = 0; i < 3; ++i)
    if (!t.within[i].is_invertible()) throw Error(ErrorCode::NotAdmissible, "within-stripe block is singular");
}

}  // namespace

ExtBlockMatrix apply_transform(const ExtBlockMatrix& x, const AdmissibleTransform& s, const AdmissibleTransform& t) {
  check_shape(x);
  check_transform(s, Side::Row, x.rows);
  check_transform(t, Side::Column, x.cols);
  return {x.rows, x.cols, s.full() * x.entries * t.full()};
}

AdmissibleTransform random_admissible(Side side, const Stripes& stripes, std::uint64_t seed) {
  // Raw engine output only; distributions are implementation-defined across standard libraries.
  std::mt19937_64 rng(seed);
  auto draw = [&] { return Rational(static_cast<long>(rng() % 7) - 3); };
  auto fill = [&](std::size_t r, std::size_t c) {
    ScalarMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = draw();
    return m;
  };
  AdmissibleTransform t;
  t.side = side;
  for (std::size_t i = 0; i < 3; ++i) {
    do {
      t.within[i] = fill(stripes.size[i], stripes.size[i]);
    } while (!t.within[i].is_invertible());
  }
  for (std::size_t i = 0; i < 2; ++i)
    t.third_into[i] = side == Side::Row ? fill(stripes.size[i], stripes.size[2]) : fill(stripes.size[2], stripes.size[i]);
  return t;
}

}  // namespace t44
