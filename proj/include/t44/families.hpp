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

#ifndef T44_FAMILIES_HPP
#define T44_FAMILIES_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "t44/arith.hpp"
#include "t44/words.hpp"

namespace t44 {

/// Dense rational matrix.
class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  ScalarMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static ScalarMatrix identity(std::size_t n);
  static ScalarMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  ScalarMatrix transposed() const;
  ScalarMatrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;
  void set_block(std::size_t r0, std::size_t c0, const ScalarMatrix& b);
  std::size_t rank() const;
  bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

  friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
  friend bool operator==(const ScalarMatrix&, const ScalarMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Sizes of the three stripes: rows (3, 4, 34) or columns (1, 2, 12).
struct Stripes {
  std::array<std::size_t, 3> size{0, 0, 0};
  std::size_t total() const { return size[0] + size[1] + size[2]; }
  std::size_t offset(std::size_t s) const {
    std::size_t o = 0;
    for (std::size_t i = 0; i < s; ++i) o += size[i];
    return o;
  }
  friend bool operator==(const Stripes&, const Stripes&) = default;
};

/// Scalar Ext block matrix with row stripes (3, 4, 34) and column stripes (1, 2, 12).
struct ExtBlockMatrix {
  Stripes rows;
  Stripes cols;
  ScalarMatrix entries;

  friend bool operator==(const ExtBlockMatrix&, const ExtBlockMatrix&) = default;
};

/// Checks that the entry dimensions match the stripe sums; throws ShapeMismatch.
void check_shape(const ExtBlockMatrix& x);
/// Interchanges the first two row stripes (a mark on an e1 end).
ExtBlockMatrix swap_row_stripes(const ExtBlockMatrix& x);
/// Interchanges the first two column stripes (a mark on an f1 end).
ExtBlockMatrix swap_col_stripes(const ExtBlockMatrix& x);
/// Transposed matrix; row stripes become column stripes and vice versa.
ExtBlockMatrix transpose_ext(const ExtBlockMatrix& x);

/// Which stripe pairs of the final matrix were interchanged by marks.
struct StripeSwaps {
  bool rows = false;
  bool cols = false;
};
StripeSwaps stripe_swaps(const WordSpec& w);

/// The canonical block matrix of a word, with marks and transposition applied.
/// W0 takes mu from the spec, or from the context when the spec has none.
ExtBlockMatrix build_X(const WordSpec& w, const Context& ctx);

enum class Side { Row, Column };

/// Row side: S = [[A3, 0, B3], [0, A4, B4], [0, 0, A34]].
/// Column side: T = [[C1, 0, 0], [0, C2, 0], [D1, D2, C12]].
struct AdmissibleTransform {
  Side side = Side::Row;
  std::array<ScalarMatrix, 3> within;
  /// Row side: B3, B4. Column side: D1, D2.
  std::array<ScalarMatrix, 2> third_into;

  Stripes stripes() const;
  ScalarMatrix full() const;
  static AdmissibleTransform identity(Side side, const Stripes& s);
};

/// S * X * T. Throws ShapeMismatch or NotAdmissible.
ExtBlockMatrix apply_transform(const ExtBlockMatrix& x, const AdmissibleTransform& s, const AdmissibleTransform& t);
/// Deterministic from the seed; entries are small integers, within-stripe blocks redrawn until invertible.
AdmissibleTransform random_admissible(Side side, const Stripes& stripes, std::uint64_t seed);

}  // namespace t44

#endif
