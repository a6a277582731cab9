// Copyright 2026 the graphshare authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GRAPHSHARE_BITMATRIX_HPP
#define GRAPHSHARE_BITMATRIX_HPP

#include <optional>
#include <string>
#include <vector>

#include "graphshare/bitvec.hpp"

namespace graphshare {

/// Dense matrix over GF(2), stored as packed rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), row_(rows, BitVector(cols)) {}

  static BitMatrix identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  static BitMatrix from_rows(std::vector<BitVector> rows);
  static BitMatrix from_strings(const std::vector<std::string>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  bool get(size_t r, size_t c) const { return row_.at(r).get(c); }
  void set(size_t r, size_t c, bool v) { row_.at(r).set(c, v); }
  void flip(size_t r, size_t c) { row_.at(r).flip(c); }

  const BitVector& row(size_t r) const { return row_.at(r); }
  void set_row(size_t r, BitVector v);

  void add_row_to(size_t src, size_t dst) { row_.at(dst) ^= row_.at(src); }
  void swap_rows(size_t a, size_t b) { std::swap(row_.at(a), row_.at(b)); }
  void swap_cols(size_t a, size_t b);

  BitMatrix transpose() const;
  BitMatrix operator*(const BitMatrix& other) const;

  /// y = M x (treating x as a column vector).
  BitVector mul_vec(const BitVector& x) const;
  /// y = x^t M (treating x as a row vector).
  BitVector vec_mul(const BitVector& x) const;

  /// Rows `row_idx` and columns `col_idx`, in the given order.
  BitMatrix submatrix(const std::vector<size_t>& row_idx,
                      const std::vector<size_t>& col_idx) const;

  /// Horizontal concatenation [this | other].
  BitMatrix hconcat(const BitMatrix& other) const;

  bool is_zero() const;
  bool is_symmetric() const;
  bool has_zero_diagonal() const;

  bool operator==(const BitMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && row_ == other.row_;
  }
  bool operator!=(const BitMatrix& other) const { return !(*this == other); }

  std::string str() const;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<BitVector> row_;
};

struct RrefResult {
  BitMatrix r;                        // reduced row echelon form of the input
  size_t rank = 0;
  BitMatrix row_transform;            // invertible; row_transform * input == r
  std::vector<size_t> pivot_columns;  // one per pivot row, increasing
};

/// Gauss-Jordan elimination over GF(2). Pivot choice is deterministic:
/// leftmost pivot column first, topmost available row on ties.
RrefResult rref(const BitMatrix& m);

size_t rank(const BitMatrix& m);

struct LinearSolution {
  BitVector particular;             // free variables set to zero
  std::vector<BitVector> nullspace; // basis, one vector per free column
};

/// Solve M x = b over GF(2). Returns nullopt when inconsistent.
std::optional<LinearSolution> solve(const BitMatrix& m, const BitVector& b);

}  // namespace graphshare

#endif
