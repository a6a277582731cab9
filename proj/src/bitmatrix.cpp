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

#include "graphshare/bitmatrix.hpp"

#include <stdexcept>

namespace graphshare {

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows) {
  BitMatrix m;
  m.rows_ = rows.size();
  m.cols_ = rows.empty() ? 0 : rows[0].size();
  for (const BitVector& r : rows) {
    if (r.size() != m.cols_) {
      throw std::invalid_argument("BitMatrix::from_rows: ragged rows");
    }
  }
  m.row_ = std::move(rows);
  return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
  std::vector<BitVector> parsed;
  parsed.reserve(rows.size());
  for (const std::string& s : rows) parsed.push_back(BitVector::from_string(s));
  return from_rows(std::move(parsed));
}

void BitMatrix::set_row(size_t r, BitVector v) {
  if (v.size() != cols_) {
    throw std::invalid_argument("BitMatrix::set_row: size mismatch");
  }
  row_.at(r) = std::move(v);
}

void BitMatrix::swap_cols(size_t a, size_t b) {
  if (a == b) return;
  for (size_t r = 0; r < rows_; ++r) {
    bool va = row_[r].get(a);
    bool vb = row_[r].get(b);
    row_[r].set(a, vb);
    row_[r].set(b, va);
  }
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < cols_; ++c) {
      if (row_[r].get(c)) t.set(c, r, true);
    }
  }
  return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix& other) const {
  if (cols_ != other.rows_) {
    throw std::invalid_argument("BitMatrix: dimension mismatch in product");
  }
  BitMatrix result(rows_, other.cols_);
  for (size_t r = 0; r < rows_; ++r) {
    BitVector acc(other.cols_);
    for (size_t k = 0; k < cols_; ++k) {
      if (row_[r].get(k)) acc ^= other.row_[k];
    }
    result.row_[r] = std::move(acc);
  }
  return result;
}

BitVector BitMatrix::mul_vec(const BitVector& x) const {
  if (x.size() != cols_) {
    throw std::invalid_argument("BitMatrix::mul_vec: dimension mismatch");
  }
  BitVector y(rows_);
  for (size_t r = 0; r < rows_; ++r) y.set(r, row_[r].dot(x));
  return y;
}

BitVector BitMatrix::vec_mul(const BitVector& x) const {
  if (x.size() != rows_) {
    throw std::invalid_argument("BitMatrix::vec_mul: dimension mismatch");
  }
  BitVector y(cols_);
  for (size_t r = 0; r < rows_; ++r) {
    if (x.get(r)) y ^= row_[r];
  }
  return y;
}

BitMatrix BitMatrix::submatrix(const std::vector<size_t>& row_idx,
                               const std::vector<size_t>& col_idx) const {
  BitMatrix m(row_idx.size(), col_idx.size());
  for (size_t r = 0; r < row_idx.size(); ++r) {
    for (size_t c = 0; c < col_idx.size(); ++c) {
      if (row_.at(row_idx[r]).get(col_idx[c])) m.set(r, c, true);
    }
  }
  return m;
}

BitMatrix BitMatrix::hconcat(const BitMatrix& other) const {
  if (rows_ != other.rows_) {
    throw std::invalid_argument("BitMatrix::hconcat: row count mismatch");
  }
  BitMatrix m(rows_, cols_ + other.cols_);
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < cols_; ++c) m.set(r, c, get(r, c));
    for (size_t c = 0; c < other.cols_; ++c) {
      m.set(r, cols_ + c, other.get(r, c));
    }
  }
  return m;
}

bool BitMatrix::is_zero() const {
  for (const BitVector& r : row_) {
    if (r.any()) return false;
  }
  return true;
}

bool BitMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = r + 1; c < cols_; ++c) {
      if (get(r, c) != get(c, r)) return false;
    }
  }
  return true;
}

bool BitMatrix::has_zero_diagonal() const {
  size_t n = rows_ < cols_ ? rows_ : cols_;
  for (size_t i = 0; i < n; ++i) {
    if (get(i, i)) return false;
  }
  return true;
}

std::string BitMatrix::str() const {
  std::string s;
  for (size_t r = 0; r < rows_; ++r) {
    s += row_[r].str();
    s += '\n';
  }
  return s;
}

RrefResult rref(const BitMatrix& m) {
  RrefResult result;
  result.r = m;
  result.row_transform = BitMatrix::identity(m.rows());
  size_t pivot_row = 0;
  for (size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    size_t found = m.rows();
    for (size_t r = pivot_row; r < m.rows(); ++r) {
      if (result.r.get(r, c)) {
        found = r;
        break;
      }
    }
    if (found == m.rows()) continue;
    result.r.swap_rows(pivot_row, found);
    result.row_transform.swap_rows(pivot_row, found);
    for (size_t r = 0; r < m.rows(); ++r) {
      if (r != pivot_row && result.r.get(r, c)) {
        result.r.add_row_to(pivot_row, r);
        result.row_transform.add_row_to(pivot_row, r);
      }
    }
    result.pivot_columns.push_back(c);
    ++pivot_row;
  }
  result.rank = pivot_row;
  return result;
}

size_t rank(const BitMatrix& m) { return rref(m).rank; }

std::optional<LinearSolution> solve(const BitMatrix& m, const BitVector& b) {
  if (b.size() != m.rows()) {
    throw std::invalid_argument("solve: right-hand side size mismatch");
  }
  RrefResult rr = rref(m);
  BitVector y = rr.row_transform.mul_vec(b);
  for (size_t r = rr.rank; r < m.rows(); ++r) {
    if (y.get(r)) return std::nullopt;
  }

  LinearSolution sol;
  sol.particular = BitVector(m.cols());
  for (size_t t = 0; t < rr.rank; ++t) {
    sol.particular.set(rr.pivot_columns[t], y.get(t));
  }

  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : rr.pivot_columns) is_pivot[c] = true;
  for (size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    BitVector v(m.cols());
    v.set(f, true);
    for (size_t t = 0; t < rr.rank; ++t) {
      if (rr.r.get(t, f)) v.set(rr.pivot_columns[t], true);
    }
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

}  // namespace graphshare
