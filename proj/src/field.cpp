// Copyright 2026 The Authors.
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

#include "polynet/field.hpp"

#include <stdexcept>
#include <string>

namespace polynet {

namespace {

constexpr int kMaxDim = 64;

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Row-reduces m in place, returns the pivot column per eliminated row.
std::vector<int> row_reduce(FqMatrix& m, const FieldSpec& f) {
  std::vector<int> pivot_cols;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < m.rows(); ++r) {
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int c = 0; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(row, c));
    }
    const int scale = f.inv(m.at(row, col));
    for (int c = col; c < m.cols(); ++c) m.at(row, c) = f.mul(m.at(row, c), scale);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      const int factor = m.at(r, col);
      for (int c = col; c < m.cols(); ++c) {
        m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(row, c)));
      }
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

}  // namespace

FieldSpec::FieldSpec(int prime) : p(prime) {
  if (!is_prime(prime)) {
    throw std::invalid_argument("FieldSpec: modulus " + std::to_string(prime) +
                                " is not prime");
  }
}

int FieldSpec::inv(int a) const {
  a %= p;
  if (a == 0) throw std::invalid_argument("FieldSpec::inv of zero");
  // Fermat; p is small.
  int result = 1;
  int base = a;
  int e = p - 2;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FqMatrix::FqMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0 || rows > kMaxDim || cols > kMaxDim) {
    throw std::invalid_argument("FqMatrix: dimensions out of range");
  }
}

FqMatrix::FqMatrix(int rows, int cols, std::vector<int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 0 || cols < 0 || rows > kMaxDim || cols > kMaxDim) {
    throw std::invalid_argument("FqMatrix: dimensions out of range");
  }
  if (entries_.size() != static_cast<size_t>(rows) * cols) {
    throw std::invalid_argument("FqMatrix: entry count does not match shape");
  }
}

FqMatrix FqMatrix::identity(int n) {
  FqMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FqMatrix FqMatrix::from_columns(int rows, const std::vector<std::vector<int>>& cols) {
  FqMatrix m(rows, static_cast<int>(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != static_cast<size_t>(rows)) {
      throw std::invalid_argument("FqMatrix::from_columns: column length mismatch");
    }
    for (int r = 0; r < rows; ++r) m.at(r, static_cast<int>(c)) = cols[c][r];
  }
  return m;
}

std::vector<int> FqMatrix::column(int c) const {
  std::vector<int> out(rows_);
  for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

std::vector<std::vector<int>> FqMatrix::columns() const {
  std::vector<std::vector<int>> out;
  out.reserve(cols_);
  for (int c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

FqMatrix FqMatrix::transposed() const {
  FqMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

bool FqMatrix::is_zero() const {
  for (int e : entries_) {
    if (e != 0) return false;
  }
  return true;
}

FqMatrix hconcat(std::span<const FqMatrix> mats) {
  int rows = 0;
  int cols = 0;
  for (const auto& m : mats) {
    if (m.rows() > 0 || m.cols() > 0) {
      if (rows == 0) rows = m.rows();
      if (m.rows() != rows) {
        throw std::invalid_argument("hconcat: row count mismatch");
      }
    }
    cols += m.cols();
  }
  FqMatrix out(rows, cols);
  int base = 0;
  for (const auto& m : mats) {
    for (int r = 0; r < m.rows(); ++r) {
      for (int c = 0; c < m.cols(); ++c) out.at(r, base + c) = m.at(r, c);
    }
    base += m.cols();
  }
  return out;
}

FqMatrix mat_mul(const FqMatrix& a, const FqMatrix& b, const FieldSpec& f) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
  FqMatrix out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int k = 0; k < a.cols(); ++k) {
      const int v = a.at(r, k);
      if (v == 0) continue;
      for (int c = 0; c < b.cols(); ++c) {
        out.at(r, c) = f.add(out.at(r, c), f.mul(v, b.at(k, c)));
      }
    }
  }
  return out;
}

int mat_rank(const FqMatrix& m, const FieldSpec& f) {
  FqMatrix work = m;
  return static_cast<int>(row_reduce(work, f).size());
}

int subspace_sum_dim(std::span<const FqMatrix> mats, const FieldSpec& f) {
  if (mats.empty()) return 0;
  return mat_rank(hconcat(mats), f);
}

std::optional<FqMatrix> solve_right(const FqMatrix& a, const FqMatrix& b,
                                    const FieldSpec& f) {
  if (a.rows() != b.rows()) {
    throw std::invalid_argument("solve_right: row count mismatch");
  }
  const FqMatrix aug = hconcat(std::vector<FqMatrix>{a, b});
  FqMatrix red = aug;
  const std::vector<int> pivots = row_reduce(red, f);
  for (int p : pivots) {
    if (p >= a.cols()) return std::nullopt;  // a column of B escapes span(A)
  }
  FqMatrix x(a.cols(), b.cols());
  for (size_t r = 0; r < pivots.size(); ++r) {
    for (int c = 0; c < b.cols(); ++c) {
      x.at(pivots[r], c) = red.at(static_cast<int>(r), a.cols() + c);
    }
  }
  return x;
}

std::optional<FqMatrix> invert(const FqMatrix& b, const FieldSpec& f) {
  if (b.rows() != b.cols()) throw std::invalid_argument("invert: matrix not square");
  if (mat_rank(b, f) != b.rows()) return std::nullopt;
  return solve_right(b, FqMatrix::identity(b.rows()), f);
}

FqMatrix column_basis(const FqMatrix& m, const FieldSpec& f) {
  FqMatrix red = m;
  const std::vector<int> pivots = row_reduce(red, f);
  FqMatrix out(m.rows(), static_cast<int>(pivots.size()));
  for (size_t j = 0; j < pivots.size(); ++j) {
    for (int r = 0; r < m.rows(); ++r) out.at(r, static_cast<int>(j)) = m.at(r, pivots[j]);
  }
  return out;
}

}  // namespace polynet
