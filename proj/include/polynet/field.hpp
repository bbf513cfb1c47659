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

#ifndef POLYNET_FIELD_HPP
#define POLYNET_FIELD_HPP

#include <optional>
#include <span>
#include <vector>

namespace polynet {

/// Prime field GF(p). Primality is checked at construction.
struct FieldSpec {
  int p;
  explicit FieldSpec(int prime);

  int add(int a, int b) const { return (a + b) % p; }
  int sub(int a, int b) const { return (a - b % p + p) % p; }
  int mul(int a, int b) const { return (a * b) % p; }
  int neg(int a) const { return (p - a % p) % p; }
  int inv(int a) const;  // a must be nonzero mod p

  bool operator==(const FieldSpec&) const = default;
};

/// Dense matrix with entries in [0, p). The field is supplied per operation;
/// the matrix itself only stores reduced residues. Zero-column matrices are
/// legal and denote the zero subspace. Dimensions are capped at 64x64.
class FqMatrix {
 public:
  FqMatrix() = default;
  FqMatrix(int rows, int cols);                            // zero-filled
  FqMatrix(int rows, int cols, std::vector<int> entries);  // row-major

  static FqMatrix identity(int n);
  static FqMatrix from_columns(int rows, const std::vector<std::vector<int>>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int at(int r, int c) const { return entries_[r * cols_ + c]; }
  int& at(int r, int c) { return entries_[r * cols_ + c]; }
  const std::vector<int>& entries() const { return entries_; }

  std::vector<int> column(int c) const;
  std::vector<std::vector<int>> columns() const;
  FqMatrix transposed() const;
  bool is_zero() const;

  bool operator==(const FqMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> entries_;
};

/// Horizontal concatenation [A_1 A_2 ... A_t]; all blocks must share a row
/// count (zero-column blocks are skipped for the row check only when empty).
FqMatrix hconcat(std::span<const FqMatrix> mats);

FqMatrix mat_mul(const FqMatrix& a, const FqMatrix& b, const FieldSpec& f);

/// Rank by exact Gaussian elimination. Zero-size matrices have rank 0.
int mat_rank(const FqMatrix& m, const FieldSpec& f);

/// dim(V_1 + ... + V_t) where V_i is the column span of mats[i].
int subspace_sum_dim(std::span<const FqMatrix> mats, const FieldSpec& f);

/// Solves A*X = B. Present iff every column of B lies in the column span of A.
std::optional<FqMatrix> solve_right(const FqMatrix& a, const FqMatrix& b,
                                    const FieldSpec& f);

/// B^{-1} for square B, or absent when singular.
std::optional<FqMatrix> invert(const FqMatrix& b, const FieldSpec& f);

/// The submatrix of the first linearly independent columns, scanned left to
/// right. Spans the same column space as the input.
FqMatrix column_basis(const FqMatrix& m, const FieldSpec& f);

}  // namespace polynet

#endif  // POLYNET_FIELD_HPP
