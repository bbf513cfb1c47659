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

#include "polynet/representation.hpp"

#include <algorithm>
#include <stdexcept>

namespace polynet {

namespace {

// Incremental echelon basis of a set of columns; rows are reduced vectors
// with a recorded pivot position.
class SpanBasis {
 public:
  SpanBasis(int dim, const FieldSpec& f) : dim_(dim), f_(f) {}

  int rank() const { return static_cast<int>(rows_.size()); }

  // Adds one column; returns true when the rank grew.
  bool add(std::vector<int> v) {
    for (const auto& [pivot, row] : rows_) {
      if (v[pivot] != 0) {
        const int factor = f_.mul(v[pivot], f_.inv(row[pivot]));
        for (int i = pivot; i < dim_; ++i) v[i] = f_.sub(v[i], f_.mul(factor, row[i]));
      }
    }
    for (int i = 0; i < dim_; ++i) {
      if (v[i] != 0) {
        rows_.emplace_back(i, std::move(v));
        std::sort(rows_.begin(), rows_.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return true;
      }
    }
    return false;
  }

  void add_matrix(const FqMatrix& m) {
    for (int c = 0; c < m.cols(); ++c) add(m.column(c));
  }

 private:
  int dim_;
  FieldSpec f_;
  std::vector<std::pair<int, std::vector<int>>> rows_;
};

}  // namespace

void validate_representation(const Representation& rep) {
  for (const auto& m : rep.matrices) {
    if (m.rows() != rep.rows && m.cols() > 0) {
      throw std::invalid_argument("representation: matrix row count mismatch");
    }
    for (int e : m.entries()) {
      if (e < 0 || e >= rep.field.p) {
        throw std::invalid_argument("representation: entry outside the field");
      }
    }
  }
}

bool verify_representation(const Representation& rep, const RankTable& t) {
  if (static_cast<int>(rep.matrices.size()) != t.n) {
    throw std::invalid_argument("verify_representation: matrix count != ground size");
  }
  validate_representation(rep);
  return rank_table_from_matrices(rep) == t;
}

RankTable rank_table_from_matrices(const Representation& rep) {
  validate_representation(rep);
  const int n = static_cast<int>(rep.matrices.size());
  if (n > 20) {
    throw std::domain_error("rank_table_from_matrices: ground set larger than 20");
  }
  RankTable out(n, std::vector<int>(size_t(1) << n, 0));
  // Depth-first over include/exclude per element, extending one shared
  // echelon state; every subset is visited once with incremental cost.
  auto walk = [&](auto&& self, int elem, uint32_t mask, const SpanBasis& basis) -> void {
    if (elem == n) {
      out.values[mask] = basis.rank();
      return;
    }
    self(self, elem + 1, mask, basis);
    SpanBasis extended = basis;
    extended.add_matrix(rep.matrices[elem]);
    self(self, elem + 1, mask | (uint32_t(1) << elem), extended);
  };
  walk(walk, 0, 0, SpanBasis(rep.rows, rep.field));
  return out;
}

Representation normalize_input_basis(const Representation& rep, int m, int k) {
  validate_representation(rep);
  if (m < 1 || m > static_cast<int>(rep.matrices.size())) {
    throw std::invalid_argument("normalize_input_basis: m out of range");
  }
  std::vector<FqMatrix> head(rep.matrices.begin(), rep.matrices.begin() + m);
  const FqMatrix b = hconcat(head);
  if (b.rows() != k * m || b.cols() != k * m) {
    throw std::invalid_argument("normalize_input_basis: [A_1 .. A_m] is not km x km");
  }
  const auto inv = invert(b, rep.field);
  if (!inv) {
    throw std::invalid_argument("normalize_input_basis: [A_1 .. A_m] is singular");
  }
  Representation out{rep.field, rep.rows, {}};
  out.matrices.reserve(rep.matrices.size());
  for (const auto& a : rep.matrices) {
    out.matrices.push_back(mat_mul(*inv, a, rep.field));
  }
  return out;
}

namespace {

// All d-dimensional subspaces of GF(q)^r as reduced column echelon matrices,
// enumerated in a fixed order: pivot rows ascending, then free entries
// lexicographically. Each subspace appears exactly once.
std::vector<FqMatrix> subspaces_of_dimension(int d, int r, const FieldSpec& f) {
  std::vector<FqMatrix> out;
  if (d == 0) {
    out.emplace_back(r, 0);
    return out;
  }
  if (d > r) return out;
  std::vector<int> pivots(d);
  auto choose_pivots = [&](auto&& self, int idx, int start) -> void {
    if (idx == d) {
      // free positions: below a pivot, not on another pivot row
      std::vector<std::pair<int, int>> free_pos;
      for (int j = 0; j < d; ++j) {
        for (int i = pivots[j] + 1; i < r; ++i) {
          if (std::find(pivots.begin(), pivots.end(), i) == pivots.end()) {
            free_pos.emplace_back(i, j);
          }
        }
      }
      FqMatrix m(r, d);
      for (int j = 0; j < d; ++j) m.at(pivots[j], j) = 1;
      auto fill = [&](auto&& fill_self, size_t pos) -> void {
        if (pos == free_pos.size()) {
          out.push_back(m);
          return;
        }
        for (int v = 0; v < f.p; ++v) {
          m.at(free_pos[pos].first, free_pos[pos].second) = v;
          fill_self(fill_self, pos + 1);
        }
        m.at(free_pos[pos].first, free_pos[pos].second) = 0;
      };
      fill(fill, 0);
      return;
    }
    for (int p = start; p <= r - (d - idx); ++p) {
      pivots[idx] = p;
      self(self, idx + 1, p + 1);
    }
  };
  choose_pivots(choose_pivots, 0, 0);
  return out;
}

}  // namespace

std::optional<Representation> search_representation(const RankTable& t,
                                                    const FieldSpec& f,
                                                    int row_dim) {
  if (t.n > 6 || row_dim > 6 || f.p > 3) {
    throw std::domain_error("search_representation: limits are n <= 6, row_dim <= 6, q <= 3");
  }
  const AxiomCheck c = check_rank_axioms(t);
  if (!c.ok) throw std::invalid_argument("search_representation: table violates " + c.axiom);

  std::vector<std::vector<FqMatrix>> candidates(t.n);
  for (int i = 0; i < t.n; ++i) {
    candidates[i] = subspaces_of_dimension(t.values[uint32_t(1) << i], row_dim, f);
    if (candidates[i].empty()) return std::nullopt;
  }
  std::vector<FqMatrix> chosen;
  chosen.reserve(t.n);

  auto assign = [&](auto&& self, int elem) -> std::optional<Representation> {
    if (elem == t.n) {
      Representation rep{f, row_dim, chosen};
      return rep;
    }
    for (const auto& cand : candidates[elem]) {
      chosen.push_back(cand);
      // check every subset whose largest element is the one just placed
      bool ok = true;
      for (uint32_t rest = 0; rest < (uint32_t(1) << elem) && ok; ++rest) {
        const uint32_t mask = rest | (uint32_t(1) << elem);
        std::vector<FqMatrix> sel;
        for (int j = 0; j <= elem; ++j) {
          if (mask >> j & 1) sel.push_back(chosen[j]);
        }
        if (subspace_sum_dim(sel, f) != t.values[mask]) ok = false;
      }
      if (ok) {
        auto r = self(self, elem + 1);
        if (r) return r;
      }
      chosen.pop_back();
    }
    return std::nullopt;
  };
  return assign(assign, 0);
}

}  // namespace polynet
