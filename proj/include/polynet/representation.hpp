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

#ifndef POLYNET_REPRESENTATION_HPP
#define POLYNET_REPRESENTATION_HPP

#include <optional>
#include <vector>

#include "polynet/field.hpp"
#include "polynet/polymatroid.hpp"

namespace polynet {

/// Subspace list over GF(p): matrix i's columns span V_i. All matrices share
/// the row count; zero-column matrices stand for the zero subspace, which
/// keeps the index aligned with the ground set.
struct Representation {
  FieldSpec field;
  int rows = 0;
  std::vector<FqMatrix> matrices;
};

/// Throws if the matrices disagree with `rows` or carry entries outside the
/// field.
void validate_representation(const Representation& rep);

/// True iff dim(sum over X of V_i) == rank(X) for all 2^n subsets.
bool verify_representation(const Representation& rep, const RankTable& t);

/// The rank table of the subspace arrangement. Always passes the rank
/// axioms: dimension of subspace sums is monotone and submodular.
RankTable rank_table_from_matrices(const Representation& rep);

/// Basis change A_i' = B^{-1} A_i with B = [A_1 ... A_m]. Requires B to be a
/// km x km invertible matrix; afterwards [A_1' ... A_m'] is the identity and
/// the rank table is unchanged.
Representation normalize_input_basis(const Representation& rep, int m, int k);

/// Exhaustive search for a representation of `t` inside GF(q)^row_dim,
/// assigning each element a subspace of dimension rank({i}) in canonical
/// column-echelon order. Limits: n <= 6, row_dim <= 6, q <= 3.
std::optional<Representation> search_representation(const RankTable& t,
                                                    const FieldSpec& f,
                                                    int row_dim);

}  // namespace polynet

#endif  // POLYNET_REPRESENTATION_HPP
