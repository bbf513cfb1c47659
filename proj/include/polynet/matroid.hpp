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

#ifndef POLYNET_MATROID_HPP
#define POLYNET_MATROID_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "polynet/field.hpp"
#include "polynet/polymatroid.hpp"

namespace polynet {

/// Matroid on ground set {1..n}, storable either by its independent sets
/// (as bitmasks) or by a rank table; the missing presentation is derived on
/// demand and the two round-trip.
class Matroid {
 public:
  static Matroid from_rank_table(RankTable t);
  static Matroid from_independent_sets(int n, std::vector<uint32_t> independent);

  int n() const { return n_; }
  bool presented_by_sets() const { return by_sets_; }
  const RankTable& rank_table() const;
  const std::vector<uint32_t>& independent_sets() const;  // sorted

 private:
  Matroid() = default;
  int n_ = 0;
  bool by_sets_ = false;
  mutable RankTable rank_;
  mutable std::vector<uint32_t> independent_;
  mutable bool have_rank_ = false;
  mutable bool have_sets_ = false;
};

struct MatroidCheck {
  bool ok = true;
  std::string axiom;  // which condition failed
  uint32_t witness_a = 0;
  uint32_t witness_b = 0;
};

/// Validates whichever presentation the matroid was given in: the three
/// independence axioms, or the rank axioms plus r(X) <= |X|.
MatroidCheck check_matroid(const Matroid& m);

/// Rank function min(|X|, k).
Matroid uniform_matroid(int k, int n);

/// Minimal dependent sets, sorted as bitmasks.
std::vector<uint32_t> circuits(const Matroid& m);

/// The discrete polymatroid with the same rank table; its members are the
/// 0/1 indicator vectors of the independent sets.
DiscretePolymatroid to_polymatroid(const Matroid& m);

/// True iff dim(sum of V_i over X) == k * r(X) for every subset X. With
/// k = 1 this is the ordinary representation test.
bool verify_multilinear_representation(const std::vector<FqMatrix>& mats,
                                       const Matroid& m, int k,
                                       const FieldSpec& f);

}  // namespace polynet

#endif  // POLYNET_MATROID_HPP
