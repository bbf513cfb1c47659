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

#ifndef POLYNET_POLYMATROID_HPP
#define POLYNET_POLYMATROID_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polynet {

/// Vector in Z_{>=0}^n. Component j (0-indexed) belongs to ground element
/// j+1; comparisons are lexicographic, which fixes the output order of every
/// set-valued operation in this module.
struct GroundVector {
  std::vector<int> comps;

  GroundVector() = default;
  explicit GroundVector(std::vector<int> c) : comps(std::move(c)) {}

  int size() const { return static_cast<int>(comps.size()); }
  int total() const;                       // |u|
  int sum_over(uint32_t mask) const;       // |u(A)|, bit j = element j+1
  uint32_t support() const;                // (u)_{>0} as a bitmask

  bool operator==(const GroundVector&) const = default;
  auto operator<=>(const GroundVector&) const = default;
};

GroundVector join_max(const GroundVector& u, const GroundVector& v);  // u v
bool componentwise_leq(const GroundVector& u, const GroundVector& v);
bool componentwise_lt(const GroundVector& u, const GroundVector& v);

/// Rank function over all subsets of the ground set, stored densely:
/// values[mask] with bit j-1 set iff element j is in the subset.
struct RankTable {
  int n = 0;
  std::vector<int> values;

  RankTable() = default;
  RankTable(int n_, std::vector<int> values_);

  int rank(uint32_t mask) const { return values[mask]; }
  int singleton_rank(int elem) const { return values[uint32_t(1) << (elem - 1)]; }
  uint32_t full_mask() const { return (uint32_t(1) << n) - 1; }

  bool operator==(const RankTable&) const = default;
};

struct AxiomCheck {
  bool ok = true;
  std::string axiom;       // "normalization" | "monotonicity" | "submodularity"
  uint32_t witness_a = 0;  // offending subsets
  uint32_t witness_b = 0;
};

/// Verifies that the table is monotone, submodular, and zero on the empty
/// set. On failure the first violated axiom is reported with witnesses.
AxiomCheck check_rank_axioms(const RankTable& t);

/// True iff |u(A)| <= rank(A) for every subset A.
bool membership(const GroundVector& u, const RankTable& t);

/// All members, sorted lexicographically. The table must pass the axioms.
/// Ground sets above 16 elements are refused unless allow_large is set;
/// member counts grow quickly up there and callers must opt in.
std::vector<GroundVector> enumerate_members(const RankTable& t,
                                            bool allow_large = false);

/// A discrete polymatroid given by a validated rank table. The member set is
/// materialized lazily and shared by the set-valued queries.
class DiscretePolymatroid {
 public:
  explicit DiscretePolymatroid(RankTable table);  // throws if axioms fail

  int n() const { return table_.n; }
  const RankTable& rank_table() const { return table_; }

  const std::vector<GroundVector>& members() const;  // lazy, n <= 16
  bool contains(const GroundVector& u) const;

 private:
  RankTable table_;
  mutable std::vector<GroundVector> members_;
  mutable std::vector<uint64_t> member_keys_;  // packed, sorted
  mutable bool materialized_ = false;
};

/// Maximal members under the componentwise order. All share the same |u|.
std::vector<GroundVector> basis_vectors(const DiscretePolymatroid& d);

int rank_of(const DiscretePolymatroid& d);  // |u| of any basis vector
int rho_max(const RankTable& t);            // max singleton rank

/// Vectors inside the singleton-rank box that are not members.
std::vector<GroundVector> excluded_vectors(const DiscretePolymatroid& d);

/// Excluded vectors whose i-th component is 1 (i is 1-based).
std::vector<GroundVector> d_i_vectors(const DiscretePolymatroid& d, int i);

/// Minimal excluded vectors through i: u is excluded, u - e_i is a member,
/// no smaller vector and no smaller support witnesses the exclusion.
std::vector<GroundVector> c_i_vectors(const DiscretePolymatroid& d, int i);

/// Membership test for c_i_vectors(d, i) that avoids materializing members.
bool c_i_contains(const DiscretePolymatroid& d, int i, const GroundVector& u);

/// Members whose non-zero components all equal rho_max, with supports that
/// are maximal among all such members.
std::vector<GroundVector> r_vectors(const DiscretePolymatroid& d);

bool r_contains(const DiscretePolymatroid& d, const GroundVector& u);

/// Multiplies a matroid rank table by k >= 1. The input must satisfy the
/// rank axioms together with r(X) <= |X|.
RankTable scale_rank(const RankTable& r, int k);

}  // namespace polynet

#endif  // POLYNET_POLYMATROID_HPP
