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

#include "polynet/matroid.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "polynet/representation.hpp"

namespace polynet {

namespace {
constexpr int kMaxGround = 16;
}

Matroid Matroid::from_rank_table(RankTable t) {
  if (t.n > kMaxGround) throw std::invalid_argument("Matroid: ground set larger than 16");
  Matroid m;
  m.n_ = t.n;
  m.by_sets_ = false;
  m.rank_ = std::move(t);
  m.have_rank_ = true;
  return m;
}

Matroid Matroid::from_independent_sets(int n, std::vector<uint32_t> independent) {
  if (n < 0 || n > kMaxGround) {
    throw std::invalid_argument("Matroid: ground set size out of range");
  }
  Matroid m;
  m.n_ = n;
  m.by_sets_ = true;
  std::sort(independent.begin(), independent.end());
  independent.erase(std::unique(independent.begin(), independent.end()),
                    independent.end());
  for (uint32_t s : independent) {
    if (s >= (uint32_t(1) << n)) {
      throw std::invalid_argument("Matroid: independent set outside ground set");
    }
  }
  m.independent_ = std::move(independent);
  m.have_sets_ = true;
  return m;
}

const RankTable& Matroid::rank_table() const {
  if (!have_rank_) {
    // r(A) = max{|I| : I subset of A, I independent}
    std::vector<int> values(size_t(1) << n_, 0);
    std::vector<char> indep(size_t(1) << n_, 0);
    for (uint32_t s : independent_) indep[s] = 1;
    for (uint32_t mask = 1; mask < values.size(); ++mask) {
      if (indep[mask]) {
        values[mask] = std::popcount(mask);
        continue;
      }
      int best = 0;
      for (uint32_t m = mask; m != 0; m &= m - 1) {
        const uint32_t bit = m & (0u - m);
        best = std::max(best, values[mask & ~bit]);
      }
      values[mask] = best;
    }
    rank_ = RankTable(n_, std::move(values));
    have_rank_ = true;
  }
  return rank_;
}

const std::vector<uint32_t>& Matroid::independent_sets() const {
  if (!have_sets_) {
    const RankTable& t = rank_table();
    for (uint32_t mask = 0; mask < t.values.size(); ++mask) {
      if (t.values[mask] == std::popcount(mask)) independent_.push_back(mask);
    }
    have_sets_ = true;
  }
  return independent_;
}

MatroidCheck check_matroid(const Matroid& m) {
  if (m.presented_by_sets()) {
    const auto& sets = m.independent_sets();
    std::vector<char> indep(size_t(1) << m.n(), 0);
    for (uint32_t s : sets) indep[s] = 1;
    if (!indep[0]) return {false, "empty set not independent", 0, 0};
    for (uint32_t s : sets) {
      for (uint32_t rest = s; rest != 0; rest &= rest - 1) {
        const uint32_t bit = rest & (0u - rest);
        if (!indep[s & ~bit]) return {false, "not downward closed", s, s & ~bit};
      }
    }
    for (uint32_t u : sets) {
      for (uint32_t v : sets) {
        if (std::popcount(u) != std::popcount(v) + 1) continue;
        bool extended = false;
        for (uint32_t m2 = u & ~v; m2 != 0; m2 &= m2 - 1) {
          const uint32_t bit = m2 & (0u - m2);
          if (indep[v | bit]) {
            extended = true;
            break;
          }
        }
        if (!extended) return {false, "augmentation fails", u, v};
      }
    }
    return {};
  }
  const AxiomCheck c = check_rank_axioms(m.rank_table());
  if (!c.ok) return {false, c.axiom, c.witness_a, c.witness_b};
  const RankTable& t = m.rank_table();
  for (uint32_t mask = 0; mask < t.values.size(); ++mask) {
    if (t.values[mask] > std::popcount(mask)) {
      return {false, "rank exceeds cardinality", mask, mask};
    }
  }
  return {};
}

Matroid uniform_matroid(int k, int n) {
  if (k < 0 || k > n) throw std::invalid_argument("uniform_matroid: need 0 <= k <= n");
  std::vector<int> values(size_t(1) << n);
  for (uint32_t mask = 0; mask < values.size(); ++mask) {
    values[mask] = std::min(std::popcount(mask), k);
  }
  return Matroid::from_rank_table(RankTable(n, std::move(values)));
}

std::vector<uint32_t> circuits(const Matroid& m) {
  const RankTable& t = m.rank_table();
  std::vector<uint32_t> out;
  for (uint32_t mask = 1; mask < t.values.size(); ++mask) {
    if (t.values[mask] == std::popcount(mask)) continue;  // independent
    bool minimal = true;
    for (uint32_t m2 = mask; m2 != 0 && minimal; m2 &= m2 - 1) {
      const uint32_t bit = m2 & (0u - m2);
      const uint32_t sub = mask & ~bit;
      if (t.values[sub] != std::popcount(sub)) minimal = false;
    }
    if (minimal) out.push_back(mask);
  }
  return out;
}

DiscretePolymatroid to_polymatroid(const Matroid& m) {
  return DiscretePolymatroid(m.rank_table());
}

bool verify_multilinear_representation(const std::vector<FqMatrix>& mats,
                                       const Matroid& m, int k,
                                       const FieldSpec& f) {
  if (static_cast<int>(mats.size()) != m.n()) {
    throw std::invalid_argument(
        "verify_multilinear_representation: matrix count does not match ground set");
  }
  int rows = 0;
  for (const auto& a : mats) rows = std::max(rows, a.rows());
  Representation rep{f, rows, mats};
  const RankTable got = rank_table_from_matrices(rep);
  const RankTable& want = m.rank_table();
  for (uint32_t mask = 0; mask < got.values.size(); ++mask) {
    if (got.values[mask] != k * want.values[mask]) return false;
  }
  return true;
}

}  // namespace polynet
