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

#include "polynet/polymatroid.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace polynet {

namespace {

constexpr int kMaxGround = 20;       // dense tables stay affordable up to here
constexpr int kMaxEnumGround = 16;   // member enumeration beyond this is refused

// Members pack into 4 bits per component whenever every singleton rank is
// below 16, which holds for everything this library enumerates.
uint64_t pack_key(const GroundVector& u) {
  uint64_t key = 0;
  for (int j = 0; j < u.size(); ++j) key |= uint64_t(u.comps[j]) << (4 * j);
  return key;
}

void require_axioms(const RankTable& t, const char* who) {
  const AxiomCheck c = check_rank_axioms(t);
  if (!c.ok) {
    throw std::invalid_argument(std::string(who) + ": rank table violates " + c.axiom);
  }
}

}  // namespace

int GroundVector::total() const {
  int s = 0;
  for (int c : comps) s += c;
  return s;
}

int GroundVector::sum_over(uint32_t mask) const {
  int s = 0;
  while (mask != 0) {
    const int j = std::countr_zero(mask);
    s += comps[j];
    mask &= mask - 1;
  }
  return s;
}

uint32_t GroundVector::support() const {
  uint32_t m = 0;
  for (int j = 0; j < size(); ++j) {
    if (comps[j] > 0) m |= uint32_t(1) << j;
  }
  return m;
}

GroundVector join_max(const GroundVector& u, const GroundVector& v) {
  if (u.size() != v.size()) throw std::invalid_argument("join_max: length mismatch");
  GroundVector w(u.comps);
  for (int j = 0; j < v.size(); ++j) w.comps[j] = std::max(w.comps[j], v.comps[j]);
  return w;
}

bool componentwise_leq(const GroundVector& u, const GroundVector& v) {
  if (u.size() != v.size()) throw std::invalid_argument("componentwise_leq: length mismatch");
  for (int j = 0; j < u.size(); ++j) {
    if (u.comps[j] > v.comps[j]) return false;
  }
  return true;
}

bool componentwise_lt(const GroundVector& u, const GroundVector& v) {
  return u != v && componentwise_leq(u, v);
}

RankTable::RankTable(int n_, std::vector<int> values_)
    : n(n_), values(std::move(values_)) {
  if (n < 0 || n > kMaxGround) {
    throw std::invalid_argument("RankTable: ground-set size out of range");
  }
  if (values.size() != (size_t(1) << n)) {
    throw std::invalid_argument("RankTable: expected 2^n entries");
  }
}

AxiomCheck check_rank_axioms(const RankTable& t) {
  if (t.values.size() != (size_t(1) << t.n)) {
    throw std::invalid_argument("check_rank_axioms: entry count is not 2^n");
  }
  if (t.values[0] != 0) return {false, "normalization", 0, 0};
  const uint32_t full = t.full_mask();
  const int* v = t.values.data();
  for (uint32_t a = 0; a <= full && t.n > 0; ++a) {
    const uint32_t rest = full & ~a;
    for (uint32_t mi = rest; mi != 0; mi &= mi - 1) {
      const uint32_t bi = mi & (0u - mi);
      if (v[a] > v[a | bi]) return {false, "monotonicity", a, a | bi};
      // Local diminishing-returns form; equivalent to full submodularity.
      for (uint32_t mj = mi & (mi - 1); mj != 0; mj &= mj - 1) {
        const uint32_t bj = mj & (0u - mj);
        if (v[a | bi] + v[a | bj] < v[a | bi | bj] + v[a]) {
          return {false, "submodularity", a | bi, a | bj};
        }
      }
    }
  }
  return {};
}

bool membership(const GroundVector& u, const RankTable& t) {
  if (u.size() != t.n) throw std::invalid_argument("membership: length mismatch");
  for (int j = 0; j < t.n; ++j) {
    if (u.comps[j] < 0) return false;
  }
  const uint32_t full = t.full_mask();
  for (uint32_t a = 1; a <= full && t.n > 0; ++a) {
    if (u.sum_over(a) > t.values[a]) return false;
  }
  return true;
}

std::vector<GroundVector> enumerate_members(const RankTable& t, bool allow_large) {
  require_axioms(t, "enumerate_members");
  if (t.n > kMaxEnumGround && !allow_large) {
    throw std::domain_error(
        "enumerate_members: ground set larger than 16 (pass allow_large to force)");
  }
  std::vector<GroundVector> out;
  if (t.n == 0) {
    out.emplace_back(std::vector<int>{});
    return out;
  }
  // Peel off one element at a time: fixing u_j = a contracts the table on the
  // remaining elements to rho'(A) = min(rho(A), rho(A + {j}) - a). A partial
  // assignment extends to a member iff the contracted table stays
  // non-negative, so the walk below touches exactly the members.
  std::vector<int> prefix(t.n, 0);
  std::vector<std::vector<int>> stack(t.n + 1);
  stack[0] = t.values;

  auto descend = [&](auto&& self, int level) -> void {
    if (level == t.n) {
      out.emplace_back(prefix);
      return;
    }
    const std::vector<int>& resid = stack[level];
    const size_t half = size_t(1) << (t.n - level - 1);
    std::vector<int>& next = stack[level + 1];
    next.assign(half, 0);
    for (int a = 0;; ++a) {
      bool feasible = true;
      for (size_t b = 0; b < half && feasible; ++b) {
        const int with = resid[(b << 1) | 1] - a;
        const int without = resid[b << 1];
        next[b] = std::min(without, with);
        if (next[b] < 0) feasible = false;
      }
      if (!feasible) break;  // larger a only shrinks the residual table
      prefix[level] = a;
      self(self, level + 1);
    }
    prefix[level] = 0;
  };
  descend(descend, 0);
  return out;
}

DiscretePolymatroid::DiscretePolymatroid(RankTable table) : table_(std::move(table)) {
  require_axioms(table_, "DiscretePolymatroid");
}

const std::vector<GroundVector>& DiscretePolymatroid::members() const {
  if (!materialized_) {
    members_ = enumerate_members(table_);
    member_keys_.reserve(members_.size());
    for (const auto& u : members_) member_keys_.push_back(pack_key(u));
    std::sort(member_keys_.begin(), member_keys_.end());
    materialized_ = true;
  }
  return members_;
}

bool DiscretePolymatroid::contains(const GroundVector& u) const {
  if (u.size() != table_.n) {
    throw std::invalid_argument("DiscretePolymatroid::contains: length mismatch");
  }
  if (materialized_) {
    for (int j = 0; j < u.size(); ++j) {
      if (u.comps[j] < 0 || u.comps[j] > 15) return false;
    }
    return std::binary_search(member_keys_.begin(), member_keys_.end(), pack_key(u));
  }
  return membership(u, table_);
}

std::vector<GroundVector> basis_vectors(const DiscretePolymatroid& d) {
  const auto& ms = d.members();
  std::vector<GroundVector> out;
  for (const auto& u : ms) {
    bool maximal = true;
    GroundVector up = u;
    for (int j = 0; j < d.n() && maximal; ++j) {
      ++up.comps[j];
      if (d.contains(up)) maximal = false;
      --up.comps[j];
    }
    if (maximal) out.push_back(u);
  }
  return out;  // members() is sorted already
}

int rank_of(const DiscretePolymatroid& d) {
  int best = 0;
  for (const auto& u : d.members()) best = std::max(best, u.total());
  return best;
}

int rho_max(const RankTable& t) {
  int best = 0;
  for (int i = 1; i <= t.n; ++i) best = std::max(best, t.singleton_rank(i));
  return best;
}

namespace {

// Walks the box prod [0, rho({i})] in lexicographic order.
template <typename Fn>
void for_each_box_vector(const RankTable& t, Fn&& fn) {
  std::vector<int> caps(t.n);
  uint64_t box = 1;
  for (int i = 0; i < t.n; ++i) {
    caps[i] = t.values[uint32_t(1) << i];
    box *= uint64_t(caps[i]) + 1;
    if (box > (uint64_t(1) << 27)) {
      throw std::domain_error("excluded-vector box is too large to walk");
    }
  }
  GroundVector u(std::vector<int>(t.n, 0));
  while (true) {
    fn(u);
    int j = t.n - 1;
    while (j >= 0 && u.comps[j] == caps[j]) u.comps[j--] = 0;
    if (j < 0) break;
    ++u.comps[j];
  }
}

// Largest box vector supported inside `support_mask` with u_i forced to 1.
GroundVector max_on_support(const RankTable& t, uint32_t support_mask, int i) {
  GroundVector u(std::vector<int>(t.n, 0));
  for (int j = 0; j < t.n; ++j) {
    if (support_mask >> j & 1) u.comps[j] = t.values[uint32_t(1) << j];
  }
  u.comps[i - 1] = 1;
  return u;
}

}  // namespace

std::vector<GroundVector> excluded_vectors(const DiscretePolymatroid& d) {
  d.members();
  std::vector<GroundVector> out;
  for_each_box_vector(d.rank_table(), [&](const GroundVector& u) {
    if (!d.contains(u)) out.push_back(u);
  });
  return out;
}

std::vector<GroundVector> d_i_vectors(const DiscretePolymatroid& d, int i) {
  if (i < 1 || i > d.n()) throw std::invalid_argument("d_i_vectors: element out of range");
  d.members();
  std::vector<GroundVector> out;
  for_each_box_vector(d.rank_table(), [&](const GroundVector& u) {
    if (u.comps[i - 1] == 1 && !d.contains(u)) out.push_back(u);
  });
  return out;
}

namespace {

// Shared by c_i_vectors and c_i_contains. `member` must answer membership for
// box vectors. The three defining conditions reduce to local tests because the
// excluded vectors are upward closed inside the box:
//   minimality over <        <=>  every immediate predecessor is a member
//   support minimality       <=>  no maximal box vector on a strictly smaller
//                                 support through i is excluded
template <typename MemberFn>
bool c_i_test(const RankTable& t, int i, const GroundVector& u, MemberFn&& member_fn) {
  const int idx = i - 1;
  if (u.comps[idx] != 1) return false;
  for (int j = 0; j < t.n; ++j) {
    if (u.comps[j] < 0 || u.comps[j] > t.values[uint32_t(1) << j]) return false;
  }
  if (member_fn(u)) return false;
  GroundVector pred = u;
  for (int j = 0; j < t.n; ++j) {
    if (u.comps[j] == 0) continue;
    --pred.comps[j];
    const bool ok = member_fn(pred);
    ++pred.comps[j];
    if (!ok) return false;
  }
  const uint32_t supp = u.support();
  for (uint32_t m = supp; m != 0; m &= m - 1) {
    const uint32_t bit = m & (0u - m);
    if (bit == (uint32_t(1) << idx)) continue;
    if (!member_fn(max_on_support(t, supp & ~bit, i))) return false;
  }
  return true;
}

}  // namespace

std::vector<GroundVector> c_i_vectors(const DiscretePolymatroid& d, int i) {
  if (i < 1 || i > d.n()) throw std::invalid_argument("c_i_vectors: element out of range");
  const RankTable& t = d.rank_table();
  auto member_fn = [&](const GroundVector& v) { return d.contains(v); };
  std::vector<GroundVector> out;
  // Candidates are members + e_i; condition 1 already holds for them.
  for (const auto& w : d.members()) {
    if (w.comps[i - 1] != 0) continue;
    GroundVector u = w;
    u.comps[i - 1] = 1;
    if (c_i_test(t, i, u, member_fn)) out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool c_i_contains(const DiscretePolymatroid& d, int i, const GroundVector& u) {
  if (i < 1 || i > d.n()) throw std::invalid_argument("c_i_contains: element out of range");
  if (u.size() != d.n()) throw std::invalid_argument("c_i_contains: length mismatch");
  const RankTable& t = d.rank_table();
  return c_i_test(t, i, u, [&](const GroundVector& v) { return membership(v, t); });
}

std::vector<GroundVector> r_vectors(const DiscretePolymatroid& d) {
  const RankTable& t = d.rank_table();
  if (t.n > 16) throw std::domain_error("r_vectors: ground set larger than 16");
  const int rm = rho_max(t);
  const uint32_t full = t.full_mask();
  std::vector<uint32_t> member_supports;
  for (uint32_t s = 0; s <= full; ++s) {
    GroundVector u(std::vector<int>(t.n, 0));
    for (int j = 0; j < t.n; ++j) {
      if (s >> j & 1) u.comps[j] = rm;
    }
    if (membership(u, t)) member_supports.push_back(s);
  }
  std::vector<GroundVector> out;
  for (uint32_t s : member_supports) {
    bool maximal = true;
    for (uint32_t s2 : member_supports) {
      if (s2 != s && (s & s2) == s) {
        maximal = false;
        break;
      }
    }
    if (!maximal) continue;
    GroundVector u(std::vector<int>(t.n, 0));
    for (int j = 0; j < t.n; ++j) {
      if (s >> j & 1) u.comps[j] = rm;
    }
    out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool r_contains(const DiscretePolymatroid& d, const GroundVector& u) {
  if (u.size() != d.n()) throw std::invalid_argument("r_contains: length mismatch");
  const auto rs = r_vectors(d);
  return std::binary_search(rs.begin(), rs.end(), u);
}

RankTable scale_rank(const RankTable& r, int k) {
  if (k < 1) throw std::invalid_argument("scale_rank: k must be positive");
  const AxiomCheck c = check_rank_axioms(r);
  if (!c.ok) throw std::invalid_argument("scale_rank: input violates " + c.axiom);
  for (uint32_t m = 0; m < r.values.size(); ++m) {
    if (r.values[m] > std::popcount(m)) {
      throw std::invalid_argument("scale_rank: input is not a matroid rank function");
    }
  }
  RankTable out = r;
  for (int& v : out.values) v *= k;
  return out;
}

}  // namespace polynet
