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

#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "polynet/fixtures.hpp"
#include "polynet/matroid.hpp"
#include "polynet/polymatroid.hpp"
#include "polynet/representation.hpp"

using namespace polynet;
using oracles::gv;

namespace {

std::vector<GroundVector> gvs(std::vector<std::vector<int>> vs) {
  std::vector<GroundVector> out;
  for (auto& v : vs) out.emplace_back(std::move(v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("ground vector operators") {
  const GroundVector u = gv({1, 2, 0});
  const GroundVector v = gv({0, 3, 1});
  CHECK(u.total() == 3);
  CHECK(u.sum_over(0b011) == 3);
  CHECK(u.sum_over(0b100) == 0);
  CHECK(u.support() == 0b011);
  CHECK(join_max(u, v) == gv({1, 3, 1}));
  CHECK(componentwise_leq(gv({1, 2, 0}), gv({1, 2, 1})));
  CHECK(componentwise_lt(gv({1, 2, 0}), gv({1, 2, 1})));
  CHECK(!componentwise_lt(u, u));
  CHECK(!componentwise_leq(v, u));
}

TEST_CASE("rank axioms accept the sample tables") {
  CHECK(check_rank_axioms(fixtures::sample_table_n2()).ok);
  CHECK(check_rank_axioms(fixtures::sample_table_n3()).ok);
  CHECK(check_rank_axioms(fixtures::doubled_u24_table()).ok);
}

TEST_CASE("rank axioms report violations with witnesses") {
  SUBCASE("nonzero empty set") {
    const auto c = check_rank_axioms(RankTable(1, {1, 1}));
    CHECK(!c.ok);
    CHECK(c.axiom == "normalization");
  }
  SUBCASE("monotonicity") {
    const RankTable t(2, {0, 2, 1, 1});
    const auto c = check_rank_axioms(t);
    CHECK(!c.ok);
    CHECK(c.axiom == "monotonicity");
    CHECK(t.values[c.witness_a] > t.values[c.witness_b]);
  }
  SUBCASE("submodularity") {
    const auto c = check_rank_axioms(RankTable(2, {0, 1, 1, 3}));
    CHECK(!c.ok);
    CHECK(c.axiom == "submodularity");
  }
  SUBCASE("wrong entry count") {
    RankTable t;
    t.n = 2;
    t.values = {0, 1, 1};
    CHECK_THROWS_AS(check_rank_axioms(t), std::invalid_argument);
  }
}

TEST_CASE("membership") {
  const auto t3 = fixtures::sample_table_n3();
  CHECK(membership(gv({1, 2, 1}), t3));
  CHECK(!membership(gv({1, 1, 2}), t3));
  CHECK(membership(gv({0, 5}), fixtures::sample_table_n2()));
  CHECK(!membership(gv({2, 2, 2, 2}), fixtures::doubled_u24_table()));
  CHECK_THROWS_AS(membership(gv({1, 1}), t3), std::invalid_argument);
}

TEST_CASE("member enumeration matches the hand lists") {
  SUBCASE("three-element sample: the full fifteen") {
    const auto got = enumerate_members(fixtures::sample_table_n3());
    const auto want = gvs({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0},
                           {0, 1, 1}, {1, 0, 1}, {0, 2, 0}, {0, 0, 2}, {0, 1, 2},
                           {0, 2, 1}, {1, 1, 1}, {1, 2, 0}, {0, 2, 2}, {1, 2, 1}});
    CHECK(got == want);
  }
  SUBCASE("two-element sample: count via the box oracle") {
    const auto got = enumerate_members(fixtures::sample_table_n2());
    CHECK(got.size() == 18);
    CHECK(got == oracles::members(fixtures::sample_table_n2()));
  }
  SUBCASE("all-zero table") {
    const auto got = enumerate_members(RankTable(2, {0, 0, 0, 0}));
    CHECK(got == gvs({{0, 0}}));
  }
  SUBCASE("output is sorted and duplicate free") {
    const auto got = enumerate_members(fixtures::doubled_u24_table());
    CHECK(std::is_sorted(got.begin(), got.end()));
    CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());
  }
}

TEST_CASE("basis vectors") {
  const DiscretePolymatroid d2(fixtures::sample_table_n2());
  CHECK(basis_vectors(d2) == gvs({{0, 5}, {1, 4}, {2, 3}, {3, 2}}));
  const DiscretePolymatroid d3(fixtures::sample_table_n3());
  CHECK(basis_vectors(d3) == gvs({{0, 2, 2}, {1, 2, 1}}));
  const DiscretePolymatroid d4(fixtures::doubled_u24_table());
  CHECK(basis_vectors(d4) ==
        gvs({{0, 0, 2, 2}, {0, 1, 1, 2}, {0, 1, 2, 1}, {0, 2, 0, 2}, {0, 2, 1, 1},
             {0, 2, 2, 0}, {1, 0, 1, 2}, {1, 0, 2, 1}, {1, 1, 0, 2}, {1, 1, 1, 1},
             {1, 1, 2, 0}, {1, 2, 0, 1}, {1, 2, 1, 0}, {2, 0, 0, 2}, {2, 0, 1, 1},
             {2, 0, 2, 0}, {2, 1, 0, 1}, {2, 1, 1, 0}, {2, 2, 0, 0}}));
}

TEST_CASE("rank and rho_max") {
  const DiscretePolymatroid d2(fixtures::sample_table_n2());
  CHECK(rank_of(d2) == 5);
  CHECK(rho_max(d2.rank_table()) == 5);
  const DiscretePolymatroid d4(fixtures::doubled_u24_table());
  CHECK(rank_of(d4) == 4);
  CHECK(rho_max(d4.rank_table()) == 2);
  CHECK(rho_max(to_polymatroid(fixtures::u24_matroid()).rank_table()) == 1);
}

TEST_CASE("all basis vectors share the component sum") {
  for (const auto& t : oracles::all_small_tables(3, 2)) {
    const DiscretePolymatroid d(t);
    const auto bs = basis_vectors(d);
    REQUIRE(!bs.empty());
    for (const auto& b : bs) CHECK(b.total() == bs.front().total());
  }
}

TEST_CASE("excluded vectors") {
  SUBCASE("two-element sample: grid minus members") {
    const DiscretePolymatroid d(fixtures::sample_table_n2());
    CHECK(excluded_vectors(d) ==
          gvs({{1, 5}, {2, 4}, {2, 5}, {3, 3}, {3, 4}, {3, 5}}));
  }
  SUBCASE("modular table has no excluded vectors") {
    // rank(A) = sum of singleton ranks over A
    const RankTable t(3, {0, 1, 2, 3, 1, 2, 3, 4});
    const DiscretePolymatroid d(t);
    CHECK(excluded_vectors(d).empty());
  }
}

TEST_CASE("d_i of the doubled uniform table") {
  const DiscretePolymatroid d(fixtures::doubled_u24_table());
  CHECK(d_i_vectors(d, 1) ==
        gvs({{1, 0, 2, 2}, {1, 1, 1, 2}, {1, 1, 2, 1}, {1, 1, 2, 2}, {1, 2, 0, 2},
             {1, 2, 1, 1}, {1, 2, 1, 2}, {1, 2, 2, 0}, {1, 2, 2, 1}, {1, 2, 2, 2}}));
  int total = 0;
  for (int i = 1; i <= 4; ++i) total += static_cast<int>(d_i_vectors(d, i).size());
  CHECK(total == 40);
  CHECK_THROWS_AS(d_i_vectors(d, 0), std::invalid_argument);
  CHECK_THROWS_AS(d_i_vectors(d, 5), std::invalid_argument);
}

TEST_CASE("c_i of the doubled uniform table") {
  const DiscretePolymatroid d(fixtures::doubled_u24_table());
  CHECK(c_i_vectors(d, 1) == gvs({{1, 0, 2, 2}, {1, 2, 0, 2}, {1, 2, 2, 0}}));
  CHECK(c_i_vectors(d, 2) == gvs({{0, 1, 2, 2}, {2, 1, 0, 2}, {2, 1, 2, 0}}));
  CHECK(c_i_vectors(d, 3) == gvs({{2, 2, 1, 0}, {0, 2, 1, 2}, {2, 0, 1, 2}}));
  CHECK(c_i_vectors(d, 4) == gvs({{2, 2, 0, 1}, {0, 2, 2, 1}, {2, 0, 2, 1}}));
}

TEST_CASE("c_i of the uniform matroid polymatroid") {
  const DiscretePolymatroid d = to_polymatroid(fixtures::u24_matroid());
  // circuits of the uniform matroid through element 1 are the 3-subsets
  CHECK(c_i_vectors(d, 1) == gvs({{1, 1, 1, 0}, {1, 1, 0, 1}, {1, 0, 1, 1}}));
}

TEST_CASE("c_i agrees with the literal-definition oracle on all small tables") {
  for (const auto& t : oracles::all_small_tables(3, 2)) {
    const DiscretePolymatroid d(t);
    for (int i = 1; i <= 3; ++i) {
      CHECK(c_i_vectors(d, i) == oracles::c_i(t, i));
    }
  }
}

TEST_CASE("c_i containment fast path agrees with the list") {
  const DiscretePolymatroid d(fixtures::doubled_u24_table());
  for (int i = 1; i <= 4; ++i) {
    const auto list = c_i_vectors(d, i);
    const std::set<GroundVector> in_list(list.begin(), list.end());
    oracles::for_each_in_box(d.rank_table(), [&](const GroundVector& u) {
      CHECK(c_i_contains(d, i, u) == (in_list.count(u) > 0));
    });
  }
}

TEST_CASE("r vectors") {
  SUBCASE("doubled uniform table") {
    const DiscretePolymatroid d(fixtures::doubled_u24_table());
    CHECK(r_vectors(d) == gvs({{0, 0, 2, 2}, {0, 2, 0, 2}, {0, 2, 2, 0},
                               {2, 0, 0, 2}, {2, 0, 2, 0}, {2, 2, 0, 0}}));
  }
  SUBCASE("on a matroid polymatroid r equals the basis set") {
    const DiscretePolymatroid d = to_polymatroid(fixtures::u24_matroid());
    CHECK(r_vectors(d) == basis_vectors(d));
  }
  SUBCASE("the M-network polymatroid contains the four-source seed") {
    const DiscretePolymatroid d(rank_table_from_matrices(fixtures::m_network_rep12()));
    CHECK(r_contains(d, gv({2, 2, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0})));
  }
  SUBCASE("literal oracle agreement") {
    for (const auto& t : oracles::all_small_tables(3, 2)) {
      CHECK(r_vectors(DiscretePolymatroid(t)) == oracles::r_set(t));
    }
  }
}

TEST_CASE("scale_rank") {
  const auto u24 = fixtures::u24_matroid().rank_table();
  CHECK(scale_rank(u24, 2) == fixtures::doubled_u24_table());
  CHECK(scale_rank(u24, 1) == u24);
  const auto tripled = scale_rank(u24, 3);
  CHECK(tripled.singleton_rank(1) == 3);
  CHECK(tripled.rank(0b0011) == 6);
  CHECK(tripled.rank(0b0111) == 6);
  CHECK_THROWS_AS(scale_rank(u24, 0), std::invalid_argument);
  CHECK_THROWS_AS(scale_rank(fixtures::sample_table_n2(), 2), std::invalid_argument);
}

TEST_CASE("members are downward closed and satisfy the exchange property") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& t : oracles::all_small_tables(n, 2)) {
      const auto ms = enumerate_members(t);
      const std::set<GroundVector> mset(ms.begin(), ms.end());
      CHECK(ms == oracles::members(t));
      for (const auto& u : ms) {
        GroundVector dec = u;
        for (int j = 0; j < n; ++j) {
          if (u.comps[j] == 0) continue;
          --dec.comps[j];
          CHECK(mset.count(dec) == 1);
          ++dec.comps[j];
        }
        for (const auto& v : ms) {
          if (u.total() >= v.total()) continue;
          bool witness = false;
          for (const auto& w : ms) {
            if (componentwise_lt(u, w) && componentwise_leq(w, join_max(u, v))) {
              witness = true;
              break;
            }
          }
          CHECK(witness);
        }
      }
    }
  }
}

TEST_CASE("rank table is recovered from the member set") {
  for (const auto& t : oracles::all_small_tables(3, 2)) {
    const auto ms = enumerate_members(t);
    for (uint32_t mask = 0; mask < 8; ++mask) {
      CHECK(oracles::rank_from_members(ms, mask) == t.values[mask]);
    }
  }
}

TEST_CASE("set chain: c_i inside d_i inside excluded") {
  const DiscretePolymatroid d(fixtures::doubled_u24_table());
  const auto ex = excluded_vectors(d);
  const std::set<GroundVector> exset(ex.begin(), ex.end());
  for (int i = 1; i <= 4; ++i) {
    const auto di = d_i_vectors(d, i);
    const std::set<GroundVector> diset(di.begin(), di.end());
    for (const auto& u : di) CHECK(exset.count(u) == 1);
    for (const auto& u : c_i_vectors(d, i)) {
      CHECK(diset.count(u) == 1);
      GroundVector dec = u;
      --dec.comps[i - 1];
      CHECK(d.contains(dec));
    }
  }
}

TEST_CASE("enumeration beyond 16 elements requires an explicit opt-in") {
  RankTable t(17, std::vector<int>(size_t(1) << 17, 0));
  for (uint32_t m = 1; m < t.values.size(); ++m) t.values[m] = 1;
  CHECK_THROWS_AS(enumerate_members(t), std::domain_error);
  // rank-1 table: members are the zero vector and the unit vectors
  const auto ms = enumerate_members(t, /*allow_large=*/true);
  CHECK(ms.size() == 18);
}
