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

#include <set>

#include "oracles.hpp"
#include "polynet/construct.hpp"
#include "polynet/fixtures.hpp"

using namespace polynet;
using oracles::gv;

TEST_CASE("scripted construction reproduces the doubled-U24 network") {
  const DiscretePolymatroid d(fixtures::doubled_u24_table());
  const auto result = construct(d, fixtures::doubled_u24_script());
  CHECK(result.network == fixtures::doubled_u24_network());
  CHECK(isomorphic(result.network, fixtures::doubled_u24_network()));
  CHECK(result.uncovered.empty());
  CHECK(result.transcript == fixtures::doubled_u24_script());
  CHECK(check_dpn(result.network, d.rank_table(), result.mapping).ok);
  const auto code = replay_check(result, fixtures::doubled_u24_rep());
  CHECK(code.k == 2);
  CHECK(verify_code(result.network, code).ok);
}

TEST_CASE("scripted construction reproduces the derived M-network") {
  const DiscretePolymatroid d(rank_table_from_matrices(fixtures::m_network_rep12()));
  const auto result = construct(d, fixtures::m_derived_script());
  CHECK(result.network == fixtures::m_derived_network());
  CHECK(isomorphic(result.network, fixtures::m_derived_network()));
  CHECK(check_dpn(result.network, d.rank_table(), result.mapping).ok);
  const auto code = replay_check(result, fixtures::m_network_rep12());
  CHECK(verify_code(result.network, code).ok);
  // the replayed code routes whole blocks: every relay edge carries the block
  // of its ground element
  const auto rep = fixtures::m_network_rep12();
  for (const auto& [edge, elem] : result.mapping.to_ground) {
    CHECK(code.encodings.at(edge) == rep.matrices[elem - 1]);
  }
}

TEST_CASE("free matroid: no relays, no sinks") {
  const DiscretePolymatroid d = to_polymatroid(uniform_matroid(2, 2));
  const auto result = construct(d);
  CHECK(result.network.inputs.size() == 2);
  CHECK(result.network.edges.empty());
  CHECK(result.network.demands.empty());
  CHECK(result.uncovered.empty());
  CHECK(check_dpn(result.network, d.rank_table(), result.mapping).ok);
  // replaying against the identity arrangement gives a trivial verified code
  Representation identity_rep{FieldSpec(2), 2,
                              {FqMatrix(2, 1, {1, 0}), FqMatrix(2, 1, {0, 1})}};
  const auto code = replay_check(result, identity_rep);
  CHECK(verify_code(result.network, code).ok);
}

TEST_CASE("default construction of the doubled-U24 table is discrete polymatroidal") {
  const DiscretePolymatroid d(fixtures::doubled_u24_table());
  const auto result = construct(d);
  CHECK(validate(result.network).ok);
  CHECK(check_dpn(result.network, d.rank_table(), result.mapping).ok);
  CHECK(result.uncovered.empty());
  // deterministic: same call, same network
  CHECK(construct(d).network == result.network);
}

TEST_CASE("step 3 round cap limits the sink count") {
  const DiscretePolymatroid d(fixtures::doubled_u24_table());
  const auto capped = construct(d, std::nullopt, 3);
  CHECK(capped.network.demands.size() == 3);
  const auto all = construct(d);
  CHECK(all.network.demands.size() >= capped.network.demands.size());
}

TEST_CASE("construction sweeps small polymatroids") {
  // Every valid table on up to three elements with singleton ranks <= 2:
  // the default construction must always be discrete polymatroidal.
  int built = 0;
  for (int n = 1; n <= 3; ++n) {
    for (const auto& t : oracles::all_small_tables(n, 2)) {
      if (rho_max(t) == 0) continue;
      const DiscretePolymatroid d(t);
      const auto result = construct(d, std::nullopt, 2);
      CHECK(validate(result.network).ok);
      CHECK(check_dpn(result.network, t, result.mapping).ok);
      for (const auto& demand : result.network.demands) {
        CHECK(demand.msg >= 1);
        CHECK(demand.msg <= result.network.message_count());
      }
      ++built;
    }
  }
  CHECK(built > 100);  // the sweep is not vacuous
}

TEST_CASE("script validation") {
  const DiscretePolymatroid d(fixtures::doubled_u24_table());
  SUBCASE("seed must come from the r set") {
    ChoiceScript s = fixtures::doubled_u24_script();
    s.step1 = gv({2, 1, 0, 0});
    CHECK_THROWS_AS(construct(d, s), std::invalid_argument);
  }
  SUBCASE("relay vector must be minimal excluded") {
    ChoiceScript s = fixtures::doubled_u24_script();
    s.step2[0].second = gv({2, 2, 2, 0});  // not in any c_i
    CHECK_THROWS_AS(construct(d, s), std::invalid_argument);
  }
  SUBCASE("relay feeders must already be covered") {
    ChoiceScript s = fixtures::doubled_u24_script();
    std::swap(s.step2[0], s.step2[1]);
    s.step2[0].second = gv({2, 0, 2, 1});  // leans on element 3 before it exists
    s.step2[0].first = 4;
    CHECK_THROWS_AS(construct(d, s), std::invalid_argument);
  }
  SUBCASE("sink demands must be source messages") {
    ChoiceScript s = fixtures::doubled_u24_script();
    s.step3.push_back({3, gv({2, 2, 1, 0})});
    CHECK_THROWS_AS(construct(d, s), std::invalid_argument);
  }
  SUBCASE("sink support must stay inside the covered set") {
    ChoiceScript s = fixtures::doubled_u24_script();
    s.step2.clear();  // elements 3 and 4 now stay uncovered
    s.step3 = {{2, gv({2, 1, 2, 0})}};
    CHECK_THROWS_AS(construct(d, s), std::invalid_argument);
  }
}

TEST_CASE("uncovered elements are reported") {
  const DiscretePolymatroid d(fixtures::doubled_u24_table());
  ChoiceScript s = fixtures::doubled_u24_script();
  s.step2.resize(1);  // stop after covering element 3
  s.step3 = {{2, gv({2, 1, 2, 0})}};
  const auto result = construct(d, s);
  CHECK(result.uncovered == std::vector<int>{4});
  CHECK(check_dpn(result.network, d.rank_table(), result.mapping).ok);
}

TEST_CASE("empty r set is rejected") {
  // A table whose only member is the zero vector still has the zero vector
  // in its r set, so construction seeds no sources but succeeds.
  const DiscretePolymatroid d(RankTable(2, {0, 0, 0, 0}));
  const auto result = construct(d);
  CHECK(result.network.inputs.empty());
  CHECK(result.network.nodes.empty());
}
