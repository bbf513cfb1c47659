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

#include "oracles.hpp"
#include "polynet/coding.hpp"
#include "polynet/construct.hpp"
#include "polynet/fixtures.hpp"

using namespace polynet;
using oracles::gv;

namespace {

// The code the relay construction carries on the doubled-U24 network: every
// edge forwards the block of its mapped ground element.
VectorLinearCode doubled_u24_code() {
  const ConstructionResult r =
      construct(DiscretePolymatroid(fixtures::doubled_u24_table()),
                fixtures::doubled_u24_script());
  return replay_check(r, fixtures::doubled_u24_rep());
}

}  // namespace

TEST_CASE("verify_code accepts the relay-construction code") {
  const auto code = doubled_u24_code();
  CHECK(verify_code(fixtures::doubled_u24_network(), code).ok);
  // the relay edges carry the third and fourth blocks of the arrangement
  CHECK(code.encodings.at(5) == fixtures::doubled_u24_rep().matrices[2]);
  CHECK(code.encodings.at(8) == fixtures::doubled_u24_rep().matrices[3]);
}

TEST_CASE("verify_code accepts both M-network solutions") {
  CHECK(verify_code(fixtures::m_network(), fixtures::m_network_solution1()).ok);
  CHECK(verify_code(fixtures::m_network(), fixtures::m_network_solution2()).ok);
}

TEST_CASE("verify_code flags broken variants of the M-network solution") {
  SUBCASE("swapping the two mixed sink feeds breaks a demand") {
    VectorLinearCode code = fixtures::m_network_solution1();
    std::swap(code.encodings.at(9), code.encodings.at(10));
    const auto c = verify_code(fixtures::m_network(), code);
    CHECK(!c.ok);
    CHECK(c.condition == "demand-decodability");
  }
  SUBCASE("relay carrying a foreign block is not locally computable") {
    VectorLinearCode code = fixtures::m_network_solution1();
    const auto rep = fixtures::m_network_rep12();
    for (int e = 13; e <= 16; ++e) code.encodings.at(e) = rep.matrices[2];
    for (int e = 17; e <= 20; ++e) code.encodings.at(e) = rep.matrices[3];
    const auto c = verify_code(fixtures::m_network(), code);
    CHECK(!c.ok);
    CHECK(c.condition == "local-computability");
  }
  SUBCASE("tampered input encoding") {
    VectorLinearCode code = fixtures::m_network_solution1();
    code.encodings.at(1) = code.encodings.at(2);
    CHECK(verify_code(fixtures::m_network(), code).condition == "input-identity");
  }
  SUBCASE("missing encoding throws") {
    VectorLinearCode code = fixtures::m_network_solution1();
    code.encodings.erase(20);
    CHECK_THROWS_AS(verify_code(fixtures::m_network(), code), std::invalid_argument);
  }
}

TEST_CASE("check_dpn on the M-network") {
  const Network net = fixtures::m_network();
  SUBCASE("narrow mapping onto twelve elements") {
    const auto t = rank_table_from_matrices(fixtures::m_network_rep12());
    CHECK(check_dpn(net, t, fixtures::m_network_f1()).ok);
  }
  SUBCASE("identity mapping onto twenty elements") {
    const auto t = rank_table_from_matrices(fixtures::m_network_rep20());
    CHECK(check_dpn(net, t, fixtures::m_network_f2()).ok);
  }
  SUBCASE("input collision violates injectivity") {
    PolymatroidMapping f = fixtures::m_network_f1();
    f.to_ground[2] = 1;
    const auto t = rank_table_from_matrices(fixtures::m_network_rep12());
    CHECK(check_dpn(net, t, f).condition == "input-injectivity");
  }
  SUBCASE("partial mapping throws") {
    PolymatroidMapping f = fixtures::m_network_f1();
    f.to_ground.erase(20);
    const auto t = rank_table_from_matrices(fixtures::m_network_rep12());
    CHECK_THROWS_AS(check_dpn(net, t, f), std::invalid_argument);
  }
}

TEST_CASE("check_dpn catches closure violations") {
  // One message forwarded to a sink that demands the other: the mapped rank
  // must grow at the sink.
  Network net;
  net.nodes = {1, 2, 3};
  net.inputs = {{1, 1, 1}, {2, 2, 2}};
  net.edges = {{3, 1, 3}};
  net.demands = {{3, 2}};
  RankTable t(2, {0, 1, 1, 2});
  PolymatroidMapping f;
  f.to_ground = {{1, 1}, {2, 2}, {3, 1}};
  CHECK(check_dpn(net, t, f).condition == "rank-closure");
}

TEST_CASE("code_from_representation reproduces the narrow M-network solution") {
  const auto code = code_from_representation(fixtures::m_network(),
                                             fixtures::m_network_rep12(),
                                             fixtures::m_network_f1(), 2);
  const auto want = fixtures::m_network_solution1();
  CHECK(code.k == want.k);
  CHECK(code.m == want.m);
  CHECK(code.encodings == want.encodings);
}

TEST_CASE("code_from_representation reproduces the routing solution") {
  const auto code = code_from_representation(fixtures::m_network(),
                                             fixtures::m_network_rep20(),
                                             fixtures::m_network_f2(), 2);
  CHECK(code.encodings == fixtures::m_network_solution2().encodings);
}

TEST_CASE("code_from_representation rejects a wrong dimension") {
  CHECK_THROWS_AS(code_from_representation(fixtures::m_network(),
                                           fixtures::m_network_rep12(),
                                           fixtures::m_network_f1(), 1),
                  std::invalid_argument);
}

TEST_CASE("polymatroid_from_code") {
  SUBCASE("routing solution: singleton ranks split two and one") {
    const auto [t, f] = polymatroid_from_code(fixtures::m_network(),
                                              fixtures::m_network_solution2());
    CHECK(t.n == 20);
    CHECK(rho_max(t) == 2);
    for (int i = 1; i <= 12; ++i) CHECK(t.singleton_rank(i) == 2);
    for (int i = 13; i <= 20; ++i) CHECK(t.singleton_rank(i) == 1);
    CHECK(check_dpn(fixtures::m_network(), t, f).ok);
  }
  SUBCASE("relay-construction code round-trips through check_dpn") {
    const auto code = doubled_u24_code();
    const auto [t, f] = polymatroid_from_code(fixtures::doubled_u24_network(), code);
    CHECK(t.n == 20);  // one ground element per edge
    CHECK(check_dpn(fixtures::doubled_u24_network(), t, f).ok);
    CHECK(rho_max(t) == 2);
  }
  SUBCASE("scalar codes give singleton ranks at most one") {
    const auto code =
        search_scalar_solution(fixtures::doubled_u24_network(), FieldSpec(3));
    REQUIRE(code);
    const auto [t, f] =
        polymatroid_from_code(fixtures::doubled_u24_network(), *code);
    for (int i = 1; i <= t.n; ++i) CHECK(t.singleton_rank(i) <= 1);
  }
  SUBCASE("invalid code is rejected") {
    VectorLinearCode code = fixtures::m_network_solution1();
    std::swap(code.encodings.at(9), code.encodings.at(10));
    CHECK_THROWS_AS(polymatroid_from_code(fixtures::m_network(), code),
                    std::invalid_argument);
  }
}

TEST_CASE("scalar search on the catalog networks") {
  SUBCASE("relay network: blocked over GF(2), solvable over GF(3)") {
    CHECK(!search_scalar_solution(fixtures::doubled_u24_network(), FieldSpec(2)));
    const auto found = search_scalar_solution(fixtures::doubled_u24_network(), FieldSpec(3));
    REQUIRE(found);
    CHECK(verify_code(fixtures::doubled_u24_network(), *found).ok);
  }
  SUBCASE("M-network: no scalar solution over small fields") {
    for (int q : {2, 3, 5}) {
      CHECK(!search_scalar_solution(fixtures::m_network(), FieldSpec(q)));
    }
  }
  SUBCASE("derived M-network: no scalar solution over GF(2) or GF(3)") {
    CHECK(!search_scalar_solution(fixtures::m_derived_network(), FieldSpec(2)));
    CHECK(!search_scalar_solution(fixtures::m_derived_network(), FieldSpec(3)));
  }
  SUBCASE("budget exhaustion is reported, not treated as absence") {
    CHECK_THROWS_AS(search_scalar_solution(fixtures::m_network(), FieldSpec(2), 3),
                    SearchBudgetExceeded);
  }
}

// ---------------------------------------------------------------------------
// Toy networks: the pruned search must agree with a literal enumeration of
// every local coefficient assignment.
// ---------------------------------------------------------------------------

namespace {

std::vector<Network> toy_networks() {
  std::vector<Network> toys;
  {
    // pass-through chain
    Network n;
    n.nodes = {1, 2, 3};
    n.inputs = {{1, 1, 1}};
    n.edges = {{2, 1, 2}, {3, 2, 3}};
    n.demands = {{3, 1}};
    toys.push_back(n);
  }
  {
    // two messages through a single edge: undecodable
    Network n;
    n.nodes = {1, 2};
    n.inputs = {{1, 1, 1}, {2, 1, 2}};
    n.edges = {{3, 1, 2}};
    n.demands = {{2, 1}, {2, 2}};
    toys.push_back(n);
  }
  {
    // fan-out to two sinks with separate demands
    Network n;
    n.nodes = {1, 2, 3};
    n.inputs = {{1, 1, 1}, {2, 1, 2}};
    n.edges = {{3, 1, 2}, {4, 1, 3}};
    n.demands = {{2, 1}, {3, 2}};
    toys.push_back(n);
  }
  {
    // mixer that must zero out one coefficient
    Network n;
    n.nodes = {1, 2, 3, 4};
    n.inputs = {{1, 1, 1}, {2, 2, 2}};
    n.edges = {{3, 1, 3}, {4, 2, 3}, {5, 3, 4}};
    n.demands = {{4, 1}};
    toys.push_back(n);
  }
  {
    // same mixer, both messages demanded behind it: undecodable
    Network n;
    n.nodes = {1, 2, 3, 4};
    n.inputs = {{1, 1, 1}, {2, 2, 2}};
    n.edges = {{3, 1, 3}, {4, 2, 3}, {5, 3, 4}};
    n.demands = {{4, 1}, {4, 2}};
    toys.push_back(n);
  }
  {
    // demand at a forwarding node
    Network n;
    n.nodes = {1, 2, 3};
    n.inputs = {{1, 1, 1}};
    n.edges = {{2, 1, 2}, {3, 2, 3}};
    n.demands = {{2, 1}, {3, 1}};
    toys.push_back(n);
  }
  {
    // two direct feeds into one sink
    Network n;
    n.nodes = {1, 2, 3};
    n.inputs = {{1, 1, 1}, {2, 2, 2}};
    n.edges = {{3, 1, 3}, {4, 2, 3}};
    n.demands = {{3, 1}, {3, 2}};
    toys.push_back(n);
  }
  {
    // side branch whose content never reaches the demand
    Network n;
    n.nodes = {1, 2, 3};
    n.inputs = {{1, 1, 1}, {2, 1, 2}};
    n.edges = {{3, 1, 2}, {4, 1, 3}, {5, 2, 3}};
    n.demands = {{3, 2}};
    toys.push_back(n);
  }
  return toys;
}

}  // namespace

TEST_CASE("scalar search agrees with the unpruned enumeration on toys") {
  for (const auto& net : toy_networks()) {
    REQUIRE(validate(net).ok);
    for (int q : {2, 3}) {
      const FieldSpec f(q);
      const auto smart = search_scalar_solution(net, f);
      const bool brute = oracles::unpruned_scalar_solvable(net, f);
      CHECK(smart.has_value() == brute);
      if (smart) CHECK(verify_code(net, *smart).ok);  // soundness
    }
  }
}

TEST_CASE("found scalar codes always verify") {
  for (const auto& net :
       {fixtures::doubled_u24_network(), fixtures::m_network(),
        fixtures::m_derived_network()}) {
    for (int q : {2, 3}) {
      const auto code = search_scalar_solution(net, FieldSpec(q));
      if (code) CHECK(verify_code(net, *code).ok);
    }
  }
}
