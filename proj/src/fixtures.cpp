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

#include "polynet/fixtures.hpp"

#include <bit>

namespace polynet::fixtures {

namespace {

using Cols = std::vector<std::vector<int>>;

std::vector<int> unit8(int i) {
  std::vector<int> v(8, 0);
  v[i - 1] = 1;
  return v;
}

GroundVector gv(std::vector<int> comps) { return GroundVector(std::move(comps)); }

// Sparse ground vector on 12 elements: {element, value} pairs.
GroundVector gv12(std::initializer_list<std::pair<int, int>> entries) {
  std::vector<int> comps(12, 0);
  for (const auto& [elem, val] : entries) comps[elem - 1] = val;
  return GroundVector(std::move(comps));
}

}  // namespace

RankTable sample_table_n2() { return RankTable(2, {0, 3, 5, 5}); }

RankTable sample_table_n3() { return RankTable(3, {0, 1, 2, 3, 2, 2, 4, 4}); }

RankTable doubled_u24_table() {
  std::vector<int> values(16);
  for (uint32_t mask = 0; mask < 16; ++mask) {
    values[mask] = std::min(2 * std::popcount(mask), 4);
  }
  return RankTable(4, std::move(values));
}

Matroid u24_matroid() { return uniform_matroid(2, 4); }

Representation u24_rep_gf3() {
  return Representation{FieldSpec(3), 2,
                        {FqMatrix::from_columns(2, {{1, 0}}),
                         FqMatrix::from_columns(2, {{0, 1}}),
                         FqMatrix::from_columns(2, {{1, 1}}),
                         FqMatrix::from_columns(2, {{1, 2}})}};
}

Representation doubled_u24_rep() {
  return Representation{FieldSpec(2), 4,
                        {FqMatrix::from_columns(4, {{1, 0, 0, 0}, {0, 1, 0, 0}}),
                         FqMatrix::from_columns(4, {{0, 0, 1, 0}, {0, 0, 0, 1}}),
                         FqMatrix::from_columns(4, {{1, 0, 0, 1}, {0, 1, 1, 0}}),
                         FqMatrix::from_columns(4, {{1, 0, 1, 1}, {0, 1, 0, 1}})}};
}

Representation non_pappus_rep() {
  const std::vector<Cols> blocks = {
      {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}},
      {{1, 0, 0, 0, 1, 0}, {0, 1, 0, 0, 0, 1}},
      {{0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}},
      {{1, 0, 1, 0, 0, 2}, {0, 1, 0, 2, 1, 1}},
      {{0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0}},
      {{1, 0, 2, 2, 0, 2}, {0, 1, 1, 0, 1, 1}},
      {{1, 0, 0, 1, 0, 0}, {0, 1, 1, 2, 0, 0}},
      {{1, 0, 1, 0, 1, 1}, {0, 1, 0, 2, 1, 0}},
      {{0, 0, 1, 0, 1, 0}, {0, 0, 0, 1, 0, 1}},
  };
  Representation rep{FieldSpec(3), 6, {}};
  for (const auto& b : blocks) rep.matrices.push_back(FqMatrix::from_columns(6, b));
  return rep;
}

Matroid non_pappus_matroid() {
  RankTable doubled = rank_table_from_matrices(non_pappus_rep());
  for (int& v : doubled.values) v /= 2;  // the arrangement realizes twice the rank
  return Matroid::from_rank_table(std::move(doubled));
}

Network m_network() {
  Network net;
  net.nodes = {1, 2, 3, 4, 5, 6, 7, 8, 9};
  net.inputs = {{1, 1, 1}, {2, 1, 2}, {3, 2, 3}, {4, 2, 4}};
  net.edges = {
      {5, 1, 4},  {6, 1, 3},  {7, 2, 3},  {8, 2, 5},    // sources to mixer/relays
      {9, 3, 6},  {10, 3, 7}, {11, 3, 8}, {12, 3, 9},   // mixer to sinks
      {13, 4, 6}, {14, 4, 7}, {15, 4, 8}, {16, 4, 9},   // left relay fan-out
      {17, 5, 6}, {18, 5, 7}, {19, 5, 8}, {20, 5, 9},   // right relay fan-out
  };
  net.demands = {{6, 1}, {6, 3}, {7, 1}, {7, 4}, {8, 2}, {8, 3}, {9, 2}, {9, 4}};
  normalize(net);
  return net;
}

namespace {

// Column pairs spanning the twelve 2-dimensional subspaces of GF(2)^8 behind
// both vector solutions of the M-network.
Cols subspace_pair(int a, int b) { return {unit8(a), unit8(b)}; }

std::vector<Cols> m_network_spans12() {
  return {
      subspace_pair(1, 2), subspace_pair(3, 4), subspace_pair(5, 6),
      subspace_pair(7, 8), subspace_pair(1, 4), subspace_pair(2, 3),
      subspace_pair(5, 8), subspace_pair(6, 7), subspace_pair(2, 5),
      subspace_pair(2, 8), subspace_pair(3, 5), subspace_pair(3, 8),
  };
}

}  // namespace

Representation m_network_rep12() {
  Representation rep{FieldSpec(2), 8, {}};
  for (const auto& cols : m_network_spans12()) {
    rep.matrices.push_back(FqMatrix::from_columns(8, cols));
  }
  return rep;
}

Representation m_network_rep20() {
  Representation rep = m_network_rep12();
  const std::vector<int> tails = {1, 1, 4, 4, 6, 7, 6, 7};  // spans of edges 13..20
  for (int i : tails) {
    rep.matrices.push_back(FqMatrix::from_columns(8, {unit8(i), std::vector<int>(8, 0)}));
  }
  return rep;
}

PolymatroidMapping m_network_f1() {
  PolymatroidMapping f;
  for (int e = 1; e <= 12; ++e) f.to_ground[e] = e;
  for (int e = 13; e <= 16; ++e) f.to_ground[e] = 5;
  for (int e = 17; e <= 20; ++e) f.to_ground[e] = 8;
  return f;
}

PolymatroidMapping m_network_f2() {
  PolymatroidMapping f;
  for (int e = 1; e <= 20; ++e) f.to_ground[e] = e;
  return f;
}

VectorLinearCode m_network_solution1() {
  VectorLinearCode code{FieldSpec(2), 2, 4, {}};
  const auto spans = m_network_spans12();
  for (int e = 1; e <= 12; ++e) {
    code.encodings.emplace(e, FqMatrix::from_columns(8, spans[e - 1]));
  }
  for (int e = 13; e <= 16; ++e) {
    code.encodings.emplace(e, FqMatrix::from_columns(8, spans[4]));  // left relay copies
  }
  for (int e = 17; e <= 20; ++e) {
    code.encodings.emplace(e, FqMatrix::from_columns(8, spans[7]));  // right relay copies
  }
  return code;
}

VectorLinearCode m_network_solution2() {
  VectorLinearCode code{FieldSpec(2), 2, 4, {}};
  const Representation rep = m_network_rep20();
  for (int e = 1; e <= 20; ++e) code.encodings.emplace(e, rep.matrices[e - 1]);
  return code;
}

Network doubled_u24_network() {
  Network net;
  net.nodes = {1, 2, 3, 4, 103, 104, 5, 6, 7, 8, 9, 10};
  net.inputs = {{1, 1, 1}, {2, 2, 2}};
  net.edges = {
      {3, 1, 103}, {4, 2, 103}, {5, 103, 3},   // relay pair for element 3
      {6, 1, 104}, {7, 2, 104}, {8, 104, 4},   // relay pair for element 4
      {9, 1, 5},   {10, 3, 5},                 // sinks
      {11, 2, 6},  {12, 3, 6},
      {13, 1, 7},  {14, 4, 7},
      {15, 2, 8},  {16, 4, 8},
      {17, 3, 9},  {18, 4, 9},
      {19, 3, 10}, {20, 4, 10},
  };
  net.demands = {{5, 2}, {6, 1}, {7, 2}, {8, 1}, {9, 1}, {10, 2}};
  normalize(net);
  return net;
}

ChoiceScript doubled_u24_script() {
  ChoiceScript s;
  s.step1 = gv({2, 2, 0, 0});
  s.step2 = {{3, gv({2, 2, 1, 0})}, {4, gv({2, 2, 0, 1})}};
  s.step3 = {{2, gv({2, 1, 2, 0})}, {1, gv({1, 2, 2, 0})}, {2, gv({2, 1, 0, 2})},
             {1, gv({1, 2, 0, 2})}, {1, gv({1, 0, 2, 2})}, {2, gv({0, 1, 2, 2})}};
  return s;
}

Network m_derived_network() {
  Network net;
  net.inputs = {{1, 1, 1}, {2, 2, 2}, {3, 3, 3}, {4, 4, 4}};
  net.nodes = {1, 2, 3, 4};
  EdgeId next = 4;
  // Relay pairs in construction order: element, feeder sections.
  const std::vector<std::pair<int, std::vector<int>>> relays = {
      {5, {1, 2}}, {7, {3, 4}}, {8, {3, 4}}, {9, {1, 7}},
      {10, {7, 9}}, {6, {2, 9}}, {11, {6, 9}}, {12, {10, 11}},
  };
  for (const auto& [elem, feeders] : relays) {
    net.nodes.push_back(100 + elem);
    net.nodes.push_back(elem);
    for (int j : feeders) net.edges.push_back({++next, j, 100 + elem});
    net.edges.push_back({++next, 100 + elem, elem});
  }
  // Sinks: demanded message, feeder sections.
  const std::vector<std::pair<int, std::vector<int>>> sinks = {
      {1, {5, 6}}, {1, {5, 10}}, {1, {5, 9}},  {2, {5, 6}},
      {2, {5, 11}}, {2, {5, 12}}, {4, {8, 12}}, {3, {8, 11}},
      {3, {7, 8}}, {4, {8, 10}}, {3, {8, 9}},  {4, {7, 8}},
  };
  NodeId sink = 12;
  for (const auto& [msg, feeders] : sinks) {
    net.nodes.push_back(++sink);
    for (int j : feeders) net.edges.push_back({++next, j, sink});
    net.demands.push_back({sink, msg});
  }
  normalize(net);
  return net;
}

ChoiceScript m_derived_script() {
  ChoiceScript s;
  s.step1 = gv12({{1, 2}, {2, 2}, {3, 2}, {4, 2}});
  s.step2 = {
      {5, gv12({{1, 2}, {2, 2}, {5, 1}})},
      {7, gv12({{3, 2}, {4, 2}, {7, 1}})},
      {8, gv12({{3, 2}, {4, 2}, {8, 1}})},
      {9, gv12({{1, 2}, {7, 2}, {9, 1}})},
      {10, gv12({{7, 1}, {9, 2}, {10, 1}})},
      {6, gv12({{2, 2}, {6, 1}, {9, 2}})},
      {11, gv12({{6, 1}, {9, 2}, {11, 1}})},
      {12, gv12({{10, 2}, {11, 2}, {12, 1}})},
  };
  s.step3 = {
      {1, gv12({{1, 1}, {5, 2}, {6, 2}})},
      {1, gv12({{1, 1}, {5, 2}, {10, 2}})},
      {1, gv12({{1, 1}, {5, 2}, {9, 2}})},
      {2, gv12({{2, 1}, {5, 2}, {6, 2}})},
      {2, gv12({{2, 1}, {5, 2}, {11, 2}})},
      {2, gv12({{2, 1}, {5, 2}, {12, 2}})},
      {4, gv12({{4, 1}, {8, 2}, {12, 2}})},
      {3, gv12({{3, 1}, {8, 2}, {11, 2}})},
      {3, gv12({{3, 1}, {7, 2}, {8, 2}})},
      {4, gv12({{4, 1}, {8, 2}, {10, 2}})},
      {3, gv12({{3, 1}, {8, 2}, {9, 2}})},
      {4, gv12({{4, 1}, {7, 2}, {8, 2}})},
  };
  return s;
}

}  // namespace polynet::fixtures
