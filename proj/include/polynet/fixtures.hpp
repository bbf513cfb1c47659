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

#ifndef POLYNET_FIXTURES_HPP
#define POLYNET_FIXTURES_HPP

#include "polynet/coding.hpp"
#include "polynet/construct.hpp"
#include "polynet/matroid.hpp"
#include "polynet/network.hpp"
#include "polynet/polymatroid.hpp"
#include "polynet/representation.hpp"

/// Catalog of the worked objects the test suites and the CLI demos share:
/// small sample polymatroids, the doubled uniform matroid U_{2,4} with its
/// GF(2) subspace arrangement, the non-Pappus arrangement over GF(3), the
/// M-network with its two vector solutions, and the two networks built from
/// these polymatroids together with their construction scripts.
namespace polynet::fixtures {

// Sample rank tables.
RankTable sample_table_n2();     // ranks 3 / 5 / 5 on two elements
RankTable sample_table_n3();     // three elements, rank 4, two basis vectors
RankTable doubled_u24_table();   // 2 * rank of U_{2,4}

Matroid u24_matroid();
Representation u24_rep_gf3();    // one column per element over GF(3)

Representation doubled_u24_rep();  // four 4x2 blocks over GF(2)

Representation non_pappus_rep();   // nine 6x2 blocks over GF(3)
Matroid non_pappus_matroid();      // rank table recovered from the arrangement

// The M-network: two source heads with two messages each, one mixing node,
// two relay fan-outs, four sinks demanding one message per side.
Network m_network();
Representation m_network_rep12();  // twelve 2-dimensional subspaces of GF(2)^8
Representation m_network_rep20();  // per-edge spans of the routing solution
PolymatroidMapping m_network_f1();
PolymatroidMapping m_network_f2();
VectorLinearCode m_network_solution1();
VectorLinearCode m_network_solution2();

// Network constructed from the doubled-U24 polymatroid, plus the script that
// reproduces it.
Network doubled_u24_network();
ChoiceScript doubled_u24_script();

// Network constructed from the M-network's 12-element polymatroid.
Network m_derived_network();
ChoiceScript m_derived_script();

}  // namespace polynet::fixtures

#endif  // POLYNET_FIXTURES_HPP
