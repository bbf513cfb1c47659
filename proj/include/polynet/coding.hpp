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

#ifndef POLYNET_CODING_HPP
#define POLYNET_CODING_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "polynet/field.hpp"
#include "polynet/network.hpp"
#include "polynet/polymatroid.hpp"
#include "polynet/representation.hpp"

namespace polynet {

/// Vector linear code of dimension k: every edge carries the mk x k global
/// encoding matrix that maps the stacked message vector to its symbols.
struct VectorLinearCode {
  FieldSpec field;
  int k = 1;
  int m = 0;
  std::map<EdgeId, FqMatrix> encodings;
};

/// Map from edge ids to ground-set elements (1-based).
struct PolymatroidMapping {
  std::map<EdgeId, int> to_ground;
};

struct CodeCheck {
  bool ok = true;
  std::string condition;  // "input-identity" | "local-computability" | "demand-decodability"
  std::string detail;
};

/// The mk x k block column of the identity belonging to message `msg`.
FqMatrix message_block(int m, int k, int msg);

/// Checks the three code conditions: inputs carry identity blocks, every
/// intermediate edge is computable from the edges into its tail, and every
/// demand decodes from the edges into the demanding node. Shape errors throw;
/// condition failures come back as a verdict.
CodeCheck verify_code(const Network& net, const VectorLinearCode& code);

struct DpnCheck {
  bool ok = true;
  std::string condition;  // "input-injectivity" | "source-capacity" | "rank-closure"
  std::string detail;
};

/// Discrete-polymatroidal test of a network against a rank table under an
/// edge-to-ground map: f injective on inputs, the rho_max-scaled indicator of
/// f(inputs) is a member, and rank(f(In(v))) == rank(f(In(v) u Out(v))) at
/// every node.
DpnCheck check_dpn(const Network& net, const RankTable& t, const PolymatroidMapping& f);

/// Builds the code M_e = A'_{f(e)} after changing basis so the input edges
/// carry identity blocks. Requires check_dpn to pass and rho_max == k.
VectorLinearCode code_from_representation(const Network& net, const Representation& rep,
                                          const PolymatroidMapping& f, int k);

/// Reads a verified code back as a polymatroid: one ground element per edge,
/// V_e = column span of M_e, f the identity-by-position map.
std::pair<RankTable, PolymatroidMapping> polymatroid_from_code(
    const Network& net, const VectorLinearCode& code);

class SearchBudgetExceeded : public std::runtime_error {
 public:
  explicit SearchBudgetExceeded(uint64_t budget)
      : std::runtime_error("scalar search exceeded budget of " + std::to_string(budget)),
        budget(budget) {}
  uint64_t budget;
};

inline constexpr uint64_t kDefaultSearchBudget = uint64_t(1) << 32;

/// Exhaustive scalar (k = 1) solution search. Enumerates edge contents in
/// ancestral order, deduplicated up to scaling, with demand-feasibility
/// pruning; sink-only edges are chosen per sink. Absence is a proof that no
/// assignment of local coefficients solves the network over GF(q). `budget`
/// caps the number of explored assignments and throws when exceeded.
std::optional<VectorLinearCode> search_scalar_solution(
    const Network& net, const FieldSpec& f, uint64_t budget = kDefaultSearchBudget);

}  // namespace polynet

#endif  // POLYNET_CODING_HPP
