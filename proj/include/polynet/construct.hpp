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

#ifndef POLYNET_CONSTRUCT_HPP
#define POLYNET_CONSTRUCT_HPP

#include <optional>
#include <utility>
#include <vector>

#include "polynet/coding.hpp"
#include "polynet/network.hpp"
#include "polynet/polymatroid.hpp"
#include "polynet/representation.hpp"

namespace polynet {

/// Records the free choices of the network construction: the seed vector, the
/// ordered relay extensions, and the ordered sink additions. Every vector
/// must belong to the set the step draws from (r_vectors / c_i_vectors).
struct ChoiceScript {
  GroundVector step1;
  std::vector<std::pair<int, GroundVector>> step2;
  std::vector<std::pair<int, GroundVector>> step3;

  bool operator==(const ChoiceScript&) const = default;
};

struct ConstructionResult {
  Network network;
  PolymatroidMapping mapping;
  ChoiceScript transcript;          // the choices actually applied
  std::vector<int> uncovered;       // ground elements never reached by step 2
};

/// Builds a network from a discrete polymatroid.
///
/// Step 1 seeds one source per element in the support of a vector from
/// r_vectors (largest support, lexicographically smallest by default). Step 2
/// repeatedly attaches a relay pair i'-i for an uncovered element with a
/// minimal excluded vector supported in the covered set. Step 3 adds sinks
/// demanding source messages. Without a script all choices are lexicographic
/// and step 3 adds one sink per eligible (i, u) pair, capped by step3_rounds.
///
/// The result is discrete polymatroidal with respect to the input, with the
/// returned mapping as witness.
ConstructionResult construct(const DiscretePolymatroid& d,
                             const std::optional<ChoiceScript>& script = std::nullopt,
                             std::optional<int> step3_rounds = std::nullopt);

/// Runs code_from_representation on a construction result with k = rho_max.
VectorLinearCode replay_check(const ConstructionResult& result, const Representation& rep);

}  // namespace polynet

#endif  // POLYNET_CONSTRUCT_HPP
