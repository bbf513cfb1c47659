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

#include "polynet/construct.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

namespace polynet {

namespace {

// Section nodes reuse their ground element as id; relay entry points live in
// a disjoint range above any sink id this library can produce.
constexpr NodeId kPrimedBase = 100;

NodeId primed(int elem) { return kPrimedBase + elem; }

std::vector<int> support_elements(const GroundVector& u) {
  std::vector<int> out;
  for (int j = 0; j < u.size(); ++j) {
    if (u.comps[j] > 0) out.push_back(j + 1);
  }
  return out;
}

}  // namespace

ConstructionResult construct(const DiscretePolymatroid& d,
                             const std::optional<ChoiceScript>& script,
                             std::optional<int> step3_rounds) {
  const int n = d.n();
  if (n >= kPrimedBase - 32) {
    throw std::domain_error("construct: ground set too large for the node id scheme");
  }
  ConstructionResult result;
  Network& net = result.network;
  PolymatroidMapping& f = result.mapping;

  // Step 1: seed sources from an r-vector of maximal support.
  GroundVector seed;
  if (script) {
    if (!r_contains(d, script->step1)) {
      throw std::invalid_argument("construct: scripted seed is not an r-vector");
    }
    seed = script->step1;
  } else {
    const auto rs = r_vectors(d);
    if (rs.empty()) throw std::invalid_argument("construct: no r-vectors to seed from");
    size_t best = 0;
    for (size_t i = 1; i < rs.size(); ++i) {
      if (std::popcount(rs[i].support()) > std::popcount(rs[best].support())) best = i;
    }
    // rs is sorted, so the first vector attaining the maximal support size
    // is the lexicographically smallest maximizer.
    for (size_t i = 0; i < rs.size(); ++i) {
      if (std::popcount(rs[i].support()) == std::popcount(rs[best].support())) {
        seed = rs[i];
        break;
      }
    }
  }
  result.transcript.step1 = seed;

  const std::vector<int> sources = support_elements(seed);
  std::map<int, int> message_of;  // ground element -> message index
  EdgeId next_edge = 0;
  for (int i : sources) {
    message_of[i] = static_cast<int>(message_of.size()) + 1;
    net.nodes.push_back(i);
    net.inputs.push_back({++next_edge, i, message_of[i]});
    f.to_ground[next_edge] = i;
  }
  std::set<int> covered(sources.begin(), sources.end());

  auto attach_relay = [&](int i, const GroundVector& u) {
    GroundVector decremented = u;
    --decremented.comps[i - 1];
    const std::vector<int> feeders = support_elements(decremented);
    for (int j : feeders) {
      if (!covered.count(j)) {
        throw std::invalid_argument("construct: relay feeder outside the covered set");
      }
    }
    net.nodes.push_back(primed(i));
    net.nodes.push_back(i);
    for (int j : feeders) {
      net.edges.push_back({++next_edge, j, primed(i)});
      f.to_ground[next_edge] = j;
    }
    net.edges.push_back({++next_edge, primed(i), i});
    f.to_ground[next_edge] = i;
    covered.insert(i);
    result.transcript.step2.emplace_back(i, u);
  };

  // Step 2.
  if (script) {
    for (const auto& [i, u] : script->step2) {
      if (i < 1 || i > n || covered.count(i)) {
        throw std::invalid_argument("construct: scripted relay element unusable");
      }
      if (!c_i_contains(d, i, u)) {
        throw std::invalid_argument("construct: scripted relay vector is not minimal excluded");
      }
      attach_relay(i, u);
    }
  } else {
    bool progress = true;
    while (progress) {
      progress = false;
      for (int i = 1; i <= n && !progress; ++i) {
        if (covered.count(i)) continue;
        for (const auto& u : c_i_vectors(d, i)) {
          GroundVector dec = u;
          --dec.comps[i - 1];
          const uint32_t need = dec.support();
          uint32_t have = 0;
          for (int j : covered) have |= uint32_t(1) << (j - 1);
          if ((need & ~have) == 0) {
            attach_relay(i, u);
            progress = true;
            break;
          }
        }
      }
    }
  }

  // Step 3.
  NodeId next_sink = n;
  auto attach_sink = [&](int i, const GroundVector& u) {
    if (next_sink + 1 >= kPrimedBase) {
      throw std::domain_error("construct: too many sinks for the node id scheme");
    }
    GroundVector decremented = u;
    --decremented.comps[i - 1];
    net.nodes.push_back(++next_sink);
    for (int j : support_elements(decremented)) {
      net.edges.push_back({++next_edge, j, next_sink});
      f.to_ground[next_edge] = j;
    }
    net.demands.push_back({next_sink, message_of.at(i)});
    result.transcript.step3.emplace_back(i, u);
  };
  uint32_t covered_mask = 0;
  for (int j : covered) covered_mask |= uint32_t(1) << (j - 1);

  if (script) {
    for (const auto& [i, u] : script->step3) {
      if (!message_of.count(i)) {
        throw std::invalid_argument("construct: scripted sink demands a non-source element");
      }
      if (!c_i_contains(d, i, u)) {
        throw std::invalid_argument("construct: scripted sink vector is not minimal excluded");
      }
      if ((u.support() & ~covered_mask) != 0) {
        throw std::invalid_argument("construct: scripted sink support leaves the covered set");
      }
      attach_sink(i, u);
    }
  } else {
    int remaining = step3_rounds.value_or(-1);
    for (int i : sources) {
      for (const auto& u : c_i_vectors(d, i)) {
        if ((u.support() & ~covered_mask) != 0) continue;
        if (remaining == 0) break;
        attach_sink(i, u);
        if (remaining > 0) --remaining;
      }
      if (remaining == 0) break;
    }
  }

  for (int i = 1; i <= n; ++i) {
    if (!covered.count(i)) result.uncovered.push_back(i);
  }
  normalize(net);
  return result;
}

VectorLinearCode replay_check(const ConstructionResult& result, const Representation& rep) {
  const RankTable t = rank_table_from_matrices(rep);
  return code_from_representation(result.network, rep, result.mapping, rho_max(t));
}

}  // namespace polynet
