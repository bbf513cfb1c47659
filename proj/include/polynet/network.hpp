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

#ifndef POLYNET_NETWORK_HPP
#define POLYNET_NETWORK_HPP

#include <string>
#include <vector>

namespace polynet {

using NodeId = int;
using EdgeId = int;

/// Messages enter at tail-less input edges; message indices run 1..m and are
/// distinct per input edge.
struct InputEdge {
  EdgeId edge;
  NodeId head;
  int msg;
  bool operator==(const InputEdge&) const = default;
};

struct Edge {
  EdgeId id;
  NodeId tail;
  NodeId head;
  bool operator==(const Edge&) const = default;
};

struct Demand {
  NodeId node;
  int msg;
  bool operator==(const Demand&) const = default;
};

/// DAG with tail-less input edges carrying the messages, intermediate edges
/// between nodes, and per-node demands.
struct Network {
  std::vector<NodeId> nodes;
  std::vector<InputEdge> inputs;
  std::vector<Edge> edges;
  std::vector<Demand> demands;

  int message_count() const { return static_cast<int>(inputs.size()); }
  /// The input edge generating message `msg` (messages are unique per edge).
  EdgeId input_edge_for_message(int msg) const;
  bool has_node(NodeId v) const;

  bool operator==(const Network&) const = default;
};

/// Sorts nodes, inputs, edges and demands into the canonical order used by
/// the file format; fixtures and parsed documents are normalized this way.
void normalize(Network& net);

struct NetworkCheck {
  bool ok = true;
  std::string invariant;
  std::string detail;
};

/// Structural validation: unique ids, endpoints exist, message indices are
/// exactly 1..m, demands resolve, and the intermediate-edge graph is acyclic.
NetworkCheck validate(const Network& net);

struct InOutSets {
  std::vector<EdgeId> in;   // incoming intermediate + input edges
  std::vector<EdgeId> out;  // outgoing intermediate edges + demanded inputs
};

/// In(v) and Out(v); demanded messages resolve to their generating input
/// edges so a single edge map covers both.
InOutSets in_out_sets(const Network& net, NodeId v);

/// Input edges first (by message index), then intermediate edges topologically
/// with ties broken by id. Throws on cycles.
std::vector<EdgeId> ancestral_order(const Network& net);

/// Graph isomorphism respecting message indices and demand sets.
bool isomorphic(const Network& a, const Network& b);

}  // namespace polynet

#endif  // POLYNET_NETWORK_HPP
