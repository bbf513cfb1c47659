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

#include "polynet/network.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace polynet {

EdgeId Network::input_edge_for_message(int msg) const {
  for (const auto& in : inputs) {
    if (in.msg == msg) return in.edge;
  }
  throw std::invalid_argument("network: no input edge for message " + std::to_string(msg));
}

bool Network::has_node(NodeId v) const {
  return std::find(nodes.begin(), nodes.end(), v) != nodes.end();
}

void normalize(Network& net) {
  std::sort(net.nodes.begin(), net.nodes.end());
  std::sort(net.inputs.begin(), net.inputs.end(),
            [](const InputEdge& a, const InputEdge& b) { return a.edge < b.edge; });
  std::sort(net.edges.begin(), net.edges.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  std::sort(net.demands.begin(), net.demands.end(), [](const Demand& a, const Demand& b) {
    return std::pair(a.node, a.msg) < std::pair(b.node, b.msg);
  });
}

NetworkCheck validate(const Network& net) {
  std::set<NodeId> nodes(net.nodes.begin(), net.nodes.end());
  if (nodes.size() != net.nodes.size()) {
    return {false, "unique-node-ids", "duplicate node id"};
  }
  std::set<EdgeId> edge_ids;
  for (const auto& in : net.inputs) {
    if (!edge_ids.insert(in.edge).second) {
      return {false, "unique-edge-ids", "duplicate edge id " + std::to_string(in.edge)};
    }
    if (!nodes.count(in.head)) {
      return {false, "endpoints-exist",
              "input edge " + std::to_string(in.edge) + " heads at unknown node"};
    }
  }
  for (const auto& e : net.edges) {
    if (!edge_ids.insert(e.id).second) {
      return {false, "unique-edge-ids", "duplicate edge id " + std::to_string(e.id)};
    }
    if (!nodes.count(e.tail) || !nodes.count(e.head)) {
      return {false, "endpoints-exist",
              "edge " + std::to_string(e.id) + " touches an unknown node"};
    }
  }
  std::set<int> msgs;
  for (const auto& in : net.inputs) msgs.insert(in.msg);
  if (msgs.size() != net.inputs.size()) {
    return {false, "distinct-messages", "two input edges carry the same message"};
  }
  for (int m = 1; m <= net.message_count(); ++m) {
    if (!msgs.count(m)) {
      return {false, "message-indexing", "message indices are not exactly 1..m"};
    }
  }
  for (const auto& d : net.demands) {
    if (!nodes.count(d.node)) {
      return {false, "demands-resolve", "demand at unknown node " + std::to_string(d.node)};
    }
    if (!msgs.count(d.msg)) {
      return {false, "demands-resolve",
              "demanded message " + std::to_string(d.msg) + " is not generated"};
    }
  }
  // Kahn on the intermediate-edge node graph.
  std::map<NodeId, int> indeg;
  for (NodeId v : net.nodes) indeg[v] = 0;
  for (const auto& e : net.edges) ++indeg[e.head];
  std::vector<NodeId> ready;
  for (auto& [v, d] : indeg) {
    if (d == 0) ready.push_back(v);
  }
  size_t seen = 0;
  while (!ready.empty()) {
    NodeId v = ready.back();
    ready.pop_back();
    ++seen;
    for (const auto& e : net.edges) {
      if (e.tail == v && --indeg[e.head] == 0) ready.push_back(e.head);
    }
  }
  if (seen != nodes.size()) {
    return {false, "acyclicity", "intermediate edges form a directed cycle"};
  }
  return {};
}

InOutSets in_out_sets(const Network& net, NodeId v) {
  if (!net.has_node(v)) {
    throw std::invalid_argument("in_out_sets: unknown node " + std::to_string(v));
  }
  InOutSets io;
  for (const auto& in : net.inputs) {
    if (in.head == v) io.in.push_back(in.edge);
  }
  for (const auto& e : net.edges) {
    if (e.head == v) io.in.push_back(e.id);
    if (e.tail == v) io.out.push_back(e.id);
  }
  for (const auto& d : net.demands) {
    if (d.node == v) io.out.push_back(net.input_edge_for_message(d.msg));
  }
  std::sort(io.in.begin(), io.in.end());
  std::sort(io.out.begin(), io.out.end());
  io.out.erase(std::unique(io.out.begin(), io.out.end()), io.out.end());
  return io;
}

std::vector<EdgeId> ancestral_order(const Network& net) {
  std::vector<EdgeId> order;
  std::set<EdgeId> placed;
  std::vector<InputEdge> ins = net.inputs;
  std::sort(ins.begin(), ins.end(),
            [](const InputEdge& a, const InputEdge& b) { return a.msg < b.msg; });
  for (const auto& in : ins) {
    order.push_back(in.edge);
    placed.insert(in.edge);
  }
  // An intermediate edge is ready once every edge into its tail is placed.
  std::vector<Edge> pending = net.edges;
  std::sort(pending.begin(), pending.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  std::vector<char> done(pending.size(), 0);
  size_t remaining = pending.size();
  while (remaining > 0) {
    bool progress = false;
    for (size_t i = 0; i < pending.size(); ++i) {
      if (done[i]) continue;
      bool ready = true;
      for (const auto& in : net.inputs) {
        if (in.head == pending[i].tail && !placed.count(in.edge)) ready = false;
      }
      for (const auto& e : net.edges) {
        if (e.head == pending[i].tail && !placed.count(e.id)) ready = false;
      }
      if (ready) {
        order.push_back(pending[i].id);
        placed.insert(pending[i].id);
        done[i] = 1;
        --remaining;
        progress = true;
        break;  // restart at the smallest id
      }
    }
    if (!progress) throw std::invalid_argument("ancestral_order: cycle detected");
  }
  return order;
}

namespace {

struct NodeSignature {
  int in_inter = 0;
  int out_inter = 0;
  std::vector<int> input_msgs;  // messages entering here
  std::vector<int> demands;

  bool operator==(const NodeSignature&) const = default;
  auto operator<=>(const NodeSignature&) const = default;
};

std::map<NodeId, NodeSignature> signatures(const Network& net) {
  std::map<NodeId, NodeSignature> sig;
  for (NodeId v : net.nodes) sig[v];
  for (const auto& in : net.inputs) sig[in.head].input_msgs.push_back(in.msg);
  for (const auto& e : net.edges) {
    ++sig[e.tail].out_inter;
    ++sig[e.head].in_inter;
  }
  for (const auto& d : net.demands) sig[d.node].demands.push_back(d.msg);
  for (auto& [v, s] : sig) {
    std::sort(s.input_msgs.begin(), s.input_msgs.end());
    std::sort(s.demands.begin(), s.demands.end());
  }
  return sig;
}

std::map<std::pair<NodeId, NodeId>, int> adjacency(const Network& net) {
  std::map<std::pair<NodeId, NodeId>, int> adj;
  for (const auto& e : net.edges) ++adj[{e.tail, e.head}];
  return adj;
}

}  // namespace

bool isomorphic(const Network& a, const Network& b) {
  if (a.nodes.size() != b.nodes.size() || a.inputs.size() != b.inputs.size() ||
      a.edges.size() != b.edges.size() || a.demands.size() != b.demands.size()) {
    return false;
  }
  const auto sig_a = signatures(a);
  const auto sig_b = signatures(b);
  {
    std::vector<NodeSignature> sa, sb;
    for (const auto& [v, s] : sig_a) sa.push_back(s);
    for (const auto& [v, s] : sig_b) sb.push_back(s);
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  const auto adj_a = adjacency(a);
  const auto adj_b = adjacency(b);

  std::map<NodeId, NodeId> fwd;
  std::map<NodeId, NodeId> bwd;
  // Message identities force the source heads.
  for (const auto& ia : a.inputs) {
    for (const auto& ib : b.inputs) {
      if (ia.msg == ib.msg) {
        auto it = fwd.find(ia.head);
        if (it != fwd.end() && it->second != ib.head) return false;
        auto it2 = bwd.find(ib.head);
        if (it2 != bwd.end() && it2->second != ia.head) return false;
        fwd[ia.head] = ib.head;
        bwd[ib.head] = ia.head;
      }
    }
  }

  std::vector<NodeId> free_a;
  for (NodeId v : a.nodes) {
    if (!fwd.count(v)) free_a.push_back(v);
  }

  auto consistent = [&](NodeId va, NodeId vb) {
    if (sig_a.at(va) != sig_b.at(vb)) return false;
    for (const auto& [u, w] : fwd) {
      auto get = [](const auto& m, NodeId x, NodeId y) {
        auto it = m.find({x, y});
        return it == m.end() ? 0 : it->second;
      };
      if (get(adj_a, va, u) != get(adj_b, vb, w)) return false;
      if (get(adj_a, u, va) != get(adj_b, w, vb)) return false;
      if (get(adj_a, va, va) != get(adj_b, vb, vb)) return false;
    }
    return true;
  };

  auto extend = [&](auto&& self, size_t idx) -> bool {
    if (idx == free_a.size()) return true;
    const NodeId va = free_a[idx];
    for (NodeId vb : b.nodes) {
      if (bwd.count(vb)) continue;
      if (!consistent(va, vb)) continue;
      fwd[va] = vb;
      bwd[vb] = va;
      if (self(self, idx + 1)) return true;
      fwd.erase(va);
      bwd.erase(vb);
    }
    return false;
  };
  if (!extend(extend, 0)) return false;

  // Full adjacency re-check under the completed map.
  for (const auto& [key, cnt] : adj_a) {
    auto it = adj_b.find({fwd.at(key.first), fwd.at(key.second)});
    if (it == adj_b.end() || it->second != cnt) return false;
  }
  return true;
}

}  // namespace polynet
