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

#include "polynet/io.hpp"

#include <istream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace polynet {

using nlohmann::json;

namespace {

json require(const json& j, const char* key) {
  if (!j.contains(key)) throw io_error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int require_int(const json& j, const char* key) {
  const json v = require(j, key);
  if (!v.is_number_integer()) {
    throw io_error(std::string("field \"") + key + "\" must be an integer");
  }
  return v.get<int>();
}

std::vector<int> int_list(const json& v, const char* what) {
  if (!v.is_array()) throw io_error(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw io_error(std::string(what) + " must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

json vectors_json(const std::vector<std::pair<int, GroundVector>>& steps) {
  json arr = json::array();
  for (const auto& [i, u] : steps) arr.push_back(json::array({i, u.comps}));
  return arr;
}

std::vector<std::pair<int, GroundVector>> vectors_from_json(const json& arr,
                                                            const char* what) {
  if (!arr.is_array()) throw io_error(std::string(what) + " must be an array");
  std::vector<std::pair<int, GroundVector>> out;
  for (const auto& item : arr) {
    if (!item.is_array() || item.size() != 2) {
      throw io_error(std::string(what) + " entries must be [element, vector] pairs");
    }
    out.emplace_back(item.at(0).get<int>(),
                     GroundVector(int_list(item.at(1), what)));
  }
  return out;
}

std::string dump_line(const json& j) { return j.dump() + "\n"; }

int edge_key(const std::string& key, const char* what) {
  try {
    size_t used = 0;
    const int id = std::stoi(key, &used);
    if (used != key.size()) throw std::invalid_argument(key);
    return id;
  } catch (const std::exception&) {
    throw io_error(std::string(what) + ": key \"" + key + "\" is not an edge id");
  }
}

}  // namespace

std::string emit(const RankTable& t) {
  json j;
  j["kind"] = "polymatroid";
  j["n"] = t.n;
  j["rank"] = t.values;
  return dump_line(j);
}

std::string emit(const Matroid& m) {
  json j;
  j["kind"] = "matroid";
  j["n"] = m.n();
  if (m.presented_by_sets()) {
    json sets = json::array();
    for (uint32_t s : m.independent_sets()) {
      json elems = json::array();
      for (int e = 1; e <= m.n(); ++e) {
        if (s >> (e - 1) & 1) elems.push_back(e);
      }
      sets.push_back(elems);
    }
    j["independent"] = sets;
  } else {
    j["rank"] = m.rank_table().values;
  }
  return dump_line(j);
}

std::string emit(const Representation& r) {
  json j;
  j["kind"] = "representation";
  j["q"] = r.field.p;
  j["rows"] = r.rows;
  json mats = json::array();
  for (const auto& m : r.matrices) {
    json cols = json::array();
    for (const auto& c : m.columns()) cols.push_back(c);
    mats.push_back(cols);
  }
  j["matrices"] = mats;
  return dump_line(j);
}

std::string emit(const Network& n) {
  Network sorted = n;
  normalize(sorted);
  json j;
  j["kind"] = "network";
  j["nodes"] = sorted.nodes;
  json inputs = json::array();
  for (const auto& in : sorted.inputs) {
    inputs.push_back({{"edge", in.edge}, {"head", in.head}, {"msg", in.msg}});
  }
  j["inputs"] = inputs;
  json edges = json::array();
  for (const auto& e : sorted.edges) {
    edges.push_back({{"id", e.id}, {"tail", e.tail}, {"head", e.head}});
  }
  j["edges"] = edges;
  json demands = json::array();
  for (const auto& d : sorted.demands) {
    demands.push_back({{"node", d.node}, {"msg", d.msg}});
  }
  j["demands"] = demands;
  return dump_line(j);
}

std::string emit(const VectorLinearCode& c) {
  json j;
  j["kind"] = "code";
  j["q"] = c.field.p;
  j["k"] = c.k;
  j["m"] = c.m;
  json enc = json::object();
  for (const auto& [e, mat] : c.encodings) enc[std::to_string(e)] = mat.entries();
  j["encodings"] = enc;
  return dump_line(j);
}

std::string emit(const PolymatroidMapping& f) {
  json j;
  j["kind"] = "mapping";
  json map = json::object();
  for (const auto& [e, g] : f.to_ground) map[std::to_string(e)] = g;
  j["f"] = map;
  return dump_line(j);
}

std::string emit(const ChoiceScript& s) {
  json j;
  j["kind"] = "script";
  j["step1"] = s.step1.comps;
  j["step2"] = vectors_json(s.step2);
  j["step3"] = vectors_json(s.step3);
  return dump_line(j);
}

std::string emit(const Document& d) {
  return std::visit([](const auto& x) { return emit(x); }, d);
}

namespace {

RankTable parse_polymatroid(const json& j) {
  const int n = require_int(j, "n");
  if (n < 0 || n > 20) throw io_error("polymatroid: n out of range");
  std::vector<int> rank = int_list(require(j, "rank"), "polymatroid rank");
  if (rank.size() != (size_t(1) << n)) {
    throw io_error("polymatroid: rank must list exactly 2^n values");
  }
  for (int v : rank) {
    if (v < 0) throw io_error("polymatroid: rank values must be non-negative");
  }
  return RankTable(n, std::move(rank));
}

Matroid parse_matroid(const json& j) {
  const int n = require_int(j, "n");
  if (n < 0 || n > 16) throw io_error("matroid: n out of range");
  if (j.contains("rank")) {
    std::vector<int> rank = int_list(j.at("rank"), "matroid rank");
    if (rank.size() != (size_t(1) << n)) {
      throw io_error("matroid: rank must list exactly 2^n values");
    }
    return Matroid::from_rank_table(RankTable(n, std::move(rank)));
  }
  if (j.contains("independent")) {
    std::vector<uint32_t> sets;
    for (const auto& entry : j.at("independent")) {
      uint32_t mask = 0;
      for (int e : int_list(entry, "independent set")) {
        if (e < 1 || e > n) throw io_error("matroid: element out of range");
        mask |= uint32_t(1) << (e - 1);
      }
      sets.push_back(mask);
    }
    return Matroid::from_independent_sets(n, std::move(sets));
  }
  throw io_error("matroid: needs a \"rank\" or \"independent\" field");
}

Representation parse_representation(const json& j) {
  const int q = require_int(j, "q");
  const int rows = require_int(j, "rows");
  Representation rep{FieldSpec(q), rows, {}};
  const json mats = require(j, "matrices");
  if (!mats.is_array()) throw io_error("representation: matrices must be an array");
  for (const auto& mat : mats) {
    if (!mat.is_array()) throw io_error("representation: each matrix is a column list");
    std::vector<std::vector<int>> cols;
    for (const auto& col : mat) {
      std::vector<int> c = int_list(col, "matrix column");
      if (c.size() != size_t(rows)) {
        throw io_error("representation: column length must equal rows");
      }
      for (int v : c) {
        if (v < 0 || v >= q) throw io_error("representation: entry outside the field");
      }
      cols.push_back(std::move(c));
    }
    rep.matrices.push_back(FqMatrix::from_columns(rows, cols));
  }
  validate_representation(rep);
  return rep;
}

Network parse_network(const json& j) {
  Network net;
  net.nodes = int_list(require(j, "nodes"), "network nodes");
  for (const auto& in : require(j, "inputs")) {
    net.inputs.push_back({require_int(in, "edge"), require_int(in, "head"),
                          require_int(in, "msg")});
  }
  for (const auto& e : require(j, "edges")) {
    net.edges.push_back({require_int(e, "id"), require_int(e, "tail"),
                         require_int(e, "head")});
  }
  for (const auto& d : require(j, "demands")) {
    net.demands.push_back({require_int(d, "node"), require_int(d, "msg")});
  }
  normalize(net);
  const NetworkCheck c = validate(net);
  if (!c.ok) throw io_error("network: " + c.invariant + " (" + c.detail + ")");
  return net;
}

VectorLinearCode parse_code(const json& j) {
  const int q = require_int(j, "q");
  const int k = require_int(j, "k");
  const int m = require_int(j, "m");
  if (k < 1 || m < 0) throw io_error("code: k and m out of range");
  VectorLinearCode code{FieldSpec(q), k, m, {}};
  const json enc = require(j, "encodings");
  if (!enc.is_object()) throw io_error("code: encodings must map edge ids to matrices");
  for (const auto& [key, val] : enc.items()) {
    std::vector<int> entries = int_list(val, "encoding");
    if (entries.size() != size_t(m) * k * k) {
      throw io_error("code: encoding of edge " + key + " must have mk*k entries");
    }
    for (int v : entries) {
      if (v < 0 || v >= q) throw io_error("code: entry outside the field");
    }
    code.encodings.emplace(edge_key(key, "code"), FqMatrix(m * k, k, std::move(entries)));
  }
  return code;
}

PolymatroidMapping parse_mapping(const json& j) {
  PolymatroidMapping f;
  const json map = require(j, "f");
  if (!map.is_object()) throw io_error("mapping: f must be an object");
  for (const auto& [key, val] : map.items()) {
    if (!val.is_number_integer()) throw io_error("mapping: values must be integers");
    f.to_ground[edge_key(key, "mapping")] = val.get<int>();
  }
  return f;
}

ChoiceScript parse_script(const json& j) {
  ChoiceScript s;
  s.step1 = GroundVector(int_list(require(j, "step1"), "script step1"));
  s.step2 = vectors_from_json(require(j, "step2"), "script step2");
  s.step3 = vectors_from_json(require(j, "step3"), "script step3");
  return s;
}

}  // namespace

Document parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw io_error(std::string("syntax error: ") + e.what());
  }
  if (!j.is_object()) throw io_error("document must be a JSON object");
  const std::string kind = require(j, "kind").get<std::string>();
  if (kind == "polymatroid") return parse_polymatroid(j);
  if (kind == "matroid") return parse_matroid(j);
  if (kind == "representation") return parse_representation(j);
  if (kind == "network") return parse_network(j);
  if (kind == "code") return parse_code(j);
  if (kind == "mapping") return parse_mapping(j);
  if (kind == "script") return parse_script(j);
  throw io_error("unknown document kind \"" + kind + "\"");
}

std::vector<Document> parse_documents(std::istream& in) {
  std::vector<Document> docs;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      docs.push_back(parse_document(line));
    } catch (const io_error& e) {
      throw io_error("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return docs;
}

std::string export_dot(const Network& net, const VectorLinearCode* code) {
  Network sorted = net;
  normalize(sorted);
  std::ostringstream out;
  const bool empty = sorted.nodes.empty() && sorted.inputs.empty();
  if (empty) {
    out << "digraph {}\n";
    return out.str();
  }
  std::map<NodeId, std::vector<int>> demand_map;
  for (const auto& d : sorted.demands) demand_map[d.node].push_back(d.msg);

  auto columns_label = [&](EdgeId e) -> std::string {
    if (!code) return "";
    auto it = code->encodings.find(e);
    if (it == code->encodings.end()) return "";
    std::ostringstream s;
    s << ": ";
    const auto cols = it->second.columns();
    for (size_t c = 0; c < cols.size(); ++c) {
      if (c > 0) s << ",";
      s << "(";
      for (size_t r = 0; r < cols[c].size(); ++r) {
        if (r > 0) s << " ";
        s << cols[c][r];
      }
      s << ")";
    }
    return s.str();
  };

  out << "digraph {\n";
  out << "  rankdir=TB;\n";
  for (const auto& in : sorted.inputs) {
    out << "  msg" << in.msg << " [shape=box,label=\"x" << in.msg << "\"];\n";
  }
  for (NodeId v : sorted.nodes) {
    out << "  n" << v << " [label=\"" << v;
    if (auto it = demand_map.find(v); it != demand_map.end()) {
      out << " : ";
      for (size_t i = 0; i < it->second.size(); ++i) {
        if (i > 0) out << ",";
        out << "x" << it->second[i];
      }
    }
    out << "\"];\n";
  }
  for (const auto& in : sorted.inputs) {
    out << "  msg" << in.msg << " -> n" << in.head << " [label=\"e" << in.edge
        << columns_label(in.edge) << "\"];\n";
  }
  for (const auto& e : sorted.edges) {
    out << "  n" << e.tail << " -> n" << e.head << " [label=\"e" << e.id
        << columns_label(e.id) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace polynet
