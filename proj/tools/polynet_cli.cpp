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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "polynet/coding.hpp"
#include "polynet/construct.hpp"
#include "polynet/io.hpp"
#include "polynet/matroid.hpp"
#include "polynet/polymatroid.hpp"
#include "polynet/representation.hpp"

namespace {

using nlohmann::json;
using namespace polynet;

constexpr int kExitOk = 0;        // ok / found
constexpr int kExitInvalid = 1;   // verified-absent / invalid
constexpr int kExitError = 2;     // error / budget exceeded

std::vector<Document> read_documents(const std::string& in_path) {
  if (in_path.empty()) return parse_documents(std::cin);
  std::ifstream file(in_path);
  if (!file) throw io_error("cannot open input file " + in_path);
  return parse_documents(file);
}

std::vector<int> mask_to_elements(uint32_t mask) {
  std::vector<int> out;
  for (int e = 1; mask != 0; ++e, mask >>= 1) {
    if (mask & 1) out.push_back(e);
  }
  return out;
}

void print_vectors(const std::vector<GroundVector>& vs, int n) {
  json j;
  j["kind"] = "vectors";
  j["n"] = n;
  json arr = json::array();
  for (const auto& v : vs) arr.push_back(v.comps);
  j["vectors"] = arr;
  std::cout << j.dump() << "\n";
}

void warn_if_axioms_fail(const RankTable& t) {
  const AxiomCheck c = check_rank_axioms(t);
  if (!c.ok) {
    std::cerr << "warning: rank table violates " << c.axiom << "\n";
  }
}

uint64_t budget_from_env(uint64_t fallback) {
  if (const char* env = std::getenv("POLYNET_BUDGET")) {
    return std::strtoull(env, nullptr, 10);
  }
  return fallback;
}

int run(int argc, char** argv) {
  CLI::App app{"Discrete polymatroids, their finite-field representations, and "
               "vector linear network codes"};
  app.require_subcommand(1);
  app.fallthrough();  // --in may follow the subcommand

  std::string in_path;
  app.add_option("--in", in_path, "input file (defaults to stdin)")->capture_default_str();

  std::string which, script_path;
  int set_elem = 0;
  int q = 2;
  int rows = 2;
  int k = 0;
  int rounds = -1;
  uint64_t budget = budget_from_env(kDefaultSearchBudget);

  auto* cmd_axioms = app.add_subcommand("axioms", "check the rank axioms of a polymatroid");
  auto* cmd_members = app.add_subcommand("members", "enumerate the members of a polymatroid");
  auto* cmd_bases = app.add_subcommand("bases", "list the basis vectors of a polymatroid");
  auto* cmd_sets = app.add_subcommand("sets", "derived vector sets of a polymatroid");
  cmd_sets->add_option("--which", which, "excluded | di | ci | r")->required();
  cmd_sets->add_option("--i", set_elem, "ground element for di/ci");
  auto* cmd_rep_verify = app.add_subcommand("rep-verify", "verify a representation against a polymatroid");
  auto* cmd_rep_table = app.add_subcommand("rep-rank-table", "rank table of a subspace arrangement");
  auto* cmd_rep_search = app.add_subcommand("rep-search", "search for a representation");
  cmd_rep_search->add_option("--q", q, "field size")->required();
  cmd_rep_search->add_option("--rows", rows, "ambient dimension")->required();
  auto* cmd_net_validate = app.add_subcommand("net-validate", "validate a network document");
  auto* cmd_construct = app.add_subcommand("construct", "build a network from a polymatroid");
  cmd_construct->add_option("--script", script_path, "choice script file");
  cmd_construct->add_option("--rounds", rounds, "sink rounds when unscripted");
  auto* cmd_code_verify = app.add_subcommand("code-verify", "verify a vector linear code");
  auto* cmd_code_from_rep = app.add_subcommand("code-from-rep", "code from a representation and mapping");
  cmd_code_from_rep->add_option("--k", k, "code dimension (default rho_max)");
  auto* cmd_poly_from_code = app.add_subcommand("poly-from-code", "polymatroid induced by a verified code");
  auto* cmd_dpn = app.add_subcommand("dpn-check", "discrete-polymatroidal check of a network");
  auto* cmd_scalar = app.add_subcommand("scalar-search", "exhaustive scalar solution search");
  cmd_scalar->add_option("--q", q, "field size")->required();
  cmd_scalar->add_option("--budget", budget, "work budget");
  auto* cmd_dot = app.add_subcommand("dot", "Graphviz export of a network");

  CLI11_PARSE(app, argc, argv);

  const auto docs = read_documents(in_path);

  if (cmd_axioms->parsed()) {
    const auto& t = expect_document<RankTable>(docs, "polymatroid");
    const AxiomCheck c = check_rank_axioms(t);
    json j;
    j["ok"] = c.ok;
    if (!c.ok) {
      j["axiom"] = c.axiom;
      j["witness_a"] = mask_to_elements(c.witness_a);
      j["witness_b"] = mask_to_elements(c.witness_b);
    }
    std::cout << j.dump() << "\n";
    return c.ok ? kExitOk : kExitInvalid;
  }
  if (cmd_members->parsed() || cmd_bases->parsed() || cmd_sets->parsed()) {
    const auto& t = expect_document<RankTable>(docs, "polymatroid");
    DiscretePolymatroid d(t);  // axiom failures are an error for set queries
    if (cmd_members->parsed()) {
      print_vectors(d.members(), t.n);
    } else if (cmd_bases->parsed()) {
      print_vectors(basis_vectors(d), t.n);
    } else {
      std::vector<GroundVector> vs;
      if (which == "excluded") {
        vs = excluded_vectors(d);
      } else if (which == "di") {
        vs = d_i_vectors(d, set_elem);
      } else if (which == "ci") {
        vs = c_i_vectors(d, set_elem);
      } else if (which == "r") {
        vs = r_vectors(d);
      } else {
        throw io_error("sets: --which must be excluded, di, ci or r");
      }
      print_vectors(vs, t.n);
    }
    return kExitOk;
  }
  if (cmd_rep_verify->parsed()) {
    const auto& rep = expect_document<Representation>(docs, "representation");
    const auto& t = expect_document<RankTable>(docs, "polymatroid");
    warn_if_axioms_fail(t);
    const bool ok = verify_representation(rep, t);
    std::cout << json{{"ok", ok}}.dump() << "\n";
    return ok ? kExitOk : kExitInvalid;
  }
  if (cmd_rep_table->parsed()) {
    const auto& rep = expect_document<Representation>(docs, "representation");
    std::cout << emit(rank_table_from_matrices(rep));
    return kExitOk;
  }
  if (cmd_rep_search->parsed()) {
    const auto& t = expect_document<RankTable>(docs, "polymatroid");
    const auto rep = search_representation(t, FieldSpec(q), rows);
    if (!rep) {
      std::cout << json{{"found", false}}.dump() << "\n";
      return kExitInvalid;
    }
    std::cout << emit(*rep);
    return kExitOk;
  }
  if (cmd_net_validate->parsed()) {
    // parse_document already rejects invalid networks; surface the verdict.
    const auto& net = expect_document<Network>(docs, "network");
    const NetworkCheck c = validate(net);
    json j;
    j["ok"] = c.ok;
    if (!c.ok) {
      j["invariant"] = c.invariant;
      j["detail"] = c.detail;
    }
    std::cout << j.dump() << "\n";
    return c.ok ? kExitOk : kExitInvalid;
  }
  if (cmd_construct->parsed()) {
    const auto& t = expect_document<RankTable>(docs, "polymatroid");
    DiscretePolymatroid d(t);
    std::optional<ChoiceScript> script;
    if (!script_path.empty()) {
      std::ifstream f(script_path);
      if (!f) throw io_error("cannot open script file " + script_path);
      const auto script_docs = parse_documents(f);
      script = expect_document<ChoiceScript>(script_docs, "script");
    }
    std::optional<int> round_cap;
    if (rounds >= 0) round_cap = rounds;
    const ConstructionResult result = construct(d, script, round_cap);
    if (!result.uncovered.empty()) {
      std::cerr << "warning: step 2 never reached element(s)";
      for (int e : result.uncovered) std::cerr << " " << e;
      std::cerr << "\n";
    }
    std::cout << emit(result.network) << emit(result.mapping) << emit(result.transcript);
    return kExitOk;
  }
  if (cmd_code_verify->parsed()) {
    const auto& net = expect_document<Network>(docs, "network");
    const auto& code = expect_document<VectorLinearCode>(docs, "code");
    const CodeCheck c = verify_code(net, code);
    json j;
    j["ok"] = c.ok;
    if (!c.ok) {
      j["condition"] = c.condition;
      j["detail"] = c.detail;
    }
    std::cout << j.dump() << "\n";
    return c.ok ? kExitOk : kExitInvalid;
  }
  if (cmd_code_from_rep->parsed()) {
    const auto& net = expect_document<Network>(docs, "network");
    const auto& rep = expect_document<Representation>(docs, "representation");
    const auto& f = expect_document<PolymatroidMapping>(docs, "mapping");
    const int dim = k > 0 ? k : rho_max(rank_table_from_matrices(rep));
    std::cout << emit(code_from_representation(net, rep, f, dim));
    return kExitOk;
  }
  if (cmd_poly_from_code->parsed()) {
    const auto& net = expect_document<Network>(docs, "network");
    const auto& code = expect_document<VectorLinearCode>(docs, "code");
    const auto [t, f] = polymatroid_from_code(net, code);
    std::cout << emit(t) << emit(f);
    return kExitOk;
  }
  if (cmd_dpn->parsed()) {
    const auto& net = expect_document<Network>(docs, "network");
    const auto& t = expect_document<RankTable>(docs, "polymatroid");
    const auto& f = expect_document<PolymatroidMapping>(docs, "mapping");
    const DpnCheck c = check_dpn(net, t, f);
    json j;
    j["ok"] = c.ok;
    if (!c.ok) {
      j["condition"] = c.condition;
      j["detail"] = c.detail;
    }
    std::cout << j.dump() << "\n";
    return c.ok ? kExitOk : kExitInvalid;
  }
  if (cmd_scalar->parsed()) {
    const auto& net = expect_document<Network>(docs, "network");
    const auto code = search_scalar_solution(net, FieldSpec(q), budget);
    if (!code) {
      std::cout << json{{"found", false}}.dump() << "\n";
      return kExitInvalid;
    }
    std::cout << emit(*code);
    return kExitOk;
  }
  if (cmd_dot->parsed()) {
    const auto& net = expect_document<Network>(docs, "network");
    const VectorLinearCode* code = nullptr;
    for (const auto& d : docs) {
      if (const auto* c = std::get_if<VectorLinearCode>(&d)) code = c;
    }
    std::cout << export_dot(net, code);
    return kExitOk;
  }
  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const SearchBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
