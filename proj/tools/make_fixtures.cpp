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

// Regenerates the bundled fixture files from the in-code catalog:
//   make_fixtures <output-dir>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "polynet/fixtures.hpp"
#include "polynet/io.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures <output-dir>\n";
    return 2;
  }
  namespace fx = polynet::fixtures;
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);

  const std::vector<std::pair<std::string, std::string>> files = {
      {"poly_n2.json", polynet::emit(fx::sample_table_n2())},
      {"poly_n3.json", polynet::emit(fx::sample_table_n3())},
      {"poly_doubled_u24.json", polynet::emit(fx::doubled_u24_table())},
      {"matroid_u24.json", polynet::emit(fx::u24_matroid())},
      {"rep_u24_gf3.json", polynet::emit(fx::u24_rep_gf3())},
      {"rep_doubled_u24_gf2.json", polynet::emit(fx::doubled_u24_rep())},
      {"rep_non_pappus_gf3.json", polynet::emit(fx::non_pappus_rep())},
      {"net_m.json", polynet::emit(fx::m_network())},
      {"rep_m12_gf2.json", polynet::emit(fx::m_network_rep12())},
      {"rep_m20_gf2.json", polynet::emit(fx::m_network_rep20())},
      {"map_m_f1.json", polynet::emit(fx::m_network_f1())},
      {"map_m_f2.json", polynet::emit(fx::m_network_f2())},
      {"code_m_sol1.json", polynet::emit(fx::m_network_solution1())},
      {"code_m_sol2.json", polynet::emit(fx::m_network_solution2())},
      {"net_doubled_u24.json", polynet::emit(fx::doubled_u24_network())},
      {"script_doubled_u24.json", polynet::emit(fx::doubled_u24_script())},
      {"net_m_derived.json", polynet::emit(fx::m_derived_network())},
      {"script_m_derived.json", polynet::emit(fx::m_derived_script())},
  };
  for (const auto& [name, text] : files) {
    std::ofstream out(dir / name, std::ios::binary);
    out << text;
    if (!out) {
      std::cerr << "failed to write " << (dir / name) << "\n";
      return 2;
    }
  }
  std::cout << "wrote " << files.size() << " fixtures to " << dir << "\n";
  return 0;
}
