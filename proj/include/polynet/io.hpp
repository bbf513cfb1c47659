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

#ifndef POLYNET_IO_HPP
#define POLYNET_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "polynet/coding.hpp"
#include "polynet/construct.hpp"
#include "polynet/matroid.hpp"
#include "polynet/network.hpp"
#include "polynet/polymatroid.hpp"
#include "polynet/representation.hpp"

namespace polynet {

class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One document per line; the "kind" field selects the payload. Emission is
/// byte-stable: keys sorted, fixed integer formatting, one trailing newline.
using Document = std::variant<RankTable, Matroid, Representation, Network,
                              VectorLinearCode, PolymatroidMapping, ChoiceScript>;

std::string emit(const RankTable& t);
std::string emit(const Matroid& m);
std::string emit(const Representation& r);
std::string emit(const Network& n);
std::string emit(const VectorLinearCode& c);
std::string emit(const PolymatroidMapping& f);
std::string emit(const ChoiceScript& s);
std::string emit(const Document& d);

/// Parses one document. Shape violations throw io_error with a field path;
/// semantic checks follow the per-kind rules (networks must validate, rank
/// tables may fail the axioms here and only error at use).
Document parse_document(const std::string& text);

/// Parses a stream of concatenated documents (one JSON object per line).
std::vector<Document> parse_documents(std::istream& in);

/// Pulls the unique document of type T out of a parsed stream.
template <typename T>
const T& expect_document(const std::vector<Document>& docs, const char* kind) {
  const T* found = nullptr;
  for (const auto& d : docs) {
    if (const T* p = std::get_if<T>(&d)) {
      if (found) throw io_error(std::string("duplicate ") + kind + " document in input");
      found = p;
    }
  }
  if (!found) throw io_error(std::string("missing ") + kind + " document in input");
  return *found;
}

/// Graphviz rendering: message sources as boxes, demand labels on sinks,
/// optional encoding-column annotations when a code is supplied.
std::string export_dot(const Network& net, const VectorLinearCode* code = nullptr);

}  // namespace polynet

#endif  // POLYNET_IO_HPP
