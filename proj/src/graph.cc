// Copyright 2026 The OntoRich Authors.
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

#include "ontorich/graph.h"

#include <cctype>

#include "ontorich/error.h"

namespace ontorich {

CyclicHierarchy::CyclicHierarchy(std::vector<std::string> cycle)
    : Error("CyclicHierarchy",
            [&] {
              std::string path;
              for (const auto &c : cycle) path += c + " -> ";
              if (!cycle.empty()) path += cycle.front();
              return "subclass cycle " + path;
            }()),
      cycle_(std::move(cycle)) {}

Iri::Iri(std::string value) : value_(std::move(value)) {
  if (!IsValid(value_)) throw Error("InvalidIri", "'" + value_ + "'");
}

bool Iri::IsValid(std::string_view value) {
  if (value.empty()) return false;
  for (unsigned char c : value) {
    if (std::isspace(c)) return false;
  }
  size_t colon = value.find(':');
  return colon != std::string_view::npos && colon > 0;
}

std::string Iri::LocalName() const {
  size_t pos = value_.find_last_of("#/");
  if (pos == std::string::npos || pos + 1 >= value_.size()) {
    size_t colon = value_.find_last_of(':');
    if (pos == std::string::npos && colon != std::string::npos &&
        colon + 1 < value_.size()) {
      return value_.substr(colon + 1);
    }
    return value_;
  }
  return value_.substr(pos + 1);
}

namespace vocab {
bool IsBuiltin(std::string_view iri) {
  for (auto ns : {kRdf, kRdfs, kOwl, kXsd}) {
    if (iri.substr(0, ns.size()) == ns) return true;
  }
  return false;
}
}  // namespace vocab

Term Term::MakeIri(std::string iri) {
  Term t;
  t.kind_ = Kind::kIri;
  t.value_ = std::move(iri);
  return t;
}

Term Term::Blank(std::string label) {
  Term t;
  t.kind_ = Kind::kBlank;
  t.value_ = std::move(label);
  return t;
}

Term Term::Literal(std::string lexical, std::string datatype,
                   std::string lang) {
  Term t;
  t.kind_ = Kind::kLiteral;
  t.value_ = std::move(lexical);
  // A language-tagged literal is implicitly rdf:langString.
  if (!lang.empty()) datatype.clear();
  if (datatype == vocab::kXsdString) datatype.clear();
  t.datatype_ = std::move(datatype);
  for (auto &c : lang) c = static_cast<char>(std::tolower(c));
  t.lang_ = std::move(lang);
  return t;
}

std::string Term::ToString() const {
  switch (kind_) {
    case Kind::kIri:
      return "<" + value_ + ">";
    case Kind::kBlank:
      return "_:" + value_;
    case Kind::kLiteral: {
      std::string out = "\"" + value_ + "\"";
      if (!lang_.empty()) out += "@" + lang_;
      if (!datatype_.empty()) out += "^^<" + datatype_ + ">";
      return out;
    }
  }
  return value_;
}

bool Graph::Insert(Triple triple) {
  if (!triple.predicate.is_iri() || triple.subject.is_literal()) {
    throw Error("InvalidTriple", "predicate must be an IRI and subject must "
                                 "not be a literal");
  }
  return triples_.insert(std::move(triple)).second;
}

bool Graph::Erase(const Triple &triple) { return triples_.erase(triple) > 0; }

}  // namespace ontorich
