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

// In-memory RDF model: terms, triples and a set-semantics triple container.

#ifndef ONTORICH_GRAPH_H_
#define ONTORICH_GRAPH_H_

#include <compare>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ontorich {

// Absolute IRI. Construction validates: non-empty, no whitespace, has a
// scheme separator.
class Iri {
 public:
  Iri() = default;
  explicit Iri(std::string value);

  static bool IsValid(std::string_view value);

  const std::string &str() const { return value_; }
  bool empty() const { return value_.empty(); }

  // Substring after the last '#' or '/'; the whole IRI when neither occurs
  // or the remainder would be empty.
  std::string LocalName() const;

  auto operator<=>(const Iri &) const = default;

 private:
  std::string value_;
};

namespace vocab {
inline constexpr std::string_view kRdf =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";

inline const std::string kType = std::string(kRdf) + "type";
inline const std::string kFirst = std::string(kRdf) + "first";
inline const std::string kRest = std::string(kRdf) + "rest";
inline const std::string kNil = std::string(kRdf) + "nil";
inline const std::string kLangString = std::string(kRdf) + "langString";
inline const std::string kSubClassOf = std::string(kRdfs) + "subClassOf";
inline const std::string kLabel = std::string(kRdfs) + "label";
inline const std::string kDomain = std::string(kRdfs) + "domain";
inline const std::string kRange = std::string(kRdfs) + "range";
inline const std::string kRdfsClass = std::string(kRdfs) + "Class";
inline const std::string kOwlClass = std::string(kOwl) + "Class";
inline const std::string kObjectProperty = std::string(kOwl) + "ObjectProperty";
inline const std::string kDatatypeProperty =
    std::string(kOwl) + "DatatypeProperty";
inline const std::string kXsdString = std::string(kXsd) + "string";
inline const std::string kXsdInteger = std::string(kXsd) + "integer";
inline const std::string kXsdDecimal = std::string(kXsd) + "decimal";
inline const std::string kXsdDouble = std::string(kXsd) + "double";
inline const std::string kXsdBoolean = std::string(kXsd) + "boolean";

// True for IRIs in the rdf, rdfs, owl or xsd namespaces.
bool IsBuiltin(std::string_view iri);
}  // namespace vocab

// An RDF term: IRI, blank node (value holds the label) or literal (value
// holds the lexical form, plus optional datatype IRI or language tag).
class Term {
 public:
  enum class Kind { kIri = 0, kBlank = 1, kLiteral = 2 };

  Term() = default;

  static Term MakeIri(std::string iri);
  static Term MakeIri(const Iri &iri) { return MakeIri(iri.str()); }
  static Term Blank(std::string label);
  static Term Literal(std::string lexical, std::string datatype = {},
                      std::string lang = {});

  Kind kind() const { return kind_; }
  bool is_iri() const { return kind_ == Kind::kIri; }
  bool is_blank() const { return kind_ == Kind::kBlank; }
  bool is_literal() const { return kind_ == Kind::kLiteral; }

  const std::string &value() const { return value_; }
  const std::string &datatype() const { return datatype_; }
  const std::string &lang() const { return lang_; }

  // Human-readable N-Triples-like rendering, for diagnostics.
  std::string ToString() const;

  auto operator<=>(const Term &) const = default;

 private:
  Kind kind_ = Kind::kIri;
  std::string value_;
  std::string datatype_;
  std::string lang_;
};

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  auto operator<=>(const Triple &) const = default;
};

// Set of triples plus the prefix table used for (de)serialization.
class Graph {
 public:
  using Prefixes = std::map<std::string, std::string>;

  // Returns false when the triple was already present.
  bool Insert(Triple triple);
  bool Insert(Term s, Term p, Term o) {
    return Insert(Triple{std::move(s), std::move(p), std::move(o)});
  }
  bool Erase(const Triple &triple);
  bool Contains(const Triple &triple) const {
    return triples_.count(triple) > 0;
  }

  const std::set<Triple> &triples() const { return triples_; }
  size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }

  Prefixes &prefixes() { return prefixes_; }
  const Prefixes &prefixes() const { return prefixes_; }

  // Triple-set equality; prefix tables are presentation only.
  bool operator==(const Graph &other) const {
    return triples_ == other.triples_;
  }

 private:
  std::set<Triple> triples_;
  Prefixes prefixes_;
};

}  // namespace ontorich

#endif  // ONTORICH_GRAPH_H_
