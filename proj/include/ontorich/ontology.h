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

// Structured ontology view over an RDF graph, plus the edit operations
// that keep both in sync.

#ifndef ONTORICH_ONTOLOGY_H_
#define ONTORICH_ONTOLOGY_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ontorich/graph.h"

namespace ontorich {

struct PropertyDecl {
  std::set<Iri> domains;
  std::set<Iri> ranges;

  bool operator==(const PropertyDecl &) const = default;
};

// (subject, property, object) between two IRIs.
struct Assertion {
  Iri subject;
  Iri property;
  Iri object;

  auto operator<=>(const Assertion &) const = default;
};

struct AttributeAssertion {
  Iri subject;
  Iri attribute;
  Term value;

  auto operator<=>(const AttributeAssertion &) const = default;
};

// Derived view of a Graph. Blank nodes never appear as classes, properties
// or instances. The backing graph travels with the view so edits can update
// both consistently.
struct OntologySnapshot {
  Graph graph;

  std::set<Iri> classes;
  std::set<std::pair<Iri, Iri>> subclass_edges;  // (child, parent)
  std::map<Iri, PropertyDecl> object_properties;
  std::map<Iri, PropertyDecl> datatype_properties;
  std::set<std::pair<Iri, Iri>> attributes;  // (class, datatype property)
  std::map<Iri, std::set<Iri>> instances;    // instance -> direct types
  std::set<Assertion> relation_assertions;   // instance -> instance
  std::set<Assertion> schema_relations;      // class -> class
  std::set<AttributeAssertion> attribute_assertions;
  std::map<Iri, std::string> labels;
  size_t ignored_triples = 0;

  // rdfs:label, or the IRI local name.
  std::string Label(const Iri &iri) const;

  std::set<Iri> Parents(const Iri &cls) const;
  std::set<Iri> Children(const Iri &cls) const;
  // Reflexive-transitive closures over the subclass edges.
  std::set<Iri> AncestorsOrSelf(const Iri &cls) const;
  std::set<Iri> DescendantsOrSelf(const Iri &cls) const;

  bool operator==(const OntologySnapshot &) const = default;
};

OntologySnapshot BuildOntologyView(Graph graph);

// --- edits ---

struct AddClass {
  Iri iri;
  std::optional<Iri> parent;
  std::string label;
};
struct RemoveClass {
  Iri iri;
};
struct AddSubclassEdge {
  Iri child;
  Iri parent;
};
struct RemoveSubclassEdge {
  Iri child;
  Iri parent;
};
struct AddObjectProperty {
  Iri iri;
  std::optional<Iri> domain;
  std::optional<Iri> range;
  std::string label;
};
struct RemoveObjectProperty {
  Iri iri;
};
struct AddDatatypeProperty {
  Iri iri;
  std::optional<Iri> domain;
  std::string label;
};
struct RemoveDatatypeProperty {
  Iri iri;
};
struct AddInstance {
  Iri iri;
  Iri cls;
  std::string label;  // used only when the instance is new
};
struct RemoveInstance {
  Iri iri;
  Iri cls;
};
struct AddRelationAssertion {
  Assertion assertion;
};
struct RemoveRelationAssertion {
  Assertion assertion;
};
struct AddAttributeAssertion {
  AttributeAssertion assertion;
};
struct RemoveAttributeAssertion {
  AttributeAssertion assertion;
};
// Class-level relation such as (Processor, partOf, Computer).
struct AddSchemaRelation {
  Assertion relation;
};
struct RemoveSchemaRelation {
  Assertion relation;
};

using EditOp =
    std::variant<AddClass, RemoveClass, AddSubclassEdge, RemoveSubclassEdge,
                 AddObjectProperty, RemoveObjectProperty, AddDatatypeProperty,
                 RemoveDatatypeProperty, AddInstance, RemoveInstance,
                 AddRelationAssertion, RemoveRelationAssertion,
                 AddAttributeAssertion, RemoveAttributeAssertion,
                 AddSchemaRelation, RemoveSchemaRelation>;

// Name of the alternative, e.g. "AddClass".
std::string EditKindName(const EditOp &edit);

// Applies one edit. Throws Error("DanglingReference") when the edit names a
// missing entity, Error("DuplicateEntity") when it re-adds an existing one.
OntologySnapshot ApplyEdit(const OntologySnapshot &snapshot,
                           const EditOp &edit);

// Applies edits in order; all-or-nothing.
OntologySnapshot ApplyEdits(const OntologySnapshot &snapshot,
                            const std::vector<EditOp> &edits);

// The edit that undoes `edit` when applied right after it on `before`.
EditOp Inverse(const EditOp &edit);

// --- tree view ---

struct ClassTreeNode {
  Iri iri;
  std::string label;
  std::vector<ClassTreeNode> children;
};

// Roots are classes without parents; a class with k parents is listed under
// each of them. Children sorted by label, then IRI. Throws CyclicHierarchy.
std::vector<ClassTreeNode> ClassTree(const OntologySnapshot &snapshot);

// --- validation ---

enum class IssueKind {
  kSubclassCycle,
  kDanglingTypeReference,
  kUndeclaredPropertyUse,
  kDomainViolation,
  kRangeViolation,
};

std::string IssueKindName(IssueKind kind);

struct Issue {
  IssueKind kind;
  std::vector<Iri> entities;
  std::string message;
};

std::vector<Issue> ValidateStructure(const OntologySnapshot &snapshot);

// Any simple subclass cycle, as a list of classes; empty when acyclic.
std::vector<Iri> FindSubclassCycle(const OntologySnapshot &snapshot);

}  // namespace ontorich

#endif  // ONTORICH_ONTOLOGY_H_
