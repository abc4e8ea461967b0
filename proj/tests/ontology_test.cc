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

#include "ontorich/ontology.h"

#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "ontorich/fileio.h"
#include "ontorich/turtle.h"
#include "oracle/random_graph.h"
#include "test_util.h"

namespace ontorich {
namespace {

const std::string kEx = "@prefix ex: <http://x/> .\n"
                        "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
                        "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n";

OntologySnapshot View(const std::string &body) {
  return BuildOntologyView(ParseTurtle(kEx + body));
}

Iri X(const std::string &local) { return Iri("http://x/" + local); }

TEST(OntologyView, Examples) {
  OntologySnapshot a = View("ex:B rdfs:subClassOf ex:A .");
  EXPECT_EQ(a.classes.size(), 2u);
  EXPECT_EQ(a.subclass_edges.size(), 1u);
  EXPECT_TRUE(a.instances.empty());

  OntologySnapshot empty = BuildOntologyView(Graph());
  EXPECT_TRUE(empty.classes.empty());
  EXPECT_EQ(empty.ignored_triples, 0u);

  OntologySnapshot c = View("ex:i a ex:A . ex:A a owl:Class .");
  EXPECT_EQ(c.classes, (std::set<Iri>{X("A")}));
  ASSERT_EQ(c.instances.size(), 1u);
  EXPECT_EQ(c.instances.at(X("i")), (std::set<Iri>{X("A")}));
}

TEST(OntologyView, FixtureContents) {
  OntologySnapshot s = BuildOntologyView(
      ParseTurtle(ReadFile(testutil::Fixture("micro1.ttl"))));
  EXPECT_EQ(s.classes.size(), 6u);
  EXPECT_EQ(s.subclass_edges.size(), 3u);
  EXPECT_EQ(s.object_properties.size(), 2u);
  EXPECT_EQ(s.datatype_properties.size(), 2u);
  EXPECT_EQ(s.attributes.size(), 2u);
  EXPECT_EQ(s.instances.size(), 6u);
  EXPECT_EQ(s.relation_assertions.size(), 4u);
  EXPECT_EQ(s.attribute_assertions.size(), 3u);
  EXPECT_EQ(s.ignored_triples, 0u);
  Iri red("http://example.org/wine#RedWine");
  EXPECT_EQ(s.Label(red), "Red wine");
  EXPECT_EQ(s.Label(Iri("http://example.org/wine#Winery")), "Winery");
  EXPECT_EQ(s.AncestorsOrSelf(red).size(), 3u);
  EXPECT_EQ(s.DescendantsOrSelf(Iri("http://example.org/wine#Drink")).size(), 4u);
}

TEST(OntologyView, IgnoredTriplesAreCountedAndKept) {
  OntologySnapshot s = View(
      "ex:A a owl:Class . ex:i a ex:A . ex:i ex:unknown ex:j . "
      "_:b a owl:Class . ex:k a ex:NotAClass .");
  EXPECT_EQ(s.ignored_triples, 3u);
  EXPECT_EQ(s.graph.size(), 5u);
  EXPECT_EQ(s.classes.size(), 1u);
}

TEST(OntologyView, LabelPreference) {
  OntologySnapshot s = View(
      "ex:A a owl:Class ; rdfs:label \"Wein\"@de, \"Wine\"@en . "
      "ex:B a owl:Class ; rdfs:label \"Bee\"@en, \"B plain\" .");
  EXPECT_EQ(s.Label(X("A")), "Wine");
  EXPECT_EQ(s.Label(X("B")), "B plain");
}

// Each rdfs:subClassOf triple between IRIs is exactly one view edge.
TEST(OntologyView, SubclassEdgesMatchTriples) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 200; ++round) {
    Graph g = oracle::RandomOntology(rng, {.allow_cycles = true});
    OntologySnapshot s = BuildOntologyView(g);
    size_t triples = 0;
    for (const Triple &t : g.triples()) {
      if (t.predicate.value() == vocab::kSubClassOf) {
        ++triples;
        EXPECT_TRUE(s.subclass_edges.count(
            {Iri(t.subject.value()), Iri(t.object.value())}));
      }
    }
    EXPECT_EQ(triples, s.subclass_edges.size());
    for (const auto &[child, parent] : s.subclass_edges) {
      EXPECT_TRUE(s.classes.count(child) && s.classes.count(parent));
    }
    for (const auto &[i, types] : s.instances) {
      for (const Iri &t : types) EXPECT_TRUE(s.classes.count(t));
    }
    for (const Assertion &a : s.relation_assertions) {
      EXPECT_TRUE(s.object_properties.count(a.property));
    }
  }
}

TEST(ApplyEdit, AddClassUnderParent) {
  OntologySnapshot s = View("ex:Computer a owl:Class .");
  OntologySnapshot t = ApplyEdit(s, AddClass{X("Laptop"), X("Computer"), "laptop"});
  EXPECT_EQ(t.classes.size(), s.classes.size() + 1);
  EXPECT_EQ(t.subclass_edges.size(), s.subclass_edges.size() + 1);
  EXPECT_EQ(t.Label(X("Laptop")), "laptop");
  EXPECT_EQ(ApplyEdit(t, RemoveClass{X("Laptop")}), s);
  // Computer is now referenced by Laptop's edge.
  EXPECT_ERROR_KIND(ApplyEdit(t, RemoveClass{X("Computer")}),
                    "DanglingReference");
}

TEST(ApplyEdit, Errors) {
  OntologySnapshot s = View("ex:A a owl:Class . ex:p a owl:ObjectProperty . "
                            "ex:i a ex:A .");
  EXPECT_ERROR_KIND(ApplyEdit(s, AddInstance{X("j"), X("Missing"), ""}),
                    "DanglingReference");
  EXPECT_ERROR_KIND(ApplyEdit(s, AddClass{X("A"), std::nullopt, ""}),
                    "DuplicateEntity");
  EXPECT_ERROR_KIND(ApplyEdit(s, AddClass{X("B"), X("Missing"), ""}),
                    "DanglingReference");
  EXPECT_ERROR_KIND(
      ApplyEdit(s, AddRelationAssertion{{X("i"), X("p"), X("nobody")}}),
      "DanglingReference");
  EXPECT_ERROR_KIND(
      ApplyEdit(s, AddRelationAssertion{{X("i"), X("q"), X("i")}}),
      "DanglingReference");
  EXPECT_ERROR_KIND(ApplyEdit(s, RemoveClass{X("Nope")}), "DanglingReference");
  // A class still used by an instance cannot be removed.
  EXPECT_ERROR_KIND(ApplyEdit(s, RemoveClass{X("A")}), "DanglingReference");
}

TEST(ApplyEdit, RemoveJustAddedClassRestores) {
  OntologySnapshot s = View("ex:Computer a owl:Class .");
  OntologySnapshot t = ApplyEdit(s, AddClass{X("Laptop"), std::nullopt, "Laptop"});
  EXPECT_EQ(ApplyEdit(t, RemoveClass{X("Laptop")}), s);
}

TEST(ApplyEdits, AllOrNothing) {
  OntologySnapshot s = View("ex:A a owl:Class .");
  std::vector<EditOp> edits = {AddClass{X("B"), X("A"), ""},
                               AddInstance{X("i"), X("Missing"), ""}};
  EXPECT_ERROR_KIND(ApplyEdits(s, edits), "DanglingReference");
  edits.pop_back();
  edits.push_back(AddInstance{X("i"), X("B"), "eye"});
  OntologySnapshot t = ApplyEdits(s, edits);
  EXPECT_EQ(t.instances.size(), 1u);
  EXPECT_EQ(t.Label(X("i")), "eye");
}

TEST(ApplyEdit, EditKindNames) {
  EXPECT_EQ(EditKindName(AddClass{X("A"), std::nullopt, ""}), "AddClass");
  EXPECT_EQ(EditKindName(RemoveSchemaRelation{}), "RemoveSchemaRelation");
}

// apply(apply(s, e), inverse(e)) == s for every Add* edit that applies.
TEST(ApplyEdit, InverseProperty) {
  std::mt19937_64 rng(99);
  auto pick = [&](const auto &container) {
    auto it = container.begin();
    std::advance(it, std::uniform_int_distribution<size_t>(
                         0, container.size() - 1)(rng));
    return *it;
  };
  const std::string ns = oracle::kNs;
  size_t applied = 0;
  for (int round = 0; round < 400; ++round) {
    OntologySnapshot s = BuildOntologyView(oracle::RandomOntology(rng));
    std::vector<EditOp> edits;
    Iri fresh(ns + "Fresh" + std::to_string(round));
    edits.push_back(AddClass{fresh, std::nullopt, "Fresh"});
    edits.push_back(AddObjectProperty{Iri(ns + "newProp"), std::nullopt,
                                      std::nullopt, ""});
    edits.push_back(AddDatatypeProperty{Iri(ns + "newAttr"), std::nullopt, "a"});
    if (!s.classes.empty()) {
      Iri c = pick(s.classes);
      edits.push_back(AddClass{fresh, c, ""});
      edits.push_back(AddSubclassEdge{pick(s.classes), c});
      edits.push_back(AddInstance{Iri(ns + "newInst"), c, "new"});
      edits.push_back(AddObjectProperty{Iri(ns + "newProp"), c, pick(s.classes), "np"});
      edits.push_back(AddDatatypeProperty{Iri(ns + "newAttr"), c, ""});
      if (!s.object_properties.empty()) {
        edits.push_back(AddSchemaRelation{
            {c, pick(s.object_properties).first, pick(s.classes)}});
      }
    }
    if (!s.instances.empty()) {
      Iri i = pick(s.instances).first;
      if (!s.classes.empty()) edits.push_back(AddInstance{i, pick(s.classes), ""});
      if (!s.object_properties.empty()) {
        edits.push_back(AddRelationAssertion{
            {i, pick(s.object_properties).first, pick(s.instances).first}});
      }
      if (!s.datatype_properties.empty()) {
        edits.push_back(AddAttributeAssertion{
            {i, pick(s.datatype_properties).first, Term::Literal("v")}});
      }
    }
    for (const EditOp &e : edits) {
      OntologySnapshot t;
      try {
        t = ApplyEdit(s, e);
      } catch (const Error &) {
        continue;
      }
      ++applied;
      OntologySnapshot back = ApplyEdit(t, Inverse(e));
      ASSERT_TRUE(back == s) << EditKindName(e) << " round " << round;
    }
  }
  EXPECT_GT(applied, 1000u);
}

std::vector<std::string> Flatten(const std::vector<ClassTreeNode> &forest,
                                 int depth = 0) {
  std::vector<std::string> out;
  for (const auto &n : forest) {
    out.push_back(std::string(depth * 2, ' ') + n.label);
    for (auto &x : Flatten(n.children, depth + 1)) out.push_back(x);
  }
  return out;
}

TEST(ClassTree, Layouts) {
  EXPECT_EQ(Flatten(ClassTree(View("ex:A a owl:Class ."))),
            (std::vector<std::string>{"A"}));
  EXPECT_EQ(Flatten(ClassTree(View("ex:B rdfs:subClassOf ex:A . "
                                   "ex:C rdfs:subClassOf ex:B ."))),
            (std::vector<std::string>{"A", "  B", "    C"}));
  EXPECT_EQ(Flatten(ClassTree(View("ex:B rdfs:subClassOf ex:A1, ex:A2 . "
                                   "ex:Z rdfs:subClassOf ex:A1 ."))),
            (std::vector<std::string>{"A1", "  B", "  Z", "A2", "  B"}));
}

TEST(ClassTree, Cycle) {
  OntologySnapshot s = View("ex:A rdfs:subClassOf ex:B . ex:B rdfs:subClassOf ex:A .");
  try {
    ClassTree(s);
    FAIL();
  } catch (const CyclicHierarchy &e) {
    EXPECT_EQ(e.kind(), "CyclicHierarchy");
    EXPECT_EQ(e.cycle().size(), 2u);
  }
}

// Every class is listed under each of its parents and nowhere else; with
// duplicated subtrees the number of listings is the number of root paths.
TEST(ClassTree, NodeMultiset) {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 200; ++round) {
    OntologySnapshot s = BuildOntologyView(oracle::RandomOntology(rng));
    std::map<Iri, size_t> seen;
    std::map<Iri, std::set<Iri>> under;
    std::function<void(const std::vector<ClassTreeNode> &, const Iri *)> walk =
        [&](const std::vector<ClassTreeNode> &nodes, const Iri *parent) {
          for (const auto &n : nodes) {
            ++seen[n.iri];
            if (parent) under[n.iri].insert(*parent);
            walk(n.children, &n.iri);
          }
        };
    walk(ClassTree(s), nullptr);
    std::map<Iri, size_t> paths;
    std::function<size_t(const Iri &)> count = [&](const Iri &c) -> size_t {
      auto it = paths.find(c);
      if (it != paths.end()) return it->second;
      size_t n = 0;
      for (const Iri &p : s.Parents(c)) n += count(p);
      return paths[c] = std::max<size_t>(n, 1);
    };
    for (const Iri &c : s.classes) {
      EXPECT_EQ(under[c], s.Parents(c));
      EXPECT_EQ(seen[c], count(c));
      EXPECT_GE(seen[c], std::max<size_t>(1, s.Parents(c).size()));
    }
  }
}

std::vector<std::string> Kinds(const std::vector<Issue> &issues) {
  std::vector<std::string> out;
  for (const auto &i : issues) out.push_back(IssueKindName(i.kind));
  return out;
}

TEST(ValidateStructure, Examples) {
  EXPECT_TRUE(ValidateStructure(BuildOntologyView(
                  ParseTurtle(ReadFile(testutil::Fixture("micro1.ttl")))))
                  .empty());
  EXPECT_EQ(Kinds(ValidateStructure(View(
                "ex:A rdfs:subClassOf ex:B . ex:B rdfs:subClassOf ex:A ."))),
            (std::vector<std::string>{"SubclassCycle"}));
  EXPECT_EQ(Kinds(ValidateStructure(View(
                "ex:D a owl:Class . ex:E a owl:Class . "
                "ex:p a owl:ObjectProperty ; rdfs:domain ex:D . "
                "ex:i a ex:E . ex:i ex:p ex:i ."))),
            (std::vector<std::string>{"DomainViolation"}));
  EXPECT_EQ(Kinds(ValidateStructure(View(
                "ex:D a owl:Class . ex:E a owl:Class . "
                "ex:p a owl:ObjectProperty ; rdfs:range ex:D . "
                "ex:i a ex:E . ex:i ex:p ex:i ."))),
            (std::vector<std::string>{"RangeViolation"}));
  EXPECT_EQ(Kinds(ValidateStructure(View(
                "ex:D a owl:Class . ex:i a ex:D . ex:i ex:q ex:i ."))),
            (std::vector<std::string>{"UndeclaredPropertyUse"}));
  EXPECT_EQ(Kinds(ValidateStructure(View("ex:D a owl:Class . ex:i a ex:D, ex:Gone ."))),
            (std::vector<std::string>{"DanglingTypeReference"}));
}

TEST(ValidateStructure, DomainSatisfiedThroughSubclass) {
  EXPECT_TRUE(ValidateStructure(View(
                  "ex:E rdfs:subClassOf ex:D . "
                  "ex:p a owl:ObjectProperty ; rdfs:domain ex:D ; rdfs:range ex:D . "
                  "ex:i a ex:E . ex:i ex:p ex:i ."))
                  .empty());
}

}  // namespace
}  // namespace ontorich
