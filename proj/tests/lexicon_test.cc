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

#include "ontorich/lexicon.h"

#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <regex>

#include "ontorich/fileio.h"
#include "ontorich/turtle.h"
#include "test_util.h"

namespace ontorich {
namespace {

const Lexicon &Mini() {
  static const Lexicon lex = Lexicon::Load(testutil::Fixture("mini-lexicon.lex"));
  return lex;
}

OntologySnapshot It() {
  return BuildOntologyView(ParseTurtle(ReadFile(testutil::Fixture("it.ttl"))));
}

std::vector<std::string> ChildLemmas(const HyponymNode &node) {
  std::vector<std::string> out;
  for (const auto &c : node.children) out.push_back(c.lemmas.front());
  return out;
}

size_t CountNodes(const HyponymNode &node) {
  size_t n = node.synset_id.empty() ? 0 : 1;
  for (const auto &c : node.children) n += CountNodes(c);
  return n;
}

int Depth(const HyponymNode &node) {
  int d = 0;
  for (const auto &c : node.children) d = std::max(d, 1 + Depth(c));
  return d;
}

TEST(LoadLexicon, EmptyFile) {
  EXPECT_TRUE(Lexicon::Parse("").empty());
  EXPECT_TRUE(Lexicon::Parse("# comment only\n\n").empty());
}

TEST(LoadLexicon, InverseCompletion) {
  Lexicon lex = Lexicon::Parse("a\tn\tanimal\nb\tn\tdog\thypernym:a\n");
  EXPECT_TRUE(lex.Get("a").pointers.count({PointerKind::kHyponym, "b"}));
  EXPECT_TRUE(lex.Get("b").pointers.count({PointerKind::kHypernym, "a"}));
  Lexicon mer = Lexicon::Parse("a\tn\tcar\tpart_meronym:b\nb\tn\twheel\n");
  EXPECT_TRUE(mer.Get("b").pointers.count({PointerKind::kPartHolonym, "a"}));
}

TEST(LoadLexicon, Errors) {
  EXPECT_ERROR_KIND(Lexicon::Parse("a\tn\tdog\thypernym:zzz\n"), "DanglingPointer");
  EXPECT_ERROR_KIND(Lexicon::Parse("a\tn\tx\thypernym:b\nb\tn\ty\thypernym:a\n"),
                    "HypernymCycle");
  EXPECT_ERROR_KIND(Lexicon::Parse("a\tn\n"), "LexiconFormatError");
  EXPECT_ERROR_KIND(Lexicon::Parse("a\tq\tdog\n"), "LexiconFormatError");
  EXPECT_ERROR_KIND(Lexicon::Parse("a\tn\tdog,,cat\n"), "LexiconFormatError");
  EXPECT_ERROR_KIND(Lexicon::Parse("a\tn\tdog\tsibling:a\n"), "LexiconFormatError");
  EXPECT_ERROR_KIND(Lexicon::Parse("a\tn\tdog\na\tn\tcat\n"), "LexiconFormatError");
  try {
    Lexicon::Parse("# header\na\tn\tdog\nb\tn\tcat\tbad\n");
    FAIL();
  } catch (const SyntaxError &e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 9);
  }
}

TEST(LoadLexicon, LemmaNormalization) {
  Lexicon lex = Lexicon::Parse("a\tn\tComputer_Network, LAN\n");
  EXPECT_EQ(lex.Get("a").lemmas,
            (std::vector<std::string>{"computer network", "lan"}));
  EXPECT_EQ(lex.NounSenses("Computer Network"), (std::vector<std::string>{"a"}));
}

TEST(LoadLexicon, MiniLexiconInverseClosure) {
  const Lexicon &lex = Mini();
  for (const auto &[id, s] : lex.synsets()) {
    for (const Pointer &p : s.pointers) {
      EXPECT_TRUE(lex.Get(p.target).pointers.count({InversePointer(p.kind), id}))
          << id << " " << PointerKindName(p.kind) << " " << p.target;
    }
  }
}

TEST(HyponymTree, RedAtDepthOne) {
  HyponymNode t = HyponymTree(Mini(), "red", 1);
  EXPECT_EQ(t.synset_id, "n-red");
  EXPECT_EQ(ChildLemmas(t),
            (std::vector<std::string>{"carmine", "crimson", "scarlet", "vermilion"}));
  for (const auto &c : t.children) EXPECT_TRUE(c.children.empty());
  EXPECT_EQ(Depth(HyponymTree(Mini(), "red", 2)), 2);
}

TEST(HyponymTree, DepthZeroAndErrors) {
  HyponymNode t = HyponymTree(Mini(), "computer", 0);
  EXPECT_EQ(t.synset_id, "n-computer");
  EXPECT_TRUE(t.children.empty());
  EXPECT_ERROR_KIND(HyponymTree(Mini(), "unobtainium", 1), "UnknownLemma");
  EXPECT_ERROR_KIND(HyponymTree(Mini(), "teach", 1), "UnknownLemma");
  EXPECT_ERROR_KIND(HyponymTree(Mini(), "red", -1), "InvalidArgument");
}

TEST(HyponymTree, SharedNodesExpandOnce) {
  HyponymNode t = HyponymTree(Mini(), "computer", 5);
  EXPECT_EQ(ChildLemmas(t),
            (std::vector<std::string>{"desktop", "laptop", "tablet"}));
  // "convertible" sits under both laptop and tablet; the first wins.
  EXPECT_EQ(ChildLemmas(t.children[1]), (std::vector<std::string>{"convertible"}));
  EXPECT_TRUE(t.children[2].children.empty());
}

TEST(HyponymTree, PolysemousLemmaGetsVirtualRoot) {
  HyponymNode t = HyponymTree(Mini(), "mouse", 3);
  EXPECT_TRUE(t.synset_id.empty());
  ASSERT_EQ(t.children.size(), 2u);
  EXPECT_EQ(t.children[0].synset_id, "n-mouse-animal");
  EXPECT_EQ(t.children[1].synset_id, "n-mouse-device");
  // Noun senses only: the adjective "red" is not a second sense.
  EXPECT_EQ(HyponymTree(Mini(), "red", 0).synset_id, "n-red");
}

TEST(HyponymTree, BoundsOnRandomLexicons) {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 200; ++round) {
    int n = std::uniform_int_distribution<int>(1, 25)(rng);
    std::string text;
    for (int i = 0; i < n; ++i) {
      text += "s" + std::to_string(i) + "\t" + (i % 7 == 6 ? "v" : "n") + "\tw" +
              std::to_string(i % 5) + "\t";
      // Hypernyms point to lower ids only, so the graph stays acyclic.
      int ups = i == 0 ? 0 : std::uniform_int_distribution<int>(0, 2)(rng);
      for (int k = 0; k < ups; ++k) {
        text += "hypernym:s" +
                std::to_string(std::uniform_int_distribution<int>(0, i - 1)(rng)) +
                ";";
      }
      text += "\n";
    }
    Lexicon lex = Lexicon::Parse(text);
    for (int w = 0; w < 5; ++w) {
      std::string lemma = "w" + std::to_string(w);
      if (lex.NounSenses(lemma).empty()) continue;
      int depth = std::uniform_int_distribution<int>(0, 6)(rng);
      HyponymNode t = HyponymTree(lex, lemma, depth);
      EXPECT_LE(CountNodes(t), lex.NounCount());
      int limit = t.synset_id.empty() ? depth + 1 : depth;
      EXPECT_LE(Depth(t), limit);
      std::set<std::string> seen;
      std::function<void(const HyponymNode &)> walk = [&](const HyponymNode &x) {
        if (!x.synset_id.empty()) EXPECT_TRUE(seen.insert(x.synset_id).second);
        for (const auto &c : x.children) walk(c);
      };
      walk(t);
    }
  }
}

TEST(Meronyms, PaperExamples) {
  auto has = [](const std::vector<std::string> &v, const std::string &x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };
  EXPECT_TRUE(has(Meronyms(Mini(), "computer", MeronymKind::kPart), "processor"));
  EXPECT_TRUE(has(Meronyms(Mini(), "computer network", MeronymKind::kMember),
                  "computer"));
  EXPECT_TRUE(has(Meronyms(Mini(), "keyboard", MeronymKind::kSubstance), "plastic"));
  EXPECT_EQ(Meronyms(Mini(), "computer", MeronymKind::kPart),
            (std::vector<std::string>{"central processing unit", "computer memory",
                                      "cpu", "keyboard", "memory", "processor"}));
  EXPECT_TRUE(Meronyms(Mini(), "keyboard", MeronymKind::kPart).empty());
  EXPECT_ERROR_KIND(Meronyms(Mini(), "nothing", MeronymKind::kPart), "UnknownLemma");
}

TEST(SuggestRelations, PaperExamples) {
  OntologySnapshot s = BuildOntologyView(ParseTurtle(
      "@prefix : <http://x/> . @prefix owl: <http://www.w3.org/2002/07/owl#> . "
      ":Computer a owl:Class . :Processor a owl:Class . :Red a owl:Class . "
      ":Color a owl:Class ."));
  SuggestResult r = SuggestRelations(Mini(), s);
  std::set<std::string> got;
  for (const auto &c : r.candidates) {
    got.insert(c.subject_label + " " + RelationKindName(c.relation) + " " +
               c.object_label);
  }
  EXPECT_TRUE(got.count("Processor partOf Computer"));
  EXPECT_TRUE(got.count("Red isKindOf Color"));
  EXPECT_TRUE(SuggestRelations(Mini(), BuildOntologyView(ParseTurtle(
      "@prefix owl: <http://www.w3.org/2002/07/owl#> . "
      "<http://x/Zork> a owl:Class .")))
                  .candidates.empty());
}

std::string Local(const Iri &iri) { return iri.LocalName(); }

TEST(SuggestRelations, ItFixtureMatchesCheckedInList) {
  SuggestResult r = SuggestRelations(Mini(), It());
  std::string got;
  for (const auto &c : r.candidates) {
    std::string evidence;
    for (const auto &e : c.evidence) evidence += (evidence.empty() ? "" : " ") + e;
    got += Local(c.subject) + "\t" + RelationKindName(c.relation) + "\t" +
           Local(c.object) + "\t" + evidence + "\n";
  }
  EXPECT_EQ(got, ReadFile(testutil::Fixture("it-suggest-relations.tsv")));
  ASSERT_EQ(r.unresolved.size(), 1u);
  EXPECT_EQ(Local(r.unresolved[0]), "LaptopProducer");
}

// Independent scan: closure of hypernym pointers by fixpoint iteration and a
// direct check of every meronym pointer, over every pair of classes.
TEST(SuggestRelations, ItFixtureMatchesExhaustiveScan) {
  const Lexicon &lex = Mini();
  OntologySnapshot s = It();
  auto lemma_of = [&](const Iri &c) {
    std::string label = s.Label(c);
    if (label == c.LocalName()) {
      label = std::regex_replace(label, std::regex("([a-z])([A-Z])"), "$1 $2");
    }
    std::transform(label.begin(), label.end(), label.begin(), ::tolower);
    return label;
  };
  auto senses = [&](const Iri &c) {
    std::set<std::string> out;
    for (const auto &[id, syn] : lex.synsets()) {
      if (syn.pos != PartOfSpeech::kNoun) continue;
      for (const auto &l : syn.lemmas) {
        if (l == lemma_of(c)) out.insert(id);
      }
    }
    return out;
  };
  std::set<std::pair<std::string, std::string>> above;
  for (const auto &[id, syn] : lex.synsets()) {
    for (const auto &p : syn.pointers) {
      if (p.kind == PointerKind::kHypernym) above.insert({id, p.target});
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto &[a, b] : std::set(above)) {
      for (const auto &[c, d] : std::set(above)) {
        if (b == c && above.insert({a, d}).second) changed = true;
      }
    }
  }
  auto stated = [&](const Iri &a, const std::string &rel, const Iri &b) {
    if (rel == "isKindOf") return s.AncestorsOrSelf(a).count(b) > 0;
    for (const auto &r : s.schema_relations) {
      if (r.subject == a && r.object == b && r.property.LocalName() == rel) return true;
    }
    return false;
  };
  std::set<std::string> expected;
  for (const Iri &a : s.classes) {
    for (const Iri &b : s.classes) {
      if (a == b) continue;
      for (const auto &sa : senses(a)) {
        for (const auto &sb : senses(b)) {
          const Synset &A = lex.Get(sa), &B = lex.Get(sb);
          std::vector<std::string> rels;
          if (above.count({sa, sb})) rels.push_back("isKindOf");
          if (B.pointers.count({PointerKind::kPartMeronym, sa})) rels.push_back("partOf");
          if (B.pointers.count({PointerKind::kMemberMeronym, sa})) rels.push_back("memberOf");
          if (A.pointers.count({PointerKind::kSubstanceMeronym, sb})) rels.push_back("madeFrom");
          for (const auto &rel : rels) {
            if (!stated(a, rel, b)) {
              expected.insert(Local(a) + " " + rel + " " + Local(b));
            }
          }
        }
      }
    }
  }
  std::set<std::string> got;
  for (const auto &c : SuggestRelations(lex, s).candidates) {
    got.insert(Local(c.subject) + " " + RelationKindName(c.relation) + " " +
               Local(c.object));
  }
  EXPECT_EQ(got, expected);
}

TEST(SuggestRelations, NeverRepeatsStatedRelations) {
  OntologySnapshot s = It();
  SuggestResult before = SuggestRelations(Mini(), s);
  for (const auto &c : before.candidates) {
    EXPECT_NE(c.subject, c.object);
    EXPECT_FALSE(c.evidence.empty());
    if (c.relation == RelationKind::kIsKindOf) {
      s = ApplyEdit(s, AddSubclassEdge{c.subject, c.object});
    } else {
      Iri prop("http://example.org/it#" + RelationKindName(c.relation));
      if (!s.object_properties.count(prop)) {
        s = ApplyEdit(s, AddObjectProperty{prop, std::nullopt, std::nullopt, ""});
      }
      s = ApplyEdit(s, AddSchemaRelation{{c.subject, prop, c.object}});
    }
  }
  EXPECT_TRUE(SuggestRelations(Mini(), s).candidates.empty());
}

TEST(HyponymEnrich, AddsSelectedUnderTarget) {
  OntologySnapshot s = BuildOntologyView(ParseTurtle(
      "@prefix ex: <http://x/> . @prefix owl: <http://www.w3.org/2002/07/owl#> . "
      "ex:Computer a owl:Class ."));
  HyponymNode tree = HyponymTree(Mini(), "computer", 3);
  auto edits = HyponymEnrich(s, tree, {"n-laptop"}, Iri("http://x/Computer"),
                             "http://x/");
  ASSERT_EQ(edits.size(), 2u);
  ASSERT_TRUE(std::holds_alternative<AddClass>(edits[0]));
  EXPECT_EQ(std::get<AddClass>(edits[0]).iri, Iri("http://x/Laptop"));
  EXPECT_EQ(std::get<AddSubclassEdge>(edits[1]).parent, Iri("http://x/Computer"));
  OntologySnapshot t = ApplyEdits(s, edits);
  EXPECT_TRUE(t.subclass_edges.count({Iri("http://x/Laptop"), Iri("http://x/Computer")}));

  EXPECT_TRUE(HyponymEnrich(s, tree, {}, Iri("http://x/Computer"), "http://x/").empty());

  // Nested selections keep their tree structure.
  auto nested = HyponymEnrich(s, tree, {"n-convertible", "n-laptop"},
                              Iri("http://x/Computer"), "http://x/");
  ASSERT_EQ(nested.size(), 4u);
  EXPECT_EQ(std::get<AddSubclassEdge>(nested[3]).parent, Iri("http://x/Laptop"));
}

TEST(HyponymEnrich, Errors) {
  OntologySnapshot s = BuildOntologyView(ParseTurtle(
      "@prefix ex: <http://x/> . @prefix owl: <http://www.w3.org/2002/07/owl#> . "
      "ex:Computer a owl:Class . ex:Laptop a owl:Class ."));
  HyponymNode tree = HyponymTree(Mini(), "computer", 3);
  EXPECT_ERROR_KIND(HyponymEnrich(s, tree, {"n-laptop"}, Iri("http://x/Gone"),
                                  "http://x/"),
                    "DanglingReference");
  EXPECT_ERROR_KIND(HyponymEnrich(s, tree, {"n-laptop"}, Iri("http://x/Computer"),
                                  "http://x/"),
                    "DuplicateEntity");
  EXPECT_ERROR_KIND(HyponymEnrich(s, tree, {"n-plastic"}, Iri("http://x/Computer"),
                                  "http://x/"),
                    "InvalidArgument");
  // A different namespace still collides by IRI inside ApplyEdit.
  OntologySnapshot u = BuildOntologyView(ParseTurtle(
      "@prefix ex: <http://x/> . @prefix owl: <http://www.w3.org/2002/07/owl#> . "
      "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> . "
      "ex:Computer a owl:Class . ex:Desktop a owl:Class ; rdfs:label \"Workstation\" ."));
  auto edits = HyponymEnrich(u, tree, {"n-desktop"}, Iri("http://x/Computer"),
                             "http://x/");
  EXPECT_ERROR_KIND(ApplyEdits(u, edits), "DuplicateEntity");
}

TEST(SanitizeLemma, Shapes) {
  EXPECT_EQ(SanitizeLemma("laptop"), "Laptop");
  EXPECT_EQ(SanitizeLemma("computer network"), "ComputerNetwork");
  EXPECT_EQ(SanitizeLemma("state-of-the-art"), "StateOfTheArt");
  EXPECT_EQ(SanitizeLemma("3d printer"), "_3dPrinter");
  EXPECT_ERROR_KIND(SanitizeLemma("--"), "InvalidArgument");
}

TEST(NormalizeLabel, Shapes) {
  EXPECT_EQ(NormalizeLabel("  Computer-Network! "), "computer network");
  EXPECT_EQ(NormalizeLabel("Café"), "café");
}

}  // namespace
}  // namespace ontorich
