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

#include "ontorich/turtle.h"

#include <gtest/gtest.h>

#include <random>

#include "ontorich/fileio.h"
#include "oracle/random_graph.h"
#include "test_util.h"

namespace ontorich {
namespace {

Term I(const std::string &iri) { return Term::MakeIri(iri); }

TEST(ParseTurtle, Basics) {
  EXPECT_TRUE(ParseTurtle("").empty());
  EXPECT_TRUE(ParseTurtle("# only a comment\n").empty());
  Graph one = ParseTurtle("<http://x/a> <http://x/b> <http://x/c> .");
  ASSERT_EQ(one.size(), 1u);
  EXPECT_TRUE(one.Contains({I("http://x/a"), I("http://x/b"), I("http://x/c")}));

  Graph two = ParseTurtle("@prefix ex: <http://x/> . ex:a a ex:C ; ex:p ex:b .");
  ASSERT_EQ(two.size(), 2u);
  EXPECT_TRUE(two.Contains({I("http://x/a"), I(vocab::kType), I("http://x/C")}));
  EXPECT_TRUE(two.Contains({I("http://x/a"), I("http://x/p"), I("http://x/b")}));
  EXPECT_EQ(two.prefixes().at("ex"), "http://x/");
}

TEST(ParseTurtle, Literals) {
  Graph g = ParseTurtle(R"(
    @prefix ex: <http://x/> .
    @prefix xsd: <http://www.w3.org/2001/XMLSchema#> .
    ex:s ex:p "plain", "tagged"@EN-us, 'single', """long
"quoted" text""", '''also
long''', "esc\t\"é\U0001F600", 42, -1.5, 1e3, true, "7"^^xsd:integer,
      "x"^^<http://x/dt> .
  )");
  auto has = [&](const Term &o) {
    return g.Contains({I("http://x/s"), I("http://x/p"), o});
  };
  EXPECT_TRUE(has(Term::Literal("plain")));
  EXPECT_TRUE(has(Term::Literal("tagged", "", "en-us")));
  EXPECT_TRUE(has(Term::Literal("single")));
  EXPECT_TRUE(has(Term::Literal("long\n\"quoted\" text")));
  EXPECT_TRUE(has(Term::Literal("also\nlong")));
  EXPECT_TRUE(has(Term::Literal("esc\t\"é😀")));
  EXPECT_TRUE(has(Term::Literal("42", vocab::kXsdInteger)));
  EXPECT_TRUE(has(Term::Literal("-1.5", vocab::kXsdDecimal)));
  EXPECT_TRUE(has(Term::Literal("1e3", vocab::kXsdDouble)));
  EXPECT_TRUE(has(Term::Literal("true", vocab::kXsdBoolean)));
  EXPECT_TRUE(has(Term::Literal("7", vocab::kXsdInteger)));
  EXPECT_TRUE(has(Term::Literal("x", "http://x/dt")));
  EXPECT_EQ(g.size(), 12u);
}

TEST(ParseTurtle, BlankNodesAndCollections) {
  Graph g = ParseTurtle(R"(
    @prefix ex: <http://x/> .
    _:a ex:p [ ex:q ex:o ; ex:r _:a ] .
    ex:s ex:list ( ex:one "two" ) .
    [] ex:p ex:o .
  )");
  size_t blanks_as_subject = 0;
  for (const Triple &t : g.triples()) {
    if (t.subject.is_blank()) ++blanks_as_subject;
  }
  EXPECT_EQ(g.size(), 9u);
  EXPECT_EQ(blanks_as_subject, 8u);
  size_t rdf_first = 0;
  for (const Triple &t : g.triples()) {
    if (t.predicate == I(vocab::kFirst)) ++rdf_first;
  }
  EXPECT_EQ(rdf_first, 2u);
}

TEST(ParseTurtle, BaseAndRelativeIris) {
  Graph g = ParseTurtle(R"(
    @base <http://x/dir/file> .
    <a> <#p> <../up> .
    BASE <http://y/>
    PREFIX e: <sub/>
    e:z <p> <> .
  )");
  EXPECT_TRUE(g.Contains({I("http://x/dir/a"), I("http://x/dir/file#p"),
                          I("http://x/up")}));
  EXPECT_TRUE(g.Contains({I("http://y/sub/z"), I("http://y/p"), I("http://y/")}));
}

TEST(ParseTurtle, PrefixedNameEscapes) {
  Graph g = ParseTurtle(
      "@prefix ex: <http://x/> . ex:a\\.b ex:p ex:c.d . ex:e ex:p ex:f .");
  EXPECT_TRUE(g.Contains({I("http://x/a.b"), I("http://x/p"), I("http://x/c.d")}));
  EXPECT_TRUE(g.Contains({I("http://x/e"), I("http://x/p"), I("http://x/f")}));
}

TEST(ParseTurtle, Errors) {
  EXPECT_ERROR_KIND(ParseTurtle("ex:a ex:b ex:c ."), "UnknownPrefix");
  EXPECT_ERROR_KIND(ParseTurtle("<http://x/a> <http://x/b> ."), "ParseError");
  EXPECT_ERROR_KIND(ParseTurtle("<http://x/a> <http://x/b> \"open ."),
                    "ParseError");
  EXPECT_ERROR_KIND(ParseTurtle("<http://x/a> \"lit\" <http://x/c> ."),
                    "ParseError");
  EXPECT_ERROR_KIND(ParseTurtle("<http://x/a> <http://x/b> <http://x/c>"),
                    "ParseError");
  try {
    ParseTurtle("@prefix ex: <http://x/> .\nex:a ex:b ex:c ;\n  ex:d ? .");
    FAIL();
  } catch (const SyntaxError &e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 8);
  }
}

TEST(SerializeTurtle, EmptyAndSingle) {
  EXPECT_TRUE(ParseTurtle(SerializeTurtle(Graph())).empty());
  Graph g;
  g.Insert(I("http://x/a"), I("http://x/b"), I("http://x/c"));
  EXPECT_EQ(ParseTurtle(SerializeTurtle(g)), g);
}

TEST(SerializeTurtle, DeterministicAndPrefixed) {
  Graph g = ParseTurtle(
      "@prefix ex: <http://x/> . ex:b ex:p ex:c . ex:a a ex:C ; ex:p \"v\" .");
  std::string text = SerializeTurtle(g);
  EXPECT_EQ(text, SerializeTurtle(ParseTurtle(text)));
  EXPECT_NE(text.find("@prefix ex: <http://x/> ."), std::string::npos);
  EXPECT_NE(text.find("ex:a a ex:C"), std::string::npos);
  EXPECT_LT(text.find("ex:a"), text.find("ex:b ex:p"));
  EXPECT_EQ(text.find('\r'), std::string::npos);
}

TEST(SerializeTurtle, FixtureRoundTrip) {
  Graph g = ParseTurtle(ReadFile(testutil::Fixture("micro1.ttl")));
  EXPECT_EQ(ParseTurtle(SerializeTurtle(g)), g);
}

TEST(SerializeTurtle, RandomRoundTrip) {
  std::mt19937_64 rng(2024);
  for (int round = 0; round < 500; ++round) {
    Graph g = oracle::RandomRdf(rng, 200);
    std::string text = SerializeTurtle(g);
    Graph back;
    try {
      back = ParseTurtle(text);
    } catch (const Error &e) {
      FAIL() << "round " << round << ": " << e.what() << "\n" << text;
    }
    std::string why;
    ASSERT_TRUE(oracle::Isomorphic(g, back, &why))
        << "round " << round << ": " << why << "\n" << text;
    EXPECT_EQ(SerializeTurtle(back), text) << "round " << round;
  }
}

}  // namespace
}  // namespace ontorich
