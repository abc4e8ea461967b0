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

#include <gtest/gtest.h>

#include "ontorich/api.h"
#include "ontorich/codec.h"
#include "ontorich/fileio.h"
#include "ontorich/workspace.h"
#include "process_util.h"
#include "test_util.h"

namespace ontorich {
namespace {

class CliTest : public ::testing::Test {
 protected:
  testutil::ProcessResult Run(std::vector<std::string> args) {
    args.insert(args.begin(), {ONTORICH_CLI, "-w", (dir_.path() / "ws").string()});
    return testutil::RunProcess(args, dir_.path() / "io");
  }
  std::string Ws() const { return (dir_.path() / "ws").string(); }

  testutil::TempDir dir_;
};

TEST_F(CliTest, UsageErrorsExitOne) {
  auto none = testutil::RunProcess({ONTORICH_CLI}, dir_.path() / "io");
  EXPECT_EQ(none.exit_code, 1);
  EXPECT_NE(none.err.find("error:"), std::string::npos);
  auto unknown = Run({"frobnicate"});
  EXPECT_EQ(unknown.exit_code, 1);
  auto flag = Run({"tree", "--bogus"});
  EXPECT_EQ(flag.exit_code, 1);
  auto help = Run({"--help"});
  EXPECT_EQ(help.exit_code, 0);
  EXPECT_NE(help.out.find("hearst"), std::string::npos);
}

TEST_F(CliTest, DomainErrorsExitOneWithKind) {
  auto terms = Run({"terms"});
  EXPECT_EQ(terms.exit_code, 1);
  EXPECT_NE(terms.err.find("EmptyCorpus"), std::string::npos) << terms.err;
  auto missing = Run({"load", (dir_.path() / "absent.ttl").string()});
  EXPECT_EQ(missing.exit_code, 1);
  WriteFileAtomic(dir_.path() / "bad.ttl", "@prefix : <http://x#> .\n:a :b .\n");
  auto bad = Run({"load", (dir_.path() / "bad.ttl").string()});
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos) << bad.err;
  auto stale = Run({"--revision", "7", "load", testutil::Fixture("e2e.ttl")});
  EXPECT_EQ(stale.exit_code, 1);
  EXPECT_NE(stale.err.find("StaleRevision"), std::string::npos) << stale.err;
}

TEST_F(CliTest, LoadTreeEvalAndSave) {
  auto load = Run({"load", testutil::Fixture("e2e.ttl")});
  ASSERT_EQ(load.exit_code, 0) << load.err;
  EXPECT_NE(load.out.find("loaded e2e"), std::string::npos) << load.out;
  auto tree = Run({"tree"});
  ASSERT_EQ(tree.exit_code, 0);
  EXPECT_NE(tree.out.find("  Laptop  <http://example.org/e2e#Laptop>"), std::string::npos)
      << tree.out;
  auto eval = Run({"eval", "--json"});
  ASSERT_EQ(eval.exit_code, 0);
  Json report = ParseJson(eval.out);
  EXPECT_DOUBLE_EQ(report["cr"].get<double>(), 1.0 / 9.0);
  EXPECT_EQ(report["revision"], 1);
  auto text = Run({"eval"});
  EXPECT_NE(text.out.find("cr: "), std::string::npos) << text.out;
  auto saved = Run({"save", (dir_.path() / "out.ttl").string()});
  ASSERT_EQ(saved.exit_code, 0) << saved.err;
  EXPECT_NE(ReadFile(dir_.path() / "out.ttl").find(":Laptop a owl:Class"), std::string::npos);
}

TEST_F(CliTest, FeedToAcceptedInstance) {
  ASSERT_EQ(Run({"load", testutil::Fixture("e2e.ttl")}).exit_code, 0);
  std::string url = "file://" + testutil::Fixture("feeds/it-news.xml");
  ASSERT_EQ(Run({"feeds", "add", url, "it"}).exit_code, 0);
  auto sync = Run({"feeds", "sync"});
  ASSERT_EQ(sync.exit_code, 0) << sync.err;
  EXPECT_NE(sync.out.find("new 3, duplicate 0"), std::string::npos) << sync.out;
  ASSERT_EQ(Run({"feeds", "import", "it"}).exit_code, 0);
  auto hearst = Run({"--json", "hearst"});
  ASSERT_EQ(hearst.exit_code, 0) << hearst.err;
  Json queued = ParseJson(hearst.out);
  std::string toshiba;
  for (const Json &c : queued["candidates"]) {
    if (c["instance"]["surface"] == "Toshiba") toshiba = c["id"].get<std::string>();
  }
  ASSERT_FALSE(toshiba.empty()) << hearst.out;
  auto accept = Run({"candidates", "accept", toshiba});
  ASSERT_EQ(accept.exit_code, 0) << accept.err;
  auto again = Run({"candidates", "accept", toshiba});
  EXPECT_EQ(again.exit_code, 0) << again.err;
  auto reject = Run({"candidates", "reject", toshiba});
  EXPECT_EQ(reject.exit_code, 1);
  EXPECT_NE(reject.err.find("CandidateAccepted"), std::string::npos);
  Json report = ParseJson(Run({"eval", "--json"}).out);
  EXPECT_DOUBLE_EQ(report["cr"].get<double>(), 2.0 / 9.0);
  auto resync = Run({"feeds", "sync"});
  EXPECT_NE(resync.out.find("new 0, duplicate 3"), std::string::npos) << resync.out;
}

TEST_F(CliTest, ReadOutputMatchesHttpBodies) {
  ASSERT_EQ(Run({"load", testutil::Fixture("e2e.ttl")}).exit_code, 0);
  std::string url = "file://" + testutil::Fixture("feeds/it-news.xml");
  ASSERT_EQ(Run({"feeds", "add", url, "it"}).exit_code, 0);
  ASSERT_EQ(Run({"feeds", "sync"}).exit_code, 0);
  ASSERT_EQ(Run({"feeds", "import", "it"}).exit_code, 0);
  ASSERT_EQ(Run({"hearst"}).exit_code, 0);
  WriteFileAtomic(dir_.path() / "ws" / "lexicon.lex",
                  ReadFile(testutil::Fixture("mini-lexicon.lex")));
  struct Case {
    std::vector<std::string> cli;
    std::string path;
    std::map<std::string, std::string> query;
  };
  const std::string laptop = "http://example.org/e2e#Laptop";
  const std::vector<Case> cases = {
      {{"status"}, "/status", {}},
      {{"tree"}, "/ontology/tree", {}},
      {{"relationships"}, "/ontology/relationships", {}},
      {{"instances"}, "/ontology/instances", {}},
      {{"instances", "--class", laptop}, "/ontology/instances", {{"class", laptop}}},
      {{"validate"}, "/ontology/validate", {}},
      {{"eval"}, "/metrics", {}},
      {{"history", "cr"}, "/metrics/history", {{"metric", "cr"}}},
      {{"terms", "--min-freq", "1", "--max-words", "2"},
       "/terms",
       {{"min_freq", "1"}, {"max_words", "2"}}},
      {{"tfidf"}, "/tfidf", {}},
      {{"hyponyms", "red", "--depth", "1"}, "/lexicon/hyponyms", {{"lemma", "red"}, {"depth", "1"}}},
      {{"meronyms", "computer", "--kind", "part"},
       "/lexicon/meronyms",
       {{"lemma", "computer"}, {"kind", "part"}}},
      {{"suggest-relations"}, "/lexicon/suggest-relations", {}},
      {{"candidates", "list"}, "/candidates", {}},
      {{"candidates", "list", "--status", "Proposed", "--kind", "instance"},
       "/candidates",
       {{"status", "Proposed"}, {"kind", "instance"}}},
  };
  Workspace ws(Ws());
  Api api(ws, [](const std::string &) { return HttpResponse{404, ""}; });
  for (const auto &c : cases) {
    std::vector<std::string> args = c.cli;
    args.insert(args.begin(), "--json");
    auto cli = Run(args);
    ASSERT_EQ(cli.exit_code, 0) << c.path << ": " << cli.err;
    HttpResult http = api.Dispatch("GET", c.path, c.query, "");
    ASSERT_EQ(http.status, 200) << c.path;
    EXPECT_EQ(cli.out, DumpJson(http.body)) << c.path;
  }
}

TEST_F(CliTest, WritesFailWhileWorkspaceIsLocked) {
  ASSERT_EQ(Run({"load", testutil::Fixture("e2e.ttl")}).exit_code, 0);
  WorkspaceLock lock(Ws());
  auto write = Run({"load", testutil::Fixture("e2e.ttl")});
  EXPECT_EQ(write.exit_code, 1);
  EXPECT_NE(write.err.find("WorkspaceLocked"), std::string::npos) << write.err;
  EXPECT_EQ(Run({"status"}).exit_code, 0);
}

}  // namespace
}  // namespace ontorich
