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

// Persistent workspace: ontology, corpus, feeds, lexicon, candidate queue
// and metric history under one directory, with a revision counter that
// advances by one per committed mutation.

#ifndef ONTORICH_WORKSPACE_H_
#define ONTORICH_WORKSPACE_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ontorich/candidates.h"
#include "ontorich/corpus.h"
#include "ontorich/history.h"
#include "ontorich/ingest.h"
#include "ontorich/lexicon.h"
#include "ontorich/metrics.h"
#include "ontorich/ontology.h"
#include "ontorich/patterns.h"

namespace ontorich {

inline constexpr char kDefaultNamespace[] = "http://example.org/ontorich#";

struct WorkspaceState {
  int64_t revision = 0;
  int64_t revision_time = 0;  // UTC seconds of the last commit
  std::string ontology_id = "ontology";
  std::string ns = kDefaultNamespace;  // namespace for minted IRIs
};

// Everything a mutation changes, committed together.
struct Change {
  std::optional<OntologySnapshot> ontology;
  std::optional<std::string> ontology_id;
  std::optional<std::string> ns;
  std::optional<Corpus> corpus;
  std::optional<std::string> lexicon_text;  // replaces lexicon.lex
  std::optional<std::string> feeds_conf;    // replaces feeds.conf
  std::vector<CandidateEvent> events;
};

// Exclusive advisory lock on <root>/.lock, held for the object lifetime.
class WorkspaceLock {
 public:
  // Throws Error("WorkspaceLocked") when another process holds it.
  explicit WorkspaceLock(const std::filesystem::path &root);
  ~WorkspaceLock();
  WorkspaceLock(const WorkspaceLock &) = delete;
  WorkspaceLock &operator=(const WorkspaceLock &) = delete;

 private:
  int fd_ = -1;
};

class Workspace {
 public:
  // Creates the directory if needed and, with `recover`, rolls forward a
  // commit that was interrupted after its journal was written. Readers
  // that do not hold the lock pass recover=false.
  explicit Workspace(std::filesystem::path root, bool recover = true);

  // $ONTORICH_WORKSPACE, else ./workspace.
  static std::filesystem::path DefaultRoot();

  const std::filesystem::path &root() const { return root_; }
  std::filesystem::path OntologyPath() const { return root_ / "ontology.ttl"; }
  std::filesystem::path CorpusDir() const { return root_ / "corpus"; }
  std::filesystem::path FeedsConfPath() const { return root_ / "feeds.conf"; }
  std::filesystem::path ItemsLogPath() const { return root_ / "feeds" / "items.log"; }
  std::filesystem::path HistoryDir() const { return root_ / "history"; }
  std::filesystem::path CandidatesPath() const { return root_ / "candidates.log"; }
  std::filesystem::path LexiconPath() const { return root_ / "lexicon.lex"; }
  std::filesystem::path StopwordsPath() const { return root_ / "stopwords.txt"; }
  std::filesystem::path AbbreviationsPath() const { return root_ / "abbreviations.txt"; }
  std::filesystem::path GazetteerDir() const { return root_ / "gazetteers"; }
  std::filesystem::path StatePath() const { return root_ / "state.json"; }
  std::filesystem::path JournalPath() const { return root_ / "journal.json"; }

  const WorkspaceState &state() const { return state_; }
  int64_t revision() const { return state_.revision; }
  const OntologySnapshot &snapshot() const { return snapshot_; }
  const Corpus &corpus() const { return corpus_; }
  const CandidateLog &candidates() const { return *candidates_; }
  FeedStore &feed_store() { return *feed_store_; }
  const HistoryStore &history() const { return history_; }

  // Loaded on first use. Throws Error("NoLexicon") when lexicon.lex is
  // missing.
  const Lexicon &lexicon();

  // stopwords.txt and abbreviations.txt override the defaults when present.
  TermOptions TermOptionsFor(size_t min_freq, size_t max_words) const;
  Gazetteers LoadGazetteers() const;
  // Empty when feeds.conf is missing.
  std::vector<FeedSpec> Feeds() const;

  // Metrics of the current ontology stamped with the revision time.
  MetricReport Report() const;

  // Throws Error("StaleRevision") when `expected` is set and differs.
  void CheckRevision(std::optional<int64_t> expected) const;

  // Applies the change durably and advances the revision by one.
  int64_t Commit(Change change);

  // Called with the name of each commit stage once it is durable; a test
  // may throw from it to simulate a crash.
  std::function<void(const std::string &stage)> fault_hook;

 private:
  void RollForward();
  // Performs the writes a journal describes, in order, then removes it.
  void Replay(const Json &journal, CandidateLog &log, const OntologySnapshot *snapshot,
              bool recovering);
  void Stage(const std::string &name);
  void WriteState(const WorkspaceState &state) const;
  // With `dedupe`, skips the record when the log already ends with it.
  void RecordHistory(const OntologySnapshot &snapshot, const WorkspaceState &state,
                     bool dedupe);

  std::filesystem::path root_;
  WorkspaceState state_;
  OntologySnapshot snapshot_;
  Corpus corpus_;
  std::unique_ptr<CandidateLog> candidates_;
  std::unique_ptr<FeedStore> feed_store_;
  HistoryStore history_;
  std::mutex lexicon_mutex_;
  std::unique_ptr<Lexicon> lexicon_;
};

// Namespace for minted IRIs: the empty prefix when declared, else the most
// frequent namespace among class IRIs, else kDefaultNamespace.
std::string DetectNamespace(const OntologySnapshot &snapshot);

// File stem reduced to [A-Za-z0-9._-]; "ontology" when nothing remains.
std::string OntologyIdFromPath(const std::filesystem::path &path);

}  // namespace ontorich

#endif  // ONTORICH_WORKSPACE_H_
