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

// Operations of the service layer over one workspace. Each returns the JSON
// body shared by the CLI (--json) and the HTTP API, always with the
// workspace "revision". Reads run concurrently; mutations are serialized
// and each applied mutation advances the revision by one.

#ifndef ONTORICH_API_H_
#define ONTORICH_API_H_

#include <cstdint>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "ontorich/codec.h"
#include "ontorich/ingest.h"
#include "ontorich/workspace.h"

namespace ontorich {

enum class ExtractorKind { kHearst, kCopula, kEntities, kCustom };

std::string ExtractorKindName(ExtractorKind kind);
// Throws Error("InvalidRequest").
ExtractorKind ParseExtractorKind(std::string_view name);

constexpr int kDefaultHyponymDepth = 2;

struct HttpResult {
  int status = 200;
  Json body;
};

class Api {
 public:
  Api(Workspace &workspace, HttpGetter http);

  // --- reads ---
  Json Status();
  Json Tree();
  Json Relationships();
  // All instances when `cls` is unset. Throws Error("UnknownClass").
  Json Instances(const std::optional<std::string> &cls);
  Json Validate();
  Json Metrics();
  Json History(const std::string &metric);
  // Current ontology against `turtle`.
  Json Compare(const std::string &turtle, const std::string &other_id);
  Json Terms(size_t min_freq, size_t max_words);
  Json TfIdf(size_t min_freq, size_t max_words);
  Json Hyponyms(const std::string &lemma, int depth);
  Json Meronyms(const std::string &lemma, const std::string &kind);
  Json SuggestRelations();
  Json Candidates(const std::optional<std::string> &status,
                  const std::optional<std::string> &kind);
  // Runs an extractor over `text` alone without queueing anything.
  // `rules` holds pattern-rule text for kCustom.
  Json Preview(ExtractorKind kind, const std::string &text, const std::string &rules);
  // Writes the ontology as Turtle to `path`, or to the workspace file.
  Json Save(const std::optional<std::string> &path);

  // --- mutations; `expected` is the revision the caller read ---
  Json Load(const std::string &turtle, const std::string &ontology_id,
            std::optional<int64_t> expected);
  Json Edits(const std::vector<EditOp> &edits, std::optional<int64_t> expected);
  // Runs an extractor over the corpus and queues unseen candidates.
  Json Extract(ExtractorKind kind, const std::string &rules,
               std::optional<int64_t> expected);
  Json ProposeTerms(size_t min_freq, size_t max_words, std::optional<int64_t> expected);
  Json ProposeRelations(std::optional<int64_t> expected);
  // `cls` overrides the bound class of an instance candidate, or names the
  // parent of a term candidate.
  Json Accept(const std::string &id, const std::optional<std::string> &cls,
              std::optional<int64_t> expected);
  Json Reject(const std::string &id, std::optional<int64_t> expected);
  Json Enrich(const std::string &lemma, int depth, const std::vector<std::string> &selected,
              const std::string &target, std::optional<int64_t> expected);
  Json FeedsSync(std::optional<int64_t> expected);
  Json FeedsImport(const std::string &domain, std::optional<int64_t> expected);
  Json AddFeed(const FeedSpec &spec, std::optional<int64_t> expected);
  Json ImportLexicon(const std::string &text, std::optional<int64_t> expected);
  Json AddDocument(Document doc, std::optional<int64_t> expected);

  // Routes an HTTP request. Domain errors map to 400, a stale revision to
  // 409, unknown routes to 404 and anything else to 500.
  HttpResult Dispatch(const std::string &method, const std::string &path,
                      const std::map<std::string, std::string> &query,
                      const std::string &body);

 private:
  HttpResult Route(const std::string &method, const std::string &path,
                   const std::map<std::string, std::string> &query, const Json &body);
  Json WithRevision(Json j) const;
  Json Enqueue(std::vector<Candidate> found);
  std::vector<EditOp> AcceptEdits(const Candidate &c, const std::optional<std::string> &cls) const;

  Workspace &ws_;
  HttpGetter http_;
  std::shared_mutex mutex_;
};

// http:// through a plain HTTP client and file:// from the local disk;
// other schemes answer status 0.
HttpResponse DefaultHttpGet(const std::string &url);

}  // namespace ontorich

#endif  // ONTORICH_API_H_
