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

// JSON encodings shared by the CLI and the HTTP API.

#ifndef ONTORICH_CODEC_H_
#define ONTORICH_CODEC_H_

#include <string>
#include <vector>

#include "json.hpp"
#include "ontorich/corpus.h"
#include "ontorich/graph.h"
#include "ontorich/history.h"
#include "ontorich/ingest.h"
#include "ontorich/lexicon.h"
#include "ontorich/ontology.h"
#include "ontorich/patterns.h"

namespace ontorich {

using Json = nlohmann::json;

// Canonical text form of a response body: two-space indent, trailing
// newline. CLI and HTTP both emit exactly this.
std::string DumpJson(const Json &j);

// Throws Error("InvalidRequest") on malformed text.
Json ParseJson(std::string_view text);

Json TermToJson(const Term &term);
Term TermFromJson(const Json &j);

// {"op": "AddClass", ...}; see docs/api.md for the fields of each op.
Json EditToJson(const EditOp &edit);
// Throws Error("InvalidRequest") or Error("InvalidIri").
EditOp EditFromJson(const Json &j);
std::vector<EditOp> EditsFromJson(const Json &j);

Json ClassTreeToJson(const std::vector<ClassTreeNode> &roots);
Json IssueToJson(const Issue &issue);
Json HyponymToJson(const HyponymNode &node);
Json RelationCandidateToJson(const RelationCandidate &c);
Json InstanceCandidateToJson(const InstanceCandidate &c);
InstanceCandidate InstanceCandidateFromJson(const Json &j);
Json TermCandidateToJson(const TermCandidate &t, bool with_tfidf);
Json SeriesPointToJson(const SeriesPoint &p);
Json SyncReportToJson(const SyncReport &r);
Json RelationshipsToJson(const OntologySnapshot &snapshot);
Json SummaryToJson(const OntologySnapshot &snapshot);

// Typed field access raising Error("InvalidRequest").
std::string RequireString(const Json &j, const char *key);
std::optional<std::string> OptionalString(const Json &j, const char *key);
std::optional<int64_t> OptionalInt(const Json &j, const char *key);

}  // namespace ontorich

#endif  // ONTORICH_CODEC_H_
