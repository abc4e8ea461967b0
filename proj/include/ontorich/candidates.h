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

// Review queue of proposed instances, relations and terms, persisted as an
// append-only event log:
//
//   sequence<TAB>event<TAB>candidate_id<TAB>payload-json
//
// with events "propose", "accept" and "reject".

#ifndef ONTORICH_CANDIDATES_H_
#define ONTORICH_CANDIDATES_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ontorich/codec.h"
#include "ontorich/lexicon.h"
#include "ontorich/ontology.h"
#include "ontorich/patterns.h"

namespace ontorich {

enum class CandidateKind { kInstance, kRelation, kTerm };

std::string CandidateKindName(CandidateKind kind);
CandidateKind ParseCandidateKind(std::string_view name);

struct TermProposal {
  std::string surface;
  std::string stem_key;
  size_t n_i = 0;
};

struct Candidate {
  std::string id;
  CandidateKind kind = CandidateKind::kInstance;
  CandidateStatus status = CandidateStatus::kProposed;
  InstanceCandidate instance;  // kInstance
  std::string context;         // source sentence text, kInstance
  RelationCandidate relation;  // kRelation
  TermProposal term;           // kTerm
  std::vector<EditOp> edits;   // set on acceptance
  int64_t revision = 0;        // workspace revision of the last event

  // Identity used to avoid proposing the same finding twice.
  std::string Key() const;
};

Json CandidateToJson(const Candidate &c);

struct CandidateEvent {
  int64_t sequence = 0;
  std::string type;  // propose | accept | reject
  std::string id;
  Json payload;
};

class CandidateLog {
 public:
  // Loads the log, dropping a torn final line. Throws Error("StoreCorrupt").
  explicit CandidateLog(std::filesystem::path path);

  const std::vector<Candidate> &candidates() const { return candidates_; }
  const Candidate *Find(const std::string &id) const;
  const Candidate *FindByKey(const std::string &key) const;
  int64_t last_sequence() const { return last_sequence_; }

  // Builds the next event (not yet applied or written).
  CandidateEvent Propose(Candidate c, int64_t revision) const;
  CandidateEvent Accept(const std::string &id, const std::vector<EditOp> &edits,
                        int64_t revision) const;
  CandidateEvent Reject(const std::string &id, int64_t revision) const;

  // Updates the in-memory state; events must be applied in sequence order.
  void Apply(const CandidateEvent &event);

  static std::string FormatLine(const CandidateEvent &event);
  static CandidateEvent ParseLine(std::string_view line);

  // Appends the lines of events newer than what the file holds.
  void Persist(const std::vector<CandidateEvent> &events);

 private:
  std::filesystem::path path_;
  std::vector<Candidate> candidates_;
  std::map<std::string, size_t> by_id_;
  std::map<std::string, size_t> by_key_;
  int64_t last_sequence_ = 0;
  int64_t persisted_sequence_ = 0;
};

}  // namespace ontorich

#endif  // ONTORICH_CANDIDATES_H_
