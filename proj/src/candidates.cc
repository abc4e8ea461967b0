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

#include "ontorich/candidates.h"

#include "ontorich/error.h"
#include "ontorich/fileio.h"

namespace ontorich {

std::string CandidateKindName(CandidateKind kind) {
  switch (kind) {
    case CandidateKind::kInstance:
      return "instance";
    case CandidateKind::kRelation:
      return "relation";
    case CandidateKind::kTerm:
      return "term";
  }
  return "";
}

CandidateKind ParseCandidateKind(std::string_view name) {
  if (name == "instance") return CandidateKind::kInstance;
  if (name == "relation") return CandidateKind::kRelation;
  if (name == "term") return CandidateKind::kTerm;
  throw Error("InvalidArgument", "unknown candidate kind " + std::string(name));
}

std::string Candidate::Key() const {
  switch (kind) {
    case CandidateKind::kInstance: {
      const InstanceCandidate &i = instance;
      return "i|" + RuleFamilyName(i.family) + "|" + i.rule + "|" + i.doc_id + "|" +
             std::to_string(i.begin) + "|" + std::to_string(i.end) + "|" + i.surface +
             "|" + (i.cls ? i.cls->str() : "") + "|" + i.raw_concept;
    }
    case CandidateKind::kRelation:
      return "r|" + relation.subject.str() + "|" + RelationKindName(relation.relation) +
             "|" + relation.object.str();
    case CandidateKind::kTerm:
      return "t|" + term.stem_key;
  }
  return "";
}

Json CandidateToJson(const Candidate &c) {
  Json edits = Json::array();
  for (const EditOp &e : c.edits) edits.push_back(EditToJson(e));
  Json j = {{"id", c.id},
            {"kind", CandidateKindName(c.kind)},
            {"status", CandidateStatusName(c.status)},
            {"revision", c.revision},
            {"edits", edits}};
  switch (c.kind) {
    case CandidateKind::kInstance:
      j["instance"] = InstanceCandidateToJson(c.instance);
      j["context"] = c.context;
      break;
    case CandidateKind::kRelation:
      j["relation"] = RelationCandidateToJson(c.relation);
      break;
    case CandidateKind::kTerm:
      j["term"] = {{"surface", c.term.surface},
                   {"stem_key", c.term.stem_key},
                   {"n_i", c.term.n_i}};
      break;
  }
  return j;
}

namespace {

[[noreturn]] void Corrupt(const std::string &message) {
  throw Error("StoreCorrupt", "candidates.log: " + message);
}

Candidate CandidateFromJson(const Json &j) {
  Candidate c;
  try {
    c.id = j.at("id").get<std::string>();
    c.kind = ParseCandidateKind(j.at("kind").get<std::string>());
    c.status = ParseCandidateStatus(j.at("status").get<std::string>());
    c.revision = j.at("revision").get<int64_t>();
    c.edits = EditsFromJson(j.at("edits"));
    switch (c.kind) {
      case CandidateKind::kInstance:
        c.instance = InstanceCandidateFromJson(j.at("instance"));
        c.context = j.at("context").get<std::string>();
        break;
      case CandidateKind::kRelation: {
        const Json &r = j.at("relation");
        c.relation.subject = Iri(r.at("subject").get<std::string>());
        c.relation.subject_label = r.at("subject_label").get<std::string>();
        auto kind = ParseRelationKind(r.at("relation").get<std::string>());
        if (!kind) throw Error("StoreCorrupt", "unknown relation kind");
        c.relation.relation = *kind;
        c.relation.object = Iri(r.at("object").get<std::string>());
        c.relation.object_label = r.at("object_label").get<std::string>();
        c.relation.evidence = r.at("evidence").get<std::vector<std::string>>();
        break;
      }
      case CandidateKind::kTerm: {
        const Json &t = j.at("term");
        c.term = {t.at("surface").get<std::string>(), t.at("stem_key").get<std::string>(),
                  t.at("n_i").get<size_t>()};
        break;
      }
    }
  } catch (const Json::exception &e) {
    Corrupt(e.what());
  }
  return c;
}

}  // namespace

CandidateLog::CandidateLog(std::filesystem::path path) : path_(std::move(path)) {
  if (!std::filesystem::exists(path_)) return;
  TruncateTornTail(path_);
  std::string content = ReadFile(path_);
  size_t start = 0;
  while (start < content.size()) {
    size_t nl = content.find('\n', start);
    if (nl == std::string::npos) nl = content.size();
    std::string_view line(content.data() + start, nl - start);
    start = nl + 1;
    if (line.empty()) continue;
    CandidateEvent e;
    try {
      e = ParseLine(line);
      Apply(e);
    } catch (const Error &err) {
      Corrupt(err.what());
    }
  }
  persisted_sequence_ = last_sequence_;
}

const Candidate *CandidateLog::Find(const std::string &id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &candidates_[it->second];
}

const Candidate *CandidateLog::FindByKey(const std::string &key) const {
  auto it = by_key_.find(key);
  return it == by_key_.end() ? nullptr : &candidates_[it->second];
}

CandidateEvent CandidateLog::Propose(Candidate c, int64_t revision) const {
  c.id = "c" + std::to_string(candidates_.size() + 1);
  c.status = CandidateStatus::kProposed;
  c.revision = revision;
  c.edits.clear();
  return {last_sequence_ + 1, "propose", c.id, CandidateToJson(c)};
}

CandidateEvent CandidateLog::Accept(const std::string &id,
                                    const std::vector<EditOp> &edits,
                                    int64_t revision) const {
  Json list = Json::array();
  for (const EditOp &e : edits) list.push_back(EditToJson(e));
  return {last_sequence_ + 1, "accept", id, {{"edits", list}, {"revision", revision}}};
}

CandidateEvent CandidateLog::Reject(const std::string &id, int64_t revision) const {
  return {last_sequence_ + 1, "reject", id, {{"revision", revision}}};
}

void CandidateLog::Apply(const CandidateEvent &e) {
  if (e.sequence != last_sequence_ + 1) {
    Corrupt("sequence " + std::to_string(e.sequence) + " out of order");
  }
  if (e.type == "propose") {
    Candidate c = CandidateFromJson(e.payload);
    if (c.id != e.id || by_id_.count(c.id)) Corrupt("bad proposal " + e.id);
    by_id_[c.id] = candidates_.size();
    by_key_.emplace(c.Key(), candidates_.size());
    candidates_.push_back(std::move(c));
  } else if (e.type == "accept" || e.type == "reject") {
    auto it = by_id_.find(e.id);
    if (it == by_id_.end()) Corrupt("event for unknown candidate " + e.id);
    Candidate &c = candidates_[it->second];
    try {
      c.revision = e.payload.at("revision").get<int64_t>();
      if (e.type == "accept") {
        c.status = CandidateStatus::kAccepted;
        c.edits = EditsFromJson(e.payload.at("edits"));
      } else {
        c.status = CandidateStatus::kRejected;
      }
    } catch (const Json::exception &ex) {
      Corrupt(ex.what());
    }
  } else {
    Corrupt("unknown event " + e.type);
  }
  last_sequence_ = e.sequence;
}

std::string CandidateLog::FormatLine(const CandidateEvent &e) {
  return std::to_string(e.sequence) + "\t" + e.type + "\t" + EscapeField(e.id) + "\t" +
         e.payload.dump(-1, ' ', false, Json::error_handler_t::replace) + "\n";
}

CandidateEvent CandidateLog::ParseLine(std::string_view line) {
  std::vector<std::string> f = SplitTabs(line);
  CandidateEvent e;
  if (f.size() != 4 || !ParseInt(f[0], e.sequence)) {
    Corrupt("malformed line: " + std::string(line.substr(0, 60)));
  }
  e.type = f[1];
  e.id = UnescapeField(f[2]);
  try {
    e.payload = Json::parse(f[3]);
  } catch (const Json::exception &ex) {
    Corrupt(ex.what());
  }
  return e;
}

void CandidateLog::Persist(const std::vector<CandidateEvent> &events) {
  std::string text;
  int64_t last = persisted_sequence_;
  for (const CandidateEvent &e : events) {
    if (e.sequence <= persisted_sequence_) continue;
    text += FormatLine(e);
    last = std::max(last, e.sequence);
  }
  if (text.empty()) return;
  std::filesystem::create_directories(path_.parent_path());
  TruncateTornTail(path_);
  AppendFile(path_, text);
  persisted_sequence_ = last;
}

}  // namespace ontorich
