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

#include "ontorich/workspace.h"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <cstdlib>
#include <ctime>
#include <map>

#include "ontorich/codec.h"
#include "ontorich/error.h"
#include "ontorich/fileio.h"
#include "ontorich/turtle.h"
#include "ontorich/utf8.h"

namespace ontorich {

WorkspaceLock::WorkspaceLock(const std::filesystem::path &root) {
  std::filesystem::create_directories(root);
  std::string path = (root / ".lock").string();
  fd_ = ::open(path.c_str(), O_CREAT | O_RDWR | O_CLOEXEC, 0644);
  if (fd_ < 0) throw Error("IoError", "cannot open " + path);
  if (::flock(fd_, LOCK_EX | LOCK_NB) != 0) {
    int err = errno;
    ::close(fd_);
    fd_ = -1;
    if (err == EWOULDBLOCK) {
      throw Error("WorkspaceLocked", "another process is writing to " + root.string());
    }
    throw Error("IoError", "cannot lock " + path);
  }
}

WorkspaceLock::~WorkspaceLock() {
  if (fd_ >= 0) {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
}

std::string DetectNamespace(const OntologySnapshot &snapshot) {
  auto it = snapshot.graph.prefixes().find("");
  if (it != snapshot.graph.prefixes().end() && Iri::IsValid(it->second)) {
    return it->second;
  }
  std::map<std::string, size_t> counts;
  for (const Iri &cls : snapshot.classes) {
    const std::string &s = cls.str();
    std::string local = cls.LocalName();
    if (local.size() < s.size()) ++counts[s.substr(0, s.size() - local.size())];
  }
  std::string best = kDefaultNamespace;
  size_t best_count = 0;
  for (const auto &[ns, n] : counts) {
    if (n > best_count) {
      best = ns;
      best_count = n;
    }
  }
  return best;
}

std::string OntologyIdFromPath(const std::filesystem::path &path) {
  std::string id;
  for (char c : path.stem().string()) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
              (c >= '0' && c <= '9') || c == '.' || c == '_' || c == '-';
    id += ok ? c : '_';
  }
  while (!id.empty() && id[0] == '.') id.erase(id.begin());
  return id.empty() ? "ontology" : id;
}

std::filesystem::path Workspace::DefaultRoot() {
  const char *env = std::getenv("ONTORICH_WORKSPACE");
  if (env && *env) return env;
  return "workspace";
}

namespace {

Json StateToJson(const WorkspaceState &s) {
  return {{"revision", s.revision},
          {"revision_time", s.revision_time},
          {"ontology_id", s.ontology_id},
          {"namespace", s.ns}};
}

WorkspaceState StateFromJson(const Json &j) {
  WorkspaceState s;
  try {
    s.revision = j.at("revision").get<int64_t>();
    s.revision_time = j.at("revision_time").get<int64_t>();
    s.ontology_id = j.at("ontology_id").get<std::string>();
    s.ns = j.at("namespace").get<std::string>();
  } catch (const Json::exception &e) {
    throw Error("StoreCorrupt", std::string("state.json: ") + e.what());
  }
  if (!IsValidOntologyId(s.ontology_id)) {
    throw Error("StoreCorrupt", "state.json: bad ontology id " + s.ontology_id);
  }
  return s;
}

Json ReadJsonFile(const std::filesystem::path &path) {
  try {
    return Json::parse(ReadFile(path));
  } catch (const Json::exception &e) {
    throw Error("StoreCorrupt", path.string() + ": " + e.what());
  }
}

}  // namespace

Workspace::Workspace(std::filesystem::path root, bool recover)
    : root_(std::move(root)), history_(root_ / "history") {
  std::filesystem::create_directories(root_);
  if (std::filesystem::exists(StatePath())) {
    state_ = StateFromJson(ReadJsonFile(StatePath()));
  }
  candidates_ = std::make_unique<CandidateLog>(CandidatesPath());
  if (recover) RollForward();
  Graph graph;
  if (std::filesystem::exists(OntologyPath())) graph = ParseTurtle(ReadFile(OntologyPath()));
  snapshot_ = BuildOntologyView(std::move(graph));
  corpus_ = CorpusStore(CorpusDir()).Load();
  feed_store_ = std::make_unique<FeedStore>(ItemsLogPath());
}

const Lexicon &Workspace::lexicon() {
  std::lock_guard<std::mutex> guard(lexicon_mutex_);
  if (!lexicon_) {
    if (!std::filesystem::exists(LexiconPath())) {
      throw Error("NoLexicon", "no lexicon at " + LexiconPath().string());
    }
    lexicon_ = std::make_unique<Lexicon>(Lexicon::Load(LexiconPath()));
  }
  return *lexicon_;
}

TermOptions Workspace::TermOptionsFor(size_t min_freq, size_t max_words) const {
  TermOptions o;
  o.min_freq = min_freq;
  o.max_words = max_words;
  auto load = [](const std::filesystem::path &p) {
    std::set<std::string> out;
    for (const std::string &w : ParseListFile(ReadFile(p))) out.insert(utf8::ToLower(w));
    return out;
  };
  if (std::filesystem::exists(StopwordsPath())) o.stopwords = load(StopwordsPath());
  if (std::filesystem::exists(AbbreviationsPath())) {
    o.abbreviations = load(AbbreviationsPath());
  }
  return o;
}

Gazetteers Workspace::LoadGazetteers() const { return Gazetteers::Load(GazetteerDir()); }

std::vector<FeedSpec> Workspace::Feeds() const {
  if (!std::filesystem::exists(FeedsConfPath())) return {};
  return ParseFeedsConf(ReadFile(FeedsConfPath()));
}

MetricReport Workspace::Report() const {
  return Evaluate(snapshot_, state_.ontology_id, state_.revision_time);
}

void Workspace::CheckRevision(std::optional<int64_t> expected) const {
  if (expected && *expected != state_.revision) {
    throw Error("StaleRevision", "request is based on revision " +
                                     std::to_string(*expected) + ", workspace is at " +
                                     std::to_string(state_.revision));
  }
}

void Workspace::Stage(const std::string &name) {
  if (fault_hook) fault_hook(name);
}

void Workspace::WriteState(const WorkspaceState &state) const {
  WriteFileAtomic(StatePath(), StateToJson(state).dump(2) + "\n");
}

void Workspace::RecordHistory(const OntologySnapshot &snapshot,
                              const WorkspaceState &state, bool dedupe) {
  MetricReport report = Evaluate(snapshot, state.ontology_id, state.revision_time);
  if (dedupe) {
    bool same = true;
    for (const std::string &metric : OntologyMetricNames()) {
      std::vector<SeriesPoint> series = history_.Series(state.ontology_id, metric);
      if (series.empty() || series.back().timestamp != report.timestamp ||
          series.back().value != MetricValue(report, metric)) {
        same = false;
        break;
      }
    }
    if (same) return;
  }
  history_.Record(report);
}

namespace {

Json CorpusToJson(const Corpus &corpus) {
  Json docs = Json::array();
  for (const Document &d : corpus.documents()) {
    docs.push_back({{"id", d.id}, {"title", d.title}, {"body", d.body},
                    {"source", d.source.ToString()}});
  }
  return docs;
}

Corpus CorpusFromJson(const Json &docs) {
  Corpus corpus;
  for (const Json &d : docs) {
    corpus.Add({d.at("id").get<std::string>(), d.at("title").get<std::string>(),
                d.at("body").get<std::string>(),
                DocumentSource::Parse(d.at("source").get<std::string>())});
  }
  return corpus;
}

Json OptionalText(const std::optional<std::string> &text) {
  return text ? Json(*text) : Json(nullptr);
}

std::optional<std::string> TextField(const Json &j, const char *key) {
  if (j.at(key).is_null()) return std::nullopt;
  return j[key].get<std::string>();
}

}  // namespace

int64_t Workspace::Commit(Change change) {
  if (change.lexicon_text) Lexicon::Parse(*change.lexicon_text);
  WorkspaceState next = state_;
  next.revision += 1;
  next.revision_time = std::max<int64_t>(std::time(nullptr), state_.revision_time);
  if (change.ontology_id) next.ontology_id = *change.ontology_id;
  if (change.ns) next.ns = *change.ns;

  Json lines = Json::array();
  for (const CandidateEvent &e : change.events) lines.push_back(CandidateLog::FormatLine(e));
  std::optional<std::string> turtle;
  if (change.ontology) turtle = SerializeTurtle(change.ontology->graph);
  Json journal = {{"state", StateToJson(next)},
                  {"ontology", OptionalText(turtle)},
                  {"corpus", change.corpus ? CorpusToJson(*change.corpus) : Json(nullptr)},
                  {"lexicon", OptionalText(change.lexicon_text)},
                  {"feeds_conf", OptionalText(change.feeds_conf)},
                  {"events", lines}};
  WriteFileAtomic(JournalPath(), journal.dump());
  Stage("journal-written");

  CandidateLog log = *candidates_;
  Replay(journal, log, change.ontology ? &*change.ontology : nullptr, false);

  state_ = next;
  if (change.ontology) snapshot_ = std::move(*change.ontology);
  if (change.corpus) corpus_ = std::move(*change.corpus);
  if (change.lexicon_text) {
    std::lock_guard<std::mutex> guard(lexicon_mutex_);
    lexicon_.reset();
  }
  *candidates_ = std::move(log);
  return state_.revision;
}

void Workspace::Replay(const Json &journal, CandidateLog &log,
                       const OntologySnapshot *snapshot, bool recovering) {
  WorkspaceState next;
  std::optional<std::string> turtle, lexicon, feeds_conf;
  std::optional<Corpus> corpus;
  std::vector<CandidateEvent> events;
  try {
    next = StateFromJson(journal.at("state"));
    turtle = TextField(journal, "ontology");
    lexicon = TextField(journal, "lexicon");
    feeds_conf = TextField(journal, "feeds_conf");
    if (!journal.at("corpus").is_null()) corpus = CorpusFromJson(journal["corpus"]);
    for (const Json &line : journal.at("events")) {
      std::string text = line.get<std::string>();
      if (!text.empty() && text.back() == '\n') text.pop_back();
      events.push_back(CandidateLog::ParseLine(text));
    }
  } catch (const Json::exception &e) {
    throw Error("StoreCorrupt", std::string("journal.json: ") + e.what());
  }

  if (corpus) {
    CorpusStore(CorpusDir()).Save(*corpus);
    Stage("corpus-written");
  }
  if (lexicon) WriteFileAtomic(LexiconPath(), *lexicon);
  if (feeds_conf) WriteFileAtomic(FeedsConfPath(), *feeds_conf);
  if (turtle) {
    WriteFileAtomic(OntologyPath(), *turtle);
    Stage("ontology-written");
  }
  for (const CandidateEvent &e : events) {
    if (e.sequence > log.last_sequence()) log.Apply(e);
  }
  log.Persist(events);
  Stage("candidates-written");
  if (turtle) {
    if (snapshot) {
      RecordHistory(*snapshot, next, recovering);
    } else {
      RecordHistory(BuildOntologyView(ParseTurtle(*turtle)), next, recovering);
    }
    Stage("history-written");
  }
  WriteState(next);
  Stage("state-written");
  std::filesystem::remove(JournalPath());
  if (recovering) state_ = next;
}

void Workspace::RollForward() {
  if (!std::filesystem::exists(JournalPath())) return;
  Replay(ReadJsonFile(JournalPath()), *candidates_, nullptr, true);
}

}  // namespace ontorich
