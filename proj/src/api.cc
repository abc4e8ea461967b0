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

#include "ontorich/api.h"

#include <algorithm>
#include <functional>
#include <mutex>
#include <utility>

#include "ontorich/error.h"
#include "ontorich/fileio.h"
#include "ontorich/turtle.h"

namespace ontorich {

std::string ExtractorKindName(ExtractorKind kind) {
  switch (kind) {
    case ExtractorKind::kHearst:
      return "hearst";
    case ExtractorKind::kCopula:
      return "copula";
    case ExtractorKind::kEntities:
      return "entities";
    case ExtractorKind::kCustom:
      return "custom";
  }
  return "hearst";
}

ExtractorKind ParseExtractorKind(std::string_view name) {
  for (ExtractorKind k : {ExtractorKind::kHearst, ExtractorKind::kCopula,
                          ExtractorKind::kEntities, ExtractorKind::kCustom}) {
    if (ExtractorKindName(k) == name) return k;
  }
  throw Error("InvalidRequest", "unknown extractor " + std::string(name));
}

namespace {

std::string ErrorMessage(const Error &e) {
  std::string what = e.what();
  std::string prefix = e.kind() + ": ";
  return what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what;
}

std::vector<InstanceCandidate> RunExtractor(ExtractorKind kind, const Corpus &corpus,
                                            const OntologySnapshot &snapshot,
                                            const Gazetteers &gazetteers,
                                            const std::string &rules) {
  switch (kind) {
    case ExtractorKind::kHearst:
      return HearstExtract(corpus, snapshot);
    case ExtractorKind::kCopula:
      return CopulaExtract(corpus, snapshot);
    case ExtractorKind::kEntities:
      return EntityHeuristics(corpus, gazetteers);
    case ExtractorKind::kCustom: {
      std::vector<PatternRule> parsed = ParsePatternRules(rules);
      if (parsed.empty()) throw Error("InvalidPattern", "no pattern rules given");
      std::vector<InstanceCandidate> out;
      for (const PatternRule &rule : parsed) {
        std::vector<InstanceCandidate> found = CustomExtract(corpus, rule);
        out.insert(out.end(), found.begin(), found.end());
      }
      return out;
    }
  }
  return {};
}

std::string SentenceText(const Corpus &corpus, const InstanceCandidate &c) {
  for (const Document &d : corpus.documents()) {
    if (d.id != c.doc_id) continue;
    size_t end = std::min(c.sentence.end, d.body.size());
    size_t begin = std::min(c.sentence.begin, end);
    return d.body.substr(begin, end - begin);
  }
  return "";
}

Candidate InstanceToCandidate(const Corpus &corpus, const InstanceCandidate &ic) {
  Candidate c;
  c.kind = CandidateKind::kInstance;
  c.instance = ic;
  c.context = SentenceText(corpus, ic);
  return c;
}

Iri MintIri(const std::string &ns, const std::string &lemma) {
  std::string local = SanitizeLemma(lemma);
  if (local.empty()) throw Error("InvalidArgument", "cannot mint an IRI for '" + lemma + "'");
  return Iri(ns + local);
}

Iri ClassIri(const OntologySnapshot &snapshot, const std::string &text) {
  if (!Iri::IsValid(text)) throw Error("InvalidIri", "not an IRI: " + text);
  Iri iri(text);
  if (!snapshot.classes.count(iri)) throw Error("UnknownClass", "no class " + text);
  return iri;
}

Json InstanceList(const OntologySnapshot &s, const std::optional<Iri> &cls) {
  Json list = Json::array();
  std::set<Iri> wanted;
  if (cls) wanted = s.DescendantsOrSelf(*cls);
  for (const auto &[inst, types] : s.instances) {
    bool match = !cls;
    Json type_list = Json::array();
    for (const Iri &t : types) {
      type_list.push_back(t.str());
      if (wanted.count(t)) match = true;
    }
    if (!match) continue;
    list.push_back({{"iri", inst.str()}, {"label", s.Label(inst)}, {"types", type_list}});
  }
  return list;
}

const std::string *QueryValue(const std::map<std::string, std::string> &query,
                              const char *key) {
  auto it = query.find(key);
  return it == query.end() ? nullptr : &it->second;
}

int64_t QueryInt(const std::map<std::string, std::string> &query, const char *key,
                 int64_t fallback) {
  const std::string *v = QueryValue(query, key);
  if (!v) return fallback;
  int64_t out = 0;
  if (!ParseInt(*v, out)) {
    throw Error("InvalidRequest", std::string("query parameter ") + key + " must be an integer");
  }
  return out;
}

std::string QueryString(const std::map<std::string, std::string> &query, const char *key) {
  const std::string *v = QueryValue(query, key);
  if (!v) throw Error("InvalidRequest", std::string("missing query parameter ") + key);
  return *v;
}

std::optional<std::string> QueryOptional(const std::map<std::string, std::string> &query,
                                         const char *key) {
  const std::string *v = QueryValue(query, key);
  if (!v) return std::nullopt;
  return *v;
}

size_t RequireCount(int64_t value, const char *name) {
  if (value < 1) throw Error("InvalidArgument", std::string(name) + " must be at least 1");
  return static_cast<size_t>(value);
}

}  // namespace

Api::Api(Workspace &workspace, HttpGetter http)
    : ws_(workspace), http_(std::move(http)) {}

Json Api::WithRevision(Json j) const {
  j["revision"] = ws_.revision();
  return j;
}

// --- reads ---

Json Api::Status() {
  std::shared_lock lock(mutex_);
  const WorkspaceState &st = ws_.state();
  size_t proposed = 0;
  for (const Candidate &c : ws_.candidates().candidates()) {
    if (c.status == CandidateStatus::kProposed) ++proposed;
  }
  return WithRevision({{"ontology_id", st.ontology_id},
                       {"namespace", st.ns},
                       {"revision_time", st.revision_time},
                       {"counts", SummaryToJson(ws_.snapshot())},
                       {"documents", ws_.corpus().size()},
                       {"feed_items", ws_.feed_store().items().size()},
                       {"candidates", ws_.candidates().candidates().size()},
                       {"proposed", proposed}});
}

Json Api::Tree() {
  std::shared_lock lock(mutex_);
  return WithRevision({{"roots", ClassTreeToJson(ClassTree(ws_.snapshot()))}});
}

Json Api::Relationships() {
  std::shared_lock lock(mutex_);
  return WithRevision(RelationshipsToJson(ws_.snapshot()));
}

Json Api::Instances(const std::optional<std::string> &cls) {
  std::shared_lock lock(mutex_);
  const OntologySnapshot &s = ws_.snapshot();
  std::optional<Iri> iri;
  if (cls) iri = ClassIri(s, *cls);
  return WithRevision({{"class", cls ? Json(*cls) : Json(nullptr)},
                       {"instances", InstanceList(s, iri)}});
}

Json Api::Validate() {
  std::shared_lock lock(mutex_);
  Json issues = Json::array();
  for (const Issue &i : ValidateStructure(ws_.snapshot())) issues.push_back(IssueToJson(i));
  return WithRevision({{"issues", issues}});
}

Json Api::Metrics() {
  std::shared_lock lock(mutex_);
  return WithRevision(Json(ws_.Report()));
}

Json Api::History(const std::string &metric) {
  std::shared_lock lock(mutex_);
  const std::string &id = ws_.state().ontology_id;
  Json points = Json::array();
  for (const SeriesPoint &p : ws_.history().Series(id, metric)) {
    points.push_back(SeriesPointToJson(p));
  }
  return WithRevision({{"ontology_id", id}, {"metric", metric}, {"points", points}});
}

Json Api::Compare(const std::string &turtle, const std::string &other_id) {
  if (!IsValidOntologyId(other_id)) {
    throw Error("InvalidArgument", "bad ontology id " + other_id);
  }
  OntologySnapshot other = BuildOntologyView(ParseTurtle(turtle));
  std::shared_lock lock(mutex_);
  MetricReport a = ws_.Report();
  MetricReport b = Evaluate(other, other_id, a.timestamp);
  return WithRevision(Json(ontorich::Compare(a, b)));
}

Json Api::Terms(size_t min_freq, size_t max_words) {
  std::shared_lock lock(mutex_);
  TermOptions options = ws_.TermOptionsFor(min_freq, max_words);
  Json terms = Json::array();
  for (const TermCandidate &t : ExtractTerms(ws_.corpus(), options)) {
    terms.push_back(TermCandidateToJson(t, false));
  }
  return WithRevision({{"min_freq", min_freq}, {"max_words", max_words},
                       {"total_tokens", CountWordTokens(ws_.corpus())},
                       {"terms", terms}});
}

Json Api::TfIdf(size_t min_freq, size_t max_words) {
  std::shared_lock lock(mutex_);
  TermOptions options = ws_.TermOptionsFor(min_freq, max_words);
  std::vector<TermCandidate> found = ExtractTerms(ws_.corpus(), options);
  Json terms = Json::array();
  for (const TermCandidate &t :
       ComputeTfIdf(ws_.corpus(), std::move(found), options.abbreviations)) {
    terms.push_back(TermCandidateToJson(t, true));
  }
  return WithRevision({{"min_freq", min_freq}, {"max_words", max_words},
                       {"documents", ws_.corpus().size()}, {"terms", terms}});
}

Json Api::Hyponyms(const std::string &lemma, int depth) {
  const Lexicon &lexicon = ws_.lexicon();
  std::shared_lock lock(mutex_);
  return WithRevision({{"lemma", lemma}, {"depth", depth},
                       {"tree", HyponymToJson(HyponymTree(lexicon, lemma, depth))}});
}

Json Api::Meronyms(const std::string &lemma, const std::string &kind) {
  std::optional<MeronymKind> k = ParseMeronymKind(kind);
  if (!k) throw Error("InvalidArgument", "meronym kind must be part, member or substance");
  const Lexicon &lexicon = ws_.lexicon();
  std::shared_lock lock(mutex_);
  return WithRevision({{"lemma", lemma}, {"kind", kind},
                       {"meronyms", ontorich::Meronyms(lexicon, lemma, *k)}});
}

Json Api::SuggestRelations() {
  const Lexicon &lexicon = ws_.lexicon();
  std::shared_lock lock(mutex_);
  SuggestResult r = ontorich::SuggestRelations(lexicon, ws_.snapshot());
  Json list = Json::array();
  for (const RelationCandidate &c : r.candidates) list.push_back(RelationCandidateToJson(c));
  Json unresolved = Json::array();
  for (const Iri &i : r.unresolved) unresolved.push_back(i.str());
  return WithRevision({{"suggestions", list}, {"unresolved", unresolved}});
}

Json Api::Candidates(const std::optional<std::string> &status,
                     const std::optional<std::string> &kind) {
  std::optional<CandidateStatus> want_status;
  std::optional<CandidateKind> want_kind;
  if (status) want_status = ParseCandidateStatus(*status);
  if (kind) want_kind = ParseCandidateKind(*kind);
  std::shared_lock lock(mutex_);
  Json list = Json::array();
  for (const Candidate &c : ws_.candidates().candidates()) {
    if (want_status && c.status != *want_status) continue;
    if (want_kind && c.kind != *want_kind) continue;
    list.push_back(CandidateToJson(c));
  }
  return WithRevision({{"candidates", list}});
}

Json Api::Preview(ExtractorKind kind, const std::string &text, const std::string &rules) {
  Corpus corpus;
  corpus.Add({"text", "", text, {}});
  std::shared_lock lock(mutex_);
  Json list = Json::array();
  for (const InstanceCandidate &ic :
       RunExtractor(kind, corpus, ws_.snapshot(), ws_.LoadGazetteers(), rules)) {
    Json j = InstanceCandidateToJson(ic);
    j["context"] = SentenceText(corpus, ic);
    list.push_back(j);
  }
  return WithRevision({{"extractor", ExtractorKindName(kind)}, {"candidates", list}});
}

Json Api::Save(const std::optional<std::string> &path) {
  std::unique_lock lock(mutex_);
  std::filesystem::path target = path ? std::filesystem::path(*path) : ws_.OntologyPath();
  std::string turtle = SerializeTurtle(ws_.snapshot().graph);
  WriteFileAtomic(target, turtle);
  return WithRevision({{"path", target.string()}, {"bytes", turtle.size()}});
}

// --- mutations ---

Json Api::Load(const std::string &turtle, const std::string &ontology_id,
               std::optional<int64_t> expected) {
  if (!IsValidOntologyId(ontology_id)) {
    throw Error("InvalidArgument", "bad ontology id " + ontology_id);
  }
  OntologySnapshot snapshot = BuildOntologyView(ParseTurtle(turtle));
  std::unique_lock lock(mutex_);
  ws_.CheckRevision(expected);
  Change change;
  change.ns = DetectNamespace(snapshot);
  change.ontology_id = ontology_id;
  change.ontology = std::move(snapshot);
  ws_.Commit(std::move(change));
  return WithRevision({{"ontology_id", ontology_id},
                       {"namespace", ws_.state().ns},
                       {"ignored_triples", ws_.snapshot().ignored_triples},
                       {"counts", SummaryToJson(ws_.snapshot())}});
}

Json Api::Edits(const std::vector<EditOp> &edits, std::optional<int64_t> expected) {
  std::unique_lock lock(mutex_);
  ws_.CheckRevision(expected);
  if (!edits.empty()) {
    Change change;
    change.ontology = ApplyEdits(ws_.snapshot(), edits);
    ws_.Commit(std::move(change));
  }
  return WithRevision({{"applied", edits.size()}, {"counts", SummaryToJson(ws_.snapshot())}});
}

Json Api::Enqueue(std::vector<Candidate> found) {
  CandidateLog log = ws_.candidates();
  int64_t next_revision = ws_.revision() + 1;
  std::vector<CandidateEvent> events;
  Json added = Json::array();
  for (Candidate &c : found) {
    if (log.FindByKey(c.Key())) continue;
    CandidateEvent e = log.Propose(std::move(c), next_revision);
    log.Apply(e);
    added.push_back(e.payload);
    events.push_back(std::move(e));
  }
  if (!events.empty()) {
    Change change;
    change.events = std::move(events);
    ws_.Commit(std::move(change));
  }
  return WithRevision({{"found", found.size()}, {"added", added.size()}, {"candidates", added}});
}

Json Api::Extract(ExtractorKind kind, const std::string &rules,
                  std::optional<int64_t> expected) {
  std::unique_lock lock(mutex_);
  ws_.CheckRevision(expected);
  const Corpus &corpus = ws_.corpus();
  if (corpus.empty()) throw Error("EmptyCorpus", "the corpus has no documents");
  std::vector<Candidate> found;
  for (const InstanceCandidate &ic :
       RunExtractor(kind, corpus, ws_.snapshot(), ws_.LoadGazetteers(), rules)) {
    found.push_back(InstanceToCandidate(corpus, ic));
  }
  return Enqueue(std::move(found));
}

Json Api::ProposeTerms(size_t min_freq, size_t max_words, std::optional<int64_t> expected) {
  std::unique_lock lock(mutex_);
  ws_.CheckRevision(expected);
  const OntologySnapshot &s = ws_.snapshot();
  std::set<std::string> labels;
  for (const Iri &cls : s.classes) labels.insert(NormalizeLabel(s.Label(cls)));
  std::vector<Candidate> found;
  for (const TermCandidate &t :
       ExtractTerms(ws_.corpus(), ws_.TermOptionsFor(min_freq, max_words))) {
    if (labels.count(NormalizeLabel(t.surface))) continue;
    Candidate c;
    c.kind = CandidateKind::kTerm;
    c.term = {t.surface, t.stem_key, t.n_i};
    found.push_back(std::move(c));
  }
  return Enqueue(std::move(found));
}

Json Api::ProposeRelations(std::optional<int64_t> expected) {
  const Lexicon &lexicon = ws_.lexicon();
  std::unique_lock lock(mutex_);
  ws_.CheckRevision(expected);
  std::vector<Candidate> found;
  for (const RelationCandidate &r :
       ontorich::SuggestRelations(lexicon, ws_.snapshot()).candidates) {
    Candidate c;
    c.kind = CandidateKind::kRelation;
    c.relation = r;
    found.push_back(std::move(c));
  }
  return Enqueue(std::move(found));
}

std::vector<EditOp> Api::AcceptEdits(const Candidate &c,
                                     const std::optional<std::string> &cls) const {
  const OntologySnapshot &s = ws_.snapshot();
  const std::string &ns = ws_.state().ns;
  std::vector<EditOp> edits;
  switch (c.kind) {
    case CandidateKind::kInstance: {
      const InstanceCandidate &ic = c.instance;
      Iri target;
      if (cls) {
        target = ClassIri(s, *cls);
      } else if (ic.cls) {
        target = *ic.cls;
      } else if (!ic.raw_concept.empty()) {
        target = MintIri(ns, ic.raw_concept);
        if (!s.classes.count(target)) edits.push_back(AddClass{target, std::nullopt, ic.raw_concept});
      } else {
        throw Error("MissingConcept", "candidate " + c.id + " needs a class");
      }
      edits.push_back(AddInstance{MintIri(ns, ic.surface), target, ic.surface});
      break;
    }
    case CandidateKind::kRelation: {
      const RelationCandidate &r = c.relation;
      if (r.relation == RelationKind::kIsKindOf) {
        edits.push_back(AddSubclassEdge{r.subject, r.object});
        break;
      }
      std::string name = RelationKindName(r.relation);
      std::optional<Iri> property;
      for (const auto &[p, decl] : s.object_properties) {
        if (p.LocalName() == name) {
          property = p;
          break;
        }
      }
      if (!property) {
        property = Iri(ns + name);
        edits.push_back(AddObjectProperty{*property, std::nullopt, std::nullopt, name});
      }
      edits.push_back(AddSchemaRelation{Assertion{r.subject, *property, r.object}});
      break;
    }
    case CandidateKind::kTerm: {
      std::optional<Iri> parent;
      if (cls) parent = ClassIri(s, *cls);
      edits.push_back(AddClass{MintIri(ns, c.term.surface), parent, c.term.surface});
      break;
    }
  }
  return edits;
}

Json Api::Accept(const std::string &id, const std::optional<std::string> &cls,
                 std::optional<int64_t> expected) {
  std::unique_lock lock(mutex_);
  ws_.CheckRevision(expected);
  const Candidate *c = ws_.candidates().Find(id);
  if (!c) throw Error("UnknownCandidate", "no candidate " + id);
  if (c->status == CandidateStatus::kRejected) {
    throw Error("CandidateRejected", "candidate " + id + " was rejected");
  }
  if (c->status == CandidateStatus::kProposed) {
    std::vector<EditOp> edits = AcceptEdits(*c, cls);
    Change change;
    change.ontology = ApplyEdits(ws_.snapshot(), edits);
    change.events.push_back(ws_.candidates().Accept(id, edits, ws_.revision() + 1));
    ws_.Commit(std::move(change));
  }
  return WithRevision({{"candidate", CandidateToJson(*ws_.candidates().Find(id))},
                       {"counts", SummaryToJson(ws_.snapshot())}});
}

Json Api::Reject(const std::string &id, std::optional<int64_t> expected) {
  std::unique_lock lock(mutex_);
  ws_.CheckRevision(expected);
  const Candidate *c = ws_.candidates().Find(id);
  if (!c) throw Error("UnknownCandidate", "no candidate " + id);
  if (c->status == CandidateStatus::kAccepted) {
    throw Error("CandidateAccepted", "candidate " + id + " was accepted");
  }
  if (c->status == CandidateStatus::kProposed) {
    Change change;
    change.events.push_back(ws_.candidates().Reject(id, ws_.revision() + 1));
    ws_.Commit(std::move(change));
  }
  return WithRevision({{"candidate", CandidateToJson(*ws_.candidates().Find(id))}});
}

Json Api::Enrich(const std::string &lemma, int depth, const std::vector<std::string> &selected,
                 const std::string &target, std::optional<int64_t> expected) {
  const Lexicon &lexicon = ws_.lexicon();
  std::unique_lock lock(mutex_);
  ws_.CheckRevision(expected);
  if (!Iri::IsValid(target)) throw Error("InvalidIri", "not an IRI: " + target);
  HyponymNode tree = HyponymTree(lexicon, lemma, depth);
  std::vector<EditOp> edits =
      HyponymEnrich(ws_.snapshot(), tree, selected, Iri(target), ws_.state().ns);
  if (!edits.empty()) {
    Change change;
    change.ontology = ApplyEdits(ws_.snapshot(), edits);
    ws_.Commit(std::move(change));
  }
  Json list = Json::array();
  for (const EditOp &e : edits) list.push_back(EditToJson(e));
  return WithRevision({{"edits", list}, {"counts", SummaryToJson(ws_.snapshot())}});
}

Json Api::FeedsSync(std::optional<int64_t> expected) {
  std::unique_lock lock(mutex_);
  ws_.CheckRevision(expected);
  SyncReport report = Sync(ws_.feed_store(), ws_.Feeds(), http_);
  if (report.new_items > 0) ws_.Commit(Change{});
  return WithRevision(SyncReportToJson(report));
}

Json Api::FeedsImport(const std::string &domain, std::optional<int64_t> expected) {
  std::unique_lock lock(mutex_);
  ws_.CheckRevision(expected);
  size_t before = ws_.corpus().size();
  Corpus corpus = ItemsToCorpus(ws_.feed_store(), domain, ws_.corpus());
  size_t added = corpus.size() - before;
  if (added > 0) {
    Change change;
    change.corpus = std::move(corpus);
    ws_.Commit(std::move(change));
  }
  return WithRevision({{"domain", domain}, {"added", added},
                       {"documents", ws_.corpus().size()}});
}

Json Api::AddFeed(const FeedSpec &spec, std::optional<int64_t> expected) {
  spec.Validate();
  std::unique_lock lock(mutex_);
  ws_.CheckRevision(expected);
  std::vector<FeedSpec> feeds = ws_.Feeds();
  auto it = std::find_if(feeds.begin(), feeds.end(),
                         [&](const FeedSpec &f) { return f.url == spec.url; });
  if (it == feeds.end() || !(*it == spec)) {
    if (it == feeds.end()) {
      feeds.push_back(spec);
    } else {
      *it = spec;
    }
    Change change;
    change.feeds_conf = FormatFeedsConf(feeds);
    ws_.Commit(std::move(change));
  }
  Json list = Json::array();
  for (const FeedSpec &f : feeds) {
    list.push_back({{"url", f.url}, {"domain", f.domain}, {"poll_interval", f.poll_interval}});
  }
  return WithRevision({{"feeds", list}});
}

Json Api::ImportLexicon(const std::string &text, std::optional<int64_t> expected) {
  Lexicon parsed = Lexicon::Parse(text);
  std::unique_lock lock(mutex_);
  ws_.CheckRevision(expected);
  Change change;
  change.lexicon_text = text;
  ws_.Commit(std::move(change));
  return WithRevision({{"synsets", parsed.synsets().size()}, {"nouns", parsed.NounCount()}});
}

Json Api::AddDocument(Document doc, std::optional<int64_t> expected) {
  if (!IsValidDocumentId(doc.id)) throw Error("InvalidArgument", "bad document id " + doc.id);
  std::unique_lock lock(mutex_);
  ws_.CheckRevision(expected);
  Corpus corpus = ws_.corpus();
  std::string id = doc.id;
  corpus.Add(std::move(doc));
  Change change;
  change.corpus = std::move(corpus);
  ws_.Commit(std::move(change));
  return WithRevision({{"id", id}, {"documents", ws_.corpus().size()}});
}

// --- HTTP routing ---

HttpResult Api::Dispatch(const std::string &method, const std::string &path,
                         const std::map<std::string, std::string> &query,
                         const std::string &body) {
  try {
    Json parsed = Json::object();
    if (method == "POST" && Trim(body) != "") parsed = ParseJson(body);
    return Route(method, path, query, parsed);
  } catch (const Error &e) {
    int status = e.kind() == "StaleRevision" ? 409 : 400;
    Json j = {{"error", e.kind()}, {"message", ErrorMessage(e)}};
    if (auto *se = dynamic_cast<const SyntaxError *>(&e)) {
      j["line"] = se->line();
      j["column"] = se->column();
    }
    std::shared_lock lock(mutex_);
    return {status, WithRevision(j)};
  } catch (const std::exception &e) {
    std::shared_lock lock(mutex_);
    return {500, WithRevision({{"error", "InternalError"}, {"message", e.what()}})};
  }
}

HttpResult Api::Route(const std::string &method, const std::string &path,
                      const std::map<std::string, std::string> &query, const Json &body) {
  const bool post = method == "POST";
  auto not_allowed = [&] {
    std::shared_lock lock(mutex_);
    return HttpResult{405, WithRevision({{"error", "MethodNotAllowed"},
                                         {"message", method + " " + path}})};
  };
  auto expected = [&] { return OptionalInt(body, "revision"); };

  struct Entry {
    const char *path;
    const char *method;
    std::function<Json()> run;
  };
  const std::vector<Entry> routes = {
      {"/status", "GET", [&] { return Status(); }},
      {"/ontology/tree", "GET", [&] { return Tree(); }},
      {"/ontology/relationships", "GET", [&] { return Relationships(); }},
      {"/ontology/instances", "GET", [&] { return Instances(QueryOptional(query, "class")); }},
      {"/ontology/validate", "GET", [&] { return Validate(); }},
      {"/ontology/load", "POST",
       [&] {
         return Load(RequireString(body, "turtle"),
                     OptionalString(body, "ontology_id").value_or("ontology"), expected());
       }},
      {"/ontology/edits", "POST",
       [&] {
         const Json &list = body.is_array() ? body : body.value("edits", Json::array());
         std::optional<int64_t> rev = body.is_array() ? std::nullopt : expected();
         return Edits(EditsFromJson(list), rev);
       }},
      {"/ontology/save", "POST", [&] { return Save(OptionalString(body, "path")); }},
      {"/metrics", "GET", [&] { return Metrics(); }},
      {"/metrics/history", "GET", [&] { return History(QueryString(query, "metric")); }},
      {"/metrics/compare", "POST",
       [&] {
         return Compare(RequireString(body, "turtle"),
                        OptionalString(body, "ontology_id").value_or("other"));
       }},
      {"/terms", "GET",
       [&] {
         return Terms(RequireCount(QueryInt(query, "min_freq", 2), "min_freq"),
                      RequireCount(QueryInt(query, "max_words", 3), "max_words"));
       }},
      {"/terms/propose", "POST",
       [&] {
         return ProposeTerms(RequireCount(OptionalInt(body, "min_freq").value_or(2), "min_freq"),
                             RequireCount(OptionalInt(body, "max_words").value_or(3), "max_words"),
                             expected());
       }},
      {"/tfidf", "GET",
       [&] {
         return TfIdf(RequireCount(QueryInt(query, "min_freq", 2), "min_freq"),
                      RequireCount(QueryInt(query, "max_words", 3), "max_words"));
       }},
      {"/lexicon/hyponyms", "GET",
       [&] {
         return Hyponyms(QueryString(query, "lemma"),
                         static_cast<int>(QueryInt(query, "depth", kDefaultHyponymDepth)));
       }},
      {"/lexicon/meronyms", "GET",
       [&] {
         return Meronyms(QueryString(query, "lemma"),
                         QueryOptional(query, "kind").value_or("part"));
       }},
      {"/lexicon/suggest-relations", "GET", [&] { return SuggestRelations(); }},
      {"/lexicon/suggest-relations", "POST", [&] { return ProposeRelations(expected()); }},
      {"/lexicon/enrich", "POST",
       [&] {
         std::vector<std::string> selected;
         if (body.contains("selected")) {
           if (!body["selected"].is_array()) {
             throw Error("InvalidRequest", "field selected must be a list");
           }
           for (const Json &s : body["selected"]) {
             if (!s.is_string()) throw Error("InvalidRequest", "selected ids must be strings");
             selected.push_back(s.get<std::string>());
           }
         }
         return Enrich(RequireString(body, "lemma"),
                       static_cast<int>(OptionalInt(body, "depth").value_or(kDefaultHyponymDepth)),
                       selected, RequireString(body, "target"), expected());
       }},
      {"/lexicon/import", "POST",
       [&] { return ImportLexicon(RequireString(body, "text"), expected()); }},
      {"/feeds/sync", "POST", [&] { return FeedsSync(expected()); }},
      {"/feeds/import", "POST",
       [&] { return FeedsImport(RequireString(body, "domain"), expected()); }},
      {"/feeds/add", "POST",
       [&] {
         FeedSpec spec{RequireString(body, "url"), RequireString(body, "domain"),
                       static_cast<int>(
                           OptionalInt(body, "poll_interval").value_or(kDefaultPollInterval))};
         return AddFeed(spec, expected());
       }},
      {"/corpus/documents", "POST",
       [&] {
         Document doc{RequireString(body, "id"), OptionalString(body, "title").value_or(""),
                      RequireString(body, "body"), {}};
         return AddDocument(std::move(doc), expected());
       }},
      {"/candidates", "GET",
       [&] { return Candidates(QueryOptional(query, "status"), QueryOptional(query, "kind")); }},
  };

  bool path_known = false;
  for (const Entry &e : routes) {
    if (path != e.path) continue;
    path_known = true;
    if (method == e.method) return {200, e.run()};
  }

  const std::string patterns = "/patterns/";
  if (path.rfind(patterns, 0) == 0) {
    if (!post) return not_allowed();
    ExtractorKind kind = ParseExtractorKind(path.substr(patterns.size()));
    std::string rules = kind == ExtractorKind::kCustom ? RequireString(body, "rules") : "";
    if (std::optional<std::string> text = OptionalString(body, "text")) {
      return {200, Preview(kind, *text, rules)};
    }
    return {200, Extract(kind, rules, expected())};
  }

  const std::string candidates = "/candidates/";
  if (path.rfind(candidates, 0) == 0) {
    std::string rest = path.substr(candidates.size());
    size_t slash = rest.find('/');
    if (slash != std::string::npos && slash > 0) {
      std::string id = rest.substr(0, slash);
      std::string action = rest.substr(slash + 1);
      if (action == "accept" || action == "reject") {
        if (!post) return not_allowed();
        if (action == "accept") return {200, Accept(id, OptionalString(body, "class"), expected())};
        return {200, Reject(id, expected())};
      }
    }
  }

  if (path_known) return not_allowed();
  std::shared_lock lock(mutex_);
  return {404, WithRevision({{"error", "NotFound"}, {"message", "no route " + path}})};
}

}  // namespace ontorich
