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

// Document collection and statistical term extraction.
//
// Term frequency of a term group i over the corpus:
//   tf_i = n_i / (total word tokens in the corpus)
// TF-IDF of term i in document j:
//   tfidf_ij = tf_ij * ln(|D| / df_i)
// where tf_ij uses the token total of document j and df_i counts the
// documents containing the term. Any log base only rescales scores, so
// rankings do not depend on the choice; the natural log is used.

#ifndef ONTORICH_CORPUS_H_
#define ONTORICH_CORPUS_H_

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ontorich {

struct DocumentSource {
  enum class Kind { kManual, kFeed, kImport };
  Kind kind = Kind::kManual;
  std::string feed_id;  // set for kFeed

  std::string ToString() const;  // "manual", "import" or "feed:<id>"
  static DocumentSource Parse(const std::string &text);

  bool operator==(const DocumentSource &) const = default;
};

struct Document {
  std::string id;
  std::string title;
  std::string body;
  DocumentSource source;

  bool operator==(const Document &) const = default;
};

class Corpus {
 public:
  // Throws Error("DuplicateDocument") when the id is taken.
  void Add(Document doc);
  bool Contains(const std::string &id) const;

  const std::vector<Document> &documents() const { return documents_; }
  size_t size() const { return documents_.size(); }
  bool empty() const { return documents_.empty(); }

  bool operator==(const Corpus &) const = default;

 private:
  std::vector<Document> documents_;
};

// Directory layout: <dir>/<doc-id>.txt per document and <dir>/manifest.tsv
// with `id<TAB>title<TAB>source` lines (fields backslash-escaped). The
// manifest is written last, so a document exists once it is listed.
class CorpusStore {
 public:
  explicit CorpusStore(std::filesystem::path dir) : dir_(std::move(dir)) {}

  Corpus Load() const;
  void Save(const Corpus &corpus) const;

 private:
  std::filesystem::path dir_;
};

// Document ids name files: [A-Za-z0-9._-], not starting with '.'.
bool IsValidDocumentId(const std::string &id);

const std::set<std::string> &DefaultStopwords();

struct TermCandidate {
  std::string surface;   // most frequent lowercased form
  std::string stem_key;  // space-joined stems
  size_t words = 0;
  size_t n_i = 0;
  double tf = 0;
  std::optional<double> tfidf;  // max over documents containing the term
  std::map<std::string, double> tfidf_per_doc;
  std::set<std::string> source_docs;
  std::map<std::string, size_t> doc_counts;
};

struct TermOptions {
  size_t min_freq = 2;
  size_t max_words = 3;
  std::set<std::string> stopwords = DefaultStopwords();
  std::set<std::string> abbreviations;  // empty: DefaultAbbreviations()
};

// Word n-grams (1..max_words) inside sentences, grouped by stem key and
// counted with non-overlapping left-to-right matching. N-grams with a
// stopword at either edge are skipped. Sorted by n_i descending, then
// surface. Throws Error("EmptyCorpus").
std::vector<TermCandidate> ExtractTerms(const Corpus &corpus,
                                        const TermOptions &options);

// Total word tokens of the corpus (the tf denominator).
size_t CountWordTokens(const Corpus &corpus);

// Fills tfidf and tfidf_per_doc. Candidates without doc_counts are recounted
// from the corpus. Throws Error("EmptyCorpus"), or Error("TermNotInCorpus")
// for a candidate that occurs nowhere.
std::vector<TermCandidate> ComputeTfIdf(
    const Corpus &corpus, std::vector<TermCandidate> candidates,
    const std::set<std::string> &abbreviations = {});

}  // namespace ontorich

#endif  // ONTORICH_CORPUS_H_
