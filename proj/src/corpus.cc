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

#include "ontorich/corpus.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <unordered_map>

#include "ontorich/error.h"
#include "ontorich/fileio.h"
#include "ontorich/stemmer.h"
#include "ontorich/text.h"

namespace ontorich {

std::string DocumentSource::ToString() const {
  switch (kind) {
    case Kind::kManual: return "manual";
    case Kind::kImport: return "import";
    case Kind::kFeed: return "feed:" + feed_id;
  }
  return "manual";
}

DocumentSource DocumentSource::Parse(const std::string &text) {
  if (text == "manual") return {Kind::kManual, {}};
  if (text == "import") return {Kind::kImport, {}};
  if (text.rfind("feed:", 0) == 0) return {Kind::kFeed, text.substr(5)};
  throw Error("CorpusCorrupt", "unknown document source '" + text + "'");
}

bool IsValidDocumentId(const std::string &id) {
  if (id.empty() || id[0] == '.') return false;
  for (unsigned char c : id) {
    if (!std::isalnum(c) && c != '.' && c != '_' && c != '-') return false;
  }
  return true;
}

void Corpus::Add(Document doc) {
  if (!IsValidDocumentId(doc.id)) {
    throw Error("InvalidDocumentId", "'" + doc.id + "'");
  }
  if (Contains(doc.id)) {
    throw Error("DuplicateDocument", "'" + doc.id + "' already in corpus");
  }
  documents_.push_back(std::move(doc));
}

bool Corpus::Contains(const std::string &id) const {
  return std::any_of(documents_.begin(), documents_.end(),
                     [&](const Document &d) { return d.id == id; });
}

Corpus CorpusStore::Load() const {
  Corpus corpus;
  std::filesystem::path manifest = dir_ / "manifest.tsv";
  if (!std::filesystem::exists(manifest)) return corpus;
  std::string content = ReadFile(manifest);
  size_t pos = 0;
  while (pos < content.size()) {
    size_t end = content.find('\n', pos);
    if (end == std::string::npos) end = content.size();
    std::string line = content.substr(pos, end - pos);
    pos = end + 1;
    if (line.empty()) continue;
    std::vector<std::string> f = SplitTabs(line);
    if (f.size() != 3) {
      throw Error("CorpusCorrupt", "bad manifest line '" + line + "'");
    }
    Document doc;
    doc.id = UnescapeField(f[0]);
    doc.title = UnescapeField(f[1]);
    doc.source = DocumentSource::Parse(UnescapeField(f[2]));
    doc.body = ReadFile(dir_ / (doc.id + ".txt"));
    corpus.Add(std::move(doc));
  }
  return corpus;
}

void CorpusStore::Save(const Corpus &corpus) const {
  std::filesystem::create_directories(dir_);
  std::string manifest;
  for (const Document &doc : corpus.documents()) {
    std::filesystem::path path = dir_ / (doc.id + ".txt");
    if (!std::filesystem::exists(path) || ReadFile(path) != doc.body) {
      WriteFileAtomic(path, doc.body);
    }
    manifest += EscapeField(doc.id) + "\t" + EscapeField(doc.title) + "\t" +
                EscapeField(doc.source.ToString()) + "\n";
  }
  WriteFileAtomic(dir_ / "manifest.tsv", manifest);
}

const std::set<std::string> &DefaultStopwords() {
  static const std::set<std::string> kWords = {
      "a",       "about",   "above",  "after",  "again",   "against",
      "all",     "also",    "am",     "an",     "and",     "any",
      "are",     "as",      "at",     "be",     "been",    "before",
      "being",   "below",   "between", "both",  "but",     "by",
      "can",     "could",   "did",    "do",     "does",    "doing",
      "down",    "during",  "each",   "few",    "for",     "from",
      "further", "had",     "has",    "have",   "having",  "he",
      "her",     "here",    "hers",   "him",    "his",     "how",
      "i",       "if",      "in",     "into",   "is",      "it",
      "its",     "just",    "many",   "may",    "me",      "might",
      "more",    "most",    "much",   "must",   "my",      "no",
      "nor",     "not",     "now",    "of",     "off",     "on",
      "once",    "only",    "or",     "other",  "our",     "ours",
      "out",     "over",    "own",    "same",   "shall",   "she",
      "should",  "so",      "some",   "such",   "than",    "that",
      "the",     "their",   "theirs", "them",   "then",    "there",
      "these",   "they",    "this",   "those",  "through", "to",
      "too",     "under",   "until",  "up",     "very",    "was",
      "we",      "were",    "what",   "when",   "where",   "which",
      "while",   "who",     "whom",   "why",    "will",    "with",
      "would",   "you",     "your",   "yours"};
  return kWords;
}

namespace {

struct Group {
  size_t words = 0;
  size_t count = 0;
  std::map<std::string, size_t> doc_counts;
  std::unordered_map<std::string, size_t> surfaces;
};

struct NgramCounts {
  std::unordered_map<std::string, Group> groups;
  std::map<std::string, size_t> doc_tokens;
  size_t total_tokens = 0;
};

NgramCounts CountNgrams(const Corpus &corpus, size_t max_words,
                        const std::set<std::string> &stopwords,
                        const std::set<std::string> &abbreviations) {
  const std::set<std::string> &abbrev =
      abbreviations.empty() ? DefaultAbbreviations() : abbreviations;
  NgramCounts out;
  std::unordered_map<std::string, std::string> stem_cache;
  auto stem_of = [&](const std::string &norm) -> const std::string & {
    auto it = stem_cache.find(norm);
    if (it == stem_cache.end()) {
      it = stem_cache.emplace(norm, StemToken(norm)).first;
    }
    return it->second;
  };
  for (const Document &doc : corpus.documents()) {
    size_t doc_total = 0;
    for (const Sentence &sentence : SplitSentences(doc.body, abbrev)) {
      std::vector<Token> tokens = Tokenize(sentence.In(doc.body));
      // Maximal runs of adjacent word tokens.
      std::vector<std::vector<const Token *>> runs(1);
      for (const Token &t : tokens) {
        if (t.is_word()) {
          runs.back().push_back(&t);
          ++doc_total;
        } else if (!runs.back().empty()) {
          runs.emplace_back();
        }
      }
      // Last end position per key, for non-overlapping counting within the
      // sentence. Positions are global across the sentence's runs.
      std::unordered_map<std::string, size_t> last_end;
      size_t offset = 0;
      for (const auto &run : runs) {
        for (size_t n = 1; n <= max_words; ++n) {
          for (size_t i = 0; i + n <= run.size(); ++i) {
            if (stopwords.count(run[i]->norm) ||
                stopwords.count(run[i + n - 1]->norm)) {
              continue;
            }
            std::string key;
            std::string surface;
            for (size_t k = i; k < i + n; ++k) {
              if (k > i) {
                key += ' ';
                surface += ' ';
              }
              key += stem_of(run[k]->norm);
              surface += run[k]->norm;
            }
            size_t begin = offset + i;
            auto [it, fresh] = last_end.try_emplace(key, 0);
            if (!fresh && begin < it->second) continue;
            it->second = begin + n;
            Group &g = out.groups[key];
            g.words = n;
            ++g.count;
            ++g.doc_counts[doc.id];
            ++g.surfaces[surface];
          }
        }
        offset += run.size();
      }
    }
    out.doc_tokens[doc.id] = doc_total;
    out.total_tokens += doc_total;
  }
  return out;
}

std::string MostFrequentSurface(
    const std::unordered_map<std::string, size_t> &surfaces) {
  const std::string *best = nullptr;
  size_t best_count = 0;
  for (const auto &[s, c] : surfaces) {
    if (!best || c > best_count || (c == best_count && s < *best)) {
      best = &s;
      best_count = c;
    }
  }
  return best ? *best : std::string();
}

}  // namespace

size_t CountWordTokens(const Corpus &corpus) {
  size_t total = 0;
  for (const Document &doc : corpus.documents()) {
    for (const Token &t : Tokenize(doc.body)) {
      if (t.is_word()) ++total;
    }
  }
  return total;
}

std::vector<TermCandidate> ExtractTerms(const Corpus &corpus,
                                        const TermOptions &options) {
  if (corpus.empty()) throw Error("EmptyCorpus", "no documents");
  if (options.min_freq < 1 || options.max_words < 1) {
    throw Error("InvalidArgument", "min_freq and max_words must be >= 1");
  }
  NgramCounts counts = CountNgrams(corpus, options.max_words,
                                   options.stopwords, options.abbreviations);
  if (counts.total_tokens == 0) throw Error("EmptyCorpus", "no word tokens");
  std::vector<TermCandidate> out;
  for (auto &[key, g] : counts.groups) {
    if (g.count < options.min_freq) continue;
    TermCandidate c;
    c.surface = MostFrequentSurface(g.surfaces);
    c.stem_key = key;
    c.words = g.words;
    c.n_i = g.count;
    c.tf = static_cast<double>(g.count) /
           static_cast<double>(counts.total_tokens);
    c.doc_counts = g.doc_counts;
    for (const auto &[doc, n] : g.doc_counts) c.source_docs.insert(doc);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const TermCandidate &a, const TermCandidate &b) {
              if (a.n_i != b.n_i) return a.n_i > b.n_i;
              if (a.surface != b.surface) return a.surface < b.surface;
              return a.stem_key < b.stem_key;
            });
  return out;
}

std::vector<TermCandidate> ComputeTfIdf(
    const Corpus &corpus, std::vector<TermCandidate> candidates,
    const std::set<std::string> &abbreviations) {
  if (corpus.empty()) throw Error("EmptyCorpus", "no documents");
  size_t max_words = 1;
  bool need_recount = false;
  for (const TermCandidate &c : candidates) {
    size_t words = 1 + static_cast<size_t>(
                           std::count(c.stem_key.begin(), c.stem_key.end(), ' '));
    max_words = std::max(max_words, words);
    if (c.doc_counts.empty()) need_recount = true;
  }
  NgramCounts counts = CountNgrams(corpus, need_recount ? max_words : 0, {},
                                   abbreviations);
  const double num_docs = static_cast<double>(corpus.size());
  for (TermCandidate &c : candidates) {
    if (c.doc_counts.empty()) {
      auto it = counts.groups.find(c.stem_key);
      if (it != counts.groups.end()) c.doc_counts = it->second.doc_counts;
    }
    if (c.doc_counts.empty()) {
      throw Error("TermNotInCorpus", "'" + c.surface + "'");
    }
    const double df = static_cast<double>(c.doc_counts.size());
    const double idf = std::log(num_docs / df);
    c.tfidf_per_doc.clear();
    double best = 0;
    for (const auto &[doc, n] : c.doc_counts) {
      size_t total = counts.doc_tokens.at(doc);
      double tf = static_cast<double>(n) / static_cast<double>(total);
      double score = tf * idf;
      c.tfidf_per_doc[doc] = score;
      best = std::max(best, score);
    }
    c.tfidf = best;
    c.source_docs.clear();
    for (const auto &[doc, n] : c.doc_counts) c.source_docs.insert(doc);
  }
  return candidates;
}

}  // namespace ontorich
