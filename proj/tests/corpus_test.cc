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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "test_util.h"

namespace ontorich {
namespace {

Corpus MakeCorpus(const std::vector<std::string> &bodies) {
  Corpus c;
  for (size_t i = 0; i < bodies.size(); ++i) {
    c.Add({"d" + std::to_string(i + 1), "Doc " + std::to_string(i + 1),
           bodies[i], {}});
  }
  return c;
}

TermOptions Opts(size_t min_freq, size_t max_words, bool stopwords = true) {
  TermOptions o;
  o.min_freq = min_freq;
  o.max_words = max_words;
  if (!stopwords) o.stopwords.clear();
  return o;
}

const TermCandidate *Find(const std::vector<TermCandidate> &terms,
                          const std::string &surface) {
  for (const auto &t : terms) {
    if (t.surface == surface) return &t;
  }
  return nullptr;
}

TEST(Corpus, DuplicateIds) {
  Corpus c;
  c.Add({"a", "", "x", {}});
  EXPECT_ERROR_KIND(c.Add({"a", "", "y", {}}), "DuplicateDocument");
  EXPECT_ERROR_KIND(c.Add({"../x", "", "y", {}}), "InvalidDocumentId");
  EXPECT_EQ(c.size(), 1u);
}

TEST(Corpus, SourceRoundTrip) {
  for (auto s : {DocumentSource{DocumentSource::Kind::kManual, ""},
                 DocumentSource{DocumentSource::Kind::kImport, ""},
                 DocumentSource{DocumentSource::Kind::kFeed, "IT"}}) {
    EXPECT_EQ(DocumentSource::Parse(s.ToString()), s);
  }
  EXPECT_ERROR_KIND(DocumentSource::Parse("mail"), "CorpusCorrupt");
}

TEST(CorpusStore, SaveLoad) {
  testutil::TempDir dir;
  CorpusStore store(dir.path() / "corpus");
  EXPECT_TRUE(store.Load().empty());
  Corpus c;
  c.Add({"one", "Title\twith tab", "Body one.\nSecond line.", {}});
  c.Add({"two", "T2", "", {DocumentSource::Kind::kFeed, "IT"}});
  store.Save(c);
  EXPECT_EQ(store.Load(), c);
}

TEST(ExtractTerms, HandCase) {
  auto terms = ExtractTerms(MakeCorpus({"a b a"}), Opts(1, 1, false));
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_EQ(terms[0].surface, "a");
  EXPECT_EQ(terms[0].n_i, 2u);
  EXPECT_DOUBLE_EQ(terms[0].tf, 2.0 / 3.0);
  EXPECT_EQ(terms[1].surface, "b");
  EXPECT_DOUBLE_EQ(terms[1].tf, 1.0 / 3.0);
}

TEST(ExtractTerms, ThresholdFiltersAll) {
  auto terms = ExtractTerms(MakeCorpus({"alpha beta gamma delta"}),
                            Opts(5, 3));
  EXPECT_TRUE(terms.empty());
}

TEST(ExtractTerms, StemMerge) {
  auto terms = ExtractTerms(MakeCorpus({"Friendship matters. Friendships last."}),
                            Opts(2, 1));
  ASSERT_EQ(terms.size(), 1u);
  EXPECT_EQ(terms[0].stem_key, "friendship");
  EXPECT_EQ(terms[0].n_i, 2u);
  EXPECT_EQ(terms[0].source_docs, (std::set<std::string>{"d1"}));
}

TEST(ExtractTerms, Errors) {
  EXPECT_ERROR_KIND(ExtractTerms(Corpus(), Opts(2, 3)), "EmptyCorpus");
  EXPECT_ERROR_KIND(ExtractTerms(MakeCorpus({"x"}), Opts(0, 3)),
                    "InvalidArgument");
}

TEST(ExtractTerms, MultiWordAndStopwordEdges) {
  auto terms = ExtractTerms(
      MakeCorpus({"The laptop producer ships. A laptop producer failed. "
                  "The state of the art laptop producer."}),
      Opts(2, 3));
  const TermCandidate *lp = Find(terms, "laptop producer");
  ASSERT_NE(lp, nullptr);
  EXPECT_EQ(lp->n_i, 3u);
  EXPECT_EQ(lp->words, 2u);
  EXPECT_EQ(Find(terms, "the laptop"), nullptr);
  for (const auto &t : terms) {
    EXPECT_FALSE(DefaultStopwords().count(t.surface.substr(0, t.surface.find(' '))))
        << t.surface;
  }
}

TEST(ExtractTerms, NgramsStayInsideSentencesAndRuns) {
  auto terms = ExtractTerms(MakeCorpus({"red wine. Wine red, wine red"}),
                            Opts(1, 2, false));
  // "wine wine" would span the sentence boundary; "red wine" spans a comma.
  EXPECT_EQ(Find(terms, "wine wine"), nullptr);
  const TermCandidate *rw = Find(terms, "red wine");
  ASSERT_NE(rw, nullptr);
  EXPECT_EQ(rw->n_i, 1u);
  ASSERT_NE(Find(terms, "wine red"), nullptr);
  EXPECT_EQ(Find(terms, "wine red")->n_i, 2u);
}

TEST(ExtractTerms, NonOverlappingCounts) {
  auto terms = ExtractTerms(MakeCorpus({"a a a a a"}), Opts(1, 2, false));
  EXPECT_EQ(Find(terms, "a")->n_i, 5u);
  EXPECT_EQ(Find(terms, "a a")->n_i, 2u);
}

TEST(ExtractTerms, SurfaceIsMostFrequentForm) {
  auto terms = ExtractTerms(MakeCorpus({"Producers producer producers"}),
                            Opts(1, 1, false));
  ASSERT_EQ(terms.size(), 1u);
  EXPECT_EQ(terms[0].surface, "producers");
  EXPECT_EQ(terms[0].n_i, 3u);
}

TEST(ExtractTerms, NumbersAreNotWords) {
  auto terms = ExtractTerms(MakeCorpus({"ford 150 ford 150"}), Opts(1, 2, false));
  EXPECT_EQ(CountWordTokens(MakeCorpus({"ford 150 ford 150"})), 2u);
  ASSERT_EQ(terms.size(), 1u);
  EXPECT_DOUBLE_EQ(terms[0].tf, 1.0);
}

std::string RandomText(std::mt19937_64 &rng) {
  static const std::vector<std::string> kWords = {
      "wine",  "wines",  "Red",   "red",  "grape", "grapes", "the",
      "of",    "and",    "Dell",  "is",   "a",     "laptop", "laptops",
      "state-of-the-art", "it's", "café", "42"};
  static const std::vector<std::string> kSeps = {" ", " ", " ", ", ", ". ",
                                                 "! ", "\n"};
  std::string text;
  int n = std::uniform_int_distribution<int>(0, 60)(rng);
  for (int i = 0; i < n; ++i) {
    text += kWords[std::uniform_int_distribution<size_t>(0, kWords.size() - 1)(rng)];
    text += kSeps[std::uniform_int_distribution<size_t>(0, kSeps.size() - 1)(rng)];
  }
  return text;
}

TEST(ExtractTerms, Properties) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 300; ++round) {
    int docs = std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<std::string> bodies;
    for (int d = 0; d < docs; ++d) bodies.push_back(RandomText(rng));
    Corpus corpus = MakeCorpus(bodies);
    size_t total = CountWordTokens(corpus);
    if (total == 0) {
      EXPECT_ERROR_KIND(ExtractTerms(corpus, Opts(1, 1, false)), "EmptyCorpus");
      continue;
    }
    // Unigram tf sums to one: the counts sum to the token total exactly.
    auto unigrams = ExtractTerms(corpus, Opts(1, 1, false));
    size_t sum = 0;
    double tf_sum = 0;
    for (const auto &t : unigrams) {
      sum += t.n_i;
      tf_sum += t.tf;
      EXPECT_GT(t.tf, 0);
      EXPECT_LE(t.tf, 1);
    }
    EXPECT_EQ(sum, total);
    EXPECT_NEAR(tf_sum, 1.0, 1e-12);

    size_t min_freq = std::uniform_int_distribution<size_t>(1, 3)(rng);
    size_t max_words = std::uniform_int_distribution<size_t>(1, 3)(rng);
    auto terms = ExtractTerms(corpus, Opts(min_freq, max_words));
    for (size_t i = 0; i < terms.size(); ++i) {
      const auto &t = terms[i];
      EXPECT_GE(t.n_i, min_freq);
      EXPECT_LE(t.words, max_words);
      EXPECT_EQ(static_cast<size_t>(std::count(t.surface.begin(),
                                               t.surface.end(), ' ')) + 1,
                t.words);
      if (i > 0) {
        EXPECT_TRUE(terms[i - 1].n_i > t.n_i ||
                    (terms[i - 1].n_i == t.n_i &&
                     terms[i - 1].surface <= t.surface));
      }
    }
    auto scored = ComputeTfIdf(corpus, terms);
    for (const auto &t : scored) {
      ASSERT_TRUE(t.tfidf.has_value());
      EXPECT_GE(*t.tfidf, 0);
      bool everywhere = t.source_docs.size() == corpus.size();
      EXPECT_EQ(*t.tfidf == 0, everywhere) << t.surface;
      EXPECT_GE(t.source_docs.size(), 1u);
    }
  }
}

TEST(TfIdf, HandCase) {
  // Document 1 has two tokens, one of them the term: tf = 0.5.
  Corpus corpus = MakeCorpus({"grape wine", "beer"});
  TermCandidate c;
  c.surface = "grape";
  c.stem_key = "grape";
  auto out = ComputeTfIdf(corpus, {c});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_NEAR(*out[0].tfidf, 0.5 * std::log(2.0), 1e-12);
  EXPECT_NEAR(out[0].tfidf_per_doc.at("d1"), 0.34657359027997264, 1e-12);
}

TEST(TfIdf, SingleDocumentAndUbiquitousTerms) {
  auto one = ComputeTfIdf(MakeCorpus({"x y x"}),
                          ExtractTerms(MakeCorpus({"x y x"}), Opts(1, 1, false)));
  for (const auto &t : one) EXPECT_EQ(*t.tfidf, 0);
  Corpus three = MakeCorpus({"wine a", "wine b", "wine c"});
  auto terms = ComputeTfIdf(three, ExtractTerms(three, Opts(1, 1, false)));
  EXPECT_EQ(*Find(terms, "wine")->tfidf, 0);
  EXPECT_GT(*Find(terms, "a")->tfidf, 0);
}

TEST(TfIdf, MaxOverDocuments) {
  Corpus corpus = MakeCorpus({"vine x x x", "vine", "y"});
  auto terms = ComputeTfIdf(corpus, ExtractTerms(corpus, Opts(1, 1, false)));
  const TermCandidate *v = Find(terms, "vine");
  ASSERT_NE(v, nullptr);
  double idf = std::log(3.0 / 2.0);
  EXPECT_NEAR(v->tfidf_per_doc.at("d1"), 0.25 * idf, 1e-12);
  EXPECT_NEAR(v->tfidf_per_doc.at("d2"), 1.0 * idf, 1e-12);
  EXPECT_NEAR(*v->tfidf, idf, 1e-12);
}

TEST(TfIdf, Errors) {
  TermCandidate c;
  c.surface = c.stem_key = "absent";
  EXPECT_ERROR_KIND(ComputeTfIdf(Corpus(), {c}), "EmptyCorpus");
  EXPECT_ERROR_KIND(ComputeTfIdf(MakeCorpus({"x"}), {c}), "TermNotInCorpus");
}

}  // namespace
}  // namespace ontorich
