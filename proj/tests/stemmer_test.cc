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

#include "ontorich/stemmer.h"

#include <gtest/gtest.h>

#include <fstream>
#include <string>

#include "test_util.h"

namespace ontorich {
namespace {

TEST(Stemmer, Basics) {
  EXPECT_EQ(Stem("friendships"), "friendship");
  EXPECT_EQ(Stem("run"), "run");
  EXPECT_EQ(Stem("caresses"), "caress");
  EXPECT_EQ(Stem("ponies"), "poni");
  EXPECT_EQ(Stem("relational"), "relat");
  EXPECT_EQ(Stem("generalizations"), "gener");
  EXPECT_EQ(Stem("Producers"), "produc");
}

TEST(Stemmer, ShortWordsUntouched) {
  EXPECT_EQ(Stem("a"), "a");
  EXPECT_EQ(Stem("is"), "is");
  EXPECT_EQ(Stem("as"), "as");
}

TEST(Stemmer, RejectsNonWords) {
  EXPECT_ERROR_KIND(Stem(""), "NotAWord");
  EXPECT_ERROR_KIND(Stem("abc1"), "NotAWord");
  EXPECT_ERROR_KIND(Stem("state-of-the-art"), "NotAWord");
}

TEST(Stemmer, StemTokenPassesThroughOtherTokens) {
  EXPECT_EQ(StemToken("Teachers"), "teacher");
  EXPECT_EQ(StemToken("state-of-the-art"), "state-of-the-art");
  EXPECT_EQ(StemToken("Café"), "café");
}

TEST(Stemmer, ReferenceVocabulary) {
  std::ifstream voc(ONTORICH_FIXTURES "/porter_voc.txt");
  std::ifstream out(ONTORICH_FIXTURES "/porter_output.txt");
  ASSERT_TRUE(voc && out);
  std::string word, expected;
  size_t n = 0, mismatches = 0;
  while (std::getline(voc, word)) {
    ASSERT_TRUE(std::getline(out, expected));
    ++n;
    std::string got = Stem(word);
    if (got != expected && ++mismatches <= 10) {
      ADD_FAILURE() << word << " -> " << got << ", want " << expected;
    }
    EXPECT_LE(got.size(), word.size());
  }
  EXPECT_EQ(n, 23531u);
  EXPECT_EQ(mismatches, 0u);
}

}  // namespace
}  // namespace ontorich
