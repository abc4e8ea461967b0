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

// Tokenization and sentence splitting.

#ifndef ONTORICH_TEXT_H_
#define ONTORICH_TEXT_H_

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ontorich {

enum class TokenKind { kWord, kNumber, kPunct };

struct Token {
  std::string surface;  // as written
  std::string norm;     // lowercased surface
  size_t begin = 0;     // byte offsets into the tokenized text
  size_t end = 0;
  TokenKind kind = TokenKind::kPunct;

  bool is_word() const { return kind == TokenKind::kWord; }
  bool is_number() const { return kind == TokenKind::kNumber; }
  // First character is an uppercase letter.
  bool capitalized() const;
};

// Words are maximal runs of letters with internal hyphens or apostrophes;
// numbers are ASCII digit runs; every other non-space code point is a
// one-character punctuation token.
std::vector<Token> Tokenize(std::string_view text);

struct Sentence {
  size_t begin = 0;  // byte span in the source text
  size_t end = 0;

  std::string_view In(std::string_view text) const {
    return text.substr(begin, end - begin);
  }

  bool operator==(const Sentence &) const = default;
};

// Abbreviations are matched case-insensitively including the final dot.
const std::set<std::string> &DefaultAbbreviations();

// Boundaries at '.', '!' or '?' (plus any closing quotes or brackets) that
// are followed by whitespace and then an uppercase letter, a digit or the
// end of text. A '.' closing a listed abbreviation or a single letter does
// not end a sentence. A blank line always ends one.
std::vector<Sentence> SplitSentences(
    std::string_view text,
    const std::set<std::string> &abbreviations = DefaultAbbreviations());

}  // namespace ontorich

#endif  // ONTORICH_TEXT_H_
