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

#include "ontorich/text.h"

#include "ontorich/utf8.h"

namespace ontorich {
namespace {

bool IsSpace(char32_t cp) {
  return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\f' ||
         cp == '\v' || cp == 0xA0 || cp == 0x2028 || cp == 0x2029 ||
         (cp >= 0x2000 && cp <= 0x200B) || cp == 0x3000;
}

bool IsApostropheOrHyphen(char32_t cp) {
  return cp == '-' || cp == '\'' || cp == 0x2019;
}

bool IsDigit(char32_t cp) { return cp >= '0' && cp <= '9'; }

char32_t PeekCp(std::string_view text, size_t pos, size_t *next = nullptr) {
  size_t p = pos;
  char32_t cp = utf8::Decode(text, p);
  if (next) *next = p;
  return cp;
}

}  // namespace

bool Token::capitalized() const {
  if (surface.empty()) return false;
  size_t pos = 0;
  return utf8::IsUpper(utf8::Decode(surface, pos));
}

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t next;
    char32_t cp = PeekCp(text, pos, &next);
    if (IsSpace(cp)) {
      pos = next;
      continue;
    }
    Token tok;
    tok.begin = pos;
    if (utf8::IsLetter(cp)) {
      size_t end = next;
      while (end < text.size()) {
        size_t after;
        char32_t c = PeekCp(text, end, &after);
        if (utf8::IsLetter(c)) {
          end = after;
        } else if (IsApostropheOrHyphen(c) && after < text.size() &&
                   utf8::IsLetter(PeekCp(text, after))) {
          end = after;
        } else {
          break;
        }
      }
      tok.kind = TokenKind::kWord;
      tok.end = end;
    } else if (IsDigit(cp)) {
      size_t end = next;
      while (end < text.size() && IsDigit(static_cast<unsigned char>(text[end]))) {
        ++end;
      }
      tok.kind = TokenKind::kNumber;
      tok.end = end;
    } else {
      tok.kind = TokenKind::kPunct;
      tok.end = next;
    }
    tok.surface = std::string(text.substr(tok.begin, tok.end - tok.begin));
    tok.norm = tok.kind == TokenKind::kWord ? utf8::ToLower(tok.surface)
                                            : tok.surface;
    pos = tok.end;
    tokens.push_back(std::move(tok));
  }
  return tokens;
}

const std::set<std::string> &DefaultAbbreviations() {
  static const std::set<std::string> kList = {
      "e.g.", "i.e.", "etc.", "dr.", "mr.", "mrs.", "ms.", "prof.",
      "vs.",  "inc.", "ltd.", "jr.", "sr.", "st.",  "co.",  "corp.",
      "no.",  "fig.", "cf.",  "al."};
  return kList;
}

namespace {

bool IsTerminator(char c) { return c == '.' || c == '!' || c == '?'; }

bool IsCloser(char32_t cp) {
  return cp == '"' || cp == '\'' || cp == ')' || cp == ']' || cp == 0x2019 ||
         cp == 0x201D || cp == 0xBB;
}

bool IsOpener(char32_t cp) {
  return cp == '"' || cp == '\'' || cp == '(' || cp == '[' || cp == 0x2018 ||
         cp == 0x201C || cp == 0xAB;
}

// The whitespace-delimited chunk ending at `dot` (inclusive).
std::string_view ChunkBefore(std::string_view text, size_t dot) {
  size_t start = dot;
  while (start > 0) {
    char c = text[start - 1];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') break;
    --start;
  }
  return text.substr(start, dot + 1 - start);
}

bool Guarded(std::string_view text, size_t dot,
             const std::set<std::string> &abbreviations) {
  std::string_view chunk = ChunkBefore(text, dot);
  // Strip opening punctuation such as "(e.g.".
  while (!chunk.empty() && (chunk[0] == '(' || chunk[0] == '"' ||
                            chunk[0] == '\'' || chunk[0] == '[')) {
    chunk.remove_prefix(1);
  }
  if (abbreviations.count(utf8::ToLower(chunk))) return true;
  // Single letter before the dot: "A." or the "S." of "U.S.".
  if (chunk.size() >= 2) {
    std::string_view body = chunk.substr(0, chunk.size() - 1);
    size_t last_start = body.size();
    // Back up over one code point.
    do {
      --last_start;
    } while (last_start > 0 &&
             (static_cast<unsigned char>(body[last_start]) & 0xC0) == 0x80);
    size_t p = last_start;
    char32_t cp = utf8::Decode(body, p);
    if (utf8::IsLetter(cp) && (last_start == 0 || body[last_start - 1] == '.')) {
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Sentence> SplitSentences(
    std::string_view text, const std::set<std::string> &abbreviations) {
  std::vector<Sentence> out;
  auto skip_space = [&](size_t p) {
    while (p < text.size()) {
      size_t next;
      char32_t cp = PeekCp(text, p, &next);
      if (!IsSpace(cp)) break;
      p = next;
    }
    return p;
  };
  auto emit = [&](size_t begin, size_t end) {
    while (end > begin) {
      // Trim trailing whitespace (ASCII is enough: spans end on terminators
      // or at end of text).
      char c = text[end - 1];
      if (c != ' ' && c != '\t' && c != '\n' && c != '\r') break;
      --end;
    }
    if (end > begin) out.push_back({begin, end});
  };

  size_t start = skip_space(0);
  size_t pos = start;
  while (pos < text.size()) {
    if (text[pos] == '\n') {
      size_t k = pos + 1;
      while (k < text.size() && (text[k] == ' ' || text[k] == '\t' || text[k] == '\r')) ++k;
      if (k < text.size() && text[k] == '\n') {
        emit(start, pos);
        start = skip_space(k);
        pos = start;
        continue;
      }
    }
    if (!IsTerminator(text[pos])) {
      ++pos;
      continue;
    }
    size_t term = pos;
    size_t j = pos + 1;
    while (j < text.size() && IsTerminator(text[j])) ++j;
    while (j < text.size()) {
      size_t next;
      char32_t cp = PeekCp(text, j, &next);
      if (!IsCloser(cp)) break;
      j = next;
    }
    bool single_dot = text[term] == '.' && j == term + 1;
    bool boundary = false;
    if (j >= text.size()) {
      boundary = true;
    } else if (IsSpace(PeekCp(text, j))) {
      size_t k = skip_space(j);
      if (k >= text.size()) {
        boundary = true;
      } else {
        size_t after;
        char32_t cp = PeekCp(text, k, &after);
        if (IsOpener(cp) && after < text.size()) cp = PeekCp(text, after);
        boundary = utf8::IsUpper(cp) || IsDigit(cp);
      }
    }
    if (boundary && single_dot && Guarded(text, term, abbreviations)) {
      boundary = false;
    }
    if (boundary) {
      emit(start, j);
      start = skip_space(j);
      pos = start;
    } else {
      pos = j;
    }
  }
  if (start < text.size()) emit(start, text.size());
  return out;
}

}  // namespace ontorich
