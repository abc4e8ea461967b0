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

// Minimal UTF-8 helpers shared by the parsers and the tokenizer.

#ifndef ONTORICH_UTF8_H_
#define ONTORICH_UTF8_H_

#include <string>
#include <string_view>

namespace ontorich::utf8 {

void Append(std::string &out, char32_t cp);

// Decodes the code point starting at `pos` and advances `pos` past it.
// Malformed sequences decode as U+FFFD and consume one byte.
char32_t Decode(std::string_view text, size_t &pos);

// Letter test used for word tokenization: ASCII letters plus non-ASCII code
// points outside the common punctuation and symbol blocks.
bool IsLetter(char32_t cp);
bool IsUpper(char32_t cp);

// ASCII and Latin-1 lowercasing; other code points pass through.
char32_t ToLower(char32_t cp);
std::string ToLower(std::string_view text);

}  // namespace ontorich::utf8

#endif  // ONTORICH_UTF8_H_
