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

#ifndef ONTORICH_STEMMER_H_
#define ONTORICH_STEMMER_H_

#include <string>
#include <string_view>

namespace ontorich {

// Porter (1980) suffix-stripping stemmer, following the author's reference
// implementation (including its "bli" -> "ble" and "logi" -> "log" rules).
// ASCII uppercase input is lowercased first. Throws Error("NotAWord") for
// empty input or characters outside a-z.
std::string Stem(std::string_view word);

// Stems lowercase a-z words; any other token is returned lowercased and
// unchanged. Used for grouping tokens that may contain hyphens, digits or
// non-ASCII letters.
std::string StemToken(std::string_view token);

}  // namespace ontorich

#endif  // ONTORICH_STEMMER_H_
