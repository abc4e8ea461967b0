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

#ifndef ONTORICH_TURTLE_H_
#define ONTORICH_TURTLE_H_

#include <string>
#include <string_view>

#include "ontorich/graph.h"

namespace ontorich {

// Parses a Turtle document. Supported: @prefix/@base (and the SPARQL-style
// PREFIX/BASE forms), prefixed names, IRI references, blank node labels,
// anonymous blank nodes "[...]", collections "(...)", string literals in
// all four quote styles, numeric and boolean literals, datatypes, language
// tags, ';' and ',' lists, the 'a' keyword and '#' comments.
//
// Throws SyntaxError("ParseError") on malformed input and
// Error("UnknownPrefix") for undeclared prefixes.
Graph ParseTurtle(std::string_view text);

// Deterministic serialization: prefix directives first, then statements
// grouped by subject in triple order. LF line endings.
std::string SerializeTurtle(const Graph &graph);

}  // namespace ontorich

#endif  // ONTORICH_TURTLE_H_
