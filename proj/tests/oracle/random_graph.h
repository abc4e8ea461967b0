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

// Random graph generators and a blank-node-aware graph comparison used by
// the property tests.

#ifndef ONTORICH_TESTS_ORACLE_RANDOM_GRAPH_H_
#define ONTORICH_TESTS_ORACLE_RANDOM_GRAPH_H_

#include <random>
#include <string>

#include "ontorich/graph.h"

namespace oracle {

struct OntologyLimits {
  int max_classes = 20;
  int max_instances = 30;
  int max_assertions = 40;
  int max_properties = 10;
  bool allow_cycles = false;
};

inline constexpr char kNs[] = "http://example.org/onto#";

// Classes, subclass edges, object and datatype properties with domains,
// typed instances, relation and attribute assertions, plus some noise that
// the structured view must ignore.
ontorich::Graph RandomOntology(std::mt19937_64 &rng,
                               const OntologyLimits &limits = {});

// Arbitrary triples with awkward IRIs, blank nodes and literals of every
// kind. At most `max_triples` triples.
ontorich::Graph RandomRdf(std::mt19937_64 &rng, size_t max_triples);

// True when a bijection between blank-node labels maps one triple set onto
// the other. On failure `why` describes the first difference found.
bool Isomorphic(const ontorich::Graph &a, const ontorich::Graph &b,
                std::string *why = nullptr);

}  // namespace oracle

#endif  // ONTORICH_TESTS_ORACLE_RANDOM_GRAPH_H_
