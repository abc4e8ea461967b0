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

// Schema and knowledge-base quality metrics over an ontology snapshot.
//
// Schema level:   relationship richness  RR = P / (H + P)
//                 inheritance richness   IR = S / C
//                 attribute richness     AR = att / C
// Instance level: class richness         CR = C' / C
//                 per-class connectivity, importance and relationship
//                 richness, and cohesion (connected components of the
//                 instance graph).

#ifndef ONTORICH_METRICS_H_
#define ONTORICH_METRICS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ontorich/ontology.h"

namespace ontorich {

struct SchemaStats {
  size_t P = 0;    // declared object properties
  size_t H = 0;    // inheritance relationships
  size_t C = 0;    // classes
  size_t S = 0;    // subclass edges; equal to H
  size_t att = 0;  // (class, datatype property) declarations

  bool operator==(const SchemaStats &) const = default;
};

struct KbStats {
  size_t nonempty_classes = 0;
  size_t total_classes = 0;
  std::map<Iri, size_t> per_class_conn;
  std::map<Iri, size_t> per_class_subtree_instances;
  size_t total_instances = 0;
  size_t components = 0;

  bool operator==(const KbStats &) const = default;
};

SchemaStats ComputeSchemaStats(const OntologySnapshot &snapshot);

// 0 when H + P == 0.
double RelationshipRichness(const SchemaStats &stats);
// Throw Error("EmptyOntology") when C == 0.
double InheritanceRichness(const SchemaStats &stats);
double AttributeRichness(const SchemaStats &stats);
double ClassRichness(const OntologySnapshot &snapshot);

// Relation assertions with exactly one endpoint directly typed by `cls`.
// Throws Error("UnknownClass").
size_t ClassConnectivity(const OntologySnapshot &snapshot, const Iri &cls);
// Distinct instances in the subtree of `cls` over all instances. Throws
// Error("UnknownClass") or Error("EmptyKnowledgeBase").
double ClassImportance(const OntologySnapshot &snapshot, const Iri &cls);
size_t Cohesion(const OntologySnapshot &snapshot);
// Used applicable properties over applicable properties (domain is `cls` or
// an ancestor); 0 when nothing applies.
double ClassRelationshipRichness(const OntologySnapshot &snapshot,
                                 const Iri &cls);

struct ClassMetrics {
  size_t connectivity = 0;
  std::optional<double> importance;  // undefined without instances
  double class_rr = 0;

  bool operator==(const ClassMetrics &) const = default;
};

struct MetricReport {
  std::string ontology_id;
  int64_t timestamp = 0;  // UTC seconds
  double rr = 0;
  std::optional<double> ir;
  std::optional<double> ar;
  std::optional<double> cr;
  size_t cohesion = 0;
  std::map<std::string, std::string> undefined_reason;
  std::map<Iri, ClassMetrics> per_class;
  SchemaStats schema;
  KbStats kb;

  bool operator==(const MetricReport &) const = default;
};

MetricReport Evaluate(const OntologySnapshot &snapshot,
                      const std::string &ontology_id, int64_t timestamp);

// Ontology-level metric by name: rr, ir, ar, cr, cohesion.
std::optional<double> MetricValue(const MetricReport &report,
                                  const std::string &name);
const std::vector<std::string> &OntologyMetricNames();

struct ComparisonRow {
  std::string metric;
  std::optional<double> a;
  std::optional<double> b;
  std::optional<double> delta;  // b - a; undefined if either side is
};

struct ComparisonTable {
  std::string a_id;
  std::string b_id;
  std::vector<ComparisonRow> rows;
};

// Ontology-level rows first, then per-class rows for the union of classes.
ComparisonTable Compare(const MetricReport &a, const MetricReport &b);

void to_json(nlohmann::json &j, const MetricReport &report);
void from_json(const nlohmann::json &j, MetricReport &report);
void to_json(nlohmann::json &j, const ComparisonTable &table);

}  // namespace ontorich

#endif  // ONTORICH_METRICS_H_
