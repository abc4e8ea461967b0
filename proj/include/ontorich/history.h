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

// Append-only evaluation history, one log per ontology id. Each recorded
// report contributes one line per ontology-level metric:
//
//   sequence<TAB>timestamp<TAB>metric_name<TAB>value
//
// Undefined values are written as "null".

#ifndef ONTORICH_HISTORY_H_
#define ONTORICH_HISTORY_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ontorich/metrics.h"

namespace ontorich {

struct HistoryEntry {
  MetricReport report;
  int64_t sequence = 0;
};

struct SeriesPoint {
  int64_t sequence = 0;
  int64_t timestamp = 0;
  std::optional<double> value;
};

class HistoryStore {
 public:
  explicit HistoryStore(std::filesystem::path dir) : dir_(std::move(dir)) {}

  // Appends the report. A timestamp older than the last recorded one is
  // raised to it so that timestamps never decrease within a log.
  HistoryEntry Record(const MetricReport &report);

  // Points in recording order. Throws Error("StoreCorrupt") on a malformed
  // log and Error("UnknownMetric") for unknown metric names.
  std::vector<SeriesPoint> Series(const std::string &ontology_id,
                                  const std::string &metric) const;

  std::filesystem::path LogPath(const std::string &ontology_id) const;

 private:
  struct Line {
    int64_t sequence;
    int64_t timestamp;
    std::string metric;
    std::optional<double> value;
  };
  std::vector<Line> Read(const std::string &ontology_id) const;

  std::filesystem::path dir_;
};

// Ids are restricted to [A-Za-z0-9._-] so they can name files.
bool IsValidOntologyId(const std::string &id);

}  // namespace ontorich

#endif  // ONTORICH_HISTORY_H_
