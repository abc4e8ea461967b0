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

#include "ontorich/history.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include "ontorich/error.h"
#include "ontorich/fileio.h"

namespace ontorich {

bool IsValidOntologyId(const std::string &id) {
  if (id.empty() || id == "." || id == "..") return false;
  for (unsigned char c : id) {
    if (!std::isalnum(c) && c != '.' && c != '_' && c != '-') return false;
  }
  return true;
}

std::filesystem::path HistoryStore::LogPath(const std::string &id) const {
  if (!IsValidOntologyId(id)) {
    throw Error("InvalidOntologyId", "'" + id + "'");
  }
  return dir_ / (id + ".log");
}

std::vector<HistoryStore::Line> HistoryStore::Read(
    const std::string &id) const {
  std::vector<Line> lines;
  std::filesystem::path path = LogPath(id);
  if (!std::filesystem::exists(path)) return lines;
  std::string content = ReadFile(path);
  size_t pos = 0;
  int line_no = 0;
  while (pos < content.size()) {
    size_t end = content.find('\n', pos);
    // An unterminated final line is a torn append; ignore it.
    if (end == std::string::npos) break;
    std::string line = content.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.empty()) continue;
    auto corrupt = [&](const std::string &why) {
      return Error("StoreCorrupt", path.string() + ":" +
                                       std::to_string(line_no) + ": " + why);
    };
    std::vector<std::string> fields = SplitTabs(line);
    if (fields.size() != 4) throw corrupt("expected 4 fields");
    Line l;
    if (!ParseInt(fields[0], l.sequence)) throw corrupt("bad sequence");
    if (!ParseInt(fields[1], l.timestamp)) throw corrupt("bad timestamp");
    l.metric = fields[2];
    if (fields[3] != "null") {
      double v;
      if (!ParseDouble(fields[3], v)) throw corrupt("bad value");
      l.value = v;
    }
    lines.push_back(std::move(l));
  }
  return lines;
}

HistoryEntry HistoryStore::Record(const MetricReport &report) {
  std::vector<Line> existing = Read(report.ontology_id);
  HistoryEntry entry{report, 1};
  if (!existing.empty()) {
    int64_t last_seq = 0;
    int64_t last_ts = 0;
    for (const Line &l : existing) {
      last_seq = std::max(last_seq, l.sequence);
      last_ts = std::max(last_ts, l.timestamp);
    }
    entry.sequence = last_seq + 1;
    entry.report.timestamp = std::max(entry.report.timestamp, last_ts);
  }
  std::string out;
  for (const std::string &name : OntologyMetricNames()) {
    std::optional<double> v = MetricValue(entry.report, name);
    out += std::to_string(entry.sequence) + "\t" +
           std::to_string(entry.report.timestamp) + "\t" + name + "\t" +
           (v ? FormatDouble(*v) : std::string("null")) + "\n";
  }
  std::filesystem::create_directories(dir_);
  std::filesystem::path path = LogPath(report.ontology_id);
  TruncateTornTail(path);
  AppendFile(path, out);
  return entry;
}

std::vector<SeriesPoint> HistoryStore::Series(const std::string &id,
                                              const std::string &metric) const {
  const auto &names = OntologyMetricNames();
  if (std::find(names.begin(), names.end(), metric) == names.end()) {
    throw Error("UnknownMetric", "'" + metric + "'");
  }
  std::vector<SeriesPoint> out;
  for (const Line &l : Read(id)) {
    if (l.metric == metric) out.push_back({l.sequence, l.timestamp, l.value});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const SeriesPoint &a, const SeriesPoint &b) {
                     return a.timestamp < b.timestamp;
                   });
  return out;
}

}  // namespace ontorich
