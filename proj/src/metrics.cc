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

#include "ontorich/metrics.h"

#include <deque>
#include <numeric>

#include "ontorich/error.h"

namespace ontorich {
namespace {

void RequireKnownClass(const OntologySnapshot &s, const Iri &cls) {
  if (!s.classes.count(cls)) {
    throw Error("UnknownClass", "<" + cls.str() + "> is not a class");
  }
}

// Direct instances per class.
std::map<Iri, std::set<Iri>> DirectInstances(const OntologySnapshot &s) {
  std::map<Iri, std::set<Iri>> out;
  for (const auto &[instance, types] : s.instances) {
    for (const Iri &type : types) out[type].insert(instance);
  }
  return out;
}

bool DirectlyTyped(const OntologySnapshot &s, const Iri &instance,
                   const Iri &cls) {
  auto it = s.instances.find(instance);
  return it != s.instances.end() && it->second.count(cls) > 0;
}

// Precomputed hierarchy adjacency for whole-ontology evaluation.
struct Hierarchy {
  std::map<Iri, std::vector<Iri>> parents;
  std::map<Iri, std::vector<Iri>> children;

  explicit Hierarchy(const OntologySnapshot &s) {
    for (const auto &[child, parent] : s.subclass_edges) {
      parents[child].push_back(parent);
      children[parent].push_back(child);
    }
  }

  static std::set<Iri> Closure(const std::map<Iri, std::vector<Iri>> &adj,
                               const Iri &start) {
    std::set<Iri> seen{start};
    std::deque<Iri> queue{start};
    while (!queue.empty()) {
      Iri cur = queue.front();
      queue.pop_front();
      auto it = adj.find(cur);
      if (it == adj.end()) continue;
      for (const Iri &next : it->second) {
        if (seen.insert(next).second) queue.push_back(next);
      }
    }
    return seen;
  }

  std::set<Iri> Ancestors(const Iri &c) const { return Closure(parents, c); }
  std::set<Iri> Descendants(const Iri &c) const { return Closure(children, c); }
};

size_t SubtreeInstances(const Hierarchy &h,
                        const std::map<Iri, std::set<Iri>> &direct,
                        const Iri &cls) {
  std::set<Iri> members;
  for (const Iri &d : h.Descendants(cls)) {
    auto it = direct.find(d);
    if (it != direct.end()) members.insert(it->second.begin(), it->second.end());
  }
  return members.size();
}

double ClassRr(const OntologySnapshot &s, const Hierarchy &h, const Iri &cls) {
  std::set<Iri> ancestors = h.Ancestors(cls);
  std::set<Iri> applicable;
  for (const auto &[p, decl] : s.object_properties) {
    for (const Iri &d : decl.domains) {
      if (ancestors.count(d)) {
        applicable.insert(p);
        break;
      }
    }
  }
  if (applicable.empty()) return 0.0;
  std::set<Iri> used;
  for (const Assertion &a : s.relation_assertions) {
    if (applicable.count(a.property) && DirectlyTyped(s, a.subject, cls)) {
      used.insert(a.property);
    }
  }
  return static_cast<double>(used.size()) /
         static_cast<double>(applicable.size());
}

class DisjointSets {
 public:
  explicit DisjointSets(size_t n) : parent_(n), components_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  size_t Find(size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void Union(size_t a, size_t b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return;
    parent_[a] = b;
    --components_;
  }
  size_t components() const { return components_; }

 private:
  std::vector<size_t> parent_;
  size_t components_;
};

}  // namespace

SchemaStats ComputeSchemaStats(const OntologySnapshot &s) {
  SchemaStats stats;
  stats.P = s.object_properties.size();
  stats.H = s.subclass_edges.size();
  stats.C = s.classes.size();
  stats.S = s.subclass_edges.size();
  stats.att = s.attributes.size();
  return stats;
}

double RelationshipRichness(const SchemaStats &stats) {
  if (stats.H + stats.P == 0) return 0.0;
  return static_cast<double>(stats.P) / static_cast<double>(stats.H + stats.P);
}

double InheritanceRichness(const SchemaStats &stats) {
  if (stats.C == 0) throw Error("EmptyOntology", "no classes");
  return static_cast<double>(stats.S) / static_cast<double>(stats.C);
}

double AttributeRichness(const SchemaStats &stats) {
  if (stats.C == 0) throw Error("EmptyOntology", "no classes");
  return static_cast<double>(stats.att) / static_cast<double>(stats.C);
}

double ClassRichness(const OntologySnapshot &s) {
  if (s.classes.empty()) throw Error("EmptyOntology", "no classes");
  std::set<Iri> nonempty;
  for (const auto &[instance, types] : s.instances) {
    nonempty.insert(types.begin(), types.end());
  }
  return static_cast<double>(nonempty.size()) /
         static_cast<double>(s.classes.size());
}

size_t ClassConnectivity(const OntologySnapshot &s, const Iri &cls) {
  RequireKnownClass(s, cls);
  size_t count = 0;
  for (const Assertion &a : s.relation_assertions) {
    if (DirectlyTyped(s, a.subject, cls) != DirectlyTyped(s, a.object, cls)) {
      ++count;
    }
  }
  return count;
}

double ClassImportance(const OntologySnapshot &s, const Iri &cls) {
  RequireKnownClass(s, cls);
  if (s.instances.empty()) {
    throw Error("EmptyKnowledgeBase", "no instances");
  }
  Hierarchy h(s);
  return static_cast<double>(SubtreeInstances(h, DirectInstances(s), cls)) /
         static_cast<double>(s.instances.size());
}

size_t Cohesion(const OntologySnapshot &s) {
  std::map<Iri, size_t> index;
  for (const auto &[instance, types] : s.instances) {
    index.emplace(instance, index.size());
  }
  DisjointSets sets(index.size());
  for (const Assertion &a : s.relation_assertions) {
    sets.Union(index.at(a.subject), index.at(a.object));
  }
  return sets.components();
}

double ClassRelationshipRichness(const OntologySnapshot &s, const Iri &cls) {
  RequireKnownClass(s, cls);
  return ClassRr(s, Hierarchy(s), cls);
}

MetricReport Evaluate(const OntologySnapshot &s, const std::string &ontology_id,
                      int64_t timestamp) {
  MetricReport r;
  r.ontology_id = ontology_id;
  r.timestamp = timestamp;
  r.schema = ComputeSchemaStats(s);
  r.rr = RelationshipRichness(r.schema);
  if (r.schema.C == 0) {
    for (const char *name : {"ir", "ar", "cr"}) {
      r.undefined_reason[name] = "EmptyOntology";
    }
  } else {
    r.ir = InheritanceRichness(r.schema);
    r.ar = AttributeRichness(r.schema);
    r.cr = ClassRichness(s);
  }
  r.cohesion = Cohesion(s);

  Hierarchy h(s);
  auto direct = DirectInstances(s);
  KbStats &kb = r.kb;
  kb.total_classes = s.classes.size();
  kb.total_instances = s.instances.size();
  kb.components = r.cohesion;
  for (const Iri &cls : s.classes) {
    if (direct.count(cls)) ++kb.nonempty_classes;
    kb.per_class_conn[cls] = 0;
  }
  for (const Assertion &a : s.relation_assertions) {
    const std::set<Iri> &st = s.instances.at(a.subject);
    const std::set<Iri> &ot = s.instances.at(a.object);
    for (const Iri &c : st) {
      if (!ot.count(c)) ++kb.per_class_conn[c];
    }
    for (const Iri &c : ot) {
      if (!st.count(c)) ++kb.per_class_conn[c];
    }
  }
  for (const Iri &cls : s.classes) {
    size_t subtree = SubtreeInstances(h, direct, cls);
    kb.per_class_subtree_instances[cls] = subtree;
    ClassMetrics m;
    m.connectivity = kb.per_class_conn[cls];
    if (kb.total_instances > 0) {
      m.importance = static_cast<double>(subtree) /
                     static_cast<double>(kb.total_instances);
    }
    m.class_rr = ClassRr(s, h, cls);
    r.per_class.emplace(cls, m);
  }
  if (kb.total_instances == 0 && !s.classes.empty()) {
    r.undefined_reason["importance"] = "EmptyKnowledgeBase";
  }
  return r;
}

const std::vector<std::string> &OntologyMetricNames() {
  static const std::vector<std::string> kNames = {"rr", "ir", "ar", "cr",
                                                  "cohesion"};
  return kNames;
}

std::optional<double> MetricValue(const MetricReport &r,
                                  const std::string &name) {
  if (name == "rr") return r.rr;
  if (name == "ir") return r.ir;
  if (name == "ar") return r.ar;
  if (name == "cr") return r.cr;
  if (name == "cohesion") return static_cast<double>(r.cohesion);
  throw Error("UnknownMetric", "'" + name + "'");
}

ComparisonTable Compare(const MetricReport &a, const MetricReport &b) {
  ComparisonTable table;
  table.a_id = a.ontology_id;
  table.b_id = b.ontology_id;
  auto row = [&](std::string name, std::optional<double> va,
                 std::optional<double> vb) {
    ComparisonRow r{std::move(name), va, vb, std::nullopt};
    if (va && vb) r.delta = *vb - *va;
    table.rows.push_back(std::move(r));
  };
  for (const std::string &name : OntologyMetricNames()) {
    row(name, MetricValue(a, name), MetricValue(b, name));
  }
  std::set<Iri> classes;
  for (const auto &[c, m] : a.per_class) classes.insert(c);
  for (const auto &[c, m] : b.per_class) classes.insert(c);
  auto get = [](const MetricReport &r, const Iri &c,
                auto field) -> std::optional<double> {
    auto it = r.per_class.find(c);
    if (it == r.per_class.end()) return std::nullopt;
    return field(it->second);
  };
  for (const Iri &c : classes) {
    auto conn = [](const ClassMetrics &m) -> std::optional<double> {
      return static_cast<double>(m.connectivity);
    };
    auto imp = [](const ClassMetrics &m) { return m.importance; };
    auto crr = [](const ClassMetrics &m) -> std::optional<double> {
      return m.class_rr;
    };
    row("connectivity:" + c.str(), get(a, c, conn), get(b, c, conn));
    row("importance:" + c.str(), get(a, c, imp), get(b, c, imp));
    row("class_rr:" + c.str(), get(a, c, crr), get(b, c, crr));
  }
  return table;
}

namespace {

nlohmann::json OptionalJson(const std::optional<double> &v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

std::optional<double> OptionalFromJson(const nlohmann::json &j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

template <typename T>
nlohmann::json CountMap(const std::map<Iri, T> &m) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto &[k, v] : m) out[k.str()] = v;
  return out;
}

}  // namespace

void to_json(nlohmann::json &j, const MetricReport &r) {
  nlohmann::json per_class = nlohmann::json::object();
  for (const auto &[cls, m] : r.per_class) {
    per_class[cls.str()] = {{"connectivity", m.connectivity},
                            {"importance", OptionalJson(m.importance)},
                            {"class_rr", m.class_rr}};
  }
  j = {
      {"ontology_id", r.ontology_id},
      {"timestamp", r.timestamp},
      {"rr", r.rr},
      {"ir", OptionalJson(r.ir)},
      {"ar", OptionalJson(r.ar)},
      {"cr", OptionalJson(r.cr)},
      {"cohesion", r.cohesion},
      {"undefined_reason", r.undefined_reason},
      {"per_class", per_class},
      {"counts",
       {{"P", r.schema.P},
        {"H", r.schema.H},
        {"C", r.schema.C},
        {"S", r.schema.S},
        {"att", r.schema.att},
        {"nonempty_classes", r.kb.nonempty_classes},
        {"total_classes", r.kb.total_classes},
        {"per_class_conn", CountMap(r.kb.per_class_conn)},
        {"per_class_subtree_instances",
         CountMap(r.kb.per_class_subtree_instances)},
        {"total_instances", r.kb.total_instances},
        {"components", r.kb.components}}},
  };
}

void from_json(const nlohmann::json &j, MetricReport &r) {
  try {
    r = MetricReport{};
    r.ontology_id = j.at("ontology_id").get<std::string>();
    r.timestamp = j.at("timestamp").get<int64_t>();
    r.rr = j.at("rr").get<double>();
    r.ir = OptionalFromJson(j.at("ir"));
    r.ar = OptionalFromJson(j.at("ar"));
    r.cr = OptionalFromJson(j.at("cr"));
    r.cohesion = j.at("cohesion").get<size_t>();
    r.undefined_reason =
        j.at("undefined_reason").get<std::map<std::string, std::string>>();
    for (const auto &[cls, m] : j.at("per_class").items()) {
      r.per_class[Iri(cls)] = {m.at("connectivity").get<size_t>(),
                               OptionalFromJson(m.at("importance")),
                               m.at("class_rr").get<double>()};
    }
    const auto &c = j.at("counts");
    r.schema = {c.at("P").get<size_t>(), c.at("H").get<size_t>(),
                c.at("C").get<size_t>(), c.at("S").get<size_t>(),
                c.at("att").get<size_t>()};
    r.kb.nonempty_classes = c.at("nonempty_classes").get<size_t>();
    r.kb.total_classes = c.at("total_classes").get<size_t>();
    for (const auto &[cls, v] : c.at("per_class_conn").items()) {
      r.kb.per_class_conn[Iri(cls)] = v.get<size_t>();
    }
    for (const auto &[cls, v] : c.at("per_class_subtree_instances").items()) {
      r.kb.per_class_subtree_instances[Iri(cls)] = v.get<size_t>();
    }
    r.kb.total_instances = c.at("total_instances").get<size_t>();
    r.kb.components = c.at("components").get<size_t>();
  } catch (const nlohmann::json::exception &e) {
    throw Error("InvalidReport", e.what());
  }
}

void to_json(nlohmann::json &j, const ComparisonTable &table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const ComparisonRow &r : table.rows) {
    rows.push_back({{"metric", r.metric},
                    {"a", OptionalJson(r.a)},
                    {"b", OptionalJson(r.b)},
                    {"delta", OptionalJson(r.delta)}});
  }
  j = {{"a", table.a_id}, {"b", table.b_id}, {"rows", rows}};
}

}  // namespace ontorich
