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

#include "ontorich/codec.h"

#include "ontorich/error.h"

namespace ontorich {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Json OptIri(const std::optional<Iri> &iri) {
  return iri ? Json(iri->str()) : Json(nullptr);
}

Json IriList(const std::set<Iri> &iris) {
  Json out = Json::array();
  for (const Iri &i : iris) out.push_back(i.str());
  return out;
}

[[noreturn]] void Invalid(const std::string &message) {
  throw Error("InvalidRequest", message);
}

Iri RequireIri(const Json &j, const char *key) { return Iri(RequireString(j, key)); }

std::optional<Iri> OptionalIri(const Json &j, const char *key) {
  std::optional<std::string> s = OptionalString(j, key);
  if (!s) return std::nullopt;
  return Iri(*s);
}

std::string Label(const Json &j) { return OptionalString(j, "label").value_or(""); }

Assertion AssertionFrom(const Json &j) {
  return {RequireIri(j, "subject"), RequireIri(j, "property"), RequireIri(j, "object")};
}

Json AssertionJson(const char *op, const Assertion &a) {
  return {{"op", op},
          {"subject", a.subject.str()},
          {"property", a.property.str()},
          {"object", a.object.str()}};
}

Json AttributeJson(const char *op, const AttributeAssertion &a) {
  return {{"op", op},
          {"subject", a.subject.str()},
          {"attribute", a.attribute.str()},
          {"value", TermToJson(a.value)}};
}

AttributeAssertion AttributeFrom(const Json &j) {
  if (!j.contains("value")) Invalid("missing field value");
  return {RequireIri(j, "subject"), RequireIri(j, "attribute"), TermFromJson(j["value"])};
}

}  // namespace

std::string DumpJson(const Json &j) {
  return j.dump(2, ' ', false, Json::error_handler_t::replace) + "\n";
}

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error &e) {
    throw Error("InvalidRequest", std::string("malformed JSON: ") + e.what());
  }
}

std::string RequireString(const Json &j, const char *key) {
  if (!j.is_object() || !j.contains(key)) Invalid(std::string("missing field ") + key);
  if (!j[key].is_string()) Invalid(std::string("field ") + key + " must be a string");
  return j[key].get<std::string>();
}

std::optional<std::string> OptionalString(const Json &j, const char *key) {
  if (!j.is_object() || !j.contains(key) || j[key].is_null()) return std::nullopt;
  if (!j[key].is_string()) Invalid(std::string("field ") + key + " must be a string");
  return j[key].get<std::string>();
}

std::optional<int64_t> OptionalInt(const Json &j, const char *key) {
  if (!j.is_object() || !j.contains(key) || j[key].is_null()) return std::nullopt;
  if (!j[key].is_number_integer()) {
    Invalid(std::string("field ") + key + " must be an integer");
  }
  return j[key].get<int64_t>();
}

Json TermToJson(const Term &term) {
  Json j;
  switch (term.kind()) {
    case Term::Kind::kIri:
      j = {{"kind", "iri"}, {"value", term.value()}};
      break;
    case Term::Kind::kBlank:
      j = {{"kind", "blank"}, {"value", term.value()}};
      break;
    case Term::Kind::kLiteral:
      j = {{"kind", "literal"}, {"value", term.value()}};
      if (!term.datatype().empty()) j["datatype"] = term.datatype();
      if (!term.lang().empty()) j["lang"] = term.lang();
      break;
  }
  return j;
}

Term TermFromJson(const Json &j) {
  std::string kind = RequireString(j, "kind");
  std::string value = RequireString(j, "value");
  if (kind == "iri") return Term::MakeIri(Iri(value));
  if (kind == "blank") return Term::Blank(value);
  if (kind == "literal") {
    return Term::Literal(value, OptionalString(j, "datatype").value_or(""),
                         OptionalString(j, "lang").value_or(""));
  }
  Invalid("unknown term kind " + kind);
}

Json EditToJson(const EditOp &edit) {
  return std::visit(
      Overloaded{
          [](const AddClass &e) -> Json {
            return {{"op", "AddClass"},
                    {"iri", e.iri.str()},
                    {"parent", OptIri(e.parent)},
                    {"label", e.label}};
          },
          [](const RemoveClass &e) -> Json {
            return {{"op", "RemoveClass"}, {"iri", e.iri.str()}};
          },
          [](const AddSubclassEdge &e) -> Json {
            return {{"op", "AddSubclassEdge"},
                    {"child", e.child.str()},
                    {"parent", e.parent.str()}};
          },
          [](const RemoveSubclassEdge &e) -> Json {
            return {{"op", "RemoveSubclassEdge"},
                    {"child", e.child.str()},
                    {"parent", e.parent.str()}};
          },
          [](const AddObjectProperty &e) -> Json {
            return {{"op", "AddObjectProperty"},
                    {"iri", e.iri.str()},
                    {"domain", OptIri(e.domain)},
                    {"range", OptIri(e.range)},
                    {"label", e.label}};
          },
          [](const RemoveObjectProperty &e) -> Json {
            return {{"op", "RemoveObjectProperty"}, {"iri", e.iri.str()}};
          },
          [](const AddDatatypeProperty &e) -> Json {
            return {{"op", "AddDatatypeProperty"},
                    {"iri", e.iri.str()},
                    {"domain", OptIri(e.domain)},
                    {"label", e.label}};
          },
          [](const RemoveDatatypeProperty &e) -> Json {
            return {{"op", "RemoveDatatypeProperty"}, {"iri", e.iri.str()}};
          },
          [](const AddInstance &e) -> Json {
            return {{"op", "AddInstance"},
                    {"iri", e.iri.str()},
                    {"class", e.cls.str()},
                    {"label", e.label}};
          },
          [](const RemoveInstance &e) -> Json {
            return {{"op", "RemoveInstance"}, {"iri", e.iri.str()}, {"class", e.cls.str()}};
          },
          [](const AddRelationAssertion &e) -> Json {
            return AssertionJson("AddRelationAssertion", e.assertion);
          },
          [](const RemoveRelationAssertion &e) -> Json {
            return AssertionJson("RemoveRelationAssertion", e.assertion);
          },
          [](const AddAttributeAssertion &e) -> Json {
            return AttributeJson("AddAttributeAssertion", e.assertion);
          },
          [](const RemoveAttributeAssertion &e) -> Json {
            return AttributeJson("RemoveAttributeAssertion", e.assertion);
          },
          [](const AddSchemaRelation &e) -> Json {
            return AssertionJson("AddSchemaRelation", e.relation);
          },
          [](const RemoveSchemaRelation &e) -> Json {
            return AssertionJson("RemoveSchemaRelation", e.relation);
          },
      },
      edit);
}

EditOp EditFromJson(const Json &j) {
  if (!j.is_object()) Invalid("edit must be an object");
  std::string op = RequireString(j, "op");
  if (op == "AddClass") return AddClass{RequireIri(j, "iri"), OptionalIri(j, "parent"), Label(j)};
  if (op == "RemoveClass") return RemoveClass{RequireIri(j, "iri")};
  if (op == "AddSubclassEdge") {
    return AddSubclassEdge{RequireIri(j, "child"), RequireIri(j, "parent")};
  }
  if (op == "RemoveSubclassEdge") {
    return RemoveSubclassEdge{RequireIri(j, "child"), RequireIri(j, "parent")};
  }
  if (op == "AddObjectProperty") {
    return AddObjectProperty{RequireIri(j, "iri"), OptionalIri(j, "domain"),
                             OptionalIri(j, "range"), Label(j)};
  }
  if (op == "RemoveObjectProperty") return RemoveObjectProperty{RequireIri(j, "iri")};
  if (op == "AddDatatypeProperty") {
    return AddDatatypeProperty{RequireIri(j, "iri"), OptionalIri(j, "domain"), Label(j)};
  }
  if (op == "RemoveDatatypeProperty") return RemoveDatatypeProperty{RequireIri(j, "iri")};
  if (op == "AddInstance") {
    return AddInstance{RequireIri(j, "iri"), RequireIri(j, "class"), Label(j)};
  }
  if (op == "RemoveInstance") return RemoveInstance{RequireIri(j, "iri"), RequireIri(j, "class")};
  if (op == "AddRelationAssertion") return AddRelationAssertion{AssertionFrom(j)};
  if (op == "RemoveRelationAssertion") return RemoveRelationAssertion{AssertionFrom(j)};
  if (op == "AddAttributeAssertion") return AddAttributeAssertion{AttributeFrom(j)};
  if (op == "RemoveAttributeAssertion") return RemoveAttributeAssertion{AttributeFrom(j)};
  if (op == "AddSchemaRelation") return AddSchemaRelation{AssertionFrom(j)};
  if (op == "RemoveSchemaRelation") return RemoveSchemaRelation{AssertionFrom(j)};
  Invalid("unknown edit op " + op);
}

std::vector<EditOp> EditsFromJson(const Json &j) {
  if (!j.is_array()) Invalid("edits must be an array");
  std::vector<EditOp> out;
  for (const Json &e : j) out.push_back(EditFromJson(e));
  return out;
}

namespace {

Json TreeNode(const ClassTreeNode &node) {
  Json children = Json::array();
  for (const ClassTreeNode &c : node.children) children.push_back(TreeNode(c));
  return {{"iri", node.iri.str()}, {"label", node.label}, {"children", children}};
}

}  // namespace

Json ClassTreeToJson(const std::vector<ClassTreeNode> &roots) {
  Json out = Json::array();
  for (const ClassTreeNode &r : roots) out.push_back(TreeNode(r));
  return out;
}

Json IssueToJson(const Issue &issue) {
  Json entities = Json::array();
  for (const Iri &i : issue.entities) entities.push_back(i.str());
  return {{"kind", IssueKindName(issue.kind)},
          {"entities", entities},
          {"message", issue.message}};
}

Json HyponymToJson(const HyponymNode &node) {
  Json children = Json::array();
  for (const HyponymNode &c : node.children) children.push_back(HyponymToJson(c));
  return {{"synset_id", node.synset_id.empty() ? Json(nullptr) : Json(node.synset_id)},
          {"lemmas", node.lemmas},
          {"children", children}};
}

Json RelationCandidateToJson(const RelationCandidate &c) {
  return {{"subject", c.subject.str()},
          {"subject_label", c.subject_label},
          {"relation", RelationKindName(c.relation)},
          {"object", c.object.str()},
          {"object_label", c.object_label},
          {"evidence", c.evidence}};
}

Json InstanceCandidateToJson(const InstanceCandidate &c) {
  return {{"surface", c.surface},
          {"class", OptIri(c.cls)},
          {"raw_concept", c.raw_concept},
          {"family", RuleFamilyName(c.family)},
          {"rule", c.rule},
          {"doc_id", c.doc_id},
          {"begin", c.begin},
          {"end", c.end},
          {"sentence_begin", c.sentence.begin},
          {"sentence_end", c.sentence.end}};
}

InstanceCandidate InstanceCandidateFromJson(const Json &j) {
  InstanceCandidate c;
  try {
    c.surface = j.at("surface").get<std::string>();
    c.cls = OptionalIri(j, "class");
    c.raw_concept = j.at("raw_concept").get<std::string>();
    std::string family = j.at("family").get<std::string>();
    bool known = false;
    for (RuleFamily f : {RuleFamily::kHearst, RuleFamily::kCopula,
                         RuleFamily::kHeuristic, RuleFamily::kPattern}) {
      if (RuleFamilyName(f) == family) {
        c.family = f;
        known = true;
      }
    }
    if (!known) Invalid("unknown rule family " + family);
    c.rule = j.at("rule").get<std::string>();
    c.doc_id = j.at("doc_id").get<std::string>();
    c.begin = j.at("begin").get<size_t>();
    c.end = j.at("end").get<size_t>();
    c.sentence.begin = j.at("sentence_begin").get<size_t>();
    c.sentence.end = j.at("sentence_end").get<size_t>();
  } catch (const Json::exception &e) {
    Invalid(e.what());
  }
  return c;
}

Json TermCandidateToJson(const TermCandidate &t, bool with_tfidf) {
  Json j = {{"surface", t.surface},
            {"stem_key", t.stem_key},
            {"words", t.words},
            {"n_i", t.n_i},
            {"tf", t.tf},
            {"source_docs", t.source_docs}};
  if (with_tfidf) {
    j["tfidf"] = t.tfidf ? Json(*t.tfidf) : Json(nullptr);
    j["tfidf_per_doc"] = t.tfidf_per_doc;
  }
  return j;
}

Json SeriesPointToJson(const SeriesPoint &p) {
  return {{"sequence", p.sequence},
          {"timestamp", p.timestamp},
          {"value", p.value ? Json(*p.value) : Json(nullptr)}};
}

Json SyncReportToJson(const SyncReport &r) {
  Json failed = Json::array();
  for (const SyncFailure &f : r.failed) {
    failed.push_back({{"url", f.url}, {"error", f.error}, {"message", f.message}});
  }
  return {{"new", r.new_items}, {"duplicate", r.duplicates}, {"failed", failed}};
}

Json RelationshipsToJson(const OntologySnapshot &s) {
  Json edges = Json::array();
  for (const auto &[child, parent] : s.subclass_edges) {
    edges.push_back({{"child", child.str()}, {"parent", parent.str()}});
  }
  auto props = [&](const std::map<Iri, PropertyDecl> &m, bool ranges) {
    Json out = Json::array();
    for (const auto &[iri, decl] : m) {
      Json p = {{"iri", iri.str()}, {"label", s.Label(iri)}, {"domains", IriList(decl.domains)}};
      if (ranges) p["ranges"] = IriList(decl.ranges);
      out.push_back(p);
    }
    return out;
  };
  auto assertions = [](const std::set<Assertion> &set) {
    Json out = Json::array();
    for (const Assertion &a : set) {
      out.push_back({{"subject", a.subject.str()},
                     {"property", a.property.str()},
                     {"object", a.object.str()}});
    }
    return out;
  };
  return {{"subclass_edges", edges},
          {"object_properties", props(s.object_properties, true)},
          {"datatype_properties", props(s.datatype_properties, false)},
          {"schema_relations", assertions(s.schema_relations)},
          {"relation_assertions", assertions(s.relation_assertions)}};
}

Json SummaryToJson(const OntologySnapshot &s) {
  return {{"classes", s.classes.size()},
          {"subclass_edges", s.subclass_edges.size()},
          {"object_properties", s.object_properties.size()},
          {"datatype_properties", s.datatype_properties.size()},
          {"instances", s.instances.size()},
          {"relation_assertions", s.relation_assertions.size()},
          {"schema_relations", s.schema_relations.size()},
          {"attribute_assertions", s.attribute_assertions.size()},
          {"triples", s.graph.size()}};
}

}  // namespace ontorich
