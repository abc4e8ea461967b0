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

#include "ontorich/ontology.h"

#include <algorithm>
#include <deque>
#include <functional>

#include "ontorich/error.h"

namespace ontorich {
namespace {

Term T(const Iri &iri) { return Term::MakeIri(iri); }
Term T(const std::string &iri) { return Term::MakeIri(iri); }

bool IsClassMarker(const std::string &iri) {
  return iri == vocab::kOwlClass || iri == vocab::kRdfsClass;
}

}  // namespace

std::string OntologySnapshot::Label(const Iri &iri) const {
  auto it = labels.find(iri);
  return it != labels.end() ? it->second : iri.LocalName();
}

std::set<Iri> OntologySnapshot::Parents(const Iri &cls) const {
  std::set<Iri> out;
  for (auto it = subclass_edges.lower_bound({cls, Iri()});
       it != subclass_edges.end() && it->first == cls; ++it) {
    out.insert(it->second);
  }
  return out;
}

std::set<Iri> OntologySnapshot::Children(const Iri &cls) const {
  std::set<Iri> out;
  for (const auto &[child, parent] : subclass_edges) {
    if (parent == cls) out.insert(child);
  }
  return out;
}

std::set<Iri> OntologySnapshot::AncestorsOrSelf(const Iri &cls) const {
  std::set<Iri> seen{cls};
  std::deque<Iri> queue{cls};
  while (!queue.empty()) {
    Iri cur = queue.front();
    queue.pop_front();
    for (const Iri &p : Parents(cur)) {
      if (seen.insert(p).second) queue.push_back(p);
    }
  }
  return seen;
}

std::set<Iri> OntologySnapshot::DescendantsOrSelf(const Iri &cls) const {
  std::map<Iri, std::vector<Iri>> children;
  for (const auto &[child, parent] : subclass_edges) {
    children[parent].push_back(child);
  }
  std::set<Iri> seen{cls};
  std::deque<Iri> queue{cls};
  while (!queue.empty()) {
    Iri cur = queue.front();
    queue.pop_front();
    for (const Iri &c : children[cur]) {
      if (seen.insert(c).second) queue.push_back(c);
    }
  }
  return seen;
}

OntologySnapshot BuildOntologyView(Graph graph) {
  OntologySnapshot s;
  std::map<std::string, std::set<std::string>> types;
  std::map<std::string, std::set<std::string>> domains;
  std::map<std::string, std::set<std::string>> ranges;
  std::map<std::string, std::vector<const Term *>> label_literals;

  for (const Triple &t : graph.triples()) {
    if (!t.subject.is_iri()) continue;
    const std::string &p = t.predicate.value();
    if (p == vocab::kType && t.object.is_iri()) {
      types[t.subject.value()].insert(t.object.value());
    } else if (p == vocab::kSubClassOf && t.object.is_iri()) {
      Iri child(t.subject.value());
      Iri parent(t.object.value());
      s.classes.insert(child);
      s.classes.insert(parent);
      s.subclass_edges.emplace(child, parent);
    } else if (p == vocab::kDomain && t.object.is_iri()) {
      domains[t.subject.value()].insert(t.object.value());
    } else if (p == vocab::kRange && t.object.is_iri()) {
      ranges[t.subject.value()].insert(t.object.value());
    } else if (p == vocab::kLabel && t.object.is_literal()) {
      label_literals[t.subject.value()].push_back(&t.object);
    }
  }

  for (const auto &[subject, ts] : types) {
    for (const std::string &type : ts) {
      if (IsClassMarker(type)) s.classes.insert(Iri(subject));
    }
  }
  auto decl = [&](const std::string &iri) {
    PropertyDecl d;
    for (const auto &x : domains[iri]) d.domains.insert(Iri(x));
    for (const auto &x : ranges[iri]) d.ranges.insert(Iri(x));
    return d;
  };
  for (const auto &[subject, ts] : types) {
    if (ts.count(vocab::kObjectProperty)) {
      s.object_properties.emplace(Iri(subject), decl(subject));
    }
    if (ts.count(vocab::kDatatypeProperty)) {
      PropertyDecl d = decl(subject);
      for (const Iri &cls : d.domains) s.attributes.emplace(cls, Iri(subject));
      s.datatype_properties.emplace(Iri(subject), std::move(d));
    }
  }
  for (const auto &[subject, ts] : types) {
    std::set<Iri> known;
    for (const std::string &type : ts) {
      Iri cls(type);
      if (s.classes.count(cls)) known.insert(cls);
    }
    if (!known.empty()) s.instances.emplace(Iri(subject), std::move(known));
  }

  size_t accounted = 0;
  for (const Triple &t : graph.triples()) {
    if (!t.subject.is_iri()) continue;
    const std::string &p = t.predicate.value();
    Iri subject(t.subject.value());
    if (p == vocab::kType) {
      if (!t.object.is_iri()) continue;
      const std::string &o = t.object.value();
      if (IsClassMarker(o) || o == vocab::kObjectProperty ||
          o == vocab::kDatatypeProperty) {
        ++accounted;
      } else if (s.instances.count(subject) && s.classes.count(Iri(o))) {
        ++accounted;
      }
    } else if (p == vocab::kSubClassOf) {
      if (t.object.is_iri()) ++accounted;
    } else if (p == vocab::kDomain || p == vocab::kRange) {
      if (t.object.is_iri() && (s.object_properties.count(subject) ||
                                s.datatype_properties.count(subject))) {
        ++accounted;
      }
    } else if (p == vocab::kLabel) {
      if (t.object.is_literal()) ++accounted;
    } else if (Iri::IsValid(p) && s.object_properties.count(Iri(p))) {
      if (!t.object.is_iri()) continue;
      Iri object(t.object.value());
      if (s.instances.count(subject) && s.instances.count(object)) {
        s.relation_assertions.insert({subject, Iri(p), object});
        ++accounted;
      } else if (s.classes.count(subject) && s.classes.count(object)) {
        s.schema_relations.insert({subject, Iri(p), object});
        ++accounted;
      }
    } else if (Iri::IsValid(p) && s.datatype_properties.count(Iri(p))) {
      if (t.object.is_literal() && s.instances.count(subject)) {
        s.attribute_assertions.insert({subject, Iri(p), t.object});
        ++accounted;
      }
    }
  }
  s.ignored_triples = graph.size() - accounted;

  auto pick_label = [&](const Iri &iri) {
    auto it = label_literals.find(iri.str());
    if (it == label_literals.end()) return;
    // Prefer untagged, then English, then the smallest lexical form.
    const Term *best = nullptr;
    auto rank = [](const Term *t) {
      return t->lang().empty() ? 0 : (t->lang() == "en" ? 1 : 2);
    };
    for (const Term *t : it->second) {
      if (!best || rank(t) < rank(best) ||
          (rank(t) == rank(best) && t->value() < best->value())) {
        best = t;
      }
    }
    s.labels[iri] = best->value();
  };
  for (const Iri &c : s.classes) pick_label(c);
  for (const auto &[p, d] : s.object_properties) pick_label(p);
  for (const auto &[p, d] : s.datatype_properties) pick_label(p);
  for (const auto &[i, ts] : s.instances) pick_label(i);

  s.graph = std::move(graph);
  return s;
}

// --- edits ---

std::string EditKindName(const EditOp &edit) {
  static const char *const kNames[] = {
      "AddClass",           "RemoveClass",
      "AddSubclassEdge",    "RemoveSubclassEdge",
      "AddObjectProperty",  "RemoveObjectProperty",
      "AddDatatypeProperty", "RemoveDatatypeProperty",
      "AddInstance",        "RemoveInstance",
      "AddRelationAssertion", "RemoveRelationAssertion",
      "AddAttributeAssertion", "RemoveAttributeAssertion",
      "AddSchemaRelation",  "RemoveSchemaRelation"};
  return kNames[edit.index()];
}

namespace {

[[noreturn]] void Dangling(const std::string &what, const Iri &iri) {
  throw Error("DanglingReference", what + " <" + iri.str() + "> does not exist");
}
[[noreturn]] void Duplicate(const std::string &what, const std::string &id) {
  throw Error("DuplicateEntity", what + " " + id + " already exists");
}

// Refuses to remove an entity that other triples still point at.
void RequireUnreferenced(const Graph &g, const Iri &iri,
                         const std::string &what) {
  Term term = T(iri);
  for (const Triple &t : g.triples()) {
    if (t.subject == term) continue;
    if (t.object == term || t.predicate == term) {
      throw Error("DanglingReference",
                  "cannot remove " + what + " <" + iri.str() +
                      ">: still referenced by " + t.subject.ToString());
    }
  }
}

void EraseSubjectTriples(Graph &g, const Iri &iri) {
  Term term = T(iri);
  std::vector<Triple> doomed;
  for (auto it = g.triples().lower_bound(Triple{term, Term(), Term()});
       it != g.triples().end() && it->subject == term; ++it) {
    doomed.push_back(*it);
  }
  for (const Triple &t : doomed) g.Erase(t);
}

void RequireClass(const OntologySnapshot &s, const Iri &iri) {
  if (!s.classes.count(iri)) Dangling("class", iri);
}

bool IsInstanceOf(const OntologySnapshot &s, const Iri &iri) {
  return s.instances.count(iri) > 0;
}

struct EditApplier {
  const OntologySnapshot &s;
  Graph &g;

  void operator()(const AddClass &e) {
    if (s.classes.count(e.iri)) Duplicate("class", "<" + e.iri.str() + ">");
    if (e.parent) RequireClass(s, *e.parent);
    g.Insert(T(e.iri), T(vocab::kType), T(vocab::kOwlClass));
    if (e.parent) g.Insert(T(e.iri), T(vocab::kSubClassOf), T(*e.parent));
    if (!e.label.empty()) {
      g.Insert(T(e.iri), T(vocab::kLabel), Term::Literal(e.label));
    }
  }
  void operator()(const RemoveClass &e) {
    RequireClass(s, e.iri);
    RequireUnreferenced(g, e.iri, "class");
    EraseSubjectTriples(g, e.iri);
  }
  void operator()(const AddSubclassEdge &e) {
    RequireClass(s, e.child);
    RequireClass(s, e.parent);
    if (!g.Insert(T(e.child), T(vocab::kSubClassOf), T(e.parent))) {
      Duplicate("subclass edge", e.child.str() + " -> " + e.parent.str());
    }
  }
  void operator()(const RemoveSubclassEdge &e) {
    if (!g.Erase({T(e.child), T(vocab::kSubClassOf), T(e.parent)})) {
      Dangling("subclass edge from", e.child);
    }
  }
  void AddProperty(const Iri &iri, const std::string &marker,
                   const std::optional<Iri> &domain,
                   const std::optional<Iri> &range, const std::string &label) {
    if (s.object_properties.count(iri) || s.datatype_properties.count(iri) ||
        s.classes.count(iri)) {
      Duplicate("property", "<" + iri.str() + ">");
    }
    if (domain) RequireClass(s, *domain);
    if (range) RequireClass(s, *range);
    g.Insert(T(iri), T(vocab::kType), T(marker));
    if (domain) g.Insert(T(iri), T(vocab::kDomain), T(*domain));
    if (range) g.Insert(T(iri), T(vocab::kRange), T(*range));
    if (!label.empty()) g.Insert(T(iri), T(vocab::kLabel), Term::Literal(label));
  }
  void operator()(const AddObjectProperty &e) {
    AddProperty(e.iri, vocab::kObjectProperty, e.domain, e.range, e.label);
  }
  void operator()(const AddDatatypeProperty &e) {
    AddProperty(e.iri, vocab::kDatatypeProperty, e.domain, std::nullopt,
                e.label);
  }
  void RemoveProperty(const Iri &iri, bool exists) {
    if (!exists) Dangling("property", iri);
    RequireUnreferenced(g, iri, "property");
    EraseSubjectTriples(g, iri);
  }
  void operator()(const RemoveObjectProperty &e) {
    RemoveProperty(e.iri, s.object_properties.count(e.iri) > 0);
  }
  void operator()(const RemoveDatatypeProperty &e) {
    RemoveProperty(e.iri, s.datatype_properties.count(e.iri) > 0);
  }
  void operator()(const AddInstance &e) {
    RequireClass(s, e.cls);
    auto it = s.instances.find(e.iri);
    if (it != s.instances.end() && it->second.count(e.cls)) {
      Duplicate("instance", "<" + e.iri.str() + "> of <" + e.cls.str() + ">");
    }
    if (it == s.instances.end() && s.classes.count(e.iri)) {
      Duplicate("entity", "<" + e.iri.str() + "> (a class)");
    }
    g.Insert(T(e.iri), T(vocab::kType), T(e.cls));
    if (it == s.instances.end() && !e.label.empty()) {
      g.Insert(T(e.iri), T(vocab::kLabel), Term::Literal(e.label));
    }
  }
  void operator()(const RemoveInstance &e) {
    auto it = s.instances.find(e.iri);
    if (it == s.instances.end() || !it->second.count(e.cls)) {
      Dangling("instance", e.iri);
    }
    if (it->second.size() == 1) {
      for (const Assertion &a : s.relation_assertions) {
        if (a.subject == e.iri || a.object == e.iri) {
          throw Error("DanglingReference",
                      "instance <" + e.iri.str() +
                          "> still participates in relation assertions");
        }
      }
      for (const AttributeAssertion &a : s.attribute_assertions) {
        if (a.subject == e.iri) {
          throw Error("DanglingReference",
                      "instance <" + e.iri.str() +
                          "> still has attribute assertions");
        }
      }
      std::vector<Triple> labels;
      for (const Triple &t : g.triples()) {
        if (t.subject == T(e.iri) && t.predicate.value() == vocab::kLabel) {
          labels.push_back(t);
        }
      }
      for (const Triple &t : labels) g.Erase(t);
    }
    g.Erase({T(e.iri), T(vocab::kType), T(e.cls)});
  }
  void operator()(const AddRelationAssertion &e) {
    const Assertion &a = e.assertion;
    if (!IsInstanceOf(s, a.subject)) Dangling("instance", a.subject);
    if (!IsInstanceOf(s, a.object)) Dangling("instance", a.object);
    if (!s.object_properties.count(a.property)) {
      Dangling("object property", a.property);
    }
    if (!g.Insert(T(a.subject), T(a.property), T(a.object))) {
      Duplicate("assertion", a.subject.str() + " " + a.property.str() + " " +
                                 a.object.str());
    }
  }
  void operator()(const RemoveRelationAssertion &e) {
    const Assertion &a = e.assertion;
    if (!s.relation_assertions.count(a)) Dangling("assertion on", a.subject);
    g.Erase({T(a.subject), T(a.property), T(a.object)});
  }
  void operator()(const AddAttributeAssertion &e) {
    const AttributeAssertion &a = e.assertion;
    if (!IsInstanceOf(s, a.subject)) Dangling("instance", a.subject);
    if (!s.datatype_properties.count(a.attribute)) {
      Dangling("datatype property", a.attribute);
    }
    if (!a.value.is_literal()) {
      throw Error("InvalidEdit", "attribute value must be a literal");
    }
    if (!g.Insert(T(a.subject), T(a.attribute), a.value)) {
      Duplicate("attribute assertion", a.subject.str() + " " +
                                           a.attribute.str() + " " +
                                           a.value.ToString());
    }
  }
  void operator()(const RemoveAttributeAssertion &e) {
    const AttributeAssertion &a = e.assertion;
    if (!s.attribute_assertions.count(a)) Dangling("attribute on", a.subject);
    g.Erase({T(a.subject), T(a.attribute), a.value});
  }
  void operator()(const AddSchemaRelation &e) {
    const Assertion &r = e.relation;
    RequireClass(s, r.subject);
    RequireClass(s, r.object);
    if (!s.object_properties.count(r.property)) {
      Dangling("object property", r.property);
    }
    if (!g.Insert(T(r.subject), T(r.property), T(r.object))) {
      Duplicate("relation", r.subject.str() + " " + r.property.str() + " " +
                                r.object.str());
    }
  }
  void operator()(const RemoveSchemaRelation &e) {
    const Assertion &r = e.relation;
    if (!s.schema_relations.count(r)) Dangling("relation on", r.subject);
    g.Erase({T(r.subject), T(r.property), T(r.object)});
  }
};

}  // namespace

OntologySnapshot ApplyEdit(const OntologySnapshot &snapshot,
                           const EditOp &edit) {
  Graph graph = snapshot.graph;
  std::visit(EditApplier{snapshot, graph}, edit);
  return BuildOntologyView(std::move(graph));
}

OntologySnapshot ApplyEdits(const OntologySnapshot &snapshot,
                            const std::vector<EditOp> &edits) {
  OntologySnapshot cur = snapshot;
  for (const EditOp &e : edits) cur = ApplyEdit(cur, e);
  return cur;
}

EditOp Inverse(const EditOp &edit) {
  struct Visitor {
    EditOp operator()(const AddClass &e) { return RemoveClass{e.iri}; }
    EditOp operator()(const RemoveClass &e) { return AddClass{e.iri, {}, {}}; }
    EditOp operator()(const AddSubclassEdge &e) {
      return RemoveSubclassEdge{e.child, e.parent};
    }
    EditOp operator()(const RemoveSubclassEdge &e) {
      return AddSubclassEdge{e.child, e.parent};
    }
    EditOp operator()(const AddObjectProperty &e) {
      return RemoveObjectProperty{e.iri};
    }
    EditOp operator()(const RemoveObjectProperty &e) {
      return AddObjectProperty{e.iri, {}, {}, {}};
    }
    EditOp operator()(const AddDatatypeProperty &e) {
      return RemoveDatatypeProperty{e.iri};
    }
    EditOp operator()(const RemoveDatatypeProperty &e) {
      return AddDatatypeProperty{e.iri, {}, {}};
    }
    EditOp operator()(const AddInstance &e) {
      return RemoveInstance{e.iri, e.cls};
    }
    EditOp operator()(const RemoveInstance &e) {
      return AddInstance{e.iri, e.cls, {}};
    }
    EditOp operator()(const AddRelationAssertion &e) {
      return RemoveRelationAssertion{e.assertion};
    }
    EditOp operator()(const RemoveRelationAssertion &e) {
      return AddRelationAssertion{e.assertion};
    }
    EditOp operator()(const AddAttributeAssertion &e) {
      return RemoveAttributeAssertion{e.assertion};
    }
    EditOp operator()(const RemoveAttributeAssertion &e) {
      return AddAttributeAssertion{e.assertion};
    }
    EditOp operator()(const AddSchemaRelation &e) {
      return RemoveSchemaRelation{e.relation};
    }
    EditOp operator()(const RemoveSchemaRelation &e) {
      return AddSchemaRelation{e.relation};
    }
  };
  return std::visit(Visitor{}, edit);
}

// --- tree and validation ---

std::vector<Iri> FindSubclassCycle(const OntologySnapshot &snapshot) {
  std::map<Iri, std::vector<Iri>> parents;
  for (const auto &[child, parent] : snapshot.subclass_edges) {
    parents[child].push_back(parent);
  }
  enum Color { kWhite, kGrey, kBlack };
  std::map<Iri, Color> color;
  std::vector<Iri> stack;
  std::vector<Iri> cycle;
  std::function<bool(const Iri &)> visit = [&](const Iri &node) {
    color[node] = kGrey;
    stack.push_back(node);
    for (const Iri &p : parents[node]) {
      Color c = color[p];
      if (c == kGrey) {
        auto it = std::find(stack.begin(), stack.end(), p);
        cycle.assign(it, stack.end());
        return true;
      }
      if (c == kWhite && visit(p)) return true;
    }
    stack.pop_back();
    color[node] = kBlack;
    return false;
  };
  for (const Iri &cls : snapshot.classes) {
    if (color[cls] == kWhite && visit(cls)) return cycle;
  }
  return {};
}

namespace {

void BuildSubtree(const OntologySnapshot &s,
                  const std::map<Iri, std::vector<Iri>> &children,
                  ClassTreeNode &node) {
  auto it = children.find(node.iri);
  if (it == children.end()) return;
  for (const Iri &child : it->second) {
    ClassTreeNode c{child, s.Label(child), {}};
    BuildSubtree(s, children, c);
    node.children.push_back(std::move(c));
  }
}

}  // namespace

std::vector<ClassTreeNode> ClassTree(const OntologySnapshot &snapshot) {
  std::vector<Iri> cycle = FindSubclassCycle(snapshot);
  if (!cycle.empty()) {
    std::vector<std::string> names;
    for (const Iri &c : cycle) names.push_back(c.str());
    throw CyclicHierarchy(std::move(names));
  }
  auto by_label = [&](const Iri &a, const Iri &b) {
    std::string la = snapshot.Label(a);
    std::string lb = snapshot.Label(b);
    return la != lb ? la < lb : a < b;
  };
  std::map<Iri, std::vector<Iri>> children;
  std::set<Iri> has_parent;
  for (const auto &[child, parent] : snapshot.subclass_edges) {
    children[parent].push_back(child);
    has_parent.insert(child);
  }
  for (auto &[parent, kids] : children) {
    std::sort(kids.begin(), kids.end(), by_label);
  }
  std::vector<Iri> roots;
  for (const Iri &cls : snapshot.classes) {
    if (!has_parent.count(cls)) roots.push_back(cls);
  }
  std::sort(roots.begin(), roots.end(), by_label);
  std::vector<ClassTreeNode> forest;
  for (const Iri &root : roots) {
    ClassTreeNode node{root, snapshot.Label(root), {}};
    BuildSubtree(snapshot, children, node);
    forest.push_back(std::move(node));
  }
  return forest;
}

std::string IssueKindName(IssueKind kind) {
  switch (kind) {
    case IssueKind::kSubclassCycle: return "SubclassCycle";
    case IssueKind::kDanglingTypeReference: return "DanglingTypeReference";
    case IssueKind::kUndeclaredPropertyUse: return "UndeclaredPropertyUse";
    case IssueKind::kDomainViolation: return "DomainViolation";
    case IssueKind::kRangeViolation: return "RangeViolation";
  }
  return "Unknown";
}

namespace {

// Strongly connected components with more than one node, or with a
// self-loop, in the child -> parent graph (Tarjan).
std::vector<std::vector<Iri>> CyclicComponents(const OntologySnapshot &s) {
  std::map<Iri, std::vector<Iri>> parents;
  for (const auto &[child, parent] : s.subclass_edges) {
    parents[child].push_back(parent);
  }
  std::map<Iri, int> index;
  std::map<Iri, int> low;
  std::set<Iri> on_stack;
  std::vector<Iri> stack;
  std::vector<std::vector<Iri>> out;
  int counter = 0;
  std::function<void(const Iri &)> strong = [&](const Iri &v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack.insert(v);
    for (const Iri &w : parents[v]) {
      if (!index.count(w)) {
        strong(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack.count(w)) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<Iri> comp;
      Iri w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack.erase(w);
        comp.push_back(w);
      } while (w != v);
      bool self_loop = s.subclass_edges.count({v, v}) > 0;
      if (comp.size() > 1 || self_loop) {
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
      }
    }
  };
  for (const Iri &cls : s.classes) {
    if (!index.count(cls)) strong(cls);
  }
  return out;
}

bool TypedUnder(const OntologySnapshot &s, const Iri &instance,
                const Iri &cls) {
  auto it = s.instances.find(instance);
  if (it == s.instances.end()) return false;
  for (const Iri &type : it->second) {
    if (s.AncestorsOrSelf(type).count(cls)) return true;
  }
  return false;
}

}  // namespace

std::vector<Issue> ValidateStructure(const OntologySnapshot &s) {
  std::vector<Issue> issues;
  for (auto &comp : CyclicComponents(s)) {
    std::string names;
    for (const Iri &c : comp) names += (names.empty() ? "" : ", ") + c.str();
    issues.push_back({IssueKind::kSubclassCycle, comp,
                      "subclass cycle among " + names});
  }

  std::set<std::string> properties;
  for (const auto &[p, d] : s.object_properties) properties.insert(p.str());
  for (const auto &[p, d] : s.datatype_properties) properties.insert(p.str());
  for (const Triple &t : s.graph.triples()) {
    if (!t.subject.is_iri() || !Iri::IsValid(t.subject.value())) continue;
    Iri subject(t.subject.value());
    const std::string &p = t.predicate.value();
    if (p == vocab::kType && t.object.is_iri() &&
        !vocab::IsBuiltin(t.object.value()) &&
        !s.classes.count(Iri(t.object.value()))) {
      issues.push_back({IssueKind::kDanglingTypeReference,
                        {subject, Iri(t.object.value())},
                        "<" + subject.str() + "> typed with undeclared class <" +
                            t.object.value() + ">"});
    } else if (s.instances.count(subject) && !vocab::IsBuiltin(p) &&
               !properties.count(p)) {
      issues.push_back({IssueKind::kUndeclaredPropertyUse,
                        {subject, Iri(p)},
                        "instance <" + subject.str() +
                            "> uses undeclared property <" + p + ">"});
    }
  }
  auto check_decl_refs = [&](const std::map<Iri, PropertyDecl> &props) {
    for (const auto &[p, d] : props) {
      for (const auto *set : {&d.domains, &d.ranges}) {
        for (const Iri &cls : *set) {
          if (!s.classes.count(cls) && !vocab::IsBuiltin(cls.str())) {
            issues.push_back({IssueKind::kDanglingTypeReference,
                              {p, cls},
                              "property <" + p.str() +
                                  "> refers to undeclared class <" +
                                  cls.str() + ">"});
          }
        }
      }
    }
  };
  check_decl_refs(s.object_properties);
  check_decl_refs(s.datatype_properties);

  for (const Assertion &a : s.relation_assertions) {
    const PropertyDecl &d = s.object_properties.at(a.property);
    for (const Iri &dom : d.domains) {
      if (s.classes.count(dom) && !TypedUnder(s, a.subject, dom)) {
        issues.push_back({IssueKind::kDomainViolation,
                          {a.subject, a.property, dom},
                          "<" + a.subject.str() + "> is not a <" + dom.str() +
                              "> (domain of <" + a.property.str() + ">)"});
      }
    }
    for (const Iri &rng : d.ranges) {
      if (s.classes.count(rng) && !TypedUnder(s, a.object, rng)) {
        issues.push_back({IssueKind::kRangeViolation,
                          {a.object, a.property, rng},
                          "<" + a.object.str() + "> is not a <" + rng.str() +
                              "> (range of <" + a.property.str() + ">)"});
      }
    }
  }
  for (const AttributeAssertion &a : s.attribute_assertions) {
    const PropertyDecl &d = s.datatype_properties.at(a.attribute);
    for (const Iri &dom : d.domains) {
      if (s.classes.count(dom) && !TypedUnder(s, a.subject, dom)) {
        issues.push_back({IssueKind::kDomainViolation,
                          {a.subject, a.attribute, dom},
                          "<" + a.subject.str() + "> is not a <" + dom.str() +
                              "> (domain of <" + a.attribute.str() + ">)"});
      }
    }
  }
  return issues;
}

}  // namespace ontorich
