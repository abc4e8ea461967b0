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

#include "ontorich/lexicon.h"

#include <algorithm>
#include <deque>
#include <functional>

#include "ontorich/error.h"
#include "ontorich/fileio.h"
#include "ontorich/utf8.h"

namespace ontorich {

namespace {

struct KindName {
  PointerKind kind;
  const char *name;
};

constexpr KindName kPointerNames[] = {
    {PointerKind::kHypernym, "hypernym"},
    {PointerKind::kHyponym, "hyponym"},
    {PointerKind::kPartMeronym, "part_meronym"},
    {PointerKind::kMemberMeronym, "member_meronym"},
    {PointerKind::kSubstanceMeronym, "substance_meronym"},
    {PointerKind::kPartHolonym, "part_holonym"},
    {PointerKind::kMemberHolonym, "member_holonym"},
    {PointerKind::kSubstanceHolonym, "substance_holonym"},
};

PointerKind MeronymPointer(MeronymKind kind) {
  switch (kind) {
    case MeronymKind::kPart: return PointerKind::kPartMeronym;
    case MeronymKind::kMember: return PointerKind::kMemberMeronym;
    case MeronymKind::kSubstance: return PointerKind::kSubstanceMeronym;
  }
  return PointerKind::kPartMeronym;
}

std::string CollapseSpaces(std::string_view text) {
  std::string out;
  bool pending = false;
  for (char c : text) {
    if (c == ' ') {
      pending = !out.empty();
      continue;
    }
    if (pending) out += ' ';
    pending = false;
    out += c;
  }
  return out;
}

std::string NormalizeLemma(std::string_view raw) {
  std::string s = utf8::ToLower(Trim(raw));
  std::replace(s.begin(), s.end(), '_', ' ');
  std::replace(s.begin(), s.end(), '\t', ' ');
  return CollapseSpaces(s);
}

std::vector<std::string_view> SplitOn(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

std::string PointerKindName(PointerKind kind) {
  for (const auto &k : kPointerNames) {
    if (k.kind == kind) return k.name;
  }
  return "";
}

std::optional<PointerKind> ParsePointerKind(std::string_view name) {
  for (const auto &k : kPointerNames) {
    if (name == k.name) return k.kind;
  }
  return std::nullopt;
}

PointerKind InversePointer(PointerKind kind) {
  switch (kind) {
    case PointerKind::kHypernym: return PointerKind::kHyponym;
    case PointerKind::kHyponym: return PointerKind::kHypernym;
    case PointerKind::kPartMeronym: return PointerKind::kPartHolonym;
    case PointerKind::kMemberMeronym: return PointerKind::kMemberHolonym;
    case PointerKind::kSubstanceMeronym: return PointerKind::kSubstanceHolonym;
    case PointerKind::kPartHolonym: return PointerKind::kPartMeronym;
    case PointerKind::kMemberHolonym: return PointerKind::kMemberMeronym;
    case PointerKind::kSubstanceHolonym: return PointerKind::kSubstanceMeronym;
  }
  return kind;
}

std::optional<MeronymKind> ParseMeronymKind(std::string_view name) {
  if (name == "part") return MeronymKind::kPart;
  if (name == "member") return MeronymKind::kMember;
  if (name == "substance") return MeronymKind::kSubstance;
  return std::nullopt;
}

std::vector<std::string> Synset::Targets(PointerKind kind) const {
  std::vector<std::string> out;
  for (const Pointer &p : pointers) {
    if (p.kind == kind) out.push_back(p.target);
  }
  return out;
}

Lexicon Lexicon::Parse(std::string_view text) {
  Lexicon lex;
  std::vector<std::string> order;
  int line_no = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (Trim(line).empty() || Trim(line)[0] == '#') continue;

    std::vector<std::string_view> fields = SplitOn(line, '\t');
    std::vector<int> cols;
    int col = 1;
    for (auto f : fields) {
      cols.push_back(col);
      col += static_cast<int>(f.size()) + 1;
    }
    auto fail = [&](size_t field, const std::string &msg) -> void {
      throw SyntaxError("LexiconFormatError", line_no,
                        field < cols.size() ? cols[field] : 1, msg);
    };
    if (fields.size() != 3 && fields.size() != 4) {
      fail(0, "expected 3 or 4 tab-separated fields, got " +
                  std::to_string(fields.size()));
    }
    Synset s;
    s.id = Trim(fields[0]);
    if (s.id.empty() ||
        std::any_of(s.id.begin(), s.id.end(),
                    [](unsigned char c) { return std::isspace(c); })) {
      fail(0, "bad synset id '" + std::string(fields[0]) + "'");
    }
    if (lex.synsets_.count(s.id)) fail(0, "duplicate synset id '" + s.id + "'");
    std::string pos_field = Trim(fields[1]);
    if (pos_field == "n") s.pos = PartOfSpeech::kNoun;
    else if (pos_field == "v") s.pos = PartOfSpeech::kVerb;
    else if (pos_field == "a") s.pos = PartOfSpeech::kAdj;
    else if (pos_field == "r") s.pos = PartOfSpeech::kAdv;
    else fail(1, "unknown part of speech '" + pos_field + "'");
    for (std::string_view raw : SplitOn(fields[2], ',')) {
      std::string lemma = NormalizeLemma(raw);
      if (lemma.empty()) fail(2, "empty lemma");
      if (std::find(s.lemmas.begin(), s.lemmas.end(), lemma) == s.lemmas.end()) {
        s.lemmas.push_back(lemma);
      }
    }
    if (fields.size() == 4) {
      for (std::string_view raw : SplitOn(fields[3], ';')) {
        std::string item = Trim(raw);
        if (item.empty()) continue;
        size_t colon = item.find(':');
        if (colon == std::string::npos) fail(3, "pointer '" + item + "' lacks ':'");
        auto kind = ParsePointerKind(Trim(item.substr(0, colon)));
        if (!kind) fail(3, "unknown pointer kind in '" + item + "'");
        std::string target = Trim(item.substr(colon + 1));
        if (target.empty()) fail(3, "pointer '" + item + "' lacks a target");
        s.pointers.insert({*kind, target});
      }
    }
    order.push_back(s.id);
    lex.synsets_.emplace(s.id, std::move(s));
  }

  for (const auto &[id, s] : lex.synsets_) {
    for (const Pointer &p : s.pointers) {
      if (!lex.synsets_.count(p.target)) {
        throw Error("DanglingPointer", "'" + p.target + "' (from '" + id + "')");
      }
    }
  }
  for (auto &[id, s] : lex.synsets_) {
    for (const Pointer &p : std::set<Pointer>(s.pointers)) {
      lex.synsets_.at(p.target).pointers.insert({InversePointer(p.kind), id});
    }
  }

  // Hypernym cycles among nouns, by three-colour DFS.
  std::map<std::string, int> colour;
  std::vector<std::string> stack;
  std::function<void(const std::string &)> visit = [&](const std::string &id) {
    colour[id] = 1;
    stack.push_back(id);
    for (const std::string &up :
         lex.synsets_.at(id).Targets(PointerKind::kHypernym)) {
      if (lex.synsets_.at(up).pos != PartOfSpeech::kNoun) continue;
      if (colour[up] == 1) {
        std::string cycle;
        auto from = std::find(stack.begin(), stack.end(), up);
        for (auto it = from; it != stack.end(); ++it) cycle += *it + " -> ";
        throw Error("HypernymCycle", cycle + up);
      }
      if (colour[up] == 0) visit(up);
    }
    stack.pop_back();
    colour[id] = 2;
  };
  for (const auto &[id, s] : lex.synsets_) {
    if (s.pos == PartOfSpeech::kNoun && colour[id] == 0) visit(id);
  }

  for (const std::string &id : order) {
    for (const std::string &lemma : lex.synsets_.at(id).lemmas) {
      lex.lemma_index_[lemma].push_back(id);
    }
  }
  return lex;
}

Lexicon Lexicon::Load(const std::filesystem::path &path) {
  return Parse(ReadFile(path));
}

const Synset *Lexicon::Find(const std::string &id) const {
  auto it = synsets_.find(id);
  return it == synsets_.end() ? nullptr : &it->second;
}

const Synset &Lexicon::Get(const std::string &id) const {
  const Synset *s = Find(id);
  if (!s) throw Error("UnknownSynset", "'" + id + "'");
  return *s;
}

std::vector<std::string> Lexicon::NounSenses(const std::string &lemma) const {
  std::vector<std::string> out;
  auto it = lemma_index_.find(NormalizeLemma(lemma));
  if (it == lemma_index_.end()) return out;
  for (const std::string &id : it->second) {
    if (synsets_.at(id).pos == PartOfSpeech::kNoun) out.push_back(id);
  }
  return out;
}

size_t Lexicon::NounCount() const {
  return static_cast<size_t>(std::count_if(
      synsets_.begin(), synsets_.end(),
      [](const auto &kv) { return kv.second.pos == PartOfSpeech::kNoun; }));
}

namespace {

std::vector<std::string> SenseOrThrow(const Lexicon &lexicon,
                                      const std::string &lemma) {
  std::vector<std::string> senses = lexicon.NounSenses(lemma);
  if (senses.empty()) throw Error("UnknownLemma", "'" + lemma + "'");
  return senses;
}

// Hyponym targets ordered by first lemma, then id.
std::vector<std::string> SortedHyponyms(const Lexicon &lexicon,
                                        const Synset &s) {
  std::vector<std::string> out;
  for (const std::string &id : s.Targets(PointerKind::kHyponym)) {
    if (lexicon.Get(id).pos == PartOfSpeech::kNoun) out.push_back(id);
  }
  std::sort(out.begin(), out.end(), [&](const auto &a, const auto &b) {
    const auto &la = lexicon.Get(a).lemmas.front();
    const auto &lb = lexicon.Get(b).lemmas.front();
    return la != lb ? la < lb : a < b;
  });
  return out;
}

}  // namespace

HyponymNode HyponymTree(const Lexicon &lexicon, const std::string &lemma,
                        int max_depth) {
  if (max_depth < 0) throw Error("InvalidArgument", "depth must be >= 0");
  std::vector<std::string> senses = SenseOrThrow(lexicon, lemma);
  std::set<std::string> visited;
  std::function<HyponymNode(const std::string &, int)> build =
      [&](const std::string &id, int depth) {
        const Synset &s = lexicon.Get(id);
        HyponymNode node{id, s.lemmas, {}};
        visited.insert(id);
        if (depth >= max_depth) return node;
        for (const std::string &child : SortedHyponyms(lexicon, s)) {
          if (visited.count(child)) continue;
          node.children.push_back(build(child, depth + 1));
        }
        return node;
      };
  if (senses.size() == 1) return build(senses.front(), 0);
  HyponymNode root{"", {NormalizeLemma(lemma)}, {}};
  for (const std::string &id : senses) {
    if (!visited.count(id)) root.children.push_back(build(id, 0));
  }
  return root;
}

std::vector<std::string> Meronyms(const Lexicon &lexicon,
                                  const std::string &lemma, MeronymKind kind) {
  std::set<std::string> out;
  for (const std::string &id : SenseOrThrow(lexicon, lemma)) {
    for (const std::string &target : lexicon.Get(id).Targets(MeronymPointer(kind))) {
      for (const std::string &l : lexicon.Get(target).lemmas) out.insert(l);
    }
  }
  return {out.begin(), out.end()};
}

std::string RelationKindName(RelationKind kind) {
  switch (kind) {
    case RelationKind::kIsKindOf: return "isKindOf";
    case RelationKind::kPartOf: return "partOf";
    case RelationKind::kMemberOf: return "memberOf";
    case RelationKind::kMadeFrom: return "madeFrom";
  }
  return "";
}

std::optional<RelationKind> ParseRelationKind(std::string_view name) {
  for (RelationKind k : {RelationKind::kIsKindOf, RelationKind::kPartOf,
                         RelationKind::kMemberOf, RelationKind::kMadeFrom}) {
    if (name == RelationKindName(k)) return k;
  }
  return std::nullopt;
}

std::string NormalizeLabel(std::string_view label) {
  std::string out;
  size_t pos = 0;
  while (pos < label.size()) {
    char32_t cp = utf8::Decode(label, pos);
    if (utf8::IsLetter(cp) || (cp >= '0' && cp <= '9')) {
      utf8::Append(out, utf8::ToLower(cp));
    } else {
      out += ' ';
    }
  }
  return CollapseSpaces(out);
}

std::string SplitCamelCase(std::string_view name) {
  std::string out;
  for (size_t i = 0; i < name.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(name[i]);
    if (i > 0 && std::isupper(c)) {
      unsigned char prev = static_cast<unsigned char>(name[i - 1]);
      bool next_lower = i + 1 < name.size() &&
                        std::islower(static_cast<unsigned char>(name[i + 1]));
      if (std::islower(prev) || std::isdigit(prev) ||
          (std::isupper(prev) && next_lower)) {
        out += ' ';
      }
    }
    out += static_cast<char>(c);
  }
  return NormalizeLabel(out);
}

namespace {

std::vector<std::string> PluralVariants(const std::string &phrase) {
  std::vector<std::string> out = {phrase};
  auto ends = [&](const char *suffix) {
    std::string_view s(suffix);
    return phrase.size() > s.size() + 2 &&
           phrase.compare(phrase.size() - s.size(), s.size(), s) == 0;
  };
  if (ends("ies")) out.push_back(phrase.substr(0, phrase.size() - 3) + "y");
  if (ends("es")) out.push_back(phrase.substr(0, phrase.size() - 2));
  if (ends("s") && !ends("ss")) out.push_back(phrase.substr(0, phrase.size() - 1));
  return out;
}

}  // namespace

std::vector<std::string> ResolveConcept(const Lexicon &lexicon,
                                        const OntologySnapshot &snapshot,
                                        const Iri &cls) {
  std::vector<std::string> names = {NormalizeLabel(snapshot.Label(cls)),
                                    SplitCamelCase(cls.LocalName())};
  for (const std::string &name : names) {
    if (name.empty()) continue;
    for (const std::string &variant : PluralVariants(name)) {
      std::vector<std::string> senses = lexicon.NounSenses(variant);
      if (!senses.empty()) return senses;
    }
  }
  return {};
}

namespace {

struct Concept {
  Iri iri;
  std::string label;
  std::vector<std::string> senses;
};

// Shortest hypernym path from one of `from` to one of `to`, excluding the
// trivial path.
std::vector<std::string> HypernymPath(const Lexicon &lexicon,
                                      const std::vector<std::string> &from,
                                      const std::vector<std::string> &to) {
  for (const std::string &start : from) {
    std::map<std::string, std::string> parent;
    std::deque<std::string> queue = {start};
    parent[start] = "";
    while (!queue.empty()) {
      std::string cur = queue.front();
      queue.pop_front();
      for (const std::string &up : lexicon.Get(cur).Targets(PointerKind::kHypernym)) {
        if (parent.count(up)) continue;
        parent[up] = cur;
        if (std::find(to.begin(), to.end(), up) != to.end()) {
          std::vector<std::string> path = {up};
          for (std::string x = cur; !x.empty(); x = parent[x]) path.push_back(x);
          std::reverse(path.begin(), path.end());
          return path;
        }
        queue.push_back(up);
      }
    }
  }
  return {};
}

// [a, b] when `holder` (one of `wholes`) has a `kind` pointer to `part`
// (one of `parts`), reported from part to whole.
std::vector<std::string> MeronymEvidence(const Lexicon &lexicon,
                                         const std::vector<std::string> &parts,
                                         const std::vector<std::string> &wholes,
                                         PointerKind kind) {
  for (const std::string &part : parts) {
    for (const std::string &whole : wholes) {
      if (lexicon.Get(whole).pointers.count({kind, part})) return {part, whole};
    }
  }
  return {};
}

bool Stated(const OntologySnapshot &snapshot, const Iri &a, RelationKind kind,
            const Iri &b) {
  if (kind == RelationKind::kIsKindOf) {
    return snapshot.AncestorsOrSelf(a).count(b) > 0;
  }
  std::string name = utf8::ToLower(RelationKindName(kind));
  for (const Assertion &r : snapshot.schema_relations) {
    if (r.subject == a && r.object == b &&
        utf8::ToLower(r.property.LocalName()) == name) {
      return true;
    }
  }
  return false;
}

}  // namespace

SuggestResult SuggestRelations(const Lexicon &lexicon,
                               const OntologySnapshot &snapshot) {
  SuggestResult result;
  std::vector<Concept> concepts;
  for (const Iri &cls : snapshot.classes) {
    std::vector<std::string> senses = ResolveConcept(lexicon, snapshot, cls);
    if (senses.empty()) {
      result.unresolved.push_back(cls);
    } else {
      concepts.push_back({cls, snapshot.Label(cls), std::move(senses)});
    }
  }
  for (const Concept &a : concepts) {
    for (const Concept &b : concepts) {
      if (a.iri == b.iri) continue;
      for (RelationKind kind : {RelationKind::kIsKindOf, RelationKind::kPartOf,
                                RelationKind::kMemberOf, RelationKind::kMadeFrom}) {
        std::vector<std::string> evidence;
        switch (kind) {
          case RelationKind::kIsKindOf:
            evidence = HypernymPath(lexicon, a.senses, b.senses);
            break;
          case RelationKind::kPartOf:
            evidence = MeronymEvidence(lexicon, a.senses, b.senses,
                                       PointerKind::kPartMeronym);
            break;
          case RelationKind::kMemberOf:
            evidence = MeronymEvidence(lexicon, a.senses, b.senses,
                                       PointerKind::kMemberMeronym);
            break;
          case RelationKind::kMadeFrom: {
            // a is made from b: a holds a substance pointer to b.
            std::vector<std::string> e = MeronymEvidence(
                lexicon, b.senses, a.senses, PointerKind::kSubstanceMeronym);
            if (!e.empty()) evidence = {e[1], e[0]};
            break;
          }
        }
        if (evidence.empty() || Stated(snapshot, a.iri, kind, b.iri)) continue;
        result.candidates.push_back(
            {a.iri, a.label, kind, b.iri, b.label, std::move(evidence)});
      }
    }
  }
  std::sort(result.candidates.begin(), result.candidates.end(),
            [](const RelationCandidate &x, const RelationCandidate &y) {
              return std::tie(x.subject, x.relation, x.object) <
                     std::tie(y.subject, y.relation, y.object);
            });
  return result;
}

std::string SanitizeLemma(std::string_view lemma) {
  std::string out;
  bool upper_next = true;
  for (char ch : lemma) {
    unsigned char c = static_cast<unsigned char>(ch);
    if (c >= 0x80 || std::isalnum(c)) {
      out += upper_next ? static_cast<char>(std::toupper(c)) : ch;
      upper_next = false;
    } else {
      upper_next = true;
    }
  }
  if (out.empty()) throw Error("InvalidArgument", "lemma has no letters");
  if (std::isdigit(static_cast<unsigned char>(out[0]))) out = "_" + out;
  return out;
}

std::vector<EditOp> HyponymEnrich(const OntologySnapshot &snapshot,
                                  const HyponymNode &tree,
                                  const std::vector<std::string> &selected,
                                  const Iri &target, const std::string &ns) {
  if (!snapshot.classes.count(target)) {
    throw Error("DanglingReference", "class <" + target.str() + "> not found");
  }
  std::set<std::string> wanted(selected.begin(), selected.end());
  std::set<std::string> labels;
  for (const Iri &c : snapshot.classes) labels.insert(NormalizeLabel(snapshot.Label(c)));

  std::vector<EditOp> edits;
  std::set<std::string> found;
  std::set<Iri> created;
  std::function<void(const HyponymNode &, const Iri &)> walk =
      [&](const HyponymNode &node, const Iri &parent) {
        Iri next = parent;
        if (!node.synset_id.empty() && wanted.count(node.synset_id) &&
            !found.count(node.synset_id)) {
          found.insert(node.synset_id);
          const std::string &lemma = node.lemmas.front();
          if (labels.count(NormalizeLabel(lemma))) {
            throw Error("DuplicateEntity",
                        "a class labelled '" + lemma + "' already exists");
          }
          Iri iri(ns + SanitizeLemma(lemma));
          if (!created.insert(iri).second) {
            throw Error("DuplicateEntity", "<" + iri.str() + "> selected twice");
          }
          edits.push_back(AddClass{iri, std::nullopt, lemma});
          edits.push_back(AddSubclassEdge{iri, parent});
          next = iri;
        }
        for (const HyponymNode &child : node.children) walk(child, next);
      };
  walk(tree, target);
  for (const std::string &id : wanted) {
    if (!found.count(id)) {
      throw Error("InvalidArgument", "synset '" + id + "' is not in the tree");
    }
  }
  return edits;
}

}  // namespace ontorich
