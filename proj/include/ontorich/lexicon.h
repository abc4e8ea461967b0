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

// WordNet-style semantic network: synsets linked by hypernym/hyponym and
// meronym/holonym pointers.
//
// File format, one synset per line, '#' starts a comment line:
//
//   id<TAB>pos<TAB>lemma,lemma,...<TAB>kind:target;kind:target;...
//
// pos is one of n, v, a, r. Pointer kinds are hypernym, hyponym,
// part_meronym, member_meronym, substance_meronym, part_holonym,
// member_holonym and substance_holonym. The pointer field may be empty or
// omitted. Lemmas are lowercased and underscores read as spaces.

#ifndef ONTORICH_LEXICON_H_
#define ONTORICH_LEXICON_H_

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ontorich/ontology.h"

namespace ontorich {

enum class PartOfSpeech { kNoun, kVerb, kAdj, kAdv };

enum class PointerKind {
  kHypernym,
  kHyponym,
  kPartMeronym,
  kMemberMeronym,
  kSubstanceMeronym,
  kPartHolonym,
  kMemberHolonym,
  kSubstanceHolonym,
};

enum class MeronymKind { kPart, kMember, kSubstance };

std::string PointerKindName(PointerKind kind);
std::optional<PointerKind> ParsePointerKind(std::string_view name);
PointerKind InversePointer(PointerKind kind);
std::optional<MeronymKind> ParseMeronymKind(std::string_view name);

struct Pointer {
  PointerKind kind;
  std::string target;

  auto operator<=>(const Pointer &) const = default;
};

struct Synset {
  std::string id;
  PartOfSpeech pos = PartOfSpeech::kNoun;
  std::vector<std::string> lemmas;
  std::set<Pointer> pointers;

  std::vector<std::string> Targets(PointerKind kind) const;
};

class Lexicon {
 public:
  // Validates the whole lexicon and completes missing inverse pointers.
  // Throws SyntaxError("LexiconFormatError"), Error("DanglingPointer") or
  // Error("HypernymCycle").
  static Lexicon Parse(std::string_view text);
  static Lexicon Load(const std::filesystem::path &path);

  const Synset *Find(const std::string &id) const;
  const Synset &Get(const std::string &id) const;
  // Noun synset ids for a lemma in file order; empty when unknown.
  std::vector<std::string> NounSenses(const std::string &lemma) const;

  const std::map<std::string, Synset> &synsets() const { return synsets_; }
  size_t NounCount() const;
  bool empty() const { return synsets_.empty(); }

 private:
  std::map<std::string, Synset> synsets_;
  std::map<std::string, std::vector<std::string>> lemma_index_;
};

struct HyponymNode {
  std::string synset_id;  // empty for the virtual root of a polysemous lemma
  std::vector<std::string> lemmas;
  std::vector<HyponymNode> children;
};

// Hyponym tree of every noun sense of `lemma`. With several senses the
// senses hang under a virtual root that does not count as a level. A synset
// is expanded at most once per tree (first encounter in preorder). Throws
// Error("UnknownLemma") and Error("InvalidArgument") for negative depths.
HyponymNode HyponymTree(const Lexicon &lexicon, const std::string &lemma,
                        int max_depth);

// Lemmas one meronym pointer of `kind` away from any noun sense of `lemma`,
// sorted and deduplicated. Throws Error("UnknownLemma").
std::vector<std::string> Meronyms(const Lexicon &lexicon,
                                  const std::string &lemma, MeronymKind kind);

enum class RelationKind { kIsKindOf, kPartOf, kMemberOf, kMadeFrom };

std::string RelationKindName(RelationKind kind);
std::optional<RelationKind> ParseRelationKind(std::string_view name);

struct RelationCandidate {
  Iri subject;
  std::string subject_label;
  RelationKind relation = RelationKind::kIsKindOf;
  Iri object;
  std::string object_label;
  std::vector<std::string> evidence;  // synset ids from subject to object
};

struct SuggestResult {
  std::vector<RelationCandidate> candidates;
  std::vector<Iri> unresolved;  // classes whose label matched no noun lemma
};

// Lowercased label with punctuation removed and spaces collapsed.
std::string NormalizeLabel(std::string_view label);

// "LaptopProducer" -> "laptop producer", then NormalizeLabel.
std::string SplitCamelCase(std::string_view name);

// Noun senses for a class: its label, then its IRI local name split at case
// changes and underscores, each also tried with a plural ending removed.
std::vector<std::string> ResolveConcept(const Lexicon &lexicon,
                                        const OntologySnapshot &snapshot,
                                        const Iri &cls);

// For every ordered pair of distinct classes: partOf, memberOf and madeFrom
// from single meronym pointers, isKindOf from hypernym ancestry at any
// depth. Relations the snapshot already states (a subclass path for
// isKindOf, a schema relation through a property of the same local name
// otherwise) are left out. Sorted by subject, relation, object.
SuggestResult SuggestRelations(const Lexicon &lexicon,
                               const OntologySnapshot &snapshot);

// CamelCase IRI local part for a lemma: "computer network" -> "ComputerNetwork".
std::string SanitizeLemma(std::string_view lemma);

// Edits adding the selected tree nodes as classes: each selected node goes
// under its nearest selected ancestor in the tree, or under `target`. Throws
// Error("DanglingReference") when `target` is not a class,
// Error("DuplicateEntity") when a selected lemma is already a class label
// and Error("InvalidArgument") for ids not in the tree.
std::vector<EditOp> HyponymEnrich(const OntologySnapshot &snapshot,
                                  const HyponymNode &tree,
                                  const std::vector<std::string> &selected,
                                  const Iri &target, const std::string &ns);

}  // namespace ontorich

#endif  // ONTORICH_LEXICON_H_
