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

// Rule-based instance extraction from sentences: Hearst cues, copula
// sentences, capitalization and date heuristics, and user-defined rules.

#ifndef ONTORICH_PATTERNS_H_
#define ONTORICH_PATTERNS_H_

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ontorich/corpus.h"
#include "ontorich/graph.h"
#include "ontorich/ontology.h"
#include "ontorich/text.h"

namespace ontorich {

enum class CaptureClass {
  kCapitalizedToken,
  kNumberToken,
  kCapitalOrNumberToken,
  kRegex,
};

enum class Direction { kAfter, kBefore };

struct PatternRule {
  std::string name;
  std::string anchor;  // literal token sequence, matched case-sensitively
  CaptureClass capture = CaptureClass::kCapitalizedToken;
  std::string regex;   // for kRegex; must match the whole token
  Direction direction = Direction::kAfter;
  int max_gap = 0;     // tokens allowed between anchor and capture

  // Throws Error("InvalidPattern").
  void Validate() const;

  bool operator==(const PatternRule &) const = default;
};

// "CapitalizedToken", "NumberToken", "CapitalOrNumberToken" or
// "Regex(<expression>)".
std::string CaptureName(const PatternRule &rule);
std::string DirectionName(Direction direction);

// One rule per line: name<TAB>anchor<TAB>capture<TAB>direction<TAB>max_gap.
// Blank lines and lines starting with '#' are skipped. Throws
// SyntaxError("PatternFormatError") or Error("InvalidPattern").
std::vector<PatternRule> ParsePatternRules(std::string_view text);
std::string FormatPatternRule(const PatternRule &rule);

enum class RuleFamily { kHearst, kCopula, kHeuristic, kPattern };

std::string RuleFamilyName(RuleFamily family);

enum class CandidateStatus { kProposed, kAccepted, kRejected };

std::string CandidateStatusName(CandidateStatus status);
CandidateStatus ParseCandidateStatus(std::string_view name);

struct InstanceCandidate {
  std::string surface;
  // Bound class, or the raw noun phrase when no class matched. Heuristic
  // candidates carry neither.
  std::optional<Iri> cls;
  std::string raw_concept;
  RuleFamily family = RuleFamily::kHeuristic;
  // Cue ("such as"), heuristic kind ("ProperName", "Organization", "Date"),
  // "copula", or the pattern rule name.
  std::string rule;
  std::string doc_id;  // empty for a bare sentence
  size_t begin = 0;    // byte span of the surface in the source text
  size_t end = 0;
  Sentence sentence;   // enclosing sentence span in the source text
  CandidateStatus status = CandidateStatus::kProposed;

  bool operator==(const InstanceCandidate &) const = default;
};

// Closed list of auxiliaries that ends Hearst lists.
const std::set<std::string> &Auxiliaries();

struct Gazetteers {
  std::set<std::string> weekdays;  // lowercase
  std::set<std::string> months;    // lowercase
  std::set<std::string> relative_days;

  static const Gazetteers &Default();
  // Reads <dir>/weekdays.txt, months.txt and relative_days.txt when present;
  // missing files keep the defaults.
  static Gazetteers Load(const std::filesystem::path &dir);
};

// Single-sentence extractors. `text` is the source text and `sentence` a
// span inside it; offsets in the results refer to `text`.
std::vector<InstanceCandidate> HearstExtract(std::string_view text,
                                             const Sentence &sentence,
                                             const OntologySnapshot &snapshot);
std::vector<InstanceCandidate> CopulaExtract(std::string_view text,
                                             const Sentence &sentence,
                                             const OntologySnapshot &snapshot);
std::vector<InstanceCandidate> EntityHeuristics(
    std::string_view text, const Sentence &sentence,
    const Gazetteers &gazetteers = Gazetteers::Default());

// Whole-text conveniences: the text is treated as one sentence.
std::vector<InstanceCandidate> HearstExtract(std::string_view sentence,
                                             const OntologySnapshot &snapshot);
std::vector<InstanceCandidate> CopulaExtract(std::string_view sentence,
                                             const OntologySnapshot &snapshot);
std::vector<InstanceCandidate> EntityHeuristics(
    std::string_view sentence,
    const Gazetteers &gazetteers = Gazetteers::Default());

// Corpus-wide runs over every sentence of every document body, in document
// order. Candidates carry the document id.
std::vector<InstanceCandidate> HearstExtract(const Corpus &corpus,
                                             const OntologySnapshot &snapshot);
std::vector<InstanceCandidate> CopulaExtract(const Corpus &corpus,
                                             const OntologySnapshot &snapshot);
std::vector<InstanceCandidate> EntityHeuristics(
    const Corpus &corpus, const Gazetteers &gazetteers = Gazetteers::Default());

// Per sentence, each occurrence of the anchor captures the first token
// within max_gap tokens in the rule direction that matches the capture
// class. Matches do not overlap; results are deduplicated by surface.
// Throws Error("InvalidPattern").
std::vector<InstanceCandidate> CustomExtract(const Corpus &corpus,
                                             const PatternRule &rule);

// The class whose stemmed label words form the longest suffix of `words`
// (stemmed with StemToken); ties go to the smaller IRI.
std::optional<Iri> MatchClassByHead(const OntologySnapshot &snapshot,
                                    const std::vector<std::string> &words);

}  // namespace ontorich

#endif  // ONTORICH_PATTERNS_H_
