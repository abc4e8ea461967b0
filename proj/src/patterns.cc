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

#include "ontorich/patterns.h"

#include <algorithm>
#include <charconv>
#include <regex>

#include "ontorich/error.h"
#include "ontorich/fileio.h"
#include "ontorich/lexicon.h"
#include "ontorich/stemmer.h"

namespace ontorich {

namespace {

std::vector<Token> SentenceTokens(std::string_view text, const Sentence &s) {
  std::vector<Token> tokens = Tokenize(s.In(text));
  for (Token &t : tokens) {
    t.begin += s.begin;
    t.end += s.begin;
  }
  return tokens;
}

std::vector<std::string> StemAll(const std::vector<std::string> &words) {
  std::vector<std::string> out;
  out.reserve(words.size());
  for (const std::string &w : words) out.push_back(StemToken(w));
  return out;
}

std::vector<std::string> SplitWords(const std::string &phrase) {
  std::vector<std::string> out;
  size_t start = 0;
  while (start < phrase.size()) {
    size_t sp = phrase.find(' ', start);
    if (sp == std::string::npos) sp = phrase.size();
    if (sp > start) out.push_back(phrase.substr(start, sp - start));
    start = sp + 1;
  }
  return out;
}

class ClassMatcher {
 public:
  explicit ClassMatcher(const OntologySnapshot &snapshot) {
    for (const Iri &cls : snapshot.classes) {
      std::vector<std::string> stems =
          StemAll(SplitWords(SplitCamelCase(snapshot.Label(cls))));
      if (!stems.empty()) labels_.emplace_back(std::move(stems), cls);
    }
  }

  // `words` are lowercase.
  std::optional<Iri> Match(const std::vector<std::string> &words) const {
    std::vector<std::string> stems = StemAll(words);
    std::optional<Iri> best;
    size_t best_len = 0;
    for (const auto &[label, cls] : labels_) {
      if (label.size() > stems.size() || label.size() <= best_len) continue;
      if (std::equal(label.begin(), label.end(),
                     stems.end() - static_cast<long>(label.size()))) {
        best = cls;
        best_len = label.size();
      }
    }
    return best;
  }

 private:
  std::vector<std::pair<std::vector<std::string>, Iri>> labels_;
};

bool IsStopword(const Token &t) { return DefaultStopwords().count(t.norm) > 0; }

bool IsDeterminer(const Token &t) {
  return t.norm == "a" || t.norm == "an" || t.norm == "the";
}

bool IsCapitalizedWord(const Token &t) { return t.is_word() && t.capitalized(); }

// Ends noun phrases and list items.
bool IsBoundaryWord(const Token &t) {
  return IsStopword(t) || Auxiliaries().count(t.norm) ||
         t.norm == "especially" || t.norm == "example" || t.norm == "including";
}

bool IsNounWord(const Token &t) { return t.is_word() && !IsBoundaryWord(t); }

bool IsListJoin(const Token &t) { return t.norm == "and" || t.norm == "or"; }

bool IsComma(const Token &t) { return t.kind == TokenKind::kPunct && t.surface == ","; }

struct Span {
  size_t first = 0;  // token indices, inclusive-exclusive
  size_t last = 0;
};

std::vector<std::string> Norms(const std::vector<Token> &t, Span span) {
  std::vector<std::string> out;
  for (size_t i = span.first; i < span.last; ++i) out.push_back(t[i].norm);
  return out;
}

std::string Surface(std::string_view text, const std::vector<Token> &t,
                    Span span) {
  return std::string(
      text.substr(t[span.first].begin, t[span.last - 1].end - t[span.first].begin));
}

// Drops leading stopwords such as a sentence-initial "The".
Span TrimLeadingStopwords(const std::vector<Token> &t, Span span) {
  while (span.first < span.last && IsStopword(t[span.first])) ++span.first;
  return span;
}

constexpr size_t kMaxNounPhrase = 3;

// List items going forward from `pos`: capitalized runs or lowercase noun
// chunks joined by commas, "and" or "or". The item after "and"/"or" is the
// last one.
std::vector<Span> ListForward(const std::vector<Token> &t, size_t pos) {
  std::vector<Span> items;
  bool joined = false;
  while (pos < t.size()) {
    while (pos < t.size() && IsDeterminer(t[pos])) ++pos;
    if (pos >= t.size()) break;
    Span item{pos, pos};
    if (IsCapitalizedWord(t[pos])) {
      while (item.last < t.size() && IsCapitalizedWord(t[item.last])) ++item.last;
      item = TrimLeadingStopwords(t, item);
    } else if (IsNounWord(t[pos])) {
      while (item.last < t.size() && IsNounWord(t[item.last]) &&
             !t[item.last].capitalized()) {
        ++item.last;
      }
    }
    if (item.first >= item.last) break;
    items.push_back(item);
    if (joined) break;
    pos = item.last;
    if (pos < t.size() && IsComma(t[pos])) {
      ++pos;
      if (pos < t.size() && IsListJoin(t[pos])) ++pos, joined = true;
    } else if (pos < t.size() && IsListJoin(t[pos])) {
      ++pos;
      joined = true;
    } else {
      break;
    }
  }
  return items;
}

// List items ending at token `end` (exclusive), returned in text order.
// Lowercase items are single words here since a backward chunk has no
// reliable left edge.
std::vector<Span> ListBackward(const std::vector<Token> &t, size_t end) {
  std::vector<Span> items;
  while (end > 0) {
    Span item{end, end};
    if (IsCapitalizedWord(t[end - 1])) {
      while (item.first > 0 && IsCapitalizedWord(t[item.first - 1])) --item.first;
      item = TrimLeadingStopwords(t, item);
    } else if (IsNounWord(t[end - 1])) {
      item.first = end - 1;
    }
    if (item.first >= item.last) break;
    items.push_back(item);
    end = item.first;
    if (end > 0 && IsListJoin(t[end - 1])) {
      --end;
      if (end > 0 && IsComma(t[end - 1])) --end;
    } else if (end > 0 && IsComma(t[end - 1])) {
      --end;
    } else {
      break;
    }
  }
  std::reverse(items.begin(), items.end());
  return items;
}

// Noun phrase ending right before token `end`.
Span NounPhraseBefore(const std::vector<Token> &t, size_t end) {
  Span np{end, end};
  while (np.first > 0 && end - np.first < kMaxNounPhrase &&
         IsNounWord(t[np.first - 1])) {
    --np.first;
  }
  return np;
}

Span NounPhraseAfter(const std::vector<Token> &t, size_t start) {
  Span np{start, start};
  while (np.last < t.size() && np.last - start < kMaxNounPhrase &&
         IsNounWord(t[np.last])) {
    ++np.last;
  }
  return np;
}

struct Binding {
  std::optional<Iri> cls;
  std::string raw;
};

InstanceCandidate MakeCandidate(std::string_view text,
                                const std::vector<Token> &t, Span span,
                                const Sentence &sentence, RuleFamily family,
                                std::string rule) {
  InstanceCandidate c;
  c.surface = Surface(text, t, span);
  c.family = family;
  c.rule = std::move(rule);
  c.begin = t[span.first].begin;
  c.end = t[span.last - 1].end;
  c.sentence = sentence;
  return c;
}

std::vector<InstanceCandidate> Hearst(std::string_view text,
                                      const Sentence &sentence,
                                      const ClassMatcher &matcher) {
  std::vector<Token> t = SentenceTokens(text, sentence);
  std::vector<InstanceCandidate> out;
  auto emit = [&](const std::vector<Span> &items, const Binding &b,
                  const char *cue) {
    for (Span item : items) {
      InstanceCandidate c =
          MakeCandidate(text, t, item, sentence, RuleFamily::kHearst, cue);
      c.cls = b.cls;
      if (!b.cls) c.raw_concept = b.raw;
      out.push_back(std::move(c));
    }
  };
  auto bind_before = [&](size_t cue) -> std::optional<Binding> {
    size_t end = cue;
    if (end > 0 && IsComma(t[end - 1])) --end;
    Span np = NounPhraseBefore(t, end);
    if (np.first == np.last) return std::nullopt;
    return Binding{matcher.Match(Norms(t, np)), Surface(text, t, np)};
  };
  for (size_t k = 0; k < t.size(); ++k) {
    const std::string &w = t[k].norm;
    auto next_is = [&](const char *word) {
      return k + 1 < t.size() && t[k + 1].norm == word;
    };
    if (w == "such" && next_is("as")) {
      if (auto b = bind_before(k)) emit(ListForward(t, k + 2), *b, "such as");
    } else if (w == "especially") {
      if (auto b = bind_before(k)) emit(ListForward(t, k + 1), *b, "especially");
    } else if (w == "for" && next_is("example")) {
      size_t start = k + 2;
      if (start < t.size() && IsComma(t[start])) ++start;
      if (auto b = bind_before(k)) emit(ListForward(t, start), *b, "for example");
    } else if (w == "or" && next_is("other")) {
      Span np = NounPhraseAfter(t, k + 2);
      if (np.first == np.last) continue;
      // The longest prefix naming a class wins; otherwise the whole phrase.
      Binding b{std::nullopt, Surface(text, t, np)};
      for (size_t last = np.last; last > np.first && !b.cls; --last) {
        Span prefix{np.first, last};
        if (auto cls = matcher.Match(Norms(t, prefix))) b = {cls, Surface(text, t, prefix)};
      }
      emit(ListBackward(t, k), b, "or other");
    }
  }
  return out;
}

bool IsCopula(const Token &t) {
  return t.norm == "is" || t.norm == "are" || t.norm == "was" || t.norm == "were";
}

bool IsIntensifier(const Token &t) {
  return t.norm == "very" || t.norm == "most" || t.norm == "more" ||
         t.norm == "quite" || t.norm == "really";
}

std::vector<InstanceCandidate> Copula(std::string_view text,
                                      const Sentence &sentence,
                                      const ClassMatcher &matcher) {
  std::vector<Token> t = SentenceTokens(text, sentence);
  std::vector<InstanceCandidate> out;
  for (size_t k = 1; k < t.size(); ++k) {
    if (!IsCopula(t[k])) continue;
    Span subject{k, k};
    while (subject.first > 0 && IsCapitalizedWord(t[subject.first - 1])) {
      --subject.first;
    }
    subject = TrimLeadingStopwords(t, subject);
    if (subject.first == subject.last) continue;
    size_t p = k + 1;
    if (p < t.size() && (t[p].norm == "not" || t[p].norm == "never")) continue;
    if (p < t.size() && IsDeterminer(t[p])) ++p;
    std::vector<std::string> predicate;
    for (; p < t.size() && t[p].is_word(); ++p) {
      if (IsIntensifier(t[p])) continue;
      if (IsBoundaryWord(t[p])) break;
      predicate.push_back(t[p].norm);
    }
    if (predicate.empty()) continue;
    std::optional<Iri> cls = matcher.Match(predicate);
    if (!cls) continue;
    InstanceCandidate c =
        MakeCandidate(text, t, subject, sentence, RuleFamily::kCopula, "copula");
    c.cls = cls;
    out.push_back(std::move(c));
  }
  return out;
}

bool IsAcronym(const Token &t) {
  if (t.surface.size() < 2) return false;
  return std::all_of(t.surface.begin(), t.surface.end(),
                     [](char c) { return c >= 'A' && c <= 'Z'; });
}

bool IsDayNumber(const Token &t) {
  if (!t.is_number() || t.surface.size() > 2) return false;
  int v = std::stoi(t.surface);
  return v >= 1 && v <= 31;
}

bool IsYear(const Token &t) { return t.is_number() && t.surface.size() == 4; }

const std::set<std::string> &OrganizationSuffixes() {
  static const std::set<std::string> kWords = {
      "inc",     "corp",      "corporation", "ltd",    "llc",
      "co",      "company",   "group",       "university", "bank",
      "institute", "foundation", "association", "agency", "gmbh",
      "plc",     "ag"};
  return kWords;
}

std::vector<InstanceCandidate> Entities(std::string_view text,
                                        const Sentence &sentence,
                                        const Gazetteers &g) {
  std::vector<Token> t = SentenceTokens(text, sentence);
  std::vector<InstanceCandidate> out;
  auto is_month = [&](const Token &x) {
    return IsCapitalizedWord(x) && g.months.count(x.norm);
  };
  std::vector<bool> used(t.size(), false);
  auto emit = [&](Span span, const char *kind) {
    for (size_t i = span.first; i < span.last; ++i) used[i] = true;
    out.push_back(
        MakeCandidate(text, t, span, sentence, RuleFamily::kHeuristic, kind));
  };
  // Date shapes first so their month is not reported twice.
  for (size_t i = 0; i < t.size(); ++i) {
    if (i + 2 < t.size() && IsDayNumber(t[i]) && is_month(t[i + 1]) &&
        IsYear(t[i + 2])) {
      emit({i, i + 3}, "Date");
      i += 2;
    } else if (i + 2 < t.size() && is_month(t[i]) && IsDayNumber(t[i + 1])) {
      size_t y = i + 2;
      if (y < t.size() && IsComma(t[y])) ++y;
      if (y < t.size() && IsYear(t[y])) {
        emit({i, y + 1}, "Date");
        i = y;
      }
    }
  }
  for (size_t i = 0; i < t.size(); ++i) {
    if (used[i]) continue;
    const Token &x = t[i];
    if (!x.is_word()) continue;
    if (g.relative_days.count(x.norm) ||
        (x.capitalized() && (g.weekdays.count(x.norm) || g.months.count(x.norm)))) {
      emit({i, i + 1}, "Date");
    }
  }
  size_t start = 0;
  while (start < t.size() && !t[start].is_word() && !t[start].is_number()) ++start;
  for (size_t i = 0; i < t.size();) {
    if (used[i] || !IsCapitalizedWord(t[i])) {
      ++i;
      continue;
    }
    Span run{i, i};
    while (run.last < t.size() && !used[run.last] &&
           IsCapitalizedWord(t[run.last])) {
      ++run.last;
    }
    i = run.last;
    run = TrimLeadingStopwords(t, run);
    if (run.first == run.last) continue;
    size_t words = run.last - run.first;
    if (run.first == start && words < 2 && !IsAcronym(t[run.first])) continue;
    bool org = words >= 2 && OrganizationSuffixes().count(t[run.last - 1].norm);
    emit(run, org ? "Organization" : "ProperName");
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const InstanceCandidate &a, const InstanceCandidate &b) {
                     return a.begin < b.begin;
                   });
  return out;
}

template <typename Fn>
std::vector<InstanceCandidate> OverCorpus(const Corpus &corpus, Fn fn) {
  std::vector<InstanceCandidate> out;
  for (const Document &doc : corpus.documents()) {
    for (const Sentence &s : SplitSentences(doc.body)) {
      for (InstanceCandidate &c : fn(doc.body, s)) {
        c.doc_id = doc.id;
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

Sentence Whole(std::string_view text) { return Sentence{0, text.size()}; }

std::set<std::string> ReadList(const std::filesystem::path &path,
                               const std::set<std::string> &fallback) {
  if (!std::filesystem::exists(path)) return fallback;
  std::set<std::string> out;
  for (const std::string &line : ParseListFile(ReadFile(path))) {
    out.insert(NormalizeLabel(line));
  }
  return out;
}

}  // namespace

const std::set<std::string> &Auxiliaries() {
  static const std::set<std::string> kWords = {
      "is",    "are",   "was",    "were",  "be",    "been",  "being",
      "am",    "has",   "have",   "had",   "do",    "does",  "did",
      "will",  "would", "shall",  "should", "can",  "could", "may",
      "might", "must"};
  return kWords;
}

const Gazetteers &Gazetteers::Default() {
  static const Gazetteers kDefault = {
      {"monday", "tuesday", "wednesday", "thursday", "friday", "saturday",
       "sunday"},
      {"january", "february", "march", "april", "may", "june", "july",
       "august", "september", "october", "november", "december"},
      {"today", "yesterday", "tomorrow"}};
  return kDefault;
}

Gazetteers Gazetteers::Load(const std::filesystem::path &dir) {
  const Gazetteers &d = Default();
  return {ReadList(dir / "weekdays.txt", d.weekdays),
          ReadList(dir / "months.txt", d.months),
          ReadList(dir / "relative_days.txt", d.relative_days)};
}

std::optional<Iri> MatchClassByHead(const OntologySnapshot &snapshot,
                                    const std::vector<std::string> &words) {
  std::vector<std::string> lower;
  for (const std::string &w : words) lower.push_back(NormalizeLabel(w));
  return ClassMatcher(snapshot).Match(lower);
}

std::vector<InstanceCandidate> HearstExtract(std::string_view text,
                                             const Sentence &sentence,
                                             const OntologySnapshot &snapshot) {
  return Hearst(text, sentence, ClassMatcher(snapshot));
}

std::vector<InstanceCandidate> CopulaExtract(std::string_view text,
                                             const Sentence &sentence,
                                             const OntologySnapshot &snapshot) {
  return Copula(text, sentence, ClassMatcher(snapshot));
}

std::vector<InstanceCandidate> EntityHeuristics(std::string_view text,
                                                const Sentence &sentence,
                                                const Gazetteers &gazetteers) {
  return Entities(text, sentence, gazetteers);
}

std::vector<InstanceCandidate> HearstExtract(std::string_view sentence,
                                             const OntologySnapshot &snapshot) {
  return HearstExtract(sentence, Whole(sentence), snapshot);
}

std::vector<InstanceCandidate> CopulaExtract(std::string_view sentence,
                                             const OntologySnapshot &snapshot) {
  return CopulaExtract(sentence, Whole(sentence), snapshot);
}

std::vector<InstanceCandidate> EntityHeuristics(std::string_view sentence,
                                                const Gazetteers &gazetteers) {
  return EntityHeuristics(sentence, Whole(sentence), gazetteers);
}

std::vector<InstanceCandidate> HearstExtract(const Corpus &corpus,
                                             const OntologySnapshot &snapshot) {
  ClassMatcher matcher(snapshot);
  return OverCorpus(corpus, [&](std::string_view text, const Sentence &s) {
    return Hearst(text, s, matcher);
  });
}

std::vector<InstanceCandidate> CopulaExtract(const Corpus &corpus,
                                             const OntologySnapshot &snapshot) {
  ClassMatcher matcher(snapshot);
  return OverCorpus(corpus, [&](std::string_view text, const Sentence &s) {
    return Copula(text, s, matcher);
  });
}

std::vector<InstanceCandidate> EntityHeuristics(const Corpus &corpus,
                                                const Gazetteers &gazetteers) {
  return OverCorpus(corpus, [&](std::string_view text, const Sentence &s) {
    return Entities(text, s, gazetteers);
  });
}

// --- user rules ---

std::string CaptureName(const PatternRule &rule) {
  switch (rule.capture) {
    case CaptureClass::kCapitalizedToken:
      return "CapitalizedToken";
    case CaptureClass::kNumberToken:
      return "NumberToken";
    case CaptureClass::kCapitalOrNumberToken:
      return "CapitalOrNumberToken";
    case CaptureClass::kRegex:
      return "Regex(" + rule.regex + ")";
  }
  return "";
}

std::string DirectionName(Direction direction) {
  return direction == Direction::kAfter ? "After" : "Before";
}

void PatternRule::Validate() const {
  if (name.empty()) throw Error("InvalidPattern", "rule name is empty");
  if (Tokenize(anchor).empty()) {
    throw Error("InvalidPattern", "rule " + name + ": anchor is empty");
  }
  if (max_gap < 0) {
    throw Error("InvalidPattern", "rule " + name + ": max_gap is negative");
  }
  if (capture == CaptureClass::kRegex) {
    if (regex.empty()) throw Error("InvalidPattern", "rule " + name + ": empty regex");
    try {
      std::regex re(regex);
    } catch (const std::regex_error &e) {
      throw Error("InvalidPattern", "rule " + name + ": " + e.what());
    }
  }
}

std::vector<PatternRule> ParsePatternRules(std::string_view text) {
  std::vector<PatternRule> rules;
  std::set<std::string> names;
  int line_no = 0;
  size_t start = 0;
  while (start < text.size()) {
    size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    start = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string_view> fields;
    std::vector<int> columns;
    size_t f = 0;
    while (true) {
      size_t tab = line.find('\t', f);
      columns.push_back(static_cast<int>(f) + 1);
      if (tab == std::string_view::npos) {
        fields.push_back(line.substr(f));
        break;
      }
      fields.push_back(line.substr(f, tab - f));
      f = tab + 1;
    }
    auto fail = [&](size_t field, const std::string &msg) -> SyntaxError {
      return SyntaxError("PatternFormatError", line_no,
                         columns[std::min(field, columns.size() - 1)], msg);
    };
    if (fields.size() != 5) throw fail(fields.size(), "expected 5 tab-separated fields");
    PatternRule rule;
    rule.name = std::string(fields[0]);
    rule.anchor = std::string(fields[1]);
    if (rule.name.empty()) throw fail(0, "empty rule name");
    if (!names.insert(rule.name).second) throw fail(0, "duplicate rule " + rule.name);
    std::string_view capture = fields[2];
    if (capture == "CapitalizedToken") {
      rule.capture = CaptureClass::kCapitalizedToken;
    } else if (capture == "NumberToken") {
      rule.capture = CaptureClass::kNumberToken;
    } else if (capture == "CapitalOrNumberToken") {
      rule.capture = CaptureClass::kCapitalOrNumberToken;
    } else if (capture.size() > 7 && capture.substr(0, 6) == "Regex(" &&
               capture.back() == ')') {
      rule.capture = CaptureClass::kRegex;
      rule.regex = std::string(capture.substr(6, capture.size() - 7));
    } else {
      throw fail(2, "unknown capture class " + std::string(capture));
    }
    if (fields[3] == "After") {
      rule.direction = Direction::kAfter;
    } else if (fields[3] == "Before") {
      rule.direction = Direction::kBefore;
    } else {
      throw fail(3, "direction must be After or Before");
    }
    std::string_view gap = fields[4];
    auto [ptr, ec] = std::from_chars(gap.data(), gap.data() + gap.size(), rule.max_gap);
    if (gap.empty() || ec != std::errc() || ptr != gap.data() + gap.size()) {
      throw fail(4, "max_gap must be an integer");
    }
    if (rule.anchor.empty()) throw fail(1, "empty anchor");
    rule.Validate();
    rules.push_back(std::move(rule));
  }
  return rules;
}

std::string FormatPatternRule(const PatternRule &rule) {
  return rule.name + "\t" + rule.anchor + "\t" + CaptureName(rule) + "\t" +
         DirectionName(rule.direction) + "\t" + std::to_string(rule.max_gap);
}

std::vector<InstanceCandidate> CustomExtract(const Corpus &corpus,
                                             const PatternRule &rule) {
  rule.Validate();
  std::vector<std::string> anchor;
  for (const Token &t : Tokenize(rule.anchor)) anchor.push_back(t.surface);
  std::optional<std::regex> re;
  if (rule.capture == CaptureClass::kRegex) re.emplace(rule.regex);
  auto captures = [&](const Token &t) {
    switch (rule.capture) {
      case CaptureClass::kCapitalizedToken:
        return IsCapitalizedWord(t);
      case CaptureClass::kNumberToken:
        return t.is_number();
      case CaptureClass::kCapitalOrNumberToken:
        return IsCapitalizedWord(t) || t.is_number();
      case CaptureClass::kRegex:
        return std::regex_match(t.surface, *re);
    }
    return false;
  };
  std::set<std::string> seen;
  return OverCorpus(corpus, [&](std::string_view text, const Sentence &s) {
    std::vector<Token> t = SentenceTokens(text, s);
    std::vector<InstanceCandidate> out;
    const size_t m = anchor.size();
    const size_t gap = static_cast<size_t>(rule.max_gap);
    size_t floor = 0;  // tokens before this index belong to earlier matches
    size_t i = 0;
    while (i + m <= t.size()) {
      bool hit = true;
      for (size_t a = 0; a < m && hit; ++a) hit = t[i + a].surface == anchor[a];
      if (!hit) {
        ++i;
        continue;
      }
      std::optional<size_t> found;
      if (rule.direction == Direction::kAfter) {
        for (size_t j = i + m; j < t.size() && j - (i + m) <= gap; ++j) {
          if (captures(t[j])) {
            found = j;
            break;
          }
        }
      } else {
        for (size_t j = i; j > floor && i - j <= gap; --j) {
          if (captures(t[j - 1])) {
            found = j - 1;
            break;
          }
        }
      }
      if (!found) {
        ++i;
        continue;
      }
      if (seen.insert(t[*found].surface).second) {
        out.push_back(MakeCandidate(text, t, {*found, *found + 1}, s,
                                    RuleFamily::kPattern, rule.name));
      }
      floor = std::max(*found + 1, i + m);
      i = floor;
    }
    return out;
  });
}

std::string RuleFamilyName(RuleFamily family) {
  switch (family) {
    case RuleFamily::kHearst:
      return "Hearst";
    case RuleFamily::kCopula:
      return "Copula";
    case RuleFamily::kHeuristic:
      return "Heuristic";
    case RuleFamily::kPattern:
      return "Pattern";
  }
  return "";
}

std::string CandidateStatusName(CandidateStatus status) {
  switch (status) {
    case CandidateStatus::kProposed:
      return "Proposed";
    case CandidateStatus::kAccepted:
      return "Accepted";
    case CandidateStatus::kRejected:
      return "Rejected";
  }
  return "";
}

CandidateStatus ParseCandidateStatus(std::string_view name) {
  if (name == "Proposed") return CandidateStatus::kProposed;
  if (name == "Accepted") return CandidateStatus::kAccepted;
  if (name == "Rejected") return CandidateStatus::kRejected;
  throw Error("InvalidArgument", "unknown candidate status " + std::string(name));
}

}  // namespace ontorich
