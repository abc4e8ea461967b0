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

#include "ontorich/turtle.h"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

#include "ontorich/error.h"
#include "ontorich/utf8.h"

namespace ontorich {
namespace {

bool IsPnCharsBase(unsigned char c) {
  return std::isalpha(c) || c >= 0x80;
}
bool IsPnCharsU(unsigned char c) { return IsPnCharsBase(c) || c == '_'; }
bool IsPnChars(unsigned char c) {
  return IsPnCharsU(c) || c == '-' || std::isdigit(c);
}

bool HasScheme(std::string_view iri) {
  if (iri.empty() || !std::isalpha(static_cast<unsigned char>(iri[0]))) {
    return false;
  }
  for (size_t i = 1; i < iri.size(); ++i) {
    char c = iri[i];
    if (c == ':') return true;
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' &&
        c != '-' && c != '.') {
      return false;
    }
  }
  return false;
}

std::string RemoveDotSegments(std::string path) {
  std::vector<std::string> out;
  size_t i = 0;
  bool absolute = !path.empty() && path[0] == '/';
  if (absolute) i = 1;
  std::string seg;
  bool trailing = false;
  while (i <= path.size()) {
    size_t slash = path.find('/', i);
    if (slash == std::string::npos) slash = path.size();
    seg = path.substr(i, slash - i);
    trailing = false;
    if (seg == "..") {
      if (!out.empty()) out.pop_back();
      trailing = true;
    } else if (seg == ".") {
      trailing = true;
    } else {
      out.push_back(seg);
    }
    i = slash + 1;
  }
  std::string result = absolute ? "/" : "";
  for (size_t k = 0; k < out.size(); ++k) {
    if (k) result += '/';
    result += out[k];
  }
  if (trailing && (result.empty() || result.back() != '/')) result += '/';
  return result;
}

// RFC 3986 reference resolution.
std::string Resolve(const std::string &base, const std::string &ref) {
  if (HasScheme(ref) || base.empty()) return ref;
  size_t scheme_end = base.find(':');
  std::string scheme = base.substr(0, scheme_end + 1);
  std::string rest = base.substr(scheme_end + 1);
  std::string authority;
  if (rest.rfind("//", 0) == 0) {
    size_t end = rest.find_first_of("/?#", 2);
    if (end == std::string::npos) end = rest.size();
    authority = rest.substr(0, end);
    rest = rest.substr(end);
  }
  std::string base_path = rest.substr(0, rest.find_first_of("?#"));
  std::string base_query;
  if (size_t q = rest.find('?'); q != std::string::npos) {
    base_query = rest.substr(q, rest.find('#', q) - q);
  }
  if (ref.empty()) return scheme + authority + base_path + base_query;
  if (ref[0] == '#') return scheme + authority + base_path + base_query + ref;
  if (ref.rfind("//", 0) == 0) return scheme + ref;
  if (ref[0] == '?') return scheme + authority + base_path + ref;
  size_t ref_tail = ref.find_first_of("?#");
  std::string ref_path = ref.substr(0, ref_tail);
  std::string ref_rest =
      ref_tail == std::string::npos ? "" : ref.substr(ref_tail);
  std::string merged;
  if (ref_path[0] == '/') {
    merged = ref_path;
  } else if (!authority.empty() && base_path.empty()) {
    merged = "/" + ref_path;
  } else {
    size_t slash = base_path.rfind('/');
    merged = (slash == std::string::npos ? "" : base_path.substr(0, slash + 1)) +
             ref_path;
  }
  return scheme + authority + RemoveDotSegments(merged) + ref_rest;
}

class TurtleParser {
 public:
  explicit TurtleParser(std::string_view text) : in_(text) {}

  Graph Parse() {
    // Skip a UTF-8 byte order mark.
    if (in_.substr(0, 3) == "\xEF\xBB\xBF") pos_ = 3;
    SkipWs();
    while (!AtEnd()) {
      Statement();
      SkipWs();
    }
    return Finish();
  }

 private:
  [[noreturn]] void Fail(const std::string &message) const {
    throw SyntaxError("ParseError", line_, col_, message);
  }

  bool AtEnd() const { return pos_ >= in_.size(); }
  char Peek(size_t ahead = 0) const {
    return pos_ + ahead < in_.size() ? in_[pos_ + ahead] : '\0';
  }
  char Next() {
    char c = in_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  void Expect(char c) {
    SkipWs();
    if (Peek() != c) {
      Fail(std::string("expected '") + c + "'" +
           (AtEnd() ? " but reached end of input"
                    : std::string(" but found '") + Peek() + "'"));
    }
    Next();
  }

  void SkipWs() {
    while (!AtEnd()) {
      char c = Peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        Next();
      } else if (c == '#') {
        while (!AtEnd() && Peek() != '\n') Next();
      } else {
        break;
      }
    }
  }

  bool MatchKeyword(std::string_view word, bool case_insensitive) {
    if (pos_ + word.size() > in_.size()) return false;
    for (size_t i = 0; i < word.size(); ++i) {
      char a = in_[pos_ + i];
      char b = word[i];
      if (case_insensitive) {
        a = static_cast<char>(std::tolower(static_cast<unsigned char>(a)));
        b = static_cast<char>(std::tolower(static_cast<unsigned char>(b)));
      }
      if (a != b) return false;
    }
    char after = Peek(word.size());
    return after == ' ' || after == '\t' || after == '\r' || after == '\n' ||
           after == '<' || after == '#';
  }

  void Statement() {
    if (Peek() == '@') {
      if (MatchKeyword("@prefix", false)) {
        for (int i = 0; i < 7; ++i) Next();
        PrefixDirective();
        Expect('.');
      } else if (MatchKeyword("@base", false)) {
        for (int i = 0; i < 5; ++i) Next();
        SkipWs();
        base_ = ReadIriRef();
        Expect('.');
      } else {
        Fail("unknown directive");
      }
      return;
    }
    if (MatchKeyword("PREFIX", true)) {
      for (int i = 0; i < 6; ++i) Next();
      PrefixDirective();
      return;
    }
    if (MatchKeyword("BASE", true)) {
      for (int i = 0; i < 4; ++i) Next();
      SkipWs();
      base_ = ReadIriRef();
      return;
    }
    Triples();
    Expect('.');
  }

  void PrefixDirective() {
    SkipWs();
    std::string prefix;
    if (Peek() != ':') {
      if (!IsPnCharsBase(static_cast<unsigned char>(Peek()))) {
        Fail("invalid prefix name");
      }
      while (!AtEnd() && (IsPnChars(static_cast<unsigned char>(Peek())) ||
                          Peek() == '.')) {
        prefix += Next();
      }
      if (!prefix.empty() && prefix.back() == '.') Fail("prefix ends in '.'");
    }
    if (Peek() != ':') Fail("expected ':' after prefix name");
    Next();
    SkipWs();
    prefixes_[prefix] = ReadIriRef();
  }

  void Triples() {
    SkipWs();
    Term subject;
    bool allow_empty = false;
    char c = Peek();
    if (c == '[') {
      subject = BlankNodePropertyList();
      allow_empty = true;
    } else if (c == '(') {
      subject = Collection();
    } else if (c == '<') {
      subject = Term::MakeIri(ReadIriRef());
    } else if (c == '_' && Peek(1) == ':') {
      subject = ReadBlankLabel();
    } else {
      subject = Term::MakeIri(ReadPrefixedName());
    }
    SkipWs();
    if (allow_empty && Peek() == '.') return;
    PredicateObjectList(subject);
  }

  void PredicateObjectList(const Term &subject) {
    while (true) {
      SkipWs();
      Term predicate = Verb();
      ObjectList(subject, predicate);
      SkipWs();
      if (Peek() != ';') return;
      while (Peek() == ';') {
        Next();
        SkipWs();
      }
      char c = Peek();
      if (c == '.' || c == ']' || AtEnd()) return;
    }
  }

  Term Verb() {
    if (Peek() == 'a') {
      char after = Peek(1);
      if (after == ' ' || after == '\t' || after == '\n' || after == '\r' ||
          after == '<' || after == '[' || after == '"' || after == '\'' ||
          after == '_' || after == '(' || after == '#') {
        Next();
        return Term::MakeIri(vocab::kType);
      }
    }
    if (Peek() == '<') return Term::MakeIri(ReadIriRef());
    if (Peek() == '[' || Peek() == '"' || Peek() == '_' || Peek() == '(') {
      Fail("predicate must be an IRI");
    }
    return Term::MakeIri(ReadPrefixedName());
  }

  void ObjectList(const Term &subject, const Term &predicate) {
    while (true) {
      SkipWs();
      Term object = Object();
      graph_.Insert(subject, predicate, std::move(object));
      SkipWs();
      if (Peek() != ',') return;
      Next();
    }
  }

  Term Object() {
    char c = Peek();
    if (c == '<') return Term::MakeIri(ReadIriRef());
    if (c == '_' && Peek(1) == ':') return ReadBlankLabel();
    if (c == '[') return BlankNodePropertyList();
    if (c == '(') return Collection();
    if (c == '"' || c == '\'') return ReadStringLiteral();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-' ||
        (c == '.' && std::isdigit(static_cast<unsigned char>(Peek(1))))) {
      return ReadNumber();
    }
    for (std::string_view kw : {"true", "false"}) {
      if (in_.substr(pos_, kw.size()) == kw) {
        unsigned char after = static_cast<unsigned char>(Peek(kw.size()));
        if (!IsPnChars(after) && after != ':' && after != '.') {
          for (size_t i = 0; i < kw.size(); ++i) Next();
          return Term::Literal(std::string(kw), vocab::kXsdBoolean);
        }
        if (after == '.' &&
            !IsPnChars(static_cast<unsigned char>(Peek(kw.size() + 1)))) {
          for (size_t i = 0; i < kw.size(); ++i) Next();
          return Term::Literal(std::string(kw), vocab::kXsdBoolean);
        }
      }
    }
    if (AtEnd()) Fail("expected object but reached end of input");
    return Term::MakeIri(ReadPrefixedName());
  }

  Term BlankNodePropertyList() {
    Next();  // '['
    Term node = Term::Blank(FreshAnon());
    SkipWs();
    if (Peek() != ']') PredicateObjectList(node);
    Expect(']');
    return node;
  }

  Term Collection() {
    Next();  // '('
    std::vector<Term> items;
    SkipWs();
    while (Peek() != ')') {
      if (AtEnd()) Fail("unterminated collection");
      items.push_back(Object());
      SkipWs();
    }
    Next();
    if (items.empty()) return Term::MakeIri(vocab::kNil);
    Term head = Term::Blank(FreshAnon());
    Term cur = head;
    for (size_t i = 0; i < items.size(); ++i) {
      graph_.Insert(cur, Term::MakeIri(vocab::kFirst), items[i]);
      Term next = i + 1 < items.size() ? Term::Blank(FreshAnon())
                                       : Term::MakeIri(vocab::kNil);
      graph_.Insert(cur, Term::MakeIri(vocab::kRest), next);
      cur = next;
    }
    return head;
  }

  // Anonymous nodes get a provisional label containing '@', which cannot
  // occur in a user label; Finish() renames them.
  std::string FreshAnon() { return "@" + std::to_string(anon_++); }

  char32_t ReadHex(int digits) {
    char32_t cp = 0;
    for (int i = 0; i < digits; ++i) {
      char c = AtEnd() ? '\0' : Next();
      int v;
      if (c >= '0' && c <= '9') {
        v = c - '0';
      } else if (c >= 'a' && c <= 'f') {
        v = c - 'a' + 10;
      } else if (c >= 'A' && c <= 'F') {
        v = c - 'A' + 10;
      } else {
        Fail("invalid hex digit in escape");
      }
      cp = cp * 16 + v;
    }
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      Fail("escape is not a valid code point");
    }
    return cp;
  }

  std::string ReadIriRef() {
    if (Peek() != '<') Fail("expected IRI");
    Next();
    std::string iri;
    while (true) {
      if (AtEnd()) Fail("unterminated IRI");
      char c = Next();
      if (c == '>') break;
      if (c == '\\') {
        char kind = AtEnd() ? '\0' : Next();
        if (kind == 'u') {
          utf8::Append(iri, ReadHex(4));
        } else if (kind == 'U') {
          utf8::Append(iri, ReadHex(8));
        } else {
          Fail("invalid escape in IRI");
        }
        continue;
      }
      unsigned char uc = static_cast<unsigned char>(c);
      if (uc <= 0x20 || c == '<' || c == '"' || c == '{' || c == '}' ||
          c == '|' || c == '^' || c == '`') {
        Fail("invalid character in IRI");
      }
      iri += c;
    }
    std::string resolved = Resolve(base_, iri);
    if (!HasScheme(resolved)) Fail("relative IRI <" + iri + "> without base");
    return resolved;
  }

  std::string ReadPrefixedName() {
    int start_line = line_;
    int start_col = col_;
    std::string prefix;
    if (Peek() != ':') {
      if (!IsPnCharsBase(static_cast<unsigned char>(Peek()))) {
        Fail(AtEnd() ? "unexpected end of input"
                     : std::string("unexpected character '") + Peek() + "'");
      }
      while (!AtEnd() && (IsPnChars(static_cast<unsigned char>(Peek())) ||
                          (Peek() == '.' && IsPnChars(static_cast<unsigned char>(
                                                Peek(1)))))) {
        prefix += Next();
      }
    }
    if (Peek() != ':') {
      Fail("expected prefixed name, found '" + prefix + "'");
    }
    Next();
    std::string local;
    auto local_char = [&](size_t ahead) {
      unsigned char c = static_cast<unsigned char>(Peek(ahead));
      return IsPnChars(c) || c == ':' || c == '%' || c == '\\';
    };
    bool first = true;
    while (!AtEnd()) {
      unsigned char c = static_cast<unsigned char>(Peek());
      if (c == '.') {
        // A dot is part of the name only when more name characters follow.
        if (first || !local_char(1)) break;
        local += Next();
        continue;
      }
      if (c == '%') {
        local += Next();
        for (int i = 0; i < 2; ++i) {
          if (!std::isxdigit(static_cast<unsigned char>(Peek()))) {
            Fail("invalid percent escape");
          }
          local += Next();
        }
      } else if (c == '\\') {
        Next();
        char e = AtEnd() ? '\0' : Next();
        if (std::string_view("_~.-!$&'()*+,;=/?#@%").find(e) ==
            std::string_view::npos) {
          Fail("invalid local name escape");
        }
        local += e;
      } else if (IsPnChars(c) || c == ':' || (first && std::isdigit(c))) {
        local += Next();
      } else {
        break;
      }
      first = false;
    }
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) {
      throw Error("UnknownPrefix", "'" + prefix + ":' at line " +
                                       std::to_string(start_line) +
                                       ", column " + std::to_string(start_col));
    }
    return it->second + local;
  }

  Term ReadBlankLabel() {
    Next();
    Next();  // "_:"
    std::string label;
    unsigned char c = static_cast<unsigned char>(Peek());
    if (!IsPnCharsU(c) && !std::isdigit(c)) Fail("invalid blank node label");
    while (!AtEnd()) {
      c = static_cast<unsigned char>(Peek());
      if (c == '.') {
        if (!IsPnChars(static_cast<unsigned char>(Peek(1)))) break;
        label += Next();
      } else if (IsPnChars(c)) {
        label += Next();
      } else {
        break;
      }
    }
    explicit_labels_.insert(label);
    return Term::Blank(label);
  }

  Term ReadStringLiteral() {
    char quote = Next();
    bool long_form = Peek() == quote && Peek(1) == quote;
    if (long_form) {
      Next();
      Next();
    }
    std::string value;
    while (true) {
      if (AtEnd()) Fail("unterminated string literal");
      char c = Peek();
      if (c == quote) {
        if (!long_form) {
          Next();
          break;
        }
        if (Peek(1) == quote && Peek(2) == quote) {
          Next();
          Next();
          Next();
          // Up to two extra quotes may precede the closing triple.
          while (Peek() == quote) {
            value += Next();
          }
          break;
        }
        value += Next();
        continue;
      }
      if (!long_form && (c == '\n' || c == '\r')) {
        Fail("line break in short string literal");
      }
      Next();
      if (c != '\\') {
        value += c;
        continue;
      }
      char e = AtEnd() ? '\0' : Next();
      switch (e) {
        case 't': value += '\t'; break;
        case 'b': value += '\b'; break;
        case 'n': value += '\n'; break;
        case 'r': value += '\r'; break;
        case 'f': value += '\f'; break;
        case '"': value += '"'; break;
        case '\'': value += '\''; break;
        case '\\': value += '\\'; break;
        case 'u': utf8::Append(value, ReadHex(4)); break;
        case 'U': utf8::Append(value, ReadHex(8)); break;
        default: Fail("invalid string escape");
      }
    }
    if (Peek() == '@') {
      Next();
      std::string lang;
      while (!AtEnd() && (std::isalnum(static_cast<unsigned char>(Peek())) ||
                          Peek() == '-')) {
        lang += Next();
      }
      if (lang.empty() || !std::isalpha(static_cast<unsigned char>(lang[0]))) {
        Fail("invalid language tag");
      }
      return Term::Literal(std::move(value), {}, std::move(lang));
    }
    if (Peek() == '^' && Peek(1) == '^') {
      Next();
      Next();
      std::string datatype =
          Peek() == '<' ? ReadIriRef() : ReadPrefixedName();
      return Term::Literal(std::move(value), std::move(datatype));
    }
    return Term::Literal(std::move(value));
  }

  Term ReadNumber() {
    std::string lex;
    auto digits = [&] {
      size_t n = 0;
      while (std::isdigit(static_cast<unsigned char>(Peek()))) {
        lex += Next();
        ++n;
      }
      return n;
    };
    if (Peek() == '+' || Peek() == '-') lex += Next();
    size_t int_digits = digits();
    bool decimal = false;
    bool exponent = false;
    if (Peek() == '.' && std::isdigit(static_cast<unsigned char>(Peek(1)))) {
      decimal = true;
      lex += Next();
      digits();
    }
    if (Peek() == 'e' || Peek() == 'E') {
      exponent = true;
      lex += Next();
      if (Peek() == '+' || Peek() == '-') lex += Next();
      if (digits() == 0) Fail("malformed exponent");
    }
    if (int_digits == 0 && !decimal) Fail("malformed number");
    const std::string &type = exponent  ? vocab::kXsdDouble
                              : decimal ? vocab::kXsdDecimal
                                        : vocab::kXsdInteger;
    return Term::Literal(std::move(lex), type);
  }

  Graph Finish() {
    for (const auto &[prefix, ns] : prefixes_) graph_.prefixes()[prefix] = ns;
    if (anon_ == 0) return std::move(graph_);
    std::map<std::string, std::string> renamed;
    int next = 0;
    auto rename = [&](const Term &t) {
      if (!t.is_blank() || t.value().empty() || t.value()[0] != '@') return t;
      auto it = renamed.find(t.value());
      if (it == renamed.end()) {
        std::string label;
        do {
          label = "b" + std::to_string(next++);
        } while (explicit_labels_.count(label));
        it = renamed.emplace(t.value(), label).first;
      }
      return Term::Blank(it->second);
    };
    Graph out;
    out.prefixes() = graph_.prefixes();
    for (const Triple &t : graph_.triples()) {
      out.Insert(rename(t.subject), t.predicate, rename(t.object));
    }
    return out;
  }

  std::string_view in_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Graph graph_;
  std::string base_;
  std::map<std::string, std::string> prefixes_;
  int anon_ = 0;
  std::set<std::string> explicit_labels_;
};

// --- serialization ---

bool IsSafeLocal(std::string_view local) {
  if (local.empty()) return false;
  for (size_t i = 0; i < local.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(local[i]);
    bool ok = std::isalnum(c) || c == '_' || (i > 0 && c == '-');
    if (!ok) return false;
  }
  return true;
}

bool IsSafeBlankLabel(std::string_view label) {
  if (label.empty()) return false;
  for (unsigned char c : label) {
    if (!std::isalnum(c) && c != '_' && c != '-') return false;
  }
  return true;
}

void AppendEscapedIri(std::string &out, std::string_view iri) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  out += '<';
  for (char c : iri) {
    unsigned char uc = static_cast<unsigned char>(c);
    if (uc <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' ||
        c == '}' || c == '|' || c == '^' || c == '`' || c == '\\') {
      out += "\\u00";
      out += kHex[uc >> 4];
      out += kHex[uc & 0xF];
    } else {
      out += c;
    }
  }
  out += '>';
}

void AppendEscapedString(std::string &out, std::string_view s) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: {
        unsigned char uc = static_cast<unsigned char>(c);
        if (uc < 0x20 || uc == 0x7F) {
          out += "\\u00";
          out += kHex[uc >> 4];
          out += kHex[uc & 0xF];
        } else {
          out += c;
        }
      }
    }
  }
  out += '"';
}

class TurtleWriter {
 public:
  explicit TurtleWriter(const Graph &graph) : graph_(graph) {
    // Relabel blank nodes whose labels cannot be written verbatim.
    std::set<std::string> used;
    for (const Triple &t : graph.triples()) {
      for (const Term *term : {&t.subject, &t.object}) {
        if (term->is_blank() && IsSafeBlankLabel(term->value())) {
          used.insert(term->value());
        }
      }
    }
    int next = 0;
    for (const Triple &t : graph.triples()) {
      for (const Term *term : {&t.subject, &t.object}) {
        if (!term->is_blank() || IsSafeBlankLabel(term->value()) ||
            blank_labels_.count(term->value())) {
          continue;
        }
        std::string label;
        do {
          label = "b" + std::to_string(next++);
        } while (used.count(label));
        used.insert(label);
        blank_labels_[term->value()] = label;
      }
    }
    // Statements are ordered by the labels actually written, so output is
    // stable under a parse/serialize cycle.
    if (!blank_labels_.empty()) {
      auto relabel = [&](const Term &t) {
        auto it = t.is_blank() ? blank_labels_.find(t.value())
                               : blank_labels_.end();
        return it == blank_labels_.end() ? t : Term::Blank(it->second);
      };
      for (const Triple &t : graph.triples()) {
        relabeled_.Insert(relabel(t.subject), t.predicate, relabel(t.object));
      }
      triples_ = &relabeled_.triples();
    }
  }

  std::string Write() {
    std::string out;
    for (const auto &[prefix, ns] : graph_.prefixes()) {
      out += "@prefix " + prefix + ": ";
      AppendEscapedIri(out, ns);
      out += " .\n";
    }
    if (!graph_.prefixes().empty() && !graph_.empty()) out += "\n";
    const Term *subject = nullptr;
    const Term *predicate = nullptr;
    for (const Triple &t : *triples_) {
      if (subject && *subject == t.subject) {
        if (*predicate == t.predicate) {
          out += " ,\n        ";
        } else {
          out += " ;\n    ";
          AppendTerm(out, t.predicate, true);
          out += ' ';
        }
      } else {
        if (subject) out += " .\n";
        AppendTerm(out, t.subject, false);
        out += ' ';
        AppendTerm(out, t.predicate, true);
        out += ' ';
      }
      AppendTerm(out, t.object, false);
      subject = &t.subject;
      predicate = &t.predicate;
    }
    if (subject) out += " .\n";
    return out;
  }

 private:
  void AppendTerm(std::string &out, const Term &term, bool predicate) {
    switch (term.kind()) {
      case Term::Kind::kIri:
        if (predicate && term.value() == vocab::kType) {
          out += 'a';
        } else {
          AppendIri(out, term.value());
        }
        return;
      case Term::Kind::kBlank: {
        out += "_:";
        out += term.value();
        return;
      }
      case Term::Kind::kLiteral:
        AppendEscapedString(out, term.value());
        if (!term.lang().empty()) {
          out += '@';
          out += term.lang();
        } else if (!term.datatype().empty()) {
          out += "^^";
          AppendIri(out, term.datatype());
        }
        return;
    }
  }

  void AppendIri(std::string &out, const std::string &iri) {
    const std::string *best_prefix = nullptr;
    size_t best_len = 0;
    for (const auto &[prefix, ns] : graph_.prefixes()) {
      if (ns.size() > best_len && iri.size() > ns.size() &&
          iri.compare(0, ns.size(), ns) == 0 &&
          IsSafeLocal(std::string_view(iri).substr(ns.size()))) {
        best_prefix = &prefix;
        best_len = ns.size();
      }
    }
    if (best_prefix) {
      out += *best_prefix;
      out += ':';
      out.append(iri, best_len);
    } else {
      AppendEscapedIri(out, iri);
    }
  }

  const Graph &graph_;
  const std::set<Triple> *triples_ = &graph_.triples();
  Graph relabeled_;
  std::map<std::string, std::string> blank_labels_;
};

}  // namespace

Graph ParseTurtle(std::string_view text) { return TurtleParser(text).Parse(); }

std::string SerializeTurtle(const Graph &graph) {
  return TurtleWriter(graph).Write();
}

}  // namespace ontorich
