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

#include "ontorich/xml.h"

#include "ontorich/error.h"
#include "ontorich/utf8.h"

namespace ontorich {

const XmlElement *XmlElement::Child(std::string_view child_name) const {
  for (const XmlElement &c : children) {
    if (c.name == child_name) return &c;
  }
  return nullptr;
}

std::vector<const XmlElement *> XmlElement::Children(
    std::string_view child_name) const {
  std::vector<const XmlElement *> out;
  for (const XmlElement &c : children) {
    if (c.name == child_name) out.push_back(&c);
  }
  return out;
}

std::optional<std::string> XmlElement::Attribute(
    std::string_view attr_name) const {
  for (const auto &[k, v] : attributes) {
    if (k == attr_name) return v;
  }
  return std::nullopt;
}

namespace {

constexpr int kMaxDepth = 512;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  XmlElement Document() {
    if (text_.substr(0, 3) == "\xEF\xBB\xBF") Advance(3);
    const size_t decl_at = pos_;
    std::optional<XmlElement> root;
    while (true) {
      SkipSpace();
      if (AtEnd()) break;
      if (Peek() != '<') Fail("character data outside the root element");
      if (Starts("<?")) {
        bool decl = Starts("<?xml") && pos_ + 5 < text_.size() &&
                    IsSpace(text_[pos_ + 5]);
        if (decl && pos_ != decl_at) Fail("misplaced XML declaration");
        SkipPast("?>", "processing instruction");
      } else if (Starts("<!--")) {
        SkipComment();
      } else if (Starts("<!DOCTYPE")) {
        if (root) Fail("DOCTYPE after the root element");
        SkipDoctype();
      } else {
        if (root) Fail("more than one root element");
        root = Element(0);
      }
    }
    if (!root) Fail("no root element");
    return std::move(*root);
  }

 private:
  [[noreturn]] void Fail(const std::string &message) const {
    throw SyntaxError("XmlError", line_, column_, message);
  }

  bool AtEnd() const { return pos_ >= text_.size(); }
  char Peek() const { return text_[pos_]; }
  bool Starts(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }
  static bool IsSpace(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  }

  void Advance(size_t n = 1) {
    for (size_t i = 0; i < n && pos_ < text_.size(); ++i, ++pos_) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else if ((static_cast<unsigned char>(text_[pos_]) & 0xC0) != 0x80) {
        ++column_;
      }
    }
  }

  void SkipSpace() {
    while (!AtEnd() && IsSpace(Peek())) Advance();
  }

  void Expect(char c) {
    if (AtEnd() || Peek() != c) Fail(std::string("expected '") + c + "'");
    Advance();
  }

  void SkipPast(std::string_view end, const char *what) {
    size_t at = text_.find(end, pos_);
    if (at == std::string_view::npos) Fail(std::string("unterminated ") + what);
    Advance(at + end.size() - pos_);
  }

  void SkipComment() {
    Advance(4);
    size_t at = text_.find("--", pos_);
    if (at == std::string_view::npos) Fail("unterminated comment");
    Advance(at - pos_);
    if (!Starts("-->")) Fail("'--' inside comment");
    Advance(3);
  }

  void SkipDoctype() {
    Advance(9);
    int depth = 0;
    while (!AtEnd()) {
      char c = Peek();
      if (c == '"' || c == '\'') {
        Advance();
        size_t at = text_.find(c, pos_);
        if (at == std::string_view::npos) Fail("unterminated DOCTYPE literal");
        Advance(at + 1 - pos_);
        continue;
      }
      if (c == '[') ++depth;
      if (c == ']') --depth;
      Advance();
      if (c == '>' && depth <= 0) return;
    }
    Fail("unterminated DOCTYPE");
  }

  static bool IsNameStart(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
           c == ':' || c >= 0x80;
  }
  static bool IsNameChar(unsigned char c) {
    return IsNameStart(c) || (c >= '0' && c <= '9') || c == '-' || c == '.';
  }

  std::string Name() {
    if (AtEnd() || !IsNameStart(static_cast<unsigned char>(Peek()))) {
      Fail("expected a name");
    }
    size_t start = pos_;
    while (!AtEnd() && IsNameChar(static_cast<unsigned char>(Peek()))) Advance();
    return std::string(text_.substr(start, pos_ - start));
  }

  // At '&'.
  void Reference(std::string &out) {
    size_t semi = text_.find(';', pos_);
    if (semi == std::string_view::npos || semi - pos_ > 12) {
      Fail("unterminated entity reference");
    }
    std::string_view ref = text_.substr(pos_ + 1, semi - pos_ - 1);
    if (ref == "lt") {
      out += '<';
    } else if (ref == "gt") {
      out += '>';
    } else if (ref == "amp") {
      out += '&';
    } else if (ref == "quot") {
      out += '"';
    } else if (ref == "apos") {
      out += '\'';
    } else if (ref.size() >= 2 && ref[0] == '#') {
      bool hex = ref[1] == 'x';
      std::string_view digits = ref.substr(hex ? 2 : 1);
      if (digits.empty()) Fail("empty character reference");
      uint32_t cp = 0;
      for (char d : digits) {
        int v;
        if (d >= '0' && d <= '9') {
          v = d - '0';
        } else if (hex && d >= 'a' && d <= 'f') {
          v = d - 'a' + 10;
        } else if (hex && d >= 'A' && d <= 'F') {
          v = d - 'A' + 10;
        } else {
          Fail("bad character reference");
        }
        cp = cp * (hex ? 16 : 10) + static_cast<uint32_t>(v);
        if (cp > 0x10FFFF) Fail("character reference out of range");
      }
      if (cp == 0 || (cp >= 0xD800 && cp <= 0xDFFF)) {
        Fail("invalid character reference");
      }
      utf8::Append(out, cp);
    } else {
      Fail("undefined entity &" + std::string(ref) + ";");
    }
    Advance(semi + 1 - pos_);
  }

  std::string AttributeValue() {
    if (AtEnd() || (Peek() != '"' && Peek() != '\'')) Fail("expected a quoted value");
    char quote = Peek();
    Advance();
    std::string out;
    while (true) {
      if (AtEnd()) Fail("unterminated attribute value");
      char c = Peek();
      if (c == quote) break;
      if (c == '<') Fail("'<' in attribute value");
      if (c == '&') {
        Reference(out);
      } else {
        out += c;
        Advance();
      }
    }
    Advance();
    return out;
  }

  XmlElement Element(int depth) {
    if (depth > kMaxDepth) Fail("elements nested too deeply");
    XmlElement el;
    el.line = line_;
    Expect('<');
    el.name = Name();
    while (true) {
      bool spaced = !AtEnd() && IsSpace(Peek());
      SkipSpace();
      if (AtEnd()) Fail("unterminated start tag");
      if (Starts("/>")) {
        Advance(2);
        return el;
      }
      if (Peek() == '>') {
        Advance();
        break;
      }
      if (!spaced) Fail("expected whitespace before attribute");
      std::string key = Name();
      SkipSpace();
      Expect('=');
      SkipSpace();
      if (el.Attribute(key)) Fail("duplicate attribute " + key);
      el.attributes.emplace_back(key, AttributeValue());
    }
    while (true) {
      if (AtEnd()) Fail("unclosed element <" + el.name + ">");
      char c = Peek();
      if (c == '<') {
        if (Starts("</")) {
          Advance(2);
          std::string closing = Name();
          if (closing != el.name) {
            Fail("</" + closing + "> does not close <" + el.name + ">");
          }
          SkipSpace();
          Expect('>');
          return el;
        }
        if (Starts("<![CDATA[")) {
          Advance(9);
          size_t at = text_.find("]]>", pos_);
          if (at == std::string_view::npos) Fail("unterminated CDATA section");
          el.text.append(text_.substr(pos_, at - pos_));
          Advance(at + 3 - pos_);
        } else if (Starts("<!--")) {
          SkipComment();
        } else if (Starts("<?")) {
          SkipPast("?>", "processing instruction");
        } else if (Starts("<!")) {
          Fail("unexpected markup declaration");
        } else {
          el.children.push_back(Element(depth + 1));
        }
      } else if (c == '&') {
        Reference(el.text);
      } else {
        el.text += c;
        Advance();
      }
    }
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

XmlElement ParseXml(std::string_view text) { return Parser(text).Document(); }

}  // namespace ontorich
