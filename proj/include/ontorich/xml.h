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

// Small non-validating XML parser producing an element tree.

#ifndef ONTORICH_XML_H_
#define ONTORICH_XML_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ontorich {

struct XmlElement {
  std::string name;  // qualified name as written, e.g. "dc:creator"
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<XmlElement> children;
  std::string text;  // direct character data and CDATA, entities decoded
  int line = 0;

  const XmlElement *Child(std::string_view child_name) const;
  std::vector<const XmlElement *> Children(std::string_view child_name) const;
  std::optional<std::string> Attribute(std::string_view attr_name) const;
};

// Supports the XML declaration, comments, processing instructions, a
// skipped DOCTYPE, CDATA, the five predefined entities and character
// references. Throws SyntaxError("XmlError") with the offending position.
XmlElement ParseXml(std::string_view text);

}  // namespace ontorich

#endif  // ONTORICH_XML_H_
