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

#ifndef ONTORICH_ERROR_H_
#define ONTORICH_ERROR_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace ontorich {

// Domain error. The kind is the stable error name surfaced to CLI and HTTP
// callers (e.g. "DanglingReference"); the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string &message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string &kind() const { return kind_; }

 private:
  std::string kind_;
};

// Syntax error with a 1-based source position. Used for Turtle ("ParseError"),
// XML ("XmlError") and line-oriented data files.
class SyntaxError : public Error {
 public:
  SyntaxError(std::string kind, int line, int column,
              const std::string &message)
      : Error(std::move(kind), "line " + std::to_string(line) + ", column " +
                                   std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class FetchError : public Error {
 public:
  FetchError(int status, const std::string &url)
      : Error("FetchError",
              "HTTP status " + std::to_string(status) + " for " + url),
        status_(status) {}

  int status() const { return status_; }

 private:
  int status_;
};

class CyclicHierarchy : public Error {
 public:
  explicit CyclicHierarchy(std::vector<std::string> cycle);

  const std::vector<std::string> &cycle() const { return cycle_; }

 private:
  std::vector<std::string> cycle_;
};

}  // namespace ontorich

#endif  // ONTORICH_ERROR_H_
