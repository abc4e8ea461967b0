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

// File and field helpers shared by the on-disk stores.

#ifndef ONTORICH_FILEIO_H_
#define ONTORICH_FILEIO_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace ontorich {

std::string ReadFile(const std::filesystem::path &path);

// Writes to a sibling temp file, fsyncs and renames over `path`.
void WriteFileAtomic(const std::filesystem::path &path,
                     std::string_view content);

// One write(2) with O_APPEND, followed by fsync.
void AppendFile(const std::filesystem::path &path, std::string_view content);

// Drops a trailing partial line (bytes after the last '\n') left by a torn
// append, so the next append starts on a fresh line.
void TruncateTornTail(const std::filesystem::path &path);

std::vector<std::string> SplitTabs(std::string_view line);

// Backslash escaping for tab-separated records: \\ \t \n \r.
std::string EscapeField(std::string_view field);
std::string UnescapeField(std::string_view field);

bool ParseInt(std::string_view text, int64_t &out);
bool ParseDouble(std::string_view text, double &out);
// Shortest representation that round-trips.
std::string FormatDouble(double value);

// One entry per line; blank lines and lines starting with '#' skipped;
// surrounding whitespace trimmed.
std::vector<std::string> ParseListFile(std::string_view content);

std::string Trim(std::string_view text);

}  // namespace ontorich

#endif  // ONTORICH_FILEIO_H_
