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

#include <filesystem>

#include "httplib.h"
#include "ontorich/api.h"
#include "ontorich/fileio.h"

namespace ontorich {

HttpResponse DefaultHttpGet(const std::string &url) {
  const std::string file = "file://";
  if (url.rfind(file, 0) == 0) {
    std::filesystem::path path = url.substr(file.size());
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec)) return {404, ""};
    return {200, ReadFile(path)};
  }
  const std::string http = "http://";
  if (url.rfind(http, 0) != 0) return {0, ""};
  size_t slash = url.find('/', http.size());
  std::string origin = slash == std::string::npos ? url : url.substr(0, slash);
  std::string target = slash == std::string::npos ? "/" : url.substr(slash);
  httplib::Client client(origin);
  client.set_connection_timeout(10);
  client.set_read_timeout(30);
  client.set_follow_location(true);
  httplib::Result result = client.Get(target);
  if (!result) return {0, ""};
  return {result->status, result->body};
}

}  // namespace ontorich
