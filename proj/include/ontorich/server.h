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

// Local HTTP front end: every request is routed through Api::Dispatch and
// answered with its JSON body.

#ifndef ONTORICH_SERVER_H_
#define ONTORICH_SERVER_H_

#include <memory>
#include <string>

#include "ontorich/api.h"

namespace httplib {
class Server;
}

namespace ontorich {

constexpr int kDefaultPort = 7781;

class Server {
 public:
  explicit Server(Api &api);
  ~Server();

  // Port 0 picks a free port. Returns the bound port; throws
  // Error("BindFailed").
  int Bind(const std::string &host, int port);
  // Serves until Stop() is called.
  void Listen();
  // Blocks until Listen() accepts connections.
  void WaitUntilReady();
  void Stop();

 private:
  Api &api_;
  std::unique_ptr<httplib::Server> http_;
};

}  // namespace ontorich

#endif  // ONTORICH_SERVER_H_
