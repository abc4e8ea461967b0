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

#include "ontorich/server.h"

#include <sys/socket.h>

#include <map>

#include "httplib.h"
#include "ontorich/error.h"

namespace ontorich {

Server::Server(Api &api) : api_(api), http_(std::make_unique<httplib::Server>()) {
  auto handler = [this](const httplib::Request &req, httplib::Response &res) {
    std::map<std::string, std::string> query;
    for (const auto &[key, value] : req.params) query.emplace(key, value);
    HttpResult result = api_.Dispatch(req.method, req.path, query, req.body);
    res.status = result.status;
    res.set_content(DumpJson(result.body), "application/json");
  };
  http_->Get(".*", handler);
  http_->Post(".*", handler);
  http_->Put(".*", handler);
  http_->Delete(".*", handler);
  http_->Patch(".*", handler);
  // SO_REUSEADDR only: the library default SO_REUSEPORT would let a second
  // server share the port.
  http_->set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });
}

Server::~Server() = default;

int Server::Bind(const std::string &host, int port) {
  int bound = port == 0 ? http_->bind_to_any_port(host)
                        : (http_->bind_to_port(host, port) ? port : -1);
  if (bound <= 0) {
    throw Error("BindFailed", "cannot listen on " + host + ":" + std::to_string(port));
  }
  return bound;
}

void Server::Listen() { http_->listen_after_bind(); }

void Server::WaitUntilReady() { http_->wait_until_ready(); }

void Server::Stop() { http_->stop(); }

}  // namespace ontorich
