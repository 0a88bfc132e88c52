// Copyright 2026 The zberta Authors.
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

#ifndef ZBERTA_SERVICE_H_
#define ZBERTA_SERVICE_H_

#include <map>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

#include "json.hpp"
#include "zberta/pipeline.h"

namespace httplib {
class Server;
}

namespace zberta {

struct HttpReply {
  int status = 200;
  nlohmann::json body;
};

// Request handling for the triage service, independent of the HTTP server:
//
//   POST /v1/discover {"utterance", "conllu"?} -> prediction record plus
//        "low_confidence" (top score below the configured floor)
//   GET  /healthz -> {"status", "dependencies": {name: status}}
//
// Malformed requests get 400, downstream parser/scorer failures 502.
class DiscoveryService {
 public:
  explicit DiscoveryService(const Pipeline &pipeline) : pipeline_(pipeline) {}

  HttpReply Discover(std::string_view request_body) const;
  HttpReply Health() const;

  // "reference", "none", "ok" or "unreachable: <reason>" per backend.
  std::map<std::string, std::string> CheckDependencies() const;
  bool DependenciesHealthy() const;

 private:
  const Pipeline &pipeline_;
};

// cpp-httplib front end serving a DiscoveryService on a thread pool.
class HttpFrontend {
 public:
  explicit HttpFrontend(const DiscoveryService &service);
  ~HttpFrontend();
  HttpFrontend(const HttpFrontend &) = delete;
  HttpFrontend &operator=(const HttpFrontend &) = delete;

  // Returns the bound port (an ephemeral one when `port` is 0), or -1.
  int Bind(const std::string &host, int port);
  // Blocks until Stop().
  bool Listen();
  void Stop();
  void WaitUntilReady() const;

 private:
  std::unique_ptr<httplib::Server> server_;
};

// Health-checks remote backends, then serves until the process is stopped.
// Returns a process exit code.
int RunServer(const Pipeline &pipeline, const std::string &host, int port,
              std::ostream &log);

}  // namespace zberta

#endif  // ZBERTA_SERVICE_H_
