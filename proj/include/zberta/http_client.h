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

#ifndef ZBERTA_HTTP_CLIENT_H_
#define ZBERTA_HTTP_CLIENT_H_

#include <chrono>
#include <string>
#include <string_view>

#include "json.hpp"

namespace zberta {

// Base URL of a remote backend, e.g. "http://127.0.0.1:8500/prefix".
struct Endpoint {
  std::string origin;     // "http://host:port"
  std::string base_path;  // "" or "/prefix" (no trailing slash)

  std::string ToString() const { return origin + base_path; }
};

// Throws ConfigError for anything but an http:// URL with a host.
Endpoint ParseEndpoint(std::string_view url);

inline constexpr std::chrono::milliseconds kDefaultTimeout{10000};

// POSTs a JSON body to endpoint + path and returns the decoded JSON reply.
// Connection failures, timeouts and non-200 statuses raise TransportError;
// a 200 reply that is not JSON raises ProtocolError. Safe to call
// concurrently: each call uses its own connection.
nlohmann::json PostJson(const Endpoint &endpoint, std::string_view path,
                        const nlohmann::json &body,
                        std::chrono::milliseconds timeout = kDefaultTimeout);

}  // namespace zberta

#endif  // ZBERTA_HTTP_CLIENT_H_
