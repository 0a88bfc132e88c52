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

#include "zberta/http_client.h"

#include "httplib.h"
#include "zberta/errors.h"

namespace zberta {

Endpoint ParseEndpoint(std::string_view url) {
  constexpr std::string_view kScheme = "http://";
  if (!url.starts_with(kScheme)) {
    throw ConfigError("endpoint must start with http:// : '" +
                      std::string(url) + "'");
  }
  std::string_view rest = url.substr(kScheme.size());
  size_t slash = rest.find('/');
  std::string_view host = rest.substr(0, slash);
  if (host.empty() || host.front() == ':') {
    throw ConfigError("endpoint has no host: '" + std::string(url) + "'");
  }
  Endpoint ep;
  ep.origin = std::string(kScheme) + std::string(host);
  if (slash != std::string_view::npos) {
    std::string_view path = rest.substr(slash);
    while (!path.empty() && path.back() == '/') path.remove_suffix(1);
    ep.base_path = std::string(path);
  }
  return ep;
}

nlohmann::json PostJson(const Endpoint &endpoint, std::string_view path,
                        const nlohmann::json &body,
                        std::chrono::milliseconds timeout) {
  httplib::Client client(endpoint.origin);
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);
  const std::string target = endpoint.base_path + std::string(path);
  auto res = client.Post(target, body.dump(), "application/json");
  if (!res) {
    throw TransportError("POST " + endpoint.ToString() + std::string(path) +
                         " failed: " + httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw TransportError("POST " + endpoint.ToString() + std::string(path) +
                         " returned HTTP " + std::to_string(res->status));
  }
  auto parsed = nlohmann::json::parse(res->body, nullptr, false);
  if (parsed.is_discarded()) {
    throw ProtocolError("reply from " + endpoint.ToString() + std::string(path) +
                        " is not valid JSON");
  }
  return parsed;
}

}  // namespace zberta
