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

#ifndef ZBERTA_PARSER_CLIENT_H_
#define ZBERTA_PARSER_CLIENT_H_

#include <chrono>
#include <string_view>

#include "zberta/conllu.h"
#include "zberta/http_client.h"

namespace zberta {

// Client of the POST /v1/parse protocol. Stateless; concurrent calls are fine.
class RemoteParser {
 public:
  explicit RemoteParser(Endpoint endpoint,
                        std::chrono::milliseconds timeout = kDefaultTimeout)
      : endpoint_(std::move(endpoint)), timeout_(timeout) {}

  // Throws PreconditionError for blank text (nothing is sent), TransportError
  // and ProtocolError as PostJson / DecodeParseResponse do.
  ParsedUtterance Parse(std::string_view utterance) const;

  const Endpoint &endpoint() const { return endpoint_; }

 private:
  Endpoint endpoint_;
  std::chrono::milliseconds timeout_;
};

ParsedUtterance ParseRemote(std::string_view utterance, std::string_view url,
                            std::chrono::milliseconds timeout = kDefaultTimeout);

}  // namespace zberta

#endif  // ZBERTA_PARSER_CLIENT_H_
