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

#include "zberta/parser_client.h"

#include <algorithm>

#include "zberta/errors.h"
#include "zberta/protocol.h"

namespace zberta {

ParsedUtterance RemoteParser::Parse(std::string_view utterance) const {
  bool blank = std::all_of(utterance.begin(), utterance.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  });
  if (blank) throw PreconditionError("cannot parse an empty utterance");
  nlohmann::json reply =
      PostJson(endpoint_, kParsePath, EncodeParseRequest(utterance), timeout_);
  return DecodeParseResponse(reply, utterance);
}

ParsedUtterance ParseRemote(std::string_view utterance, std::string_view url,
                            std::chrono::milliseconds timeout) {
  return RemoteParser(ParseEndpoint(url), timeout).Parse(utterance);
}

}  // namespace zberta
