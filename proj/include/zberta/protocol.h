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

#ifndef ZBERTA_PROTOCOL_H_
#define ZBERTA_PROTOCOL_H_

// JSON codecs for the three backend protocols:
//
//   POST /v1/parse  {"text"} -> {"tokens": [{"index","form","upos","head","deprel"}]}
//   POST /v1/nli    {"premise","hypotheses"} ->
//                   {"judgments": [{"entailment","neutral","contradiction"}]}
//   POST /v1/embed  {"texts"} -> {"vectors": [[float]]}
//
// Decoders throw ProtocolError on any deviation. Encoders of the responses
// exist for stub servers and contract tests.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "zberta/classifier.h"
#include "zberta/conllu.h"
#include "zberta/embedding.h"

namespace zberta {

inline constexpr std::string_view kParsePath = "/v1/parse";
inline constexpr std::string_view kNliPath = "/v1/nli";
inline constexpr std::string_view kEmbedPath = "/v1/embed";

// Tolerance on the decoded probability sum; decoded judgments are then
// renormalized so they satisfy the tighter in-memory invariant.
inline constexpr double kWireProbabilityTolerance = 1e-6;

nlohmann::json EncodeParseRequest(std::string_view text);
nlohmann::json EncodeParseResponse(const ParsedUtterance &u);
// Builds a validated utterance (source = remote parser) for `text`.
ParsedUtterance DecodeParseResponse(const nlohmann::json &reply,
                                    std::string_view text);

nlohmann::json EncodeNliRequest(std::string_view premise,
                                std::span<const std::string> hypotheses);
nlohmann::json EncodeNliResponse(std::span<const EntailmentJudgment> judgments);
std::vector<EntailmentJudgment> DecodeNliResponse(const nlohmann::json &reply,
                                                  size_t expected);

nlohmann::json EncodeEmbedRequest(std::span<const std::string> texts);
nlohmann::json EncodeEmbedResponse(std::span<const EmbeddingVector> vectors);
std::vector<EmbeddingVector> DecodeEmbedResponse(const nlohmann::json &reply,
                                                 size_t expected);

}  // namespace zberta

#endif  // ZBERTA_PROTOCOL_H_
