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

#include "zberta/protocol.h"

#include <cmath>

#include "zberta/errors.h"

namespace zberta {
namespace {

using nlohmann::json;

const json &Field(const json &obj, std::string_view key, std::string_view what) {
  if (!obj.is_object()) throw ProtocolError(std::string(what) + " is not an object");
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ProtocolError(std::string(what) + " lacks \"" + std::string(key) + "\"");
  }
  return *it;
}

const json &ArrayField(const json &obj, std::string_view key,
                       std::string_view what) {
  const json &v = Field(obj, key, what);
  if (!v.is_array()) {
    throw ProtocolError(std::string(what) + ": \"" + std::string(key) +
                        "\" is not an array");
  }
  return v;
}

int IntField(const json &obj, std::string_view key, std::string_view what) {
  const json &v = Field(obj, key, what);
  if (!v.is_number_integer()) {
    throw ProtocolError(std::string(what) + ": \"" + std::string(key) +
                        "\" is not an integer");
  }
  return v.get<int>();
}

std::string StringField(const json &obj, std::string_view key,
                        std::string_view what) {
  const json &v = Field(obj, key, what);
  if (!v.is_string()) {
    throw ProtocolError(std::string(what) + ": \"" + std::string(key) +
                        "\" is not a string");
  }
  return v.get<std::string>();
}

double NumberField(const json &obj, std::string_view key, std::string_view what) {
  const json &v = Field(obj, key, what);
  if (!v.is_number()) {
    throw ProtocolError(std::string(what) + ": \"" + std::string(key) +
                        "\" is not a number");
  }
  return v.get<double>();
}

}  // namespace

json EncodeParseRequest(std::string_view text) {
  return json{{"text", std::string(text)}};
}

json EncodeParseResponse(const ParsedUtterance &u) {
  json tokens = json::array();
  for (const Token &t : u.tokens) {
    tokens.push_back({{"index", t.index},
                      {"form", t.surface},
                      {"upos", t.upos},
                      {"head", t.head},
                      {"deprel", t.deprel}});
  }
  return json{{"tokens", std::move(tokens)}};
}

ParsedUtterance DecodeParseResponse(const json &reply, std::string_view text) {
  const json &tokens = ArrayField(reply, "tokens", "parse reply");
  std::vector<Token> out;
  out.reserve(tokens.size());
  for (size_t i = 0; i < tokens.size(); ++i) {
    const std::string what = "parse token " + std::to_string(i);
    const json &t = tokens[i];
    out.push_back(Token{IntField(t, "index", what), StringField(t, "form", what),
                        StringField(t, "upos", what), IntField(t, "head", what),
                        StringField(t, "deprel", what)});
  }
  try {
    return MakeParsedUtterance(std::string(text), std::move(out),
                               ParseSource::kRemoteParser);
  } catch (const ValidationError &e) {
    throw ProtocolError(std::string("parse reply is not a valid tree: ") +
                        e.what());
  }
}

json EncodeNliRequest(std::string_view premise,
                      std::span<const std::string> hypotheses) {
  return json{{"premise", std::string(premise)},
              {"hypotheses", json(std::vector<std::string>(hypotheses.begin(),
                                                           hypotheses.end()))}};
}

json EncodeNliResponse(std::span<const EntailmentJudgment> judgments) {
  json arr = json::array();
  for (const auto &j : judgments) {
    arr.push_back({{"entailment", j.entailment},
                   {"neutral", j.neutral},
                   {"contradiction", j.contradiction}});
  }
  return json{{"judgments", std::move(arr)}};
}

std::vector<EntailmentJudgment> DecodeNliResponse(const json &reply,
                                                  size_t expected) {
  const json &arr = ArrayField(reply, "judgments", "nli reply");
  if (arr.size() != expected) {
    throw ProtocolError("nli reply has " + std::to_string(arr.size()) +
                        " judgments, expected " + std::to_string(expected));
  }
  std::vector<EntailmentJudgment> out;
  out.reserve(arr.size());
  for (size_t i = 0; i < arr.size(); ++i) {
    const std::string what = "judgment " + std::to_string(i);
    EntailmentJudgment j{NumberField(arr[i], "entailment", what),
                         NumberField(arr[i], "neutral", what),
                         NumberField(arr[i], "contradiction", what)};
    for (double p : {j.entailment, j.neutral, j.contradiction}) {
      if (!(p >= 0.0 && p <= 1.0)) {
        throw ProtocolError(what + ": probability outside [0, 1]");
      }
    }
    const double sum = j.entailment + j.neutral + j.contradiction;
    if (std::abs(sum - 1.0) > kWireProbabilityTolerance) {
      throw ProtocolError(what + ": probabilities sum to " + std::to_string(sum));
    }
    j.entailment /= sum;
    j.neutral /= sum;
    j.contradiction /= sum;
    out.push_back(j);
  }
  return out;
}

json EncodeEmbedRequest(std::span<const std::string> texts) {
  return json{{"texts", json(std::vector<std::string>(texts.begin(), texts.end()))}};
}

json EncodeEmbedResponse(std::span<const EmbeddingVector> vectors) {
  json arr = json::array();
  for (const auto &v : vectors) arr.push_back(v.values);
  return json{{"vectors", std::move(arr)}};
}

std::vector<EmbeddingVector> DecodeEmbedResponse(const json &reply,
                                                 size_t expected) {
  const json &arr = ArrayField(reply, "vectors", "embed reply");
  if (arr.size() != expected) {
    throw ProtocolError("embed reply has " + std::to_string(arr.size()) +
                        " vectors, expected " + std::to_string(expected));
  }
  std::vector<EmbeddingVector> out;
  out.reserve(arr.size());
  for (size_t i = 0; i < arr.size(); ++i) {
    const json &row = arr[i];
    if (!row.is_array() || row.empty()) {
      throw ProtocolError("vector " + std::to_string(i) +
                          " is not a non-empty array");
    }
    if (!out.empty() && row.size() != out.front().dim()) {
      throw ProtocolError("ragged embedding matrix: vector " + std::to_string(i) +
                          " has length " + std::to_string(row.size()) +
                          ", expected " + std::to_string(out.front().dim()));
    }
    EmbeddingVector v;
    v.values.reserve(row.size());
    for (const json &x : row) {
      if (!x.is_number()) {
        throw ProtocolError("vector " + std::to_string(i) + " has a non-number");
      }
      double d = x.get<double>();
      if (!std::isfinite(d)) {
        throw ProtocolError("vector " + std::to_string(i) + " is not finite");
      }
      v.values.push_back(d);
    }
    if (v.IsZero()) {
      throw ProtocolError("vector " + std::to_string(i) + " is all zero");
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace zberta
