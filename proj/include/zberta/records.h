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

#ifndef ZBERTA_RECORDS_H_
#define ZBERTA_RECORDS_H_

#include <istream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "zberta/classifier.h"
#include "zberta/evaluation.h"
#include "zberta/intents.h"
#include "zberta/nli_dataset.h"

namespace zberta {

// One line of a JSONL file: either parsed JSON or the parse failure.
struct JsonlLine {
  size_t line = 0;  // 1-based
  std::optional<nlohmann::json> value;
  std::string error;
};

// Reads every non-blank line; malformed lines are reported, not thrown.
std::vector<JsonlLine> ReadJsonl(std::istream &in);

// {"utterance", "chosen", "ranked": [{"intent", "score"}]}
nlohmann::json PredictionToJson(const IntentPrediction &p);
// {"utterance", "candidates": [{"action", "object", "provenance"}]}
nlohmann::json CandidatesToJson(std::string_view utterance,
                                std::span<const CandidateIntent> candidates);
// {"premise", "hypothesis", "label", "key_word"}
nlohmann::json NliExampleToJson(const NLIExample &e);

struct DiscoverInput {
  std::string utterance;
  std::optional<std::string> conllu;
};
struct GoldRecord {
  std::string utterance;
  std::string gold;
};
struct PredictionRecord {
  std::string utterance;
  std::string chosen;
};

// Decoders throw InputError naming the missing or mistyped field.
DiscoverInput DiscoverInputFromJson(const nlohmann::json &j);
CorpusRecord CorpusRecordFromJson(const nlohmann::json &j);
GoldRecord GoldRecordFromJson(const nlohmann::json &j);
PredictionRecord PredictionRecordFromJson(const nlohmann::json &j);

// {"n", "mu", "sigma2", "alpha", "t", "accepted", "per_class", "repeats"}
nlohmann::json DiscoveryReportToJson(const DiscoveryEvaluation &eval,
                                     const RepeatSummary &repeats);

}  // namespace zberta

#endif  // ZBERTA_RECORDS_H_
