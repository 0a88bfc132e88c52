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

#include "zberta/records.h"

#include "zberta/errors.h"

namespace zberta {
namespace {

using nlohmann::json;

std::string RequireString(const json &j, const char *key, const char *what) {
  if (!j.is_object()) throw InputError(std::string(what) + " is not an object");
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) {
    throw InputError(std::string(what) + " needs a string \"" + key + "\"");
  }
  return it->get<std::string>();
}

}  // namespace

std::vector<JsonlLine> ReadJsonl(std::istream &in) {
  std::vector<JsonlLine> out;
  std::string line;
  size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    JsonlLine rec;
    rec.line = n;
    auto parsed = json::parse(line, nullptr, false);
    if (parsed.is_discarded()) {
      rec.error = "line " + std::to_string(n) + ": invalid JSON";
    } else {
      rec.value = std::move(parsed);
    }
    out.push_back(std::move(rec));
  }
  return out;
}

json PredictionToJson(const IntentPrediction &p) {
  json ranked = json::array();
  for (const RankedIntent &r : p.ranked) {
    ranked.push_back({{"intent", r.intent.label}, {"score", r.score}});
  }
  return json{{"utterance", p.utterance},
              {"chosen", p.chosen().label},
              {"ranked", std::move(ranked)}};
}

json CandidatesToJson(std::string_view utterance,
                      std::span<const CandidateIntent> candidates) {
  json arr = json::array();
  for (const CandidateIntent &c : candidates) {
    arr.push_back({{"action", c.action},
                   {"object", c.object},
                   {"provenance", std::string(ProvenanceName(c.provenance))}});
  }
  return json{{"utterance", std::string(utterance)}, {"candidates", std::move(arr)}};
}

json NliExampleToJson(const NLIExample &e) {
  return json{{"premise", e.premise},
              {"hypothesis", e.hypothesis},
              {"label", std::string(NliLabelName(e.label))},
              {"key_word", e.key_word}};
}

DiscoverInput DiscoverInputFromJson(const json &j) {
  DiscoverInput in;
  in.utterance = RequireString(j, "utterance", "discover record");
  if (auto it = j.find("conllu"); it != j.end() && !it->is_null()) {
    if (!it->is_string()) throw InputError("\"conllu\" must be a string");
    in.conllu = it->get<std::string>();
  }
  return in;
}

CorpusRecord CorpusRecordFromJson(const json &j) {
  return CorpusRecord{RequireString(j, "text", "corpus record"),
                      RequireString(j, "label", "corpus record")};
}

GoldRecord GoldRecordFromJson(const json &j) {
  return GoldRecord{RequireString(j, "utterance", "gold record"),
                    RequireString(j, "gold", "gold record")};
}

PredictionRecord PredictionRecordFromJson(const json &j) {
  return PredictionRecord{RequireString(j, "utterance", "prediction record"),
                          RequireString(j, "chosen", "prediction record")};
}

json DiscoveryReportToJson(const DiscoveryEvaluation &eval,
                           const RepeatSummary &repeats) {
  const ThresholdReport &r = eval.report;
  json per_class = json::object();
  for (const auto &[label, stats] : eval.per_class) {
    per_class[label] = {{"mean", stats.mean}, {"count", stats.count}};
  }
  return json{{"n", r.n},
              {"mu", r.mu},
              {"sigma2", r.sigma2},
              {"alpha", r.alpha},
              {"t", r.t},
              {"accepted", r.accepted},
              {"per_class", std::move(per_class)},
              {"repeats",
               {{"count", repeats.repeats},
                {"mu_mean", repeats.mu_mean},
                {"mu_std", repeats.mu_std}}}};
}

}  // namespace zberta
