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

#include "zberta/app.h"

#include <deque>
#include <fstream>
#include <functional>
#include <optional>
#include <unordered_map>

#include "zberta/conllu.h"
#include "zberta/errors.h"
#include "zberta/evaluation.h"
#include "zberta/nli_dataset.h"
#include "zberta/pipeline.h"
#include "zberta/records.h"
#include "zberta/service.h"

namespace zberta {
namespace {

using nlohmann::json;

const std::string *Find(const Settings &s, const char *key) {
  auto it = s.find(key);
  return it == s.end() ? nullptr : &it->second;
}

const std::string &Require(const Settings &s, const char *key) {
  const std::string *v = Find(s, key);
  if (v == nullptr || v->empty()) {
    throw ConfigError(std::string("missing --") + key);
  }
  return *v;
}

bool FlagSet(const Settings &s, const char *key) {
  const std::string *v = Find(s, key);
  return v != nullptr && (*v == "true" || *v == "1" || *v == "yes");
}

size_t CountSetting(const Settings &s, const char *key, size_t fallback) {
  const std::string *v = Find(s, key);
  if (v == nullptr) return fallback;
  try {
    size_t used = 0;
    long long n = std::stoll(*v, &used);
    if (used == v->size() && n >= 0) return static_cast<size_t>(n);
  } catch (const std::exception &) {
  }
  throw ConfigError(std::string(key) + ": expected a non-negative integer");
}

std::ifstream OpenInput(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  return in;
}

// Runs `body` with the --out file (or `fallback`) as the result stream.
int WithOutput(const Settings &s, std::ostream &fallback,
               const std::function<int(std::ostream &)> &body) {
  if (const std::string *path = Find(s, "out"); path && !path->empty()) {
    std::ofstream file(*path, std::ios::binary | std::ios::trunc);
    if (!file) throw InputError("cannot write " + *path);
    int rc = body(file);
    file.flush();
    if (!file) throw InputError("write failed: " + *path);
    return rc;
  }
  return body(fallback);
}

// Turns configuration and input errors into exit code 2.
int Guarded(std::ostream &log, const std::function<int()> &body) {
  try {
    return body();
  } catch (const ConfigError &e) {
    log << "error: " << e.what() << '\n';
  } catch (const InputError &e) {
    log << "error: " << e.what() << '\n';
  } catch (const ParseError &e) {
    log << "error: " << e.what() << '\n';
  } catch (const ValidationError &e) {
    log << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

void WriteJsonLine(std::ostream &out, const json &j) { out << j.dump() << '\n'; }

std::string UtteranceOf(const json &j) {
  if (j.is_object()) {
    for (const char *key : {"utterance", "text"}) {
      if (auto it = j.find(key); it != j.end() && it->is_string()) {
        return it->get<std::string>();
      }
    }
  }
  throw InputError("record needs a string \"utterance\"");
}

template <typename T, typename Decode>
std::vector<T> ReadRecords(const std::string &path, Decode decode) {
  std::ifstream in = OpenInput(path);
  std::vector<T> out;
  for (JsonlLine &line : ReadJsonl(in)) {
    if (!line.value) throw InputError(path + ": " + line.error);
    try {
      out.push_back(decode(*line.value));
    } catch (const InputError &e) {
      throw InputError(path + ": line " + std::to_string(line.line) + ": " +
                       e.what());
    }
  }
  return out;
}

}  // namespace

int RunDiscover(const Settings &settings, std::ostream &out, std::ostream &log) {
  return Guarded(log, [&] {
    PipelineConfig config = PipelineConfigFromSettings(settings);
    if (!config.wordnet_dir) throw ConfigError("missing --wordnet-dir");
    const std::string &input = Require(settings, "input");
    Pipeline pipeline(config);

    // (utterance, parse or the reason it is missing)
    struct Item {
      std::string utterance;
      std::optional<ParsedUtterance> parse;
      std::string error;
    };
    std::vector<Item> items;
    if (input.ends_with(".conllu")) {
      for (ParsedUtterance &u : ReadConlluFile(input)) {
        std::string text = u.text;
        items.push_back({std::move(text), std::move(u), ""});
      }
    } else {
      std::ifstream in = OpenInput(input);
      for (JsonlLine &line : ReadJsonl(in)) {
        Item item;
        if (!line.value) {
          item.error = line.error;
          items.push_back(std::move(item));
          continue;
        }
        try {
          DiscoverInput rec = DiscoverInputFromJson(*line.value);
          item.utterance = rec.utterance;
          if (rec.conllu) {
            std::vector<ParsedUtterance> parses = ReadConlluString(*rec.conllu);
            if (parses.size() != 1) {
              throw InputError("\"conllu\" must hold exactly one sentence");
            }
            item.parse = std::move(parses.front());
          } else if (const RemoteParser *parser = pipeline.parser()) {
            item.parse = parser->Parse(rec.utterance);
          } else {
            throw InputError("no \"conllu\" and no remote parser configured");
          }
        } catch (const Error &e) {
          item.error = "line " + std::to_string(line.line) + ": " + e.what();
        }
        items.push_back(std::move(item));
      }
    }

    return WithOutput(settings, out, [&](std::ostream &sink) {
      size_t failed = 0;
      for (const Item &item : items) {
        if (!item.parse) {
          ++failed;
          log << "error: " << item.error << '\n';
          continue;
        }
        try {
          Pipeline::Discovery d = pipeline.Discover(*item.parse, item.utterance);
          if (d.used_fallback) {
            log << "warning: no arc or degree candidates for \"" << item.utterance
                << "\"; using fallback " << d.candidates.front().Label() << '\n';
          }
          WriteJsonLine(sink, PredictionToJson(d.prediction));
        } catch (const Error &e) {
          ++failed;
          log << "error: \"" << item.utterance << "\": " << e.what() << '\n';
        }
      }
      log << "discover: " << items.size() - failed << " records written, " << failed
          << " failed\n";
      return failed == 0 ? kExitOk : kExitFailures;
    });
  });
}

int RunClassify(const Settings &settings, std::ostream &out, std::ostream &log) {
  return Guarded(log, [&] {
    PipelineConfig config = PipelineConfigFromSettings(settings);
    std::ifstream label_file = OpenInput(Require(settings, "labels"));
    std::vector<std::string> labels;
    for (std::string line; std::getline(label_file, line);) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      size_t start = line.find_first_not_of(' ');
      if (start != std::string::npos) labels.push_back(line.substr(start));
    }
    if (labels.empty()) throw ConfigError("label file is empty");
    const std::string &input = Require(settings, "input");
    Pipeline pipeline(config);
    const ZeroShotClassifier &classifier = pipeline.classifier();
    std::ifstream in = OpenInput(input);
    std::vector<JsonlLine> lines = ReadJsonl(in);

    return WithOutput(settings, out, [&](std::ostream &sink) {
      size_t failed = 0;
      for (const JsonlLine &line : lines) {
        try {
          if (!line.value) throw InputError(line.error);
          std::string utterance = UtteranceOf(*line.value);
          WriteJsonLine(sink,
                        PredictionToJson(classifier.ClassifyKnown(utterance, labels)));
        } catch (const Error &e) {
          ++failed;
          log << "error: line " << line.line << ": " << e.what() << '\n';
        }
      }
      return failed == 0 ? kExitOk : kExitFailures;
    });
  });
}

int RunTransformNli(const Settings &settings, std::ostream &out,
                    std::ostream &log) {
  return Guarded(log, [&] {
    PipelineConfig config = PipelineConfigFromSettings(settings);
    if (!config.wordnet_dir) throw ConfigError("missing --wordnet-dir");
    CorpusOptions options;
    options.negatives_per_record = CountSetting(settings, "neg-ratio", 1);
    options.seed = config.seed;
    if (const std::string *v = Find(settings, "neg-label")) {
      options.negative_label = ParseNliLabel(*v);
    }
    std::vector<CorpusRecord> records = ReadRecords<CorpusRecord>(
        Require(settings, "input"), CorpusRecordFromJson);
    if (records.empty()) throw InputError("corpus has no records");
    Pipeline pipeline(config);
    NliDatasetBuilder builder(pipeline.embedder(), pipeline.lexicon(),
                              pipeline.glosses(), pipeline.lexicon().NounLemmas());

    CorpusResult result;
    try {
      result = builder.TransformCorpus(records, options);
    } catch (const CorpusError &e) {
      log << "error: " << e.what() << '\n';
      return kExitFailures;
    }
    for (const std::string &f : result.failures) log << "skipped: " << f << '\n';
    int rc = WithOutput(settings, out, [&](std::ostream &sink) {
      for (const NLIExample &e : result.examples) WriteJsonLine(sink, NliExampleToJson(e));
      return kExitOk;
    });
    log << "entailed=" << result.entailed << " negatives=" << result.negatives
        << " skipped=" << result.skipped << '\n';
    return rc;
  });
}

int RunEvaluate(const Settings &settings, std::ostream &out, std::ostream &log) {
  return Guarded(log, [&] {
    std::string mode = "discovery";
    if (const std::string *v = Find(settings, "mode")) mode = *v;
    if (mode != "discovery" && mode != "known") {
      throw ConfigError("mode: expected discovery|known, got '" + mode + "'");
    }
    PipelineConfig config = PipelineConfigFromSettings(settings);
    const size_t repeats = CountSetting(settings, "repeats", 1);
    if (repeats == 0) throw ConfigError("repeats must be >= 1");

    std::vector<GoldRecord> gold =
        ReadRecords<GoldRecord>(Require(settings, "gold"), GoldRecordFromJson);
    std::vector<PredictionRecord> predictions = ReadRecords<PredictionRecord>(
        Require(settings, "input"), PredictionRecordFromJson);
    if (gold.empty()) throw InputError("gold file has no records");

    std::unordered_map<std::string, std::deque<size_t>> by_utterance;
    for (size_t i = 0; i < predictions.size(); ++i) {
      by_utterance[predictions[i].utterance].push_back(i);
    }
    std::vector<IntentPair> pairs;
    std::vector<std::string> joined_utterances;
    std::vector<bool> used(predictions.size(), false);
    size_t mismatches = 0;
    for (const GoldRecord &g : gold) {
      auto it = by_utterance.find(g.utterance);
      if (it == by_utterance.end() || it->second.empty()) {
        ++mismatches;
        log << "unmatched gold utterance: \"" << g.utterance << "\"\n";
        continue;
      }
      size_t idx = it->second.front();
      it->second.pop_front();
      used[idx] = true;
      pairs.push_back({g.gold, predictions[idx].chosen});
      joined_utterances.push_back(g.utterance);
    }
    for (size_t i = 0; i < predictions.size(); ++i) {
      if (!used[i]) {
        ++mismatches;
        log << "unmatched prediction utterance: \"" << predictions[i].utterance
            << "\"\n";
      }
    }
    if (mismatches > 0 && !FlagSet(settings, "allow-partial")) {
      log << "error: " << mismatches
          << " records do not join (use --allow-partial to continue)\n";
      return kExitFailures;
    }
    if (pairs.empty()) throw InputError("no joined records to evaluate");

    json report;
    if (mode == "known") {
      report = {{"mode", "known"}, {"n", pairs.size()},
                {"accuracy", EvaluateKnown(pairs)}};
    } else {
      Pipeline pipeline(config);
      std::vector<double> mus;
      DiscoveryEvaluation first;
      for (size_t r = 0; r < repeats; ++r) {
        DiscoveryEvaluation eval =
            EvaluateDiscovery(pairs, pipeline.embedder(), config.alpha);
        mus.push_back(eval.report.mu);
        if (r == 0) first = std::move(eval);
      }
      report = DiscoveryReportToJson(first, SummarizeRepeats(mus));
      json per_pair = json::array();
      for (size_t i = 0; i < pairs.size(); ++i) {
        per_pair.push_back({{"utterance", joined_utterances[i]},
                            {"gold", pairs[i].gold},
                            {"predicted", pairs[i].predicted},
                            {"similarity", first.report.similarities[i]}});
      }
      report["pairs"] = std::move(per_pair);
    }
    return WithOutput(settings, out, [&](std::ostream &sink) {
      sink << report.dump(2) << '\n';
      return kExitOk;
    });
  });
}

int RunServe(const Settings &settings, std::ostream &log) {
  return Guarded(log, [&] {
    PipelineConfig config = PipelineConfigFromSettings(settings);
    if (!config.wordnet_dir) throw ConfigError("missing --wordnet-dir");
    const size_t port = CountSetting(settings, "port", 8080);
    if (port > 65535) throw ConfigError("port out of range");
    Pipeline pipeline(config);
    return RunServer(pipeline, "0.0.0.0", static_cast<int>(port), log);
  });
}

}  // namespace zberta
