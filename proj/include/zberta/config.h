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

#ifndef ZBERTA_CONFIG_H_
#define ZBERTA_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zberta/classifier.h"

namespace zberta {

// Settings as flat key -> value strings. Keys are the long CLI flag names
// without dashes prefix ("wordnet-dir", "alpha", ...).
using Settings = std::map<std::string, std::string>;

// Parses a UTF-8 key=value file: '#' comments and blank lines are ignored,
// surrounding whitespace is trimmed. Throws ConfigError (with line number) on
// lines without '=' and on unknown keys.
Settings ReadSettings(std::istream &in);
Settings ReadSettingsFile(const std::filesystem::path &path);

// Every key accepted in a config file or on the command line.
const std::vector<std::string> &KnownSettingKeys();

// `overrides` wins over `base`.
Settings MergeSettings(Settings base, const Settings &overrides);

enum class BackendMode { kReference, kRemote };
enum class ParserMode { kConlluFile, kRemote };

struct PipelineConfig {
  std::optional<std::filesystem::path> wordnet_dir;
  ParserMode parser = ParserMode::kConlluFile;
  std::string parser_endpoint;
  BackendMode scorer = BackendMode::kReference;
  std::string scorer_endpoint;
  BackendMode embedder = BackendMode::kReference;
  std::string embedder_endpoint;
  std::string template_pattern = std::string(HypothesisTemplate::kDefaultPattern);
  double alpha = 0.5;
  std::vector<std::string> dobj_aliases = {"dobj", "obj"};
  uint64_t seed = 0;
  double confidence_floor = 0.5;
  ScoreMode score_mode = ScoreMode::kNormalized;
  int timeout_ms = 10000;

  // Endpoints are required exactly when the mode is remote; alpha >= 0;
  // confidence_floor in [0, 1]. Throws ConfigError.
  void Validate() const;
};

// Builds and validates a config from settings; keys unrelated to the
// pipeline are ignored here.
PipelineConfig PipelineConfigFromSettings(const Settings &settings);

}  // namespace zberta

#endif  // ZBERTA_CONFIG_H_
