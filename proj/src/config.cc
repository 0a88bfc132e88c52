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

#include "zberta/config.h"

#include <algorithm>
#include <charconv>
#include <fstream>

#include "zberta/errors.h"
#include "zberta/text.h"

namespace zberta {
namespace {

std::string Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return std::string(s);
}

double ParseDouble(const std::string &key, const std::string &value) {
  try {
    size_t used = 0;
    double d = std::stod(value, &used);
    if (used == value.size()) return d;
  } catch (const std::exception &) {
  }
  throw ConfigError(key + ": not a number: '" + value + "'");
}

template <typename T>
T ParseInteger(const std::string &key, const std::string &value) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError(key + ": not an integer: '" + value + "'");
  }
  return out;
}

BackendMode ParseBackend(const std::string &key, const std::string &value) {
  if (value == "reference") return BackendMode::kReference;
  if (value == "remote") return BackendMode::kRemote;
  throw ConfigError(key + ": expected reference|remote, got '" + value + "'");
}

}  // namespace

const std::vector<std::string> &KnownSettingKeys() {
  static const std::vector<std::string> keys = {
      "wordnet-dir", "parser",       "parser-endpoint", "scorer",
      "scorer-endpoint", "embedder", "embedder-endpoint", "template",
      "alpha",       "seed",         "repeats",         "labels",
      "input",       "gold",         "out",             "port",
      "neg-ratio",   "neg-label",    "mode",            "allow-partial",
      "dobj-aliases", "confidence-floor", "score-mode", "timeout-ms",
  };
  return keys;
}

Settings ReadSettings(std::istream &in) {
  Settings out;
  const auto &known = KnownSettingKeys();
  std::string line;
  size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    std::string trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    size_t eq = trimmed.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(n) + ": expected key=value");
    }
    std::string key = Trim(std::string_view(trimmed).substr(0, eq));
    std::string value = Trim(std::string_view(trimmed).substr(eq + 1));
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw ConfigError("config line " + std::to_string(n) + ": unknown key '" +
                        key + "'");
    }
    out[key] = value;
  }
  return out;
}

Settings ReadSettingsFile(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  return ReadSettings(in);
}

Settings MergeSettings(Settings base, const Settings &overrides) {
  for (const auto &[k, v] : overrides) base[k] = v;
  return base;
}

void PipelineConfig::Validate() const {
  auto need = [](bool remote, const std::string &endpoint, const char *what) {
    if (remote && endpoint.empty()) {
      throw ConfigError(std::string(what) + " is remote but has no endpoint");
    }
    if (!remote && !endpoint.empty()) {
      throw ConfigError(std::string(what) +
                        " endpoint given but the mode is not remote");
    }
  };
  need(parser == ParserMode::kRemote, parser_endpoint, "parser");
  need(scorer == BackendMode::kRemote, scorer_endpoint, "scorer");
  need(embedder == BackendMode::kRemote, embedder_endpoint, "embedder");
  if (!(alpha >= 0.0)) throw ConfigError("alpha must be >= 0");
  if (!(confidence_floor >= 0.0 && confidence_floor <= 1.0)) {
    throw ConfigError("confidence-floor must be in [0, 1]");
  }
  if (timeout_ms <= 0) throw ConfigError("timeout-ms must be positive");
  HypothesisTemplate check(template_pattern);
  (void)check;
}

PipelineConfig PipelineConfigFromSettings(const Settings &s) {
  PipelineConfig c;
  auto get = [&](const char *key) -> const std::string * {
    auto it = s.find(key);
    return it == s.end() ? nullptr : &it->second;
  };
  if (auto v = get("wordnet-dir"); v && !v->empty()) c.wordnet_dir = *v;
  if (auto v = get("parser")) {
    if (*v == "conllu-file") {
      c.parser = ParserMode::kConlluFile;
    } else if (*v == "remote") {
      c.parser = ParserMode::kRemote;
    } else {
      throw ConfigError("parser: expected conllu-file|remote, got '" + *v + "'");
    }
  }
  if (auto v = get("parser-endpoint")) c.parser_endpoint = *v;
  if (auto v = get("scorer")) c.scorer = ParseBackend("scorer", *v);
  if (auto v = get("scorer-endpoint")) c.scorer_endpoint = *v;
  if (auto v = get("embedder")) c.embedder = ParseBackend("embedder", *v);
  if (auto v = get("embedder-endpoint")) c.embedder_endpoint = *v;
  if (auto v = get("template")) c.template_pattern = *v;
  if (auto v = get("alpha")) c.alpha = ParseDouble("alpha", *v);
  if (auto v = get("seed")) c.seed = ParseInteger<uint64_t>("seed", *v);
  if (auto v = get("confidence-floor")) {
    c.confidence_floor = ParseDouble("confidence-floor", *v);
  }
  if (auto v = get("timeout-ms")) c.timeout_ms = ParseInteger<int>("timeout-ms", *v);
  if (auto v = get("score-mode")) {
    if (*v == "normalized") {
      c.score_mode = ScoreMode::kNormalized;
    } else if (*v == "raw") {
      c.score_mode = ScoreMode::kRaw;
    } else {
      throw ConfigError("score-mode: expected normalized|raw, got '" + *v + "'");
    }
  }
  if (auto v = get("dobj-aliases")) {
    c.dobj_aliases.clear();
    std::string item;
    for (char ch : *v + ",") {
      if (ch == ',') {
        std::string t = ToLower(Trim(item));
        if (!t.empty()) c.dobj_aliases.push_back(t);
        item.clear();
      } else {
        item += ch;
      }
    }
    if (c.dobj_aliases.empty()) throw ConfigError("dobj-aliases is empty");
  }
  c.Validate();
  return c;
}

}  // namespace zberta
