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


#include <sstream>

#include <gtest/gtest.h>

#include "zberta/config.h"
#include "zberta/errors.h"

namespace zberta {
namespace {

Settings Parse(const std::string &text) {
  std::istringstream in(text);
  return ReadSettings(in);
}

TEST(ReadSettingsTest, KeyValueCommentsAndBlanks) {
  Settings s = Parse(
      "# pipeline\n"
      "\n"
      "  alpha = 0.75  \n"
      "template=It is about {}.\n"
      "scorer=remote\n"
      "scorer-endpoint=http://127.0.0.1:9000\n");
  EXPECT_EQ(s.at("alpha"), "0.75");
  EXPECT_EQ(s.at("template"), "It is about {}.");
  EXPECT_EQ(s.size(), 4u);
}

TEST(ReadSettingsTest, ErrorsCarryLineNumbers) {
  try {
    Parse("alpha=0.5\n\nwat=1\n");
    FAIL();
  } catch (const ConfigError &e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  try {
    Parse("alpha\n");
    FAIL();
  } catch (const ConfigError &e) {
    EXPECT_NE(std::string(e.what()).find("line 1"), std::string::npos) << e.what();
  }
}

TEST(ReadSettingsTest, MergePrefersOverrides) {
  Settings merged = MergeSettings({{"alpha", "0.5"}, {"seed", "1"}}, {{"alpha", "0.9"}});
  EXPECT_EQ(merged.at("alpha"), "0.9");
  EXPECT_EQ(merged.at("seed"), "1");
}

TEST(ReadSettingsTest, KnownKeysIncludeCommandFlags) {
  const std::vector<std::string> &keys = KnownSettingKeys();
  for (const char *k : {"wordnet-dir", "parser-endpoint", "scorer", "embedder-endpoint",
                        "template", "alpha", "seed", "repeats", "labels", "neg-ratio",
                        "neg-label", "allow-partial", "port", "mode"}) {
    EXPECT_NE(std::find(keys.begin(), keys.end(), k), keys.end()) << k;
  }
}

TEST(PipelineConfigTest, Defaults) {
  PipelineConfig c = PipelineConfigFromSettings({});
  EXPECT_FALSE(c.wordnet_dir.has_value());
  EXPECT_EQ(c.scorer, BackendMode::kReference);
  EXPECT_EQ(c.parser, ParserMode::kConlluFile);
  EXPECT_EQ(c.template_pattern, "This example is {}.");
  EXPECT_EQ(c.alpha, 0.5);
  EXPECT_EQ(c.dobj_aliases, (std::vector<std::string>{"dobj", "obj"}));
}

TEST(PipelineConfigTest, ParsesValues) {
  PipelineConfig c = PipelineConfigFromSettings({{"scorer", "remote"},
                                                 {"scorer-endpoint", "http://h:1"},
                                                 {"parser", "remote"},
                                                 {"parser-endpoint", "http://h:2"},
                                                 {"alpha", "1.5"},
                                                 {"seed", "99"},
                                                 {"score-mode", "raw"},
                                                 {"dobj-aliases", "DOBJ, obj ,"}});
  EXPECT_EQ(c.scorer, BackendMode::kRemote);
  EXPECT_EQ(c.parser, ParserMode::kRemote);
  EXPECT_EQ(c.alpha, 1.5);
  EXPECT_EQ(c.seed, 99u);
  EXPECT_EQ(c.score_mode, ScoreMode::kRaw);
  EXPECT_EQ(c.dobj_aliases, (std::vector<std::string>{"dobj", "obj"}));
}

TEST(PipelineConfigTest, RejectsInconsistentSettings) {
  EXPECT_THROW(PipelineConfigFromSettings({{"scorer", "remote"}}), ConfigError);
  EXPECT_THROW(PipelineConfigFromSettings({{"embedder-endpoint", "http://h:1"}}),
               ConfigError);
  EXPECT_THROW(PipelineConfigFromSettings({{"alpha", "-1"}}), ConfigError);
  EXPECT_THROW(PipelineConfigFromSettings({{"alpha", "lots"}}), ConfigError);
  EXPECT_THROW(PipelineConfigFromSettings({{"confidence-floor", "1.5"}}), ConfigError);
  EXPECT_THROW(PipelineConfigFromSettings({{"template", "no slot"}}), ConfigError);
  EXPECT_THROW(PipelineConfigFromSettings({{"scorer", "magic"}}), ConfigError);
  EXPECT_THROW(PipelineConfigFromSettings({{"timeout-ms", "0"}}), ConfigError);
  EXPECT_THROW(PipelineConfigFromSettings({{"dobj-aliases", " , "}}), ConfigError);
}

}  // namespace
}  // namespace zberta
