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


#include <cctype>
#include <ostream>
#include <set>

#include <gtest/gtest.h>

#include "test_util.h"
#include "zberta/conllu.h"
#include "zberta/intents.h"

namespace zberta {
namespace {

using testing::DataPath;
using testing::WordNet;

const std::vector<ParsedUtterance> &Fixtures() {
  static const std::vector<ParsedUtterance> fixtures =
      ReadConlluFile(DataPath("intents/hand_traced.conllu"));
  return fixtures;
}

const ParsedUtterance &Fixture(std::string_view text) {
  for (const ParsedUtterance &u : Fixtures()) {
    if (u.text == text) return u;
  }
  throw std::out_of_range(std::string(text));
}

std::vector<std::string> Labels(const std::vector<CandidateIntent> &cs) {
  std::vector<std::string> out;
  for (const CandidateIntent &c : cs) out.push_back(c.Label());
  return out;
}

std::vector<Provenance> Provenances(const std::vector<CandidateIntent> &cs) {
  std::vector<Provenance> out;
  for (const CandidateIntent &c : cs) out.push_back(c.provenance);
  return out;
}

using P = Provenance;

TEST(ArcCandidatesTest, DobjAndCompound) {
  std::vector<WordPair> arcs = ExtractArcCandidates(Fixture("track card delivery"));
  std::vector<WordPair> expected = {{1, 3, "track", "delivery", P::kArcDobj},
                                    {2, 3, "card", "delivery", P::kArcCompound}};
  EXPECT_EQ(arcs, expected);
}

TEST(ArcCandidatesTest, Amod) {
  std::vector<WordPair> expected = {{2, 3, "new", "card", P::kArcAmod}};
  EXPECT_EQ(ExtractArcCandidates(Fixture("my new card")), expected);
}

TEST(ArcCandidatesTest, NoMatchingArcs) {
  EXPECT_TRUE(ExtractArcCandidates(Fixture("where is it ?")).empty());
  EXPECT_TRUE(ExtractArcCandidates(Fixture("my pin is blocked")).empty());
}

TEST(ArcCandidatesTest, ConfigurableDirectObjectLabels) {
  ArcRelations only_obj;
  only_obj.direct_object = {"obj"};
  std::vector<WordPair> expected = {{2, 3, "card", "delivery", P::kArcCompound}};
  EXPECT_EQ(ExtractArcCandidates(Fixture("track card delivery"), only_obj), expected);
}

TEST(DegreeCandidatesTest, CountsInAndOutArcs) {
  const ParsedUtterance &u = Fixture("I want to track my delivery");
  EXPECT_EQ(TokenDegrees(u), (std::vector<int>{0, 1, 2, 1, 3, 1, 2}));
  std::vector<WordPair> expected = {{4, 6, "track", "delivery", P::kDegreeVerbNoun}};
  EXPECT_EQ(ExtractDegreeCandidates(u), expected);
}

TEST(DegreeCandidatesTest, TieGoesToEarlierVerb) {
  const ParsedUtterance &u = Fixture("waiting and checking balance");
  EXPECT_EQ(TokenDegrees(u), (std::vector<int>{0, 2, 1, 2, 1}));
  std::vector<WordPair> expected = {{1, 4, "waiting", "balance", P::kDegreeVerbNoun}};
  EXPECT_EQ(ExtractDegreeCandidates(u), expected);
}

TEST(DegreeCandidatesTest, AdjectivePronounPair) {
  std::vector<WordPair> expected = {{2, 1, "new", "my", P::kDegreeAdjPron}};
  EXPECT_EQ(ExtractDegreeCandidates(Fixture("my new card")), expected);
}

TEST(DegreeCandidatesTest, NoVerbAndNoAdjective) {
  EXPECT_TRUE(ExtractDegreeCandidates(Fixture("exchange rate")).empty());
}

struct GenerateCase {
  const char *text;
  std::vector<std::string> labels;
  std::vector<Provenance> provenances;
};

void PrintTo(const GenerateCase &c, std::ostream *os) { *os << '"' << c.text << '"'; }

class GenerateTest : public ::testing::TestWithParam<GenerateCase> {};

TEST_P(GenerateTest, MatchesHandTrace) {
  const GenerateCase &c = GetParam();
  IntentGenerator generator(WordNet());
  std::vector<CandidateIntent> got = generator.Generate(Fixture(c.text));
  EXPECT_EQ(Labels(got), c.labels);
  EXPECT_EQ(Provenances(got), c.provenances);
}

INSTANTIATE_TEST_SUITE_P(
    HandTraced, GenerateTest,
    ::testing::Values(
        GenerateCase{"track card delivery",
                     {"track-delivery", "card-delivery"},
                     {P::kArcDobj, P::kArcCompound}},
        GenerateCase{"my new card", {"new-card", "new-my"},
                     {P::kArcAmod, P::kDegreeAdjPron}},
        GenerateCase{"I want to track my delivery", {"track-delivery"}, {P::kArcDobj}},
        GenerateCase{"waiting and checking balance", {"wait-balance"},
                     {P::kDegreeVerbNoun}},
        GenerateCase{"where is it ?", {"it-where"}, {P::kFallback}},
        GenerateCase{"refunds", {"refund"}, {P::kFallback}},
        GenerateCase{"exchange rate", {"exchange-rate"}, {P::kArcCompound}},
        GenerateCase{"lost or stolen card", {"lost-card", "steal-card"},
                     {P::kArcAmod, P::kDegreeVerbNoun}},
        GenerateCase{"my pin is blocked", {"block-pin"}, {P::kDegreeVerbNoun}},
        GenerateCase{"getting virtual card", {"get-card", "virtual-card"},
                     {P::kArcDobj, P::kArcAmod}},
        GenerateCase{"replace card , replace cards", {"replace-card"}, {P::kArcDobj}},
        GenerateCase{"Cancel my Transfer", {"cancel-transfer"}, {P::kArcDobj}}),
    [](const ::testing::TestParamInfo<GenerateCase> &info) {
      // "where is it ?" -> WhereIsIt
      std::string name;
      bool upper = true;
      for (const char *p = info.param.text; *p; ++p) {
        if (std::isalnum(static_cast<unsigned char>(*p))) {
          name += upper ? static_cast<char>(std::toupper(static_cast<unsigned char>(*p))) : *p;
          upper = false;
        } else {
          upper = true;
        }
      }
      return name;
    });

TEST(GenerateTest, FixtureFileCoversEveryCase) {
  EXPECT_EQ(Fixtures().size(), 12u);
}

TEST(GenerateTest, SingleTokenRendersBareLemma) {
  IntentGenerator generator(WordNet());
  std::vector<CandidateIntent> got = generator.Generate(Fixture("refunds"));
  ASSERT_EQ(got.size(), 1u);
  EXPECT_EQ(got[0].action, "");
  EXPECT_EQ(got[0].object, "refund");
  EXPECT_EQ(got[0].Phrase(), "refund");
}

TEST(GenerateTest, PhraseJoinsWithSpace) {
  CandidateIntent c{"track", "delivery", P::kArcDobj};
  EXPECT_EQ(c.Phrase(), "track delivery");
  EXPECT_EQ(c.Label(), "track-delivery");
}

TEST(GenerateTest, ProvenanceNames) {
  EXPECT_EQ(ProvenanceName(P::kArcDobj), "arc-dobj");
  EXPECT_EQ(ProvenanceName(P::kArcAmod), "arc-amod");
  EXPECT_EQ(ProvenanceName(P::kArcCompound), "arc-compound");
  EXPECT_EQ(ProvenanceName(P::kDegreeVerbNoun), "degree-verb-noun");
  EXPECT_EQ(ProvenanceName(P::kDegreeAdjPron), "degree-adj-pron");
  EXPECT_EQ(ProvenanceName(P::kFallback), "fallback");
}

// Over the random round-trip corpus: never empty, no duplicate pairs, every
// candidate word taken from the sentence.
TEST(GeneratePropertyTest, NonEmptyAndDeduplicated) {
  IntentGenerator generator(WordNet());
  for (const ParsedUtterance &u : ReadConlluFile(DataPath("conllu/roundtrip50.conllu"))) {
    std::vector<CandidateIntent> got = generator.Generate(u);
    ASSERT_FALSE(got.empty()) << u.text;
    std::set<std::pair<std::string, std::string>> seen;
    for (const CandidateIntent &c : got) {
      EXPECT_TRUE(seen.insert({c.action, c.object}).second) << u.text;
      EXPECT_FALSE(c.object.empty()) << u.text;
    }
  }
}

}  // namespace
}  // namespace zberta
