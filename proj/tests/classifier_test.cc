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


#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "test_util.h"
#include "zberta/classifier.h"
#include "zberta/errors.h"

namespace zberta {
namespace {

using testing::WordNet;

// Returns canned judgments in order, or one per hypothesis from a function.
class StubScorer : public EntailmentScorer {
 public:
  explicit StubScorer(std::function<EntailmentJudgment(const std::string &)> fn)
      : fn_(std::move(fn)) {}
  std::vector<EntailmentJudgment> Score(
      std::string_view, std::span<const std::string> hypotheses) const override {
    std::vector<EntailmentJudgment> out;
    for (const std::string &h : hypotheses) out.push_back(fn_(h));
    return out;
  }

 private:
  std::function<EntailmentJudgment(const std::string &)> fn_;
};

TEST(HypothesisTemplateTest, DefaultPattern) {
  HypothesisTemplate t;
  EXPECT_EQ(t.Fill("track delivery"), "This example is track delivery.");
}

TEST(HypothesisTemplateTest, IdentityPattern) {
  EXPECT_EQ(HypothesisTemplate("{}").Fill("card"), "card");
}

TEST(HypothesisTemplateTest, NeedsExactlyOnePlaceholder) {
  EXPECT_THROW(HypothesisTemplate("no slot"), ConfigError);
  EXPECT_THROW(HypothesisTemplate("{} and {}"), ConfigError);
}

TEST(BuildHypothesesTest, FillsPhrasesInOrder) {
  std::vector<CandidateIntent> cs = {{"track", "delivery", Provenance::kArcDobj}};
  EXPECT_EQ(BuildHypotheses(cs, HypothesisTemplate()),
            std::vector<std::string>{"This example is track delivery."});
  cs.push_back({"card", "delivery", Provenance::kArcCompound});
  cs.push_back({"", "refund", Provenance::kFallback});
  EXPECT_EQ(BuildHypotheses(cs, HypothesisTemplate("{}")),
            (std::vector<std::string>{"track delivery", "card delivery", "refund"}));
}

TEST(BuildHypothesesTest, EmptyCandidatesRejected) {
  EXPECT_THROW(BuildHypotheses(std::span<const CandidateIntent>(), HypothesisTemplate()),
               PreconditionError);
}

TEST(ReferenceScorerTest, FullCoverage) {
  ReferenceScorer scorer(WordNet());
  EXPECT_EQ(scorer.Overlap("track my card delivery", "This example is track delivery."),
            1.0);
  std::vector<std::string> hyps = {"This example is track delivery."};
  std::vector<EntailmentJudgment> j = scorer.Score("track my card delivery", hyps);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_NEAR(j[0].entailment, 0.8, 1e-12);
  EXPECT_NEAR(j[0].neutral, 0.1, 1e-12);
  EXPECT_NEAR(j[0].contradiction, 0.1, 1e-12);
}

TEST(ReferenceScorerTest, IdenticalAndDisjoint) {
  ReferenceScorer scorer(WordNet());
  EXPECT_EQ(scorer.Overlap("lost card", "lost card"), 1.0);
  EXPECT_EQ(scorer.Overlap("lost card", "exchange rate"), 0.0);
  EntailmentJudgment zero = ReferenceScorer::JudgmentForOverlap(0.0);
  EXPECT_NEAR(zero.entailment, 0.2, 1e-12);
  EXPECT_NEAR(zero.neutral, 0.4, 1e-12);
  EXPECT_NEAR(zero.contradiction, 0.4, 1e-12);
}

TEST(ReferenceScorerTest, PartialCoverageUsesLemmas) {
  ReferenceScorer scorer(WordNet());
  // C(h) = {track, refund}; only "track" is in the premise.
  EXPECT_EQ(scorer.Overlap("tracking my cards", "This example is track refund."), 0.5);
  EXPECT_EQ(scorer.Overlap("tracking my cards", "This example is track card."), 1.0);
  // A hypothesis with no content lemma divides by one.
  EXPECT_EQ(scorer.Overlap("card", "This example is."), 0.0);
}

TEST(ReferenceScorerTest, JudgmentsAreDistributions) {
  for (int i = 0; i <= 100; ++i) {
    EXPECT_NO_THROW(ValidateJudgment(ReferenceScorer::JudgmentForOverlap(i / 100.0)));
  }
}

TEST(ValidateJudgmentTest, RejectsBadDistributions) {
  EXPECT_THROW(ValidateJudgment({0.5, 0.5, 0.1}), ValidationError);
  EXPECT_THROW(ValidateJudgment({1.1, -0.1, 0.0}), ValidationError);
  EXPECT_THROW(ValidateJudgment({NAN, 0.5, 0.5}), ValidationError);
  EXPECT_NO_THROW(ValidateJudgment({1.0, 0.0, 0.0}));
}

TEST(CandidateScoresTest, ArithmeticOracle) {
  std::vector<EntailmentJudgment> j = {{0.8, 0.1, 0.1}, {0.2, 0.4, 0.4}};
  std::vector<double> s = CandidateScores(j);
  // 0.8/0.9 = 8/9 and 0.2/0.6 = 1/3, normalized: 8/11 and 3/11.
  EXPECT_NEAR(s[0], 8.0 / 11.0, 1e-12);
  EXPECT_NEAR(s[1], 3.0 / 11.0, 1e-12);
  EXPECT_NEAR(s[0], 0.7272727272727273, 1e-12);
}

TEST(CandidateScoresTest, RawMode) {
  std::vector<EntailmentJudgment> j = {{0.8, 0.1, 0.1}, {0.2, 0.4, 0.4}};
  EXPECT_EQ(CandidateScores(j, ScoreMode::kRaw), (std::vector<double>{0.8, 0.2}));
}

TEST(CandidateScoresTest, SingletonScoresOne) {
  std::vector<EntailmentJudgment> j = {{0.3, 0.3, 0.4}};
  EXPECT_EQ(CandidateScores(j), std::vector<double>{1.0});
}

TEST(CandidateScoresTest, AllZeroDenominatorsRejected) {
  std::vector<EntailmentJudgment> j = {{0, 1, 0}, {0, 1, 0}};
  EXPECT_THROW(CandidateScores(j), ClassificationError);
}

TEST(CandidateScoresTest, ZeroDenominatorCandidateScoresZero) {
  std::vector<EntailmentJudgment> j = {{0, 1, 0}, {0.5, 0.5, 0}};
  std::vector<double> s = CandidateScores(j);
  EXPECT_EQ(s[0], 0.0);
  EXPECT_EQ(s[1], 1.0);
}

EntailmentJudgment RandomJudgment(std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double a = u(rng), b = u(rng), c = u(rng) + 1e-3;
  double sum = a + b + c;
  return {a / sum, b / sum, c / sum};
}

TEST(ClassifierPropertyTest, ScoresSumToOne) {
  std::mt19937_64 rng(1);
  for (int iter = 0; iter < 1000; ++iter) {
    std::vector<EntailmentJudgment> j(1 + rng() % 20);
    for (EntailmentJudgment &x : j) x = RandomJudgment(rng);
    std::vector<double> s = CandidateScores(j);
    EXPECT_NEAR(std::accumulate(s.begin(), s.end(), 0.0), 1.0, 1e-9);
    for (double v : s) {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
    }
  }
}

std::vector<IntentLabel> NumberedLabels(size_t n) {
  std::vector<IntentLabel> out;
  for (size_t i = 0; i < n; ++i) out.push_back(IntentLabel::FromKnownLabel("l" + std::to_string(i)));
  return out;
}

// A random strictly increasing map on [0, 1].
std::function<double(double)> RandomMonotone(std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> u(0.1, 5.0);
  const double a = u(rng), b = u(rng) - 2.5, p = u(rng);
  switch (rng() % 4) {
    case 0: return [a, b](double x) { return a * x + b; };
    case 1: return [p](double x) { return std::pow(x, p); };
    case 2: return [a](double x) { return std::exp(a * x); };
    default: return [a, b](double x) { return std::log(x + a) * 3.0 + b; };
  }
}

TEST(ClassifierPropertyTest, ArgmaxInvariantUnderMonotoneTransforms) {
  std::mt19937_64 rng(2);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<EntailmentJudgment> j(2 + rng() % 10);
    for (EntailmentJudgment &x : j) x = RandomJudgment(rng);
    std::vector<double> s = CandidateScores(j);
    auto f = RandomMonotone(rng);
    std::vector<double> t;
    for (double v : s) t.push_back(f(v));
    IntentPrediction before = RankIntents("u", NumberedLabels(s.size()), s);
    IntentPrediction after = RankIntents("u", NumberedLabels(t.size()), t);
    EXPECT_EQ(before.chosen().label, after.chosen().label) << iter;
    for (size_t k = 0; k < s.size(); ++k) {
      EXPECT_EQ(before.ranked[k].intent.label, after.ranked[k].intent.label);
    }
  }
}

TEST(ClassifierPropertyTest, PermutationEquivariance) {
  std::mt19937_64 rng(4);
  for (int iter = 0; iter < 200; ++iter) {
    const size_t n = 2 + rng() % 8;
    std::vector<EntailmentJudgment> j(n);
    for (EntailmentJudgment &x : j) x = RandomJudgment(rng);
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<EntailmentJudgment> pj;
    for (size_t k : perm) pj.push_back(j[k]);
    std::vector<double> s = CandidateScores(j), ps = CandidateScores(pj);
    for (size_t k = 0; k < n; ++k) EXPECT_NEAR(ps[k], s[perm[k]], 1e-15);
    std::vector<IntentLabel> labels = NumberedLabels(n), plabels;
    for (size_t k : perm) plabels.push_back(labels[k]);
    EXPECT_EQ(RankIntents("u", labels, s).chosen().label,
              RankIntents("u", plabels, ps).chosen().label);
  }
}

TEST(RankIntentsTest, TieGoesToEarlierCandidate) {
  std::vector<double> s = {0.25, 0.5, 0.25, 0.5 - 0.0};
  IntentPrediction p = RankIntents("u", NumberedLabels(4), s);
  EXPECT_EQ(p.ranked[0].intent.label, "l1");
  EXPECT_EQ(p.ranked[1].intent.label, "l3");
  EXPECT_EQ(p.ranked[2].intent.label, "l0");
  EXPECT_EQ(p.ranked[3].intent.label, "l2");
}

TEST(ZeroShotClassifierTest, ChoosesFirstOfIdenticalJudgments) {
  StubScorer scorer([](const std::string &) { return EntailmentJudgment{0.5, 0.25, 0.25}; });
  ZeroShotClassifier clf(scorer);
  std::vector<CandidateIntent> cs = {{"track", "delivery", Provenance::kArcDobj},
                                     {"card", "delivery", Provenance::kArcCompound}};
  IntentPrediction p = clf.Classify("track card delivery", cs);
  EXPECT_EQ(p.chosen().label, "track-delivery");
  EXPECT_NEAR(p.top_score(), 0.5, 1e-12);
  EXPECT_EQ(p.chosen().provenance, Provenance::kArcDobj);
}

TEST(ZeroShotClassifierTest, TwoCandidateOracle) {
  StubScorer scorer([](const std::string &h) {
    return h == "This example is track delivery." ? EntailmentJudgment{0.8, 0.1, 0.1}
                                                  : EntailmentJudgment{0.2, 0.4, 0.4};
  });
  ZeroShotClassifier clf(scorer);
  std::vector<CandidateIntent> cs = {{"card", "delivery", Provenance::kArcCompound},
                                     {"track", "delivery", Provenance::kArcDobj}};
  IntentPrediction p = clf.Classify("track card delivery", cs);
  EXPECT_EQ(p.chosen().label, "track-delivery");
  EXPECT_NEAR(p.ranked[0].score, 8.0 / 11.0, 1e-12);
  EXPECT_NEAR(p.ranked[1].score, 3.0 / 11.0, 1e-12);
}

TEST(ZeroShotClassifierTest, KnownLabelsWithStub) {
  std::vector<std::string> labels;
  for (int i = 0; i < 77; ++i) labels.push_back("intent_" + std::to_string(i));
  const std::string gold = "intent_41";
  StubScorer scorer([&](const std::string &h) {
    return h == "This example is intent 41." ? EntailmentJudgment{0.9, 0.05, 0.05}
                                             : EntailmentJudgment{0.1, 0.1, 0.8};
  });
  ZeroShotClassifier clf(scorer);
  IntentPrediction p = clf.ClassifyKnown("whatever", labels);
  EXPECT_EQ(p.chosen().label, gold);
  EXPECT_EQ(p.ranked.size(), 77u);
}

TEST(ZeroShotClassifierTest, SingleLabelScoresOne) {
  StubScorer scorer([](const std::string &) { return EntailmentJudgment{0.3, 0.3, 0.4}; });
  ZeroShotClassifier clf(scorer);
  std::vector<std::string> labels = {"exchange_rate"};
  IntentPrediction p = clf.ClassifyKnown("rate?", labels);
  EXPECT_EQ(p.chosen().label, "exchange_rate");
  EXPECT_EQ(p.top_score(), 1.0);
}

TEST(ZeroShotClassifierTest, CountMismatchIsProtocolError) {
  class ShortScorer : public EntailmentScorer {
   public:
    std::vector<EntailmentJudgment> Score(std::string_view,
                                          std::span<const std::string>) const override {
      return {{1, 0, 0}};
    }
  } scorer;
  std::vector<std::string> hyps = {"a", "b"};
  EXPECT_THROW(ScoreEntailment("p", hyps, scorer), ProtocolError);
}

TEST(IntentLabelTest, KnownLabelPhrase) {
  IntentLabel l = IntentLabel::FromKnownLabel("card_delivery-estimate");
  EXPECT_EQ(l.label, "card_delivery-estimate");
  EXPECT_EQ(l.phrase, "card delivery estimate");
  EXPECT_FALSE(l.provenance.has_value());
}

TEST(ZeroShotClassifierTest, ReferenceScorerEndToEnd) {
  ReferenceScorer scorer(WordNet());
  ZeroShotClassifier clf(scorer);
  std::vector<CandidateIntent> cs = {{"exchange", "rate", Provenance::kArcCompound},
                                     {"card", "delivery", Provenance::kArcCompound}};
  IntentPrediction p = clf.Classify("track my card delivery", cs);
  EXPECT_EQ(p.chosen().label, "card-delivery");
  EXPECT_NEAR(p.top_score(), 8.0 / 11.0, 1e-12);
}

}  // namespace
}  // namespace zberta
