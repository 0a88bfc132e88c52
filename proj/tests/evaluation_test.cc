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


#include <random>

#include <gtest/gtest.h>

#include "test_util.h"
#include "zberta/errors.h"
#include "zberta/evaluation.h"

namespace zberta {
namespace {

using testing::WordNet;

TEST(ThresholdTest, FloorBranch) {
  std::vector<double> s = {0.4, 0.5, 0.6};
  ThresholdReport r = ComputeThreshold(s, 0.5);
  EXPECT_NEAR(r.mu, 0.5, 1e-12);
  EXPECT_EQ(r.t, 0.5);
  EXPECT_EQ(r.n, 3u);
  EXPECT_EQ(r.accepted, 2u);
}

TEST(ThresholdTest, VarianceBranch) {
  std::vector<double> s = {0.6, 0.8};
  ThresholdReport r = ComputeThreshold(s, 0.5);
  EXPECT_NEAR(r.mu, 0.7, 1e-12);
  EXPECT_NEAR(r.sigma2, 0.01, 1e-12);
  EXPECT_NEAR(r.t, 0.705, 1e-12);
  EXPECT_EQ(r.accepted, 1u);
  EXPECT_EQ(r.alpha, 0.5);
}

TEST(ThresholdTest, Errors) {
  EXPECT_THROW(ComputeThreshold({}, 0.5), InputError);
  std::vector<double> s = {0.7};
  EXPECT_THROW(ComputeThreshold(s, -0.1), InputError);
}

// Two-pass mean and population variance in long double.
struct Brute {
  double mu, sigma2, t;
};

Brute BruteThreshold(const std::vector<double> &s, double alpha) {
  long double sum = 0;
  for (double x : s) sum += x;
  long double mu = sum / s.size();
  long double dev = 0;
  for (double x : s) dev += (x - mu) * (x - mu);
  long double var = dev / s.size();
  long double t = mu <= 0.5L ? 0.5L : mu + alpha * var;
  return {static_cast<double>(mu), static_cast<double>(var), static_cast<double>(t)};
}

TEST(ThresholdPropertyTest, MatchesBruteForce) {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> value(0.0, 1.0);
  std::uniform_real_distribution<double> alpha_dist(0.0, 2.0);
  for (int iter = 0; iter < 100; ++iter) {
    std::vector<double> s(1 + rng() % 20);
    // Bias half the lists upward so both branches are exercised.
    const double lift = iter % 2 == 0 ? 0.0 : 0.4;
    for (double &x : s) x = std::min(1.0, value(rng) * (1.0 - lift) + lift);
    const double alpha = iter < 50 ? 0.5 : alpha_dist(rng);
    ThresholdReport r = ComputeThreshold(s, alpha);
    Brute b = BruteThreshold(s, alpha);
    EXPECT_NEAR(r.mu, b.mu, 1e-12);
    EXPECT_NEAR(r.sigma2, b.sigma2, 1e-12);
    EXPECT_NEAR(r.t, b.t, 1e-12);
    if (r.mu <= 0.5) {
      EXPECT_EQ(r.t, 0.5);
    }
    EXPECT_GE(r.t, 0.5);
    size_t accepted = 0;
    for (double x : s) accepted += x >= r.t;
    EXPECT_EQ(r.accepted, accepted);
  }
}

TEST(NormalizeIntentTest, HyphensUnderscoresCase) {
  EXPECT_EQ(NormalizeIntent("Pin-Blocked"), "pin blocked");
  EXPECT_EQ(NormalizeIntent("lost_or_stolen_card"), "lost or stolen card");
}

TEST(EvaluateDiscoveryTest, BankingPairsUnderReferenceEmbedder) {
  ReferenceEmbedder embedder(WordNet());
  std::vector<IntentPair> pairs = {{"exchange-rate", "exchange-rate"},
                                   {"pin-blocked", "pin-block"}};
  DiscoveryEvaluation eval = EvaluateDiscovery(pairs, embedder);
  ASSERT_EQ(eval.report.similarities.size(), 2u);
  EXPECT_NEAR(eval.report.similarities[0], 1.0, 1e-12);
  EXPECT_NEAR(eval.report.similarities[1], 1.0, 1e-12);
  EXPECT_NEAR(eval.report.t, 1.0, 1e-12);
}

TEST(EvaluateDiscoveryTest, PerClassPartition) {
  ReferenceEmbedder embedder(WordNet());
  std::vector<IntentPair> pairs = {{"a-card", "card"},
                                   {"exchange-rate", "rate"},
                                   {"a-card", "new card"},
                                   {"exchange-rate", "exchange rate"},
                                   {"pin", "pin"}};
  DiscoveryEvaluation eval = EvaluateDiscovery(pairs, embedder);
  ASSERT_EQ(eval.per_class.size(), 3u);
  EXPECT_EQ(eval.per_class.at("a-card").count, 2u);
  EXPECT_EQ(eval.per_class.at("exchange-rate").count, 2u);
  EXPECT_EQ(eval.per_class.at("pin").count, 1u);
  size_t total = 0;
  double weighted = 0;
  for (const auto &[label, stats] : eval.per_class) {
    total += stats.count;
    weighted += stats.mean * stats.count;
  }
  EXPECT_EQ(total, 5u);
  EXPECT_NEAR(weighted / 5.0, eval.report.mu, 1e-12);
  EXPECT_NEAR(eval.per_class.at("pin").mean, 1.0, 1e-12);
}

TEST(EvaluateKnownTest, Accuracy) {
  std::vector<IntentPair> all = {{"a", "a"}, {"b", "b"}};
  std::vector<IntentPair> none = {{"a", "b"}, {"b", "a"}};
  std::vector<IntentPair> half = {{"a", "a"}, {"b", "a"}};
  EXPECT_EQ(EvaluateKnown(all), 1.0);
  EXPECT_EQ(EvaluateKnown(none), 0.0);
  EXPECT_EQ(EvaluateKnown(half), 0.5);
  EXPECT_THROW(EvaluateKnown({}), InputError);
}

TEST(SummarizeRepeatsTest, PopulationStd) {
  std::vector<double> mus = {0.48, 0.50, 0.52};
  RepeatSummary r = SummarizeRepeats(mus);
  EXPECT_EQ(r.repeats, 3u);
  EXPECT_NEAR(r.mu_mean, 0.5, 1e-12);
  EXPECT_NEAR(r.mu_std, std::sqrt(0.0008 / 3.0), 1e-12);
}

}  // namespace
}  // namespace zberta
