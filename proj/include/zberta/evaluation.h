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

#ifndef ZBERTA_EVALUATION_H_
#define ZBERTA_EVALUATION_H_

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zberta/embedding.h"

namespace zberta {

inline constexpr double kDefaultAlpha = 0.5;
inline constexpr double kThresholdFloor = 0.5;

// Adaptive decision threshold over per-pair similarities:
//   t = 0.5            if mu <= 0.5
//   t = mu + alpha*s2  otherwise
// with mu the mean and s2 the population variance of the similarities.
struct ThresholdReport {
  size_t n = 0;
  std::vector<double> similarities;
  double mu = 0.0;
  double sigma2 = 0.0;
  double alpha = kDefaultAlpha;
  double t = kThresholdFloor;
  size_t accepted = 0;  // similarities >= t
};

// Throws InputError on an empty list or a negative alpha.
ThresholdReport ComputeThreshold(std::span<const double> similarities,
                                 double alpha = kDefaultAlpha);

struct ClassStats {
  double mean = 0.0;
  size_t count = 0;
};

// Keyed by gold label; std::map keeps report output ordered.
using ClassBreakdown = std::map<std::string, ClassStats>;

struct IntentPair {
  std::string gold;
  std::string predicted;
};

struct DiscoveryEvaluation {
  ThresholdReport report;
  ClassBreakdown per_class;
};

// Lowercases and turns '-' and '_' into spaces ("pin-blocked" -> "pin blocked").
std::string NormalizeIntent(std::string_view intent);

// Cosine similarity between embeddings of each normalized gold / predicted
// pair, thresholded and grouped by gold label.
DiscoveryEvaluation EvaluateDiscovery(std::span<const IntentPair> pairs,
                                      const Embedder &embedder,
                                      double alpha = kDefaultAlpha);

// Exact-match accuracy.
double EvaluateKnown(std::span<const IntentPair> pairs);

struct RepeatSummary {
  size_t repeats = 0;
  double mu_mean = 0.0;
  double mu_std = 0.0;  // population standard deviation
};

RepeatSummary SummarizeRepeats(std::span<const double> mus);

}  // namespace zberta

#endif  // ZBERTA_EVALUATION_H_
