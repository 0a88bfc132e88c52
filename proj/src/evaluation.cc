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

#include "zberta/evaluation.h"

#include <cmath>
#include <unordered_map>

#include "zberta/errors.h"
#include "zberta/simd/kernels.h"
#include "zberta/text.h"

namespace zberta {

ThresholdReport ComputeThreshold(std::span<const double> similarities,
                                 double alpha) {
  if (similarities.empty()) throw InputError("threshold of an empty list");
  if (!(alpha >= 0.0)) throw InputError("alpha must be >= 0");
  ThresholdReport r;
  r.n = similarities.size();
  r.similarities.assign(similarities.begin(), similarities.end());
  r.alpha = alpha;
  const double n = static_cast<double>(r.n);
  r.mu = simd::Sum(similarities) / n;
  r.sigma2 = simd::SumSquaredDeviations(similarities, r.mu) / n;
  r.t = r.mu <= kThresholdFloor ? kThresholdFloor : r.mu + alpha * r.sigma2;
  for (double s : similarities) r.accepted += s >= r.t ? 1 : 0;
  return r;
}

std::string NormalizeIntent(std::string_view intent) {
  std::string out = ToLower(intent);
  for (char &c : out) {
    if (c == '-' || c == '_') c = ' ';
  }
  return out;
}

DiscoveryEvaluation EvaluateDiscovery(std::span<const IntentPair> pairs,
                                      const Embedder &embedder, double alpha) {
  if (pairs.empty()) throw InputError("no intent pairs to evaluate");

  // One batch for all distinct strings.
  std::vector<std::string> texts;
  std::unordered_map<std::string, size_t> slot;
  auto intern = [&](std::string_view intent) {
    std::string key = NormalizeIntent(intent);
    auto [it, inserted] = slot.emplace(key, texts.size());
    if (inserted) texts.push_back(std::move(key));
    return it->second;
  };
  std::vector<std::pair<size_t, size_t>> refs;
  refs.reserve(pairs.size());
  for (const IntentPair &p : pairs) {
    size_t g = intern(p.gold);
    size_t q = intern(p.predicted);
    refs.emplace_back(g, q);
  }
  std::vector<EmbeddingVector> vectors = embedder.Embed(texts);
  if (vectors.size() != texts.size()) {
    throw ProtocolError("embedder returned the wrong number of vectors");
  }

  std::vector<double> sims;
  sims.reserve(pairs.size());
  for (auto [g, q] : refs) sims.push_back(Cosine(vectors[g], vectors[q]));

  DiscoveryEvaluation out;
  out.report = ComputeThreshold(sims, alpha);
  std::map<std::string, std::vector<double>> grouped;
  for (size_t i = 0; i < pairs.size(); ++i) grouped[pairs[i].gold].push_back(sims[i]);
  for (auto &[label, values] : grouped) {
    out.per_class[label] = ClassStats{
        simd::Sum(values) / static_cast<double>(values.size()), values.size()};
  }
  return out;
}

double EvaluateKnown(std::span<const IntentPair> pairs) {
  if (pairs.empty()) throw InputError("no label pairs to evaluate");
  size_t hits = 0;
  for (const IntentPair &p : pairs) hits += p.gold == p.predicted ? 1 : 0;
  return static_cast<double>(hits) / static_cast<double>(pairs.size());
}

RepeatSummary SummarizeRepeats(std::span<const double> mus) {
  if (mus.empty()) throw InputError("no repeats to summarize");
  RepeatSummary s;
  s.repeats = mus.size();
  const double n = static_cast<double>(mus.size());
  s.mu_mean = simd::Sum(mus) / n;
  // Deviations are taken from the first repeat so identical runs give 0.
  std::vector<double> shifted(mus.begin(), mus.end());
  for (double &m : shifted) m -= mus.front();
  const double shift_mean = simd::Sum(shifted) / n;
  s.mu_std = std::sqrt(simd::SumSquaredDeviations(shifted, shift_mean) / n);
  return s;
}

}  // namespace zberta
