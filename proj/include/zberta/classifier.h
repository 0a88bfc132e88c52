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

#ifndef ZBERTA_CLASSIFIER_H_
#define ZBERTA_CLASSIFIER_H_

#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zberta/http_client.h"
#include "zberta/intents.h"

namespace zberta {

class LemmaLexicon;

// A hypothesis pattern with exactly one "{}" placeholder.
class HypothesisTemplate {
 public:
  static constexpr std::string_view kDefaultPattern = "This example is {}.";

  HypothesisTemplate() : HypothesisTemplate(std::string(kDefaultPattern)) {}
  // Throws ConfigError unless `pattern` holds exactly one "{}".
  explicit HypothesisTemplate(std::string pattern);

  const std::string &pattern() const { return pattern_; }
  std::string Fill(std::string_view label) const;

 private:
  std::string pattern_;
  size_t slot_ = 0;
};

// Three-way NLI distribution. Each probability is in [0, 1] and they sum to 1
// within 1e-9.
struct EntailmentJudgment {
  double entailment = 0.0;
  double neutral = 0.0;
  double contradiction = 0.0;

  bool operator==(const EntailmentJudgment &) const = default;
};

inline constexpr double kJudgmentSumTolerance = 1e-9;

// Throws ValidationError if `j` violates the distribution invariant.
void ValidateJudgment(const EntailmentJudgment &j,
                      double tolerance = kJudgmentSumTolerance);

// Scores (premise, hypothesis) pairs. Implementations must accept concurrent
// calls and return one judgment per hypothesis, in hypothesis order.
class EntailmentScorer {
 public:
  virtual ~EntailmentScorer() = default;
  virtual std::vector<EntailmentJudgment> Score(
      std::string_view premise,
      std::span<const std::string> hypotheses) const = 0;
};

// Model-free scorer driven by content-lemma coverage of the hypothesis:
// o = |C(premise) ∩ C(hypothesis)| / max(1, |C(hypothesis)|) and the judgment
// is (0.2 + 0.6 o, (0.8 - 0.6 o) / 2, (0.8 - 0.6 o) / 2).
class ReferenceScorer : public EntailmentScorer {
 public:
  explicit ReferenceScorer(const LemmaLexicon &lexicon) : lexicon_(lexicon) {}

  std::vector<EntailmentJudgment> Score(
      std::string_view premise,
      std::span<const std::string> hypotheses) const override;

  double Overlap(std::string_view premise, std::string_view hypothesis) const;
  static EntailmentJudgment JudgmentForOverlap(double overlap);

 private:
  const LemmaLexicon &lexicon_;
};

// Client of the POST /v1/nli protocol.
class RemoteScorer : public EntailmentScorer {
 public:
  explicit RemoteScorer(Endpoint endpoint,
                        std::chrono::milliseconds timeout = kDefaultTimeout)
      : endpoint_(std::move(endpoint)), timeout_(timeout) {}

  std::vector<EntailmentJudgment> Score(
      std::string_view premise,
      std::span<const std::string> hypotheses) const override;

 private:
  Endpoint endpoint_;
  std::chrono::milliseconds timeout_;
};

// What the classifier ranks: an output label plus the phrase substituted into
// the hypothesis template.
struct IntentLabel {
  std::string label;   // "action-object" or a caller-supplied label
  std::string phrase;  // "action object"
  std::optional<Provenance> provenance;

  static IntentLabel FromCandidate(const CandidateIntent &c);
  // Known labels keep their spelling; '_' and '-' become spaces in the phrase.
  static IntentLabel FromKnownLabel(std::string label);

  bool operator==(const IntentLabel &) const = default;
};

struct RankedIntent {
  IntentLabel intent;
  double score = 0.0;
};

struct IntentPrediction {
  std::string utterance;
  std::vector<RankedIntent> ranked;  // non-increasing score, stable on ties

  const IntentLabel &chosen() const { return ranked.front().intent; }
  double top_score() const { return ranked.front().score; }
};

enum class ScoreMode {
  kNormalized,  // e / (e + c), then normalized to sum to 1 across candidates
  kRaw,         // the entailment probability as is
};

std::vector<std::string> BuildHypotheses(std::span<const CandidateIntent> candidates,
                                         const HypothesisTemplate &tmpl);
std::vector<std::string> BuildHypotheses(std::span<const IntentLabel> labels,
                                         const HypothesisTemplate &tmpl);

// Calls the scorer and checks count and distribution invariants.
std::vector<EntailmentJudgment> ScoreEntailment(
    std::string_view premise, std::span<const std::string> hypotheses,
    const EntailmentScorer &scorer);

// Per-candidate scores from judgments. Throws ClassificationError when every
// candidate has e + c = 0 in normalized mode.
std::vector<double> CandidateScores(std::span<const EntailmentJudgment> judgments,
                                    ScoreMode mode = ScoreMode::kNormalized);

// Orders labels by score (descending; earlier label wins a tie).
IntentPrediction RankIntents(std::string utterance,
                             std::vector<IntentLabel> labels,
                             std::span<const double> scores);

class ZeroShotClassifier {
 public:
  ZeroShotClassifier(const EntailmentScorer &scorer,
                     HypothesisTemplate tmpl = HypothesisTemplate(),
                     ScoreMode mode = ScoreMode::kNormalized)
      : scorer_(scorer), template_(std::move(tmpl)), mode_(mode) {}

  // Picks among generated candidates.
  IntentPrediction Classify(std::string_view utterance,
                            std::span<const CandidateIntent> candidates) const;

  // Picks among a fixed label set (known-intent mode).
  IntentPrediction ClassifyKnown(std::string_view utterance,
                                 std::span<const std::string> label_set) const;

  IntentPrediction ClassifyLabels(std::string_view utterance,
                                  std::vector<IntentLabel> labels) const;

  const HypothesisTemplate &hypothesis_template() const { return template_; }

 private:
  const EntailmentScorer &scorer_;
  HypothesisTemplate template_;
  ScoreMode mode_;
};

}  // namespace zberta

#endif  // ZBERTA_CLASSIFIER_H_
