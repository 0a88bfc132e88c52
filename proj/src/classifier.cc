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

#include "zberta/classifier.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "zberta/errors.h"
#include "zberta/protocol.h"
#include "zberta/text.h"

namespace zberta {
namespace {

constexpr std::string_view kPlaceholder = "{}";

std::set<std::string> LemmaSet(std::string_view text,
                               const LemmaLexicon &lexicon) {
  std::vector<std::string> lemmas = ContentLemmas(text, lexicon);
  return std::set<std::string>(lemmas.begin(), lemmas.end());
}

}  // namespace

HypothesisTemplate::HypothesisTemplate(std::string pattern)
    : pattern_(std::move(pattern)) {
  size_t first = pattern_.find(kPlaceholder);
  if (first == std::string::npos ||
      pattern_.find(kPlaceholder, first + kPlaceholder.size()) !=
          std::string::npos) {
    throw ConfigError("hypothesis template needs exactly one {}: '" +
                      pattern_ + "'");
  }
  slot_ = first;
}

std::string HypothesisTemplate::Fill(std::string_view label) const {
  std::string out = pattern_;
  out.replace(slot_, kPlaceholder.size(), label);
  return out;
}

void ValidateJudgment(const EntailmentJudgment &j, double tolerance) {
  for (double p : {j.entailment, j.neutral, j.contradiction}) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw ValidationError("probability outside [0, 1]: " + std::to_string(p));
    }
  }
  double sum = j.entailment + j.neutral + j.contradiction;
  if (std::abs(sum - 1.0) > tolerance) {
    throw ValidationError("probabilities sum to " + std::to_string(sum));
  }
}

double ReferenceScorer::Overlap(std::string_view premise,
                                std::string_view hypothesis) const {
  std::set<std::string> p = LemmaSet(premise, lexicon_);
  std::set<std::string> h = LemmaSet(hypothesis, lexicon_);
  size_t shared = 0;
  for (const std::string &lemma : h) shared += p.count(lemma);
  return static_cast<double>(shared) /
         static_cast<double>(std::max<size_t>(1, h.size()));
}

EntailmentJudgment ReferenceScorer::JudgmentForOverlap(double overlap) {
  const double rest = (0.8 - 0.6 * overlap) / 2.0;
  return EntailmentJudgment{0.2 + 0.6 * overlap, rest, rest};
}

std::vector<EntailmentJudgment> ReferenceScorer::Score(
    std::string_view premise, std::span<const std::string> hypotheses) const {
  std::vector<EntailmentJudgment> out;
  out.reserve(hypotheses.size());
  for (const std::string &h : hypotheses) {
    out.push_back(JudgmentForOverlap(Overlap(premise, h)));
  }
  return out;
}

std::vector<EntailmentJudgment> RemoteScorer::Score(
    std::string_view premise, std::span<const std::string> hypotheses) const {
  nlohmann::json reply =
      PostJson(endpoint_, kNliPath, EncodeNliRequest(premise, hypotheses),
               timeout_);
  return DecodeNliResponse(reply, hypotheses.size());
}

IntentLabel IntentLabel::FromCandidate(const CandidateIntent &c) {
  return IntentLabel{c.Label(), c.Phrase(), c.provenance};
}

IntentLabel IntentLabel::FromKnownLabel(std::string label) {
  std::string phrase = label;
  std::replace(phrase.begin(), phrase.end(), '_', ' ');
  std::replace(phrase.begin(), phrase.end(), '-', ' ');
  return IntentLabel{std::move(label), std::move(phrase), std::nullopt};
}

std::vector<std::string> BuildHypotheses(
    std::span<const CandidateIntent> candidates, const HypothesisTemplate &tmpl) {
  if (candidates.empty()) {
    throw PreconditionError("cannot build hypotheses for zero candidates");
  }
  std::vector<std::string> out;
  out.reserve(candidates.size());
  for (const CandidateIntent &c : candidates) out.push_back(tmpl.Fill(c.Phrase()));
  return out;
}

std::vector<std::string> BuildHypotheses(std::span<const IntentLabel> labels,
                                         const HypothesisTemplate &tmpl) {
  if (labels.empty()) {
    throw PreconditionError("cannot build hypotheses for zero candidates");
  }
  std::vector<std::string> out;
  out.reserve(labels.size());
  for (const IntentLabel &l : labels) out.push_back(tmpl.Fill(l.phrase));
  return out;
}

std::vector<EntailmentJudgment> ScoreEntailment(
    std::string_view premise, std::span<const std::string> hypotheses,
    const EntailmentScorer &scorer) {
  if (hypotheses.empty()) {
    throw PreconditionError("no hypotheses to score");
  }
  std::vector<EntailmentJudgment> judgments = scorer.Score(premise, hypotheses);
  if (judgments.size() != hypotheses.size()) {
    throw ProtocolError("scorer returned " + std::to_string(judgments.size()) +
                        " judgments for " + std::to_string(hypotheses.size()) +
                        " hypotheses");
  }
  for (const EntailmentJudgment &j : judgments) ValidateJudgment(j);
  return judgments;
}

std::vector<double> CandidateScores(std::span<const EntailmentJudgment> judgments,
                                    ScoreMode mode) {
  std::vector<double> scores;
  scores.reserve(judgments.size());
  if (mode == ScoreMode::kRaw) {
    for (const auto &j : judgments) scores.push_back(j.entailment);
    return scores;
  }
  bool any_mass = false;
  for (const auto &j : judgments) {
    const double denom = j.entailment + j.contradiction;
    any_mass |= denom > 0.0;
    scores.push_back(denom > 0.0 ? j.entailment / denom : 0.0);
  }
  if (!any_mass) {
    throw ClassificationError(
        "every candidate has zero entailment and contradiction mass");
  }
  const double total = std::accumulate(scores.begin(), scores.end(), 0.0);
  if (total == 0.0) {
    // All candidates contradicted: no preference, keep candidate order.
    std::fill(scores.begin(), scores.end(),
              1.0 / static_cast<double>(scores.size()));
    return scores;
  }
  for (double &s : scores) s /= total;
  return scores;
}

IntentPrediction RankIntents(std::string utterance,
                             std::vector<IntentLabel> labels,
                             std::span<const double> scores) {
  if (labels.empty() || labels.size() != scores.size()) {
    throw PreconditionError("need one score per candidate and >= 1 candidate");
  }
  std::vector<size_t> order(labels.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return scores[a] > scores[b]; });
  IntentPrediction p;
  p.utterance = std::move(utterance);
  for (size_t i : order) p.ranked.push_back({std::move(labels[i]), scores[i]});
  return p;
}

IntentPrediction ZeroShotClassifier::ClassifyLabels(
    std::string_view utterance, std::vector<IntentLabel> labels) const {
  std::vector<std::string> hypotheses = BuildHypotheses(labels, template_);
  std::vector<EntailmentJudgment> judgments =
      ScoreEntailment(utterance, hypotheses, scorer_);
  std::vector<double> scores = CandidateScores(judgments, mode_);
  return RankIntents(std::string(utterance), std::move(labels), scores);
}

IntentPrediction ZeroShotClassifier::Classify(
    std::string_view utterance, std::span<const CandidateIntent> candidates) const {
  std::vector<IntentLabel> labels;
  labels.reserve(candidates.size());
  for (const auto &c : candidates) labels.push_back(IntentLabel::FromCandidate(c));
  return ClassifyLabels(utterance, std::move(labels));
}

IntentPrediction ZeroShotClassifier::ClassifyKnown(
    std::string_view utterance, std::span<const std::string> label_set) const {
  if (label_set.empty()) throw PreconditionError("empty label set");
  std::vector<IntentLabel> labels;
  labels.reserve(label_set.size());
  for (const auto &l : label_set) labels.push_back(IntentLabel::FromKnownLabel(l));
  return ClassifyLabels(utterance, std::move(labels));
}

}  // namespace zberta
