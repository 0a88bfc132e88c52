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

#include "zberta/pipeline.h"

#include <chrono>

#include "zberta/errors.h"

namespace zberta {
namespace {

const char kNeedsWordNet[] = " needs WordNet data (--wordnet-dir)";

}  // namespace

Pipeline::Pipeline(PipelineConfig config) : config_(std::move(config)) {
  config_.Validate();
  const std::chrono::milliseconds timeout(config_.timeout_ms);
  if (config_.wordnet_dir) {
    lexicon_ = std::make_unique<LemmaLexicon>(
        LemmaLexicon::LoadWordNet(*config_.wordnet_dir));
  }
  if (config_.scorer == BackendMode::kRemote) {
    scorer_ = std::make_unique<RemoteScorer>(
        ParseEndpoint(config_.scorer_endpoint), timeout);
  } else if (lexicon_) {
    scorer_ = std::make_unique<ReferenceScorer>(*lexicon_);
  }
  if (config_.embedder == BackendMode::kRemote) {
    embedder_ = std::make_unique<RemoteEmbedder>(
        ParseEndpoint(config_.embedder_endpoint), timeout);
  } else if (lexicon_) {
    embedder_ = std::make_unique<ReferenceEmbedder>(*lexicon_);
  }
  if (config_.parser == ParserMode::kRemote) {
    parser_ = std::make_unique<RemoteParser>(
        ParseEndpoint(config_.parser_endpoint), timeout);
  }
  if (lexicon_) {
    ArcRelations relations;
    relations.direct_object = config_.dobj_aliases;
    generator_ = std::make_unique<IntentGenerator>(*lexicon_, relations);
  }
  if (scorer_) {
    classifier_ = std::make_unique<ZeroShotClassifier>(
        *scorer_, HypothesisTemplate(config_.template_pattern),
        config_.score_mode);
  }
}

const LemmaLexicon &Pipeline::lexicon() const {
  if (!lexicon_) throw ConfigError(std::string("lemmatization") + kNeedsWordNet);
  return *lexicon_;
}

const GlossStore &Pipeline::glosses() const {
  if (!config_.wordnet_dir) {
    throw ConfigError(std::string("definition lookup") + kNeedsWordNet);
  }
  std::call_once(glosses_once_, [this] {
    glosses_ = std::make_unique<GlossStore>(
        GlossStore::LoadWordNet(*config_.wordnet_dir));
  });
  return *glosses_;
}

const EntailmentScorer &Pipeline::scorer() const {
  if (!scorer_) throw ConfigError(std::string("the reference scorer") + kNeedsWordNet);
  return *scorer_;
}

const Embedder &Pipeline::embedder() const {
  if (!embedder_) {
    throw ConfigError(std::string("the reference embedder") + kNeedsWordNet);
  }
  return *embedder_;
}

const IntentGenerator &Pipeline::generator() const {
  if (!generator_) throw ConfigError(std::string("intent generation") + kNeedsWordNet);
  return *generator_;
}

const ZeroShotClassifier &Pipeline::classifier() const {
  scorer();
  return *classifier_;
}

Pipeline::Discovery Pipeline::Discover(const ParsedUtterance &u,
                                       std::string_view premise) const {
  Discovery d;
  d.candidates = generator().Generate(u);
  d.used_fallback = d.candidates.size() == 1 &&
                    d.candidates.front().provenance == Provenance::kFallback;
  d.prediction = classifier().Classify(premise, d.candidates);
  return d;
}

}  // namespace zberta
