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

#ifndef ZBERTA_PIPELINE_H_
#define ZBERTA_PIPELINE_H_

#include <memory>
#include <mutex>
#include <string_view>
#include <vector>

#include "zberta/classifier.h"
#include "zberta/config.h"
#include "zberta/embedding.h"
#include "zberta/intents.h"
#include "zberta/parser_client.h"
#include "zberta/wordnet.h"

namespace zberta {

// Backends and stages assembled from a PipelineConfig. Immutable after
// construction apart from the lazily loaded gloss store; safe to share
// between request threads.
class Pipeline {
 public:
  explicit Pipeline(PipelineConfig config);

  const PipelineConfig &config() const { return config_; }

  bool has_lexicon() const { return lexicon_ != nullptr; }
  // Throw ConfigError when the component is not available in this config.
  const LemmaLexicon &lexicon() const;
  const GlossStore &glosses() const;
  const EntailmentScorer &scorer() const;
  const Embedder &embedder() const;
  const IntentGenerator &generator() const;
  const ZeroShotClassifier &classifier() const;
  // nullptr unless the parser mode is remote.
  const RemoteParser *parser() const { return parser_.get(); }

  struct Discovery {
    std::vector<CandidateIntent> candidates;
    IntentPrediction prediction;
    bool used_fallback = false;
  };

  // Candidate generation plus zero-shot selection, with `premise` as the
  // NLI premise.
  Discovery Discover(const ParsedUtterance &u, std::string_view premise) const;

 private:
  PipelineConfig config_;
  std::unique_ptr<LemmaLexicon> lexicon_;
  mutable std::once_flag glosses_once_;
  mutable std::unique_ptr<GlossStore> glosses_;
  std::unique_ptr<EntailmentScorer> scorer_;
  std::unique_ptr<Embedder> embedder_;
  std::unique_ptr<RemoteParser> parser_;
  std::unique_ptr<IntentGenerator> generator_;
  std::unique_ptr<ZeroShotClassifier> classifier_;
};

}  // namespace zberta

#endif  // ZBERTA_PIPELINE_H_
