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

#ifndef ZBERTA_NLI_DATASET_H_
#define ZBERTA_NLI_DATASET_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zberta/embedding.h"
#include "zberta/wordnet.h"

namespace zberta {

enum class NliLabel { kEntailment, kNeutral, kContradiction };

std::string_view NliLabelName(NliLabel label);
// Throws ConfigError for anything but entailment / neutral / contradiction.
NliLabel ParseNliLabel(std::string_view name);

inline constexpr std::string_view kHypothesisPrefix = "this text is about ";

struct NLIExample {
  std::string premise;
  std::string hypothesis;  // kHypothesisPrefix + definition
  NliLabel label = NliLabel::kEntailment;
  std::string key_word;
  std::string definition;

  bool operator==(const NLIExample &) const = default;
};

// SplitMix64 (Steele, Lea and Flood); the state advances by the golden gamma.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}
  uint64_t Next();

 private:
  uint64_t state_;
};

// Draws words uniformly (Next() mod pool size) from a sorted pool.
class NegativeSampler {
 public:
  NegativeSampler(uint64_t seed, std::span<const std::string> pool);

  const std::string &Draw();
  uint64_t seed() const { return seed_; }

 private:
  uint64_t seed_;
  SplitMix64 rng_;
  std::span<const std::string> pool_;
};

inline constexpr int kMaxConsecutiveRejections = 1000;

struct CorpusRecord {
  std::string text;
  std::string label;
};

struct CorpusOptions {
  size_t negatives_per_record = 1;
  uint64_t seed = 0;
  NliLabel negative_label = NliLabel::kContradiction;
};

struct CorpusResult {
  std::vector<NLIExample> examples;
  size_t entailed = 0;
  size_t negatives = 0;
  size_t skipped = 0;
  std::vector<std::string> failures;  // one message per skipped record
};

// Casts an intent-classification corpus as NLI: the premise is the utterance,
// the entailed hypothesis describes its most relevant word, negatives describe
// sampled unrelated nouns.
class NliDatasetBuilder {
 public:
  // `pool` must be sorted; pass lexicon.NounLemmas() for the standard pool.
  NliDatasetBuilder(const Embedder &embedder, const LemmaLexicon &lexicon,
                    const GlossStore &glosses, std::vector<std::string> pool);

  // Content token closest (cosine) to the whole utterance, earliest on ties,
  // returned as a noun lemma. Throws ExtractionError without content tokens.
  std::string ExtractKeyWord(std::string_view utterance) const;

  NLIExample BuildEntailed(std::string_view utterance) const;

  // k examples for sampled words absent from the utterance and different from
  // `key_word`. Throws SamplingError after kMaxConsecutiveRejections.
  std::vector<NLIExample> BuildNegatives(std::string_view utterance,
                                         std::string_view key_word, size_t k,
                                         NegativeSampler &sampler,
                                         NliLabel label = NliLabel::kContradiction) const;

  // Entailed example then negatives for every record, in record order, using
  // seed XOR record-index per record. Failing records are skipped; more than
  // half skipped throws CorpusError.
  CorpusResult TransformCorpus(std::span<const CorpusRecord> records,
                               const CorpusOptions &options) const;

  std::span<const std::string> pool() const { return pool_; }

 private:
  const Embedder &embedder_;
  const LemmaLexicon &lexicon_;
  const GlossStore &glosses_;
  std::vector<std::string> pool_;
};

}  // namespace zberta

#endif  // ZBERTA_NLI_DATASET_H_
