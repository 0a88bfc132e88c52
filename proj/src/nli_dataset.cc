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

#include "zberta/nli_dataset.h"

#include <algorithm>
#include <set>

#include "zberta/errors.h"
#include "zberta/text.h"

namespace zberta {

std::string_view NliLabelName(NliLabel label) {
  switch (label) {
    case NliLabel::kEntailment: return "entailment";
    case NliLabel::kNeutral: return "neutral";
    case NliLabel::kContradiction: return "contradiction";
  }
  return "entailment";
}

NliLabel ParseNliLabel(std::string_view name) {
  if (name == "entailment") return NliLabel::kEntailment;
  if (name == "neutral") return NliLabel::kNeutral;
  if (name == "contradiction") return NliLabel::kContradiction;
  throw ConfigError("unknown NLI label '" + std::string(name) + "'");
}

uint64_t SplitMix64::Next() {
  uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

NegativeSampler::NegativeSampler(uint64_t seed, std::span<const std::string> pool)
    : seed_(seed), rng_(seed), pool_(pool) {
  if (pool_.empty()) throw PreconditionError("negative sampling pool is empty");
}

const std::string &NegativeSampler::Draw() {
  return pool_[rng_.Next() % pool_.size()];
}

NliDatasetBuilder::NliDatasetBuilder(const Embedder &embedder,
                                     const LemmaLexicon &lexicon,
                                     const GlossStore &glosses,
                                     std::vector<std::string> pool)
    : embedder_(embedder),
      lexicon_(lexicon),
      glosses_(glosses),
      pool_(std::move(pool)) {}

std::string NliDatasetBuilder::ExtractKeyWord(std::string_view utterance) const {
  std::vector<ContentToken> tokens = ContentTokens(utterance, lexicon_);
  if (tokens.empty()) {
    throw ExtractionError("no content words in \"" + std::string(utterance) + "\"");
  }
  std::vector<std::string> texts{std::string(utterance)};
  for (const ContentToken &t : tokens) texts.push_back(t.word);
  std::vector<EmbeddingVector> vectors = embedder_.Embed(texts);
  if (vectors.size() != texts.size()) {
    throw ProtocolError("embedder returned the wrong number of vectors");
  }
  size_t best = 0;
  double best_sim = Cosine(vectors[0], vectors[1]);
  for (size_t i = 1; i < tokens.size(); ++i) {
    double sim = Cosine(vectors[0], vectors[i + 1]);
    if (sim > best_sim) {
      best_sim = sim;
      best = i;
    }
  }
  return lexicon_.Lemmatize(tokens[best].word, PosCategory::kNoun);
}

NLIExample NliDatasetBuilder::BuildEntailed(std::string_view utterance) const {
  std::string key = ExtractKeyWord(utterance);
  std::string definition = glosses_.LookupDefinition(key);
  return NLIExample{std::string(utterance),
                    std::string(kHypothesisPrefix) + definition,
                    NliLabel::kEntailment, std::move(key), std::move(definition)};
}

std::vector<NLIExample> NliDatasetBuilder::BuildNegatives(
    std::string_view utterance, std::string_view key_word, size_t k,
    NegativeSampler &sampler, NliLabel label) const {
  std::set<std::string> present;
  for (const std::string &w : SplitWords(utterance)) {
    present.insert(w);
    present.insert(lexicon_.Lemmatize(w, PosCategory::kNoun));
  }
  if (!key_word.empty()) present.insert(ToLower(key_word));

  auto related = [&](const std::string &candidate) {
    std::string spaced = candidate;
    std::replace(spaced.begin(), spaced.end(), '_', ' ');
    for (const std::string &part : SplitWords(spaced)) {
      if (present.contains(part)) return true;
    }
    return present.contains(candidate);
  };

  std::vector<NLIExample> out;
  out.reserve(k);
  while (out.size() < k) {
    int rejections = 0;
    while (true) {
      const std::string &word = sampler.Draw();
      if (!related(word)) {
        try {
          std::string definition = glosses_.LookupDefinition(word);
          out.push_back(NLIExample{std::string(utterance),
                                   std::string(kHypothesisPrefix) + definition,
                                   label, word, std::move(definition)});
          break;
        } catch (const LookupError &) {
          // No gloss: treat like a rejection.
        }
      }
      if (++rejections >= kMaxConsecutiveRejections) {
        throw SamplingError("no usable negative word after " +
                            std::to_string(rejections) + " draws for \"" +
                            std::string(utterance) + "\"");
      }
    }
  }
  return out;
}

CorpusResult NliDatasetBuilder::TransformCorpus(
    std::span<const CorpusRecord> records, const CorpusOptions &options) const {
  if (records.empty()) throw PreconditionError("corpus has no records");
  CorpusResult result;
  for (size_t i = 0; i < records.size(); ++i) {
    const CorpusRecord &r = records[i];
    try {
      NLIExample entailed = BuildEntailed(r.text);
      std::vector<NLIExample> negatives;
      if (options.negatives_per_record > 0) {
        NegativeSampler sampler(options.seed ^ static_cast<uint64_t>(i), pool_);
        negatives = BuildNegatives(r.text, entailed.key_word,
                                   options.negatives_per_record, sampler,
                                   options.negative_label);
      }
      result.examples.push_back(std::move(entailed));
      ++result.entailed;
      for (NLIExample &n : negatives) result.examples.push_back(std::move(n));
      result.negatives += negatives.size();
    } catch (const Error &e) {
      ++result.skipped;
      result.failures.push_back("record " + std::to_string(i) + " (\"" + r.text +
                                "\"): " + e.what());
    }
  }
  if (2 * result.skipped > records.size()) {
    throw CorpusError(std::to_string(result.skipped) + " of " +
                      std::to_string(records.size()) + " records failed");
  }
  return result;
}

}  // namespace zberta
