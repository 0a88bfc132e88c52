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

#ifndef ZBERTA_EMBEDDING_H_
#define ZBERTA_EMBEDDING_H_

#include <chrono>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zberta/http_client.h"

namespace zberta {

class LemmaLexicon;

struct EmbeddingVector {
  std::vector<double> values;

  size_t dim() const { return values.size(); }
  bool IsZero() const;
};

// dot(a, b) / (|a| |b|), clamped to [-1, 1]. Throws InputError on a
// dimension mismatch or an all-zero vector.
double Cosine(const EmbeddingVector &a, const EmbeddingVector &b);

uint64_t Fnv1a64(std::string_view bytes);

// Sentence encoder interface. Implementations must be safe to call from
// several threads and return one non-zero vector per text, in order.
class Embedder {
 public:
  virtual ~Embedder() = default;
  virtual std::vector<EmbeddingVector> Embed(
      std::span<const std::string> texts) const = 0;

  EmbeddingVector EmbedOne(std::string_view text) const;
};

// Deterministic bag-of-lemmas hashing embedder: each content lemma adds 1 to
// coordinate FNV-1a(lemma) mod 256, then the vector is L2-normalized. Text
// made only of stopwords hashes its raw lowercased words instead.
class ReferenceEmbedder : public Embedder {
 public:
  static constexpr size_t kDim = 256;

  explicit ReferenceEmbedder(const LemmaLexicon &lexicon) : lexicon_(lexicon) {}

  std::vector<EmbeddingVector> Embed(
      std::span<const std::string> texts) const override;
  EmbeddingVector EmbedText(std::string_view text) const;

 private:
  const LemmaLexicon &lexicon_;
};

// Client of the POST /v1/embed protocol.
class RemoteEmbedder : public Embedder {
 public:
  explicit RemoteEmbedder(Endpoint endpoint,
                          std::chrono::milliseconds timeout = kDefaultTimeout)
      : endpoint_(std::move(endpoint)), timeout_(timeout) {}

  std::vector<EmbeddingVector> Embed(
      std::span<const std::string> texts) const override;

 private:
  Endpoint endpoint_;
  std::chrono::milliseconds timeout_;
};

}  // namespace zberta

#endif  // ZBERTA_EMBEDDING_H_
