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

#include "zberta/embedding.h"

#include <algorithm>
#include <cmath>

#include "zberta/errors.h"
#include "zberta/protocol.h"
#include "zberta/simd/kernels.h"
#include "zberta/text.h"

namespace zberta {

bool EmbeddingVector::IsZero() const {
  return std::all_of(values.begin(), values.end(),
                     [](double v) { return v == 0.0; });
}

double Cosine(const EmbeddingVector &a, const EmbeddingVector &b) {
  if (a.dim() != b.dim()) {
    throw InputError("cosine: dimension mismatch (" + std::to_string(a.dim()) +
                     " vs " + std::to_string(b.dim()) + ")");
  }
  if (a.dim() == 0) throw InputError("cosine: empty vector");
  const double aa = simd::SumSquares(a.values);
  const double bb = simd::SumSquares(b.values);
  if (aa == 0.0 || bb == 0.0) throw InputError("cosine: zero vector");
  // sqrt(aa * bb) rather than sqrt(aa) * sqrt(bb): exact 1 for a == b.
  const double c = simd::Dot(a.values, b.values) / std::sqrt(aa * bb);
  return std::clamp(c, -1.0, 1.0);
}

uint64_t Fnv1a64(std::string_view bytes) {
  uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

EmbeddingVector Embedder::EmbedOne(std::string_view text) const {
  std::vector<std::string> one{std::string(text)};
  std::vector<EmbeddingVector> out = Embed(one);
  if (out.size() != 1) throw ProtocolError("embedder returned wrong count");
  return std::move(out.front());
}

EmbeddingVector ReferenceEmbedder::EmbedText(std::string_view text) const {
  if (text.empty()) throw InputError("cannot embed empty text");
  std::vector<std::string> keys = ContentLemmas(text, lexicon_);
  if (keys.empty()) keys = SplitWords(text);
  if (keys.empty()) keys.push_back(ToLower(text));

  EmbeddingVector v;
  v.values.assign(kDim, 0.0);
  for (const std::string &key : keys) v.values[Fnv1a64(key) % kDim] += 1.0;
  const double norm = std::sqrt(simd::SumSquares(v.values));
  for (double &x : v.values) x /= norm;
  return v;
}

std::vector<EmbeddingVector> ReferenceEmbedder::Embed(
    std::span<const std::string> texts) const {
  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  for (const std::string &t : texts) out.push_back(EmbedText(t));
  return out;
}

std::vector<EmbeddingVector> RemoteEmbedder::Embed(
    std::span<const std::string> texts) const {
  if (texts.empty()) return {};
  nlohmann::json reply =
      PostJson(endpoint_, kEmbedPath, EncodeEmbedRequest(texts), timeout_);
  return DecodeEmbedResponse(reply, texts.size());
}

}  // namespace zberta
