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


#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "test_util.h"
#include "zberta/embedding.h"
#include "zberta/errors.h"

namespace zberta {
namespace {

using testing::WordNet;

double Norm(const EmbeddingVector &v) {
  double s = 0;
  for (double x : v.values) s += x * x;
  return std::sqrt(s);
}

TEST(CosineTest, IdenticalVectors) {
  EmbeddingVector a{{0.3, -1.2, 4.0}};
  EXPECT_NEAR(Cosine(a, a), 1.0, 1e-12);
}

TEST(CosineTest, Orthogonal) {
  EXPECT_EQ(Cosine({{1, 0}}, {{0, 1}}), 0.0);
}

TEST(CosineTest, FortyFiveDegrees) {
  const double brute = 1.0 / (std::sqrt(1.0) * std::sqrt(2.0));
  EXPECT_NEAR(Cosine({{1, 0}}, {{1, 1}}), 0.7071067811865475, 1e-12);
  EXPECT_NEAR(Cosine({{1, 0}}, {{1, 1}}), brute, 1e-15);
}

TEST(CosineTest, Errors) {
  EXPECT_THROW(Cosine({{1, 0}}, {{1, 0, 0}}), InputError);
  EXPECT_THROW(Cosine({{0, 0}}, {{1, 0}}), InputError);
  EXPECT_THROW(Cosine({}, {}), InputError);
}

TEST(CosineTest, StaysInRange) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> d;
  for (int i = 0; i < 1000; ++i) {
    EmbeddingVector a, b;
    for (int k = 0; k < 16; ++k) {
      a.values.push_back(d(rng));
      b.values.push_back(d(rng));
    }
    double c = Cosine(a, b);
    EXPECT_LE(c, 1.0);
    EXPECT_GE(c, -1.0);
    EXPECT_DOUBLE_EQ(c, Cosine(b, a));
  }
}

TEST(Fnv1aTest, KnownValues) {
  EXPECT_EQ(Fnv1a64(""), 0xcbf29ce484222325ull);
  EXPECT_EQ(Fnv1a64("a"), 0xaf63dc4c8601ec8cull);
  EXPECT_EQ(Fnv1a64("exchange"), 0x8cb31206e3250360ull);
  EXPECT_EQ(Fnv1a64("block"), 0x14e5faab9ce0e362ull);
}

TEST(ReferenceEmbedderTest, HashAndDotOracle) {
  // Buckets: exchange 96, rate 71, pin 84, block 98; no shared bucket.
  ReferenceEmbedder e(WordNet());
  EXPECT_EQ(Cosine(e.EmbedText("exchange rate"), e.EmbedText("pin block")), 0.0);
  // One shared lemma out of two on each side.
  EXPECT_NEAR(Cosine(e.EmbedText("track delivery"), e.EmbedText("card delivery")),
              0.5, 1e-12);
}

TEST(ReferenceEmbedderTest, UnitNormAndDimension) {
  ReferenceEmbedder e(WordNet());
  for (const char *text : {"card delivery?", "the", "?", "where do you support?",
                           "exchange rate exchange"}) {
    EmbeddingVector v = e.EmbedText(text);
    EXPECT_EQ(v.dim(), ReferenceEmbedder::kDim);
    EXPECT_NEAR(Norm(v), 1.0, 1e-12) << text;
  }
}

TEST(ReferenceEmbedderTest, IdenticalStrings) {
  ReferenceEmbedder e(WordNet());
  EXPECT_NEAR(Cosine(e.EmbedText("exchange rate"), e.EmbedText("exchange rate")),
              1.0, 1e-12);
}

TEST(ReferenceEmbedderTest, BagOfLemmasIgnoresOrderCaseAndInflection) {
  ReferenceEmbedder e(WordNet());
  EmbeddingVector a = e.EmbedText("pin block");
  EXPECT_EQ(a.values, e.EmbedText("block pin").values);
  EXPECT_EQ(a.values, e.EmbedText("PIN blocked").values);
  EXPECT_EQ(a.values, e.EmbedText("the pin is blocked").values);
}

TEST(ReferenceEmbedderTest, BatchPreservesOrder) {
  ReferenceEmbedder e(WordNet());
  std::vector<std::string> texts = {"x", "card", "x"};
  std::vector<EmbeddingVector> vs = e.Embed(texts);
  ASSERT_EQ(vs.size(), 3u);
  EXPECT_EQ(vs[0].values, vs[2].values);
  EXPECT_EQ(vs[1].values, e.EmbedText("card").values);
}

TEST(ReferenceEmbedderTest, EmptyTextRejected) {
  ReferenceEmbedder e(WordNet());
  EXPECT_THROW(e.EmbedText(""), InputError);
}

}  // namespace
}  // namespace zberta
