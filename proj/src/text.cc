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

#include "zberta/text.h"

#include <algorithm>
#include <array>

#include "zberta/wordnet.h"

namespace zberta {
namespace {

constexpr std::array<std::string_view, 30> kStopwords = {
    "a",    "an",   "the",  "is",   "are",  "was",   "were", "be",
    "been", "this", "that", "i",    "you",  "my",    "your", "me",
    "we",   "it",   "to",   "of",   "in",   "on",    "for",  "about",
    "do",   "does", "did",  "what", "how",  "example",
};

bool IsWordByte(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '\'' || c >= 0x80;
}

}  // namespace

std::string ToLower(std::string_view s) {
  std::string out(s);
  for (char &c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::vector<std::string> SplitWords(std::string_view text) {
  std::vector<std::string> words;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && !IsWordByte(text[i])) ++i;
    size_t start = i;
    while (i < text.size() && IsWordByte(text[i])) ++i;
    std::string_view word = text.substr(start, i - start);
    while (!word.empty() && word.front() == '\'') word.remove_prefix(1);
    while (!word.empty() && word.back() == '\'') word.remove_suffix(1);
    if (!word.empty()) words.push_back(ToLower(word));
  }
  return words;
}

std::span<const std::string_view> Stopwords() {
  return kStopwords;
}

bool IsStopword(std::string_view lowercase_word) {
  auto words = Stopwords();
  return std::find(words.begin(), words.end(), lowercase_word) != words.end();
}

std::vector<ContentToken> ContentTokens(std::string_view text,
                                        const LemmaLexicon &lexicon) {
  std::vector<ContentToken> out;
  std::vector<std::string> words = SplitWords(text);
  for (size_t i = 0; i < words.size(); ++i) {
    if (IsStopword(words[i])) continue;
    std::string lemma = lexicon.LemmatizeAny(words[i]);
    if (IsStopword(lemma)) continue;
    out.push_back(ContentToken{words[i], std::move(lemma), i});
  }
  return out;
}

std::vector<std::string> ContentLemmas(std::string_view text,
                                       const LemmaLexicon &lexicon) {
  std::vector<std::string> out;
  for (ContentToken &t : ContentTokens(text, lexicon)) {
    out.push_back(std::move(t.lemma));
  }
  return out;
}

}  // namespace zberta
