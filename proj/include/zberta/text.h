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

#ifndef ZBERTA_TEXT_H_
#define ZBERTA_TEXT_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zberta {

class LemmaLexicon;

std::string ToLower(std::string_view s);

// Splits text into lowercased word tokens: maximal runs of ASCII letters,
// digits, apostrophes and non-ASCII bytes, with outer apostrophes trimmed.
std::vector<std::string> SplitWords(std::string_view text);

// The fixed stopword list shared by the reference scorer, the reference
// embedder and key-word extraction.
std::span<const std::string_view> Stopwords();
bool IsStopword(std::string_view lowercase_word);

struct ContentToken {
  std::string word;   // lowercased surface
  std::string lemma;  // POS-agnostic lemma
  size_t position = 0;  // index among all word tokens
};

// Word tokens that are not stopwords, neither before nor after
// lemmatization, in text order.
std::vector<ContentToken> ContentTokens(std::string_view text,
                                        const LemmaLexicon &lexicon);
std::vector<std::string> ContentLemmas(std::string_view text,
                                       const LemmaLexicon &lexicon);

}  // namespace zberta

#endif  // ZBERTA_TEXT_H_
