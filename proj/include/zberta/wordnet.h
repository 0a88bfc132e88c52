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

#ifndef ZBERTA_WORDNET_H_
#define ZBERTA_WORDNET_H_

#include <array>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <tuple>
#include <utility>
#include <vector>

namespace zberta {

enum class PosCategory { kNoun = 0, kVerb = 1, kAdjective = 2, kAdverb = 3 };

inline constexpr std::array<PosCategory, 4> kAllPos = {
    PosCategory::kNoun, PosCategory::kVerb, PosCategory::kAdjective,
    PosCategory::kAdverb};

// File suffix used by the WordNet database: "noun", "verb", "adj", "adv".
std::string_view WordNetFileSuffix(PosCategory pos);

struct SuffixRule {
  std::string suffix;
  std::string replacement;
};

// The standard morphy detachment rules for one part of speech.
std::vector<SuffixRule> DefaultSuffixRules(PosCategory pos);

// Morphological knowledge for lemmatization: lemma index, exception lists and
// detachment rules per part of speech. A default-constructed lexicon is
// "not loaded" and every lookup throws ConfigError.
class LemmaLexicon {
 public:
  LemmaLexicon() = default;

  // Loads index.{noun,verb,adj,adv} and {noun,verb,adj,adv}.exc.
  static LemmaLexicon LoadWordNet(const std::filesystem::path &dir);

  // Builds a small lexicon in memory with the default rules.
  static LemmaLexicon FromEntries(
      std::span<const std::pair<PosCategory, std::string>> lemmas,
      std::span<const std::tuple<PosCategory, std::string, std::string>>
          exceptions);

  bool loaded() const { return loaded_; }

  bool Contains(std::string_view lemma, PosCategory pos) const;

  // Exception lookup first, then the first suffix rule whose result is in
  // the index; the step is repeated until it reaches a fixed point so the
  // result is idempotent. Unknown words come back lowercased.
  std::string Lemmatize(std::string_view word, PosCategory pos) const;

  // First non-trivial lemma trying noun, verb, adjective, adverb in order;
  // the lowercased word when no part of speech changes it.
  std::string LemmatizeAny(std::string_view word) const;

  // Sorted noun lemmas; the negative-sampling pool.
  std::vector<std::string> NounLemmas() const;

  const std::unordered_set<std::string> &index(PosCategory pos) const {
    return index_[static_cast<size_t>(pos)];
  }
  const std::unordered_map<std::string, std::string> &exceptions(
      PosCategory pos) const {
    return exceptions_[static_cast<size_t>(pos)];
  }

 private:
  // One exception-or-rule reduction; returns `word` itself when none applies.
  std::string Step(const std::string &word, PosCategory pos) const;
  void CheckLoaded() const;

  std::array<std::unordered_set<std::string>, 4> index_;
  std::array<std::unordered_map<std::string, std::string>, 4> exceptions_;
  std::array<std::vector<SuffixRule>, 4> rules_;
  bool loaded_ = false;
};

// First-sense glosses for nouns and verbs, read from index.{noun,verb} and
// data.{noun,verb}.
class GlossStore {
 public:
  GlossStore() = default;

  static GlossStore LoadWordNet(const std::filesystem::path &dir);

  // Registers the first-sense raw gloss for a word (test fixtures).
  void AddFirstSense(PosCategory pos, std::string word, std::string raw_gloss);

  bool loaded() const { return loaded_; }

  // Cleaned gloss of the first noun sense, else the first verb sense.
  // Throws LookupError when the word has neither.
  std::string LookupDefinition(std::string_view word) const;

  // Trims the raw gloss, drops '; "..."' example segments and parenthetical
  // asides, and collapses whitespace.
  static std::string CleanGloss(std::string_view raw);

 private:
  std::unordered_map<std::string, std::string> noun_;
  std::unordered_map<std::string, std::string> verb_;
  bool loaded_ = false;
};

}  // namespace zberta

#endif  // ZBERTA_WORDNET_H_
