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

#include "zberta/intents.h"

#include <algorithm>
#include <optional>

#include "zberta/text.h"

namespace zberta {
namespace {

bool InSet(const std::vector<std::string> &set, std::string_view label) {
  return std::find(set.begin(), set.end(), label) != set.end();
}

bool SameSurfaces(const WordPair &a, const WordPair &b) {
  return ToLower(a.first) == ToLower(b.first) &&
         ToLower(a.second) == ToLower(b.second);
}

bool ContainsSurfaces(const std::vector<WordPair> &pairs, const WordPair &p) {
  return std::any_of(pairs.begin(), pairs.end(),
                     [&](const WordPair &q) { return SameSurfaces(p, q); });
}

WordPair MakePair(const Token &first, const Token &second, Provenance p) {
  return WordPair{first.index, second.index, first.surface, second.surface, p};
}

// Highest-degree token with the given UPOS; lowest index wins ties.
std::optional<int> BestByDegree(const ParsedUtterance &u,
                                const std::vector<int> &degree,
                                std::string_view upos) {
  std::optional<int> best;
  for (const Token &t : u.tokens) {
    if (t.upos != upos) continue;
    if (!best || degree[t.index] > degree[*best]) best = t.index;
  }
  return best;
}

std::optional<PosCategory> PosForUpos(std::string_view upos) {
  if (upos == "VERB" || upos == "AUX") return PosCategory::kVerb;
  if (upos == "NOUN" || upos == "PROPN") return PosCategory::kNoun;
  if (upos == "ADJ") return PosCategory::kAdjective;
  if (upos == "ADV") return PosCategory::kAdverb;
  return std::nullopt;
}

}  // namespace

std::string_view ProvenanceName(Provenance p) {
  switch (p) {
    case Provenance::kArcDobj: return "arc-dobj";
    case Provenance::kArcAmod: return "arc-amod";
    case Provenance::kArcCompound: return "arc-compound";
    case Provenance::kDegreeVerbNoun: return "degree-verb-noun";
    case Provenance::kDegreeAdjPron: return "degree-adj-pron";
    case Provenance::kFallback: return "fallback";
  }
  return "fallback";
}

std::string CandidateIntent::Phrase() const {
  return action.empty() ? object : action + " " + object;
}

std::string CandidateIntent::Label() const {
  return action.empty() ? object : action + "-" + object;
}

std::vector<WordPair> ExtractArcCandidates(const ParsedUtterance &u,
                                           const ArcRelations &relations) {
  std::vector<WordPair> out;
  auto add = [&](WordPair p) {
    if (!ContainsSurfaces(out, p)) out.push_back(std::move(p));
  };
  for (const Token &governor : u.tokens) {
    for (const Token &dep : u.tokens) {
      if (dep.head != governor.index) continue;
      if (InSet(relations.direct_object, dep.deprel)) {
        add(MakePair(governor, dep, Provenance::kArcDobj));
      } else if (InSet(relations.adjectival_modifier, dep.deprel)) {
        add(MakePair(dep, governor, Provenance::kArcAmod));
      } else if (InSet(relations.compound, dep.deprel)) {
        add(MakePair(dep, governor, Provenance::kArcCompound));
      }
    }
  }
  return out;
}

std::vector<int> TokenDegrees(const ParsedUtterance &u) {
  std::vector<int> degree(u.tokens.size() + 1, 0);
  for (const Token &t : u.tokens) {
    if (t.head == 0) continue;
    ++degree[t.index];
    ++degree[t.head];
  }
  return degree;
}

std::vector<WordPair> ExtractDegreeCandidates(const ParsedUtterance &u) {
  std::vector<int> degree = TokenDegrees(u);
  std::vector<WordPair> out;
  auto verb = BestByDegree(u, degree, "VERB");
  auto noun = BestByDegree(u, degree, "NOUN");
  if (verb && noun) {
    out.push_back(MakePair(u.token(*verb), u.token(*noun),
                           Provenance::kDegreeVerbNoun));
  }
  auto adj = BestByDegree(u, degree, "ADJ");
  auto pron = BestByDegree(u, degree, "PRON");
  if (adj && pron) {
    out.push_back(MakePair(u.token(*adj), u.token(*pron),
                           Provenance::kDegreeAdjPron));
  }
  return out;
}

CandidateIntent IntentGenerator::Lemmatize(const WordPair &pair,
                                           const ParsedUtterance &u) const {
  auto lemma = [&](int index, std::optional<PosCategory> pos) {
    const Token &t = u.token(index);
    if (t.surface.empty() || t.upos == "PRON" || !pos) return ToLower(t.surface);
    return lexicon_.Lemmatize(t.surface, *pos);
  };
  std::optional<PosCategory> first_pos;
  switch (pair.provenance) {
    case Provenance::kArcDobj:
    case Provenance::kDegreeVerbNoun:
      first_pos = PosCategory::kVerb;
      break;
    case Provenance::kArcAmod:
    case Provenance::kDegreeAdjPron:
      first_pos = PosCategory::kAdjective;
      break;
    case Provenance::kArcCompound:
      first_pos = PosCategory::kNoun;
      break;
    case Provenance::kFallback:
      first_pos = PosForUpos(u.token(pair.first_index).upos);
      break;
  }
  std::optional<PosCategory> second_pos =
      pair.provenance == Provenance::kFallback
          ? PosForUpos(u.token(pair.second_index).upos)
          : std::optional<PosCategory>(PosCategory::kNoun);
  return CandidateIntent{lemma(pair.first_index, first_pos),
                         lemma(pair.second_index, second_pos),
                         pair.provenance};
}

std::vector<CandidateIntent> IntentGenerator::Generate(
    const ParsedUtterance &u) const {
  std::vector<WordPair> pairs = ExtractArcCandidates(u, relations_);
  for (WordPair &p : ExtractDegreeCandidates(u)) {
    if (!ContainsSurfaces(pairs, p)) pairs.push_back(std::move(p));
  }

  std::vector<CandidateIntent> out;
  for (const WordPair &p : pairs) {
    CandidateIntent c = Lemmatize(p, u);
    bool seen = std::any_of(out.begin(), out.end(), [&](const auto &o) {
      return o.action == c.action && o.object == c.object;
    });
    if (!seen) out.push_back(std::move(c));
  }
  if (!out.empty()) return out;

  const Token &root = u.root();
  if (u.tokens.size() == 1) {
    const Token &only = u.tokens.front();
    std::optional<PosCategory> pos = PosForUpos(only.upos);
    std::string lemma = only.surface.empty() || only.upos == "PRON" || !pos
                            ? ToLower(only.surface)
                            : lexicon_.Lemmatize(only.surface, *pos);
    return {CandidateIntent{"", std::move(lemma), Provenance::kFallback}};
  }
  std::vector<int> degree = TokenDegrees(u);
  int best = 0;
  for (const Token &t : u.tokens) {
    if (t.index == root.index) continue;
    if (best == 0 || degree[t.index] > degree[best]) best = t.index;
  }
  WordPair fallback = MakePair(root, u.token(best), Provenance::kFallback);
  return {Lemmatize(fallback, u)};
}

}  // namespace zberta
