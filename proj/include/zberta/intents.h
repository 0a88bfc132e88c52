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

#ifndef ZBERTA_INTENTS_H_
#define ZBERTA_INTENTS_H_

#include <string>
#include <string_view>
#include <vector>

#include "zberta/conllu.h"
#include "zberta/wordnet.h"

namespace zberta {

enum class Provenance {
  kArcDobj,
  kArcAmod,
  kArcCompound,
  kDegreeVerbNoun,
  kDegreeAdjPron,
  kFallback,  // root + highest-degree token when nothing else matched
};

std::string_view ProvenanceName(Provenance p);

// A two-word intent before lemmatization, pointing back at its tokens.
struct WordPair {
  int first_index = 0;
  int second_index = 0;
  std::string first;
  std::string second;
  Provenance provenance = Provenance::kArcDobj;

  bool operator==(const WordPair &) const = default;
};

// A lemmatized action-object intent. `action` is empty only for the
// degenerate single-token candidate.
struct CandidateIntent {
  std::string action;
  std::string object;
  Provenance provenance = Provenance::kArcDobj;

  // "action object", used to fill hypothesis templates.
  std::string Phrase() const;
  // "action-object", used in prediction output.
  std::string Label() const;

  bool operator==(const CandidateIntent &) const = default;
};

// Deprel label sets searched for action-object arcs (all lowercase).
struct ArcRelations {
  std::vector<std::string> direct_object = {"dobj", "obj"};
  std::vector<std::string> adjectival_modifier = {"amod"};
  std::vector<std::string> compound = {"compound"};
};

// Arcs are visited governor by governor (token order), and each governor's
// dependents in token order. dobj/obj yields (head, dependent); amod and
// compound yield (dependent, head). Repeated surface pairs keep the first.
std::vector<WordPair> ExtractArcCandidates(
    const ParsedUtterance &u, const ArcRelations &relations = {});

// Number of arcs touching each token (root arc excluded), indexed by token
// index; element 0 is unused.
std::vector<int> TokenDegrees(const ParsedUtterance &u);

// Maximum-degree VERB/NOUN and ADJ/PRON pairs; ties go to the lower index.
std::vector<WordPair> ExtractDegreeCandidates(const ParsedUtterance &u);

class IntentGenerator {
 public:
  explicit IntentGenerator(const LemmaLexicon &lexicon,
                           ArcRelations relations = {})
      : lexicon_(lexicon), relations_(std::move(relations)) {}

  // Arc candidates, then degree candidates, lemmatized and deduplicated.
  // Never empty: falls back to (root, highest-degree token), or to a single
  // object-only candidate for one-token utterances.
  std::vector<CandidateIntent> Generate(const ParsedUtterance &u) const;

  CandidateIntent Lemmatize(const WordPair &pair,
                            const ParsedUtterance &u) const;

 private:
  const LemmaLexicon &lexicon_;
  ArcRelations relations_;
};

}  // namespace zberta

#endif  // ZBERTA_INTENTS_H_
