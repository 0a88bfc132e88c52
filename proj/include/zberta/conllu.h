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

#ifndef ZBERTA_CONLLU_H_
#define ZBERTA_CONLLU_H_

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace zberta {

// One word of a dependency-parsed sentence. `head` is 0 for the root and a
// 1-based token index otherwise. `deprel` is stored lowercase.
struct Token {
  int index = 0;
  std::string surface;
  std::string upos;
  int head = 0;
  std::string deprel;

  bool operator==(const Token &) const = default;
};

enum class ParseSource { kFile, kRemoteParser };

// A validated dependency tree: a single root, resolvable heads, no cycles.
// Construct through MakeParsedUtterance (or the readers), which validate.
struct ParsedUtterance {
  std::string text;
  std::vector<Token> tokens;
  ParseSource source = ParseSource::kFile;

  bool operator==(const ParsedUtterance &) const = default;

  // Returns the root token.
  const Token &root() const;
  const Token &token(int index) const { return tokens[index - 1]; }
};

// Checks the token and tree invariants, throwing ValidationError naming
// `context` when one is violated.
void ValidateTree(const ParsedUtterance &u, std::string_view context);

// Lowercases deprels, validates and returns the utterance.
ParsedUtterance MakeParsedUtterance(std::string text, std::vector<Token> tokens,
                                    ParseSource source);

// Reads zero or more CoNLL-U sentence blocks. Multiword ranges ("3-4") and
// empty nodes ("5.1") are skipped. Throws ParseError (with line number) on a
// malformed line and ValidationError on a broken tree.
std::vector<ParsedUtterance> ReadConllu(std::istream &in);
std::vector<ParsedUtterance> ReadConlluString(std::string_view text);
std::vector<ParsedUtterance> ReadConlluFile(const std::string &path);

// Writes one canonical block: "# text" comment, 10 tab-separated columns with
// '_' for the unused ones, and a terminating blank line. Tabs and newlines in
// surfaces and text are replaced by spaces.
void WriteConllu(const ParsedUtterance &u, std::ostream &out);
std::string WriteConlluString(const ParsedUtterance &u);

// Normalization applied by WriteConllu, exposed for round-trip checks.
ParsedUtterance NormalizeForConllu(ParsedUtterance u);

}  // namespace zberta

#endif  // ZBERTA_CONLLU_H_
