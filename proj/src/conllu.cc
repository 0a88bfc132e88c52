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

#include "zberta/conllu.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "zberta/errors.h"
#include "zberta/text.h"

namespace zberta {
namespace {

constexpr size_t kColumns = 10;
constexpr std::string_view kSourceRemote = "remote-parser";

bool ParseInt(std::string_view s, int *out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> cols;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      cols.push_back(line.substr(start));
      break;
    }
    cols.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return cols;
}

bool MissingField(std::string_view s) { return s.empty() || s == "_"; }

// Parses "# key = value" comments. Returns false for other comments.
bool CommentValue(std::string_view line, std::string_view key,
                  std::string *value) {
  line.remove_prefix(1);
  while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
  if (!line.starts_with(key)) return false;
  line.remove_prefix(key.size());
  while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
  if (line.empty() || line.front() != '=') return false;
  line.remove_prefix(1);
  if (!line.empty() && line.front() == ' ') line.remove_prefix(1);
  *value = std::string(line);
  return true;
}

std::string SpaceOutControls(std::string s) {
  for (char &c : s) {
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

struct PendingBlock {
  size_t first_line = 0;
  bool has_text = false;
  std::string text;
  ParseSource source = ParseSource::kFile;
  std::vector<Token> tokens;

  bool empty() const { return tokens.empty() && !has_text; }
};

}  // namespace

const Token &ParsedUtterance::root() const {
  for (const Token &t : tokens) {
    if (t.head == 0) return t;
  }
  throw ValidationError("utterance has no root");
}

void ValidateTree(const ParsedUtterance &u, std::string_view context) {
  auto fail = [&](const std::string &why) {
    throw ValidationError(std::string(context) + ": " + why);
  };
  const int n = static_cast<int>(u.tokens.size());
  if (n == 0) fail("no tokens");
  int roots = 0;
  for (int i = 0; i < n; ++i) {
    const Token &t = u.tokens[i];
    const std::string where = "token " + std::to_string(i + 1);
    if (t.index != i + 1) {
      fail(where + " has index " + std::to_string(t.index) +
           " (indices must be consecutive from 1)");
    }
    if (t.head < 0 || t.head > n) {
      fail(where + " has unresolvable head " + std::to_string(t.head));
    }
    if (t.head == t.index) fail(where + " is its own head");
    if (MissingField(t.upos)) fail(where + " has an empty UPOS");
    if (MissingField(t.deprel)) fail(where + " has an empty DEPREL");
    if (t.head == 0) ++roots;
  }
  if (roots != 1) {
    fail("expected exactly one root, found " + std::to_string(roots));
  }
  // Every chain of heads must reach the root within n steps.
  for (int i = 0; i < n; ++i) {
    int cur = i + 1;
    int steps = 0;
    while (cur != 0 && steps <= n) {
      cur = u.tokens[cur - 1].head;
      ++steps;
    }
    if (cur != 0) fail("dependency cycle through token " + std::to_string(i + 1));
  }
}

ParsedUtterance MakeParsedUtterance(std::string text, std::vector<Token> tokens,
                                    ParseSource source) {
  ParsedUtterance u;
  u.text = std::move(text);
  u.tokens = std::move(tokens);
  u.source = source;
  for (Token &t : u.tokens) t.deprel = ToLower(t.deprel);
  ValidateTree(u, "utterance \"" + u.text + "\"");
  return u;
}

std::vector<ParsedUtterance> ReadConllu(std::istream &in) {
  std::vector<ParsedUtterance> out;
  PendingBlock block;
  size_t line_no = 0;
  std::string line;

  auto flush = [&] {
    if (block.empty()) return;
    std::string context = "sentence " + std::to_string(out.size() + 1) +
                          " (line " + std::to_string(block.first_line) + ")";
    if (block.tokens.empty()) {
      throw ValidationError(context + ": no tokens");
    }
    ParsedUtterance u;
    if (block.has_text) {
      u.text = std::move(block.text);
    } else {
      std::string joined;
      for (const Token &t : block.tokens) {
        if (!joined.empty()) joined += ' ';
        joined += t.surface;
      }
      u.text = std::move(joined);
    }
    u.tokens = std::move(block.tokens);
    u.source = block.source;
    ValidateTree(u, context);
    out.push_back(std::move(u));
    block = PendingBlock();
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    if (block.empty()) block.first_line = line_no;
    if (line.front() == '#') {
      std::string value;
      if (CommentValue(line, "text", &value)) {
        block.has_text = true;
        block.text = std::move(value);
      } else if (CommentValue(line, "source", &value)) {
        block.source = value == kSourceRemote ? ParseSource::kRemoteParser
                                              : ParseSource::kFile;
      }
      continue;
    }
    std::vector<std::string_view> cols = SplitTabs(line);
    if (cols.size() != kColumns) {
      throw ParseError("expected 10 tab-separated columns, found " +
                           std::to_string(cols.size()),
                       line_no);
    }
    std::string_view id = cols[0];
    if (id.find('-') != std::string_view::npos ||
        id.find('.') != std::string_view::npos) {
      continue;
    }
    Token t;
    if (!ParseInt(id, &t.index)) {
      throw ParseError("non-integer ID '" + std::string(id) + "'", line_no);
    }
    if (!ParseInt(cols[6], &t.head)) {
      throw ParseError("non-integer HEAD '" + std::string(cols[6]) + "'",
                       line_no);
    }
    t.surface = std::string(cols[1]);
    t.upos = std::string(cols[3]);
    t.deprel = ToLower(cols[7]);
    block.tokens.push_back(std::move(t));
  }
  flush();
  return out;
}

std::vector<ParsedUtterance> ReadConlluString(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ReadConllu(in);
}

std::vector<ParsedUtterance> ReadConlluFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open CoNLL-U file: " + path);
  return ReadConllu(in);
}

ParsedUtterance NormalizeForConllu(ParsedUtterance u) {
  u.text = SpaceOutControls(std::move(u.text));
  for (Token &t : u.tokens) {
    t.surface = SpaceOutControls(std::move(t.surface));
    t.deprel = ToLower(t.deprel);
  }
  return u;
}

void WriteConllu(const ParsedUtterance &u, std::ostream &out) {
  out << "# text = " << SpaceOutControls(u.text) << '\n';
  if (u.source == ParseSource::kRemoteParser) {
    out << "# source = " << kSourceRemote << '\n';
  }
  for (const Token &t : u.tokens) {
    out << t.index << '\t' << SpaceOutControls(t.surface) << "\t_\t" << t.upos
        << "\t_\t_\t" << t.head << '\t' << ToLower(t.deprel) << "\t_\t_\n";
  }
  out << '\n';
}

std::string WriteConlluString(const ParsedUtterance &u) {
  std::ostringstream out;
  WriteConllu(u, out);
  return out.str();
}

}  // namespace zberta
