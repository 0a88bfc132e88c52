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

#include "zberta/wordnet.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "zberta/errors.h"
#include "zberta/text.h"

namespace zberta {
namespace {

constexpr size_t kMaxLemmaSteps = 64;

std::string ReadWholeFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open WordNet file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Calls fn(line) for every non-license line of a WordNet file. The license
// header lines start with two spaces.
template <typename Fn>
void ForEachDataLine(const std::string &contents, Fn fn) {
  size_t pos = 0;
  while (pos < contents.size()) {
    size_t end = contents.find('\n', pos);
    if (end == std::string::npos) end = contents.size();
    std::string_view line(contents.data() + pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && !line.starts_with("  ")) fn(line, pos);
    pos = end + 1;
  }
}

std::vector<std::string_view> SplitSpaces(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    size_t start = i;
    while (i < line.size() && line[i] != ' ') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

size_t PosSlot(PosCategory pos) { return static_cast<size_t>(pos); }

std::string TrimSpaces(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' ||
                        s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return std::string(s);
}

// index.* line: lemma pos synset_cnt p_cnt [ptr_symbol...] sense_cnt
// tagsense_cnt synset_offset [synset_offset...]
bool FirstSynsetOffset(const std::vector<std::string_view> &fields,
                       size_t *offset) {
  if (fields.size() < 4) return false;
  size_t synset_cnt = 0, p_cnt = 0;
  std::from_chars(fields[2].data(), fields[2].data() + fields[2].size(),
                  synset_cnt);
  std::from_chars(fields[3].data(), fields[3].data() + fields[3].size(), p_cnt);
  size_t first = 4 + p_cnt + 2;
  if (synset_cnt == 0 || fields.size() < first + synset_cnt) return false;
  auto [ptr, ec] = std::from_chars(
      fields[first].data(), fields[first].data() + fields[first].size(),
      *offset);
  return ec == std::errc();
}

void LoadFirstSenses(const std::filesystem::path &dir, PosCategory pos,
                     std::unordered_map<std::string, std::string> *out) {
  std::string suffix(WordNetFileSuffix(pos));
  std::string index = ReadWholeFile(dir / ("index." + suffix));
  std::string data = ReadWholeFile(dir / ("data." + suffix));
  // Synsets are keyed by the offset field that starts each data line rather
  // than by seeking, so copies with CRLF line ends load too.
  std::unordered_map<size_t, std::string_view> glosses;
  ForEachDataLine(data, [&](std::string_view line, size_t) {
    size_t offset = 0;
    auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), offset);
    size_t bar = line.find('|');
    if (ec != std::errc() || bar == std::string_view::npos) return;
    glosses.emplace(offset, line.substr(bar + 1));
  });
  ForEachDataLine(index, [&](std::string_view line, size_t) {
    std::vector<std::string_view> fields = SplitSpaces(line);
    size_t offset = 0;
    if (!FirstSynsetOffset(fields, &offset)) return;
    auto it = glosses.find(offset);
    if (it == glosses.end()) {
      throw ConfigError("index." + suffix + ": '" + std::string(fields[0]) +
                        "' points at a missing synset");
    }
    out->emplace(std::string(fields[0]), std::string(it->second));
  });
}

}  // namespace

std::string_view WordNetFileSuffix(PosCategory pos) {
  switch (pos) {
    case PosCategory::kNoun: return "noun";
    case PosCategory::kVerb: return "verb";
    case PosCategory::kAdjective: return "adj";
    case PosCategory::kAdverb: return "adv";
  }
  return "noun";
}

std::vector<SuffixRule> DefaultSuffixRules(PosCategory pos) {
  switch (pos) {
    case PosCategory::kNoun:
      return {{"s", ""},    {"ses", "s"}, {"xes", "x"},   {"zes", "z"},
              {"ches", "ch"}, {"shes", "sh"}, {"men", "man"}, {"ies", "y"}};
    case PosCategory::kVerb:
      return {{"s", ""},  {"ies", "y"}, {"es", "e"},  {"es", ""},
              {"ed", "e"}, {"ed", ""},  {"ing", "e"}, {"ing", ""}};
    case PosCategory::kAdjective:
      return {{"er", ""}, {"est", ""}, {"er", "e"}, {"est", "e"}};
    case PosCategory::kAdverb:
      return {};
  }
  return {};
}

LemmaLexicon LemmaLexicon::LoadWordNet(const std::filesystem::path &dir) {
  LemmaLexicon lex;
  for (PosCategory pos : kAllPos) {
    const size_t slot = PosSlot(pos);
    std::string suffix(WordNetFileSuffix(pos));
    std::string index = ReadWholeFile(dir / ("index." + suffix));
    ForEachDataLine(index, [&](std::string_view line, size_t) {
      size_t sp = line.find(' ');
      lex.index_[slot].insert(ToLower(line.substr(0, sp)));
    });
    std::string exc = ReadWholeFile(dir / (suffix + ".exc"));
    ForEachDataLine(exc, [&](std::string_view line, size_t) {
      std::vector<std::string_view> fields = SplitSpaces(line);
      if (fields.size() < 2) return;
      // Keep the first listed lemma for forms mapping to several.
      lex.exceptions_[slot].emplace(ToLower(fields[0]), ToLower(fields[1]));
    });
    lex.rules_[slot] = DefaultSuffixRules(pos);
  }
  lex.loaded_ = true;
  return lex;
}

LemmaLexicon LemmaLexicon::FromEntries(
    std::span<const std::pair<PosCategory, std::string>> lemmas,
    std::span<const std::tuple<PosCategory, std::string, std::string>>
        exceptions) {
  LemmaLexicon lex;
  for (const auto &[pos, lemma] : lemmas) {
    lex.index_[PosSlot(pos)].insert(ToLower(lemma));
  }
  for (const auto &[pos, form, lemma] : exceptions) {
    lex.exceptions_[PosSlot(pos)].emplace(ToLower(form), ToLower(lemma));
  }
  for (PosCategory pos : kAllPos) lex.rules_[PosSlot(pos)] = DefaultSuffixRules(pos);
  lex.loaded_ = true;
  return lex;
}

void LemmaLexicon::CheckLoaded() const {
  if (!loaded_) throw ConfigError("lemma lexicon is not loaded");
}

bool LemmaLexicon::Contains(std::string_view lemma, PosCategory pos) const {
  CheckLoaded();
  return index_[PosSlot(pos)].contains(std::string(lemma));
}

std::string LemmaLexicon::Step(const std::string &word, PosCategory pos) const {
  const size_t slot = PosSlot(pos);
  if (auto it = exceptions_[slot].find(word); it != exceptions_[slot].end()) {
    return it->second;
  }
  for (const SuffixRule &rule : rules_[slot]) {
    if (word.size() <= rule.suffix.size() || !word.ends_with(rule.suffix)) {
      continue;
    }
    std::string candidate =
        word.substr(0, word.size() - rule.suffix.size()) + rule.replacement;
    if (index_[slot].contains(candidate)) return candidate;
  }
  return word;
}

std::string LemmaLexicon::Lemmatize(std::string_view word,
                                    PosCategory pos) const {
  CheckLoaded();
  if (word.empty()) throw PreconditionError("cannot lemmatize an empty word");
  std::vector<std::string> path{ToLower(word)};
  for (size_t i = 0; i < kMaxLemmaSteps; ++i) {
    std::string next = Step(path.back(), pos);
    if (next == path.back()) return next;
    auto seen = std::find(path.begin(), path.end(), next);
    if (seen != path.end()) {
      // A cycle: every member maps to the same representative.
      return *std::min_element(seen, path.end());
    }
    path.push_back(std::move(next));
  }
  return path.back();
}

std::string LemmaLexicon::LemmatizeAny(std::string_view word) const {
  std::string lower = ToLower(word);
  for (PosCategory pos : kAllPos) {
    std::string lemma = Lemmatize(lower, pos);
    if (lemma != lower) return lemma;
  }
  return lower;
}

std::vector<std::string> LemmaLexicon::NounLemmas() const {
  CheckLoaded();
  const auto &nouns = index_[PosSlot(PosCategory::kNoun)];
  std::vector<std::string> out(nouns.begin(), nouns.end());
  std::sort(out.begin(), out.end());
  return out;
}

GlossStore GlossStore::LoadWordNet(const std::filesystem::path &dir) {
  GlossStore store;
  LoadFirstSenses(dir, PosCategory::kNoun, &store.noun_);
  LoadFirstSenses(dir, PosCategory::kVerb, &store.verb_);
  store.loaded_ = true;
  return store;
}

void GlossStore::AddFirstSense(PosCategory pos, std::string word,
                               std::string raw_gloss) {
  auto &table = pos == PosCategory::kVerb ? verb_ : noun_;
  table.insert_or_assign(ToLower(word), std::move(raw_gloss));
  loaded_ = true;
}

std::string GlossStore::LookupDefinition(std::string_view word) const {
  if (!loaded_) throw ConfigError("gloss store is not loaded");
  std::string key = ToLower(word);
  std::replace(key.begin(), key.end(), ' ', '_');
  if (auto it = noun_.find(key); it != noun_.end()) return CleanGloss(it->second);
  if (auto it = verb_.find(key); it != verb_.end()) return CleanGloss(it->second);
  throw LookupError("no WordNet noun or verb sense for '" + std::string(word) +
                    "'");
}

std::string GlossStore::CleanGloss(std::string_view raw) {
  std::string trimmed = TrimSpaces(raw);
  std::string_view body = trimmed;
  if (body.starts_with("\"")) {
    // Example-only gloss; nothing to strip.
    return trimmed;
  }
  if (size_t ex = body.find("; \""); ex != std::string_view::npos) {
    body = body.substr(0, ex);
  }
  std::string out;
  int depth = 0;
  for (char c : body) {
    if (c == '(') {
      ++depth;
    } else if (c == ')' && depth > 0) {
      --depth;
    } else if (depth == 0) {
      out += c;
    }
  }
  // Collapse whitespace runs left behind by removed asides.
  std::string collapsed;
  for (char c : out) {
    if (c == ' ' && (collapsed.empty() || collapsed.back() == ' ')) continue;
    collapsed += c;
  }
  while (!collapsed.empty() && (collapsed.back() == ' ' || collapsed.back() == ';')) {
    collapsed.pop_back();
  }
  for (size_t p; (p = collapsed.find(" ,")) != std::string::npos;) {
    collapsed.erase(p, 1);
  }
  return collapsed.empty() ? TrimSpaces(body) : collapsed;
}

}  // namespace zberta
