// Copyright 2026 The clsasr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clsasr/cls.hpp"
#include "clsasr/lid.hpp"

namespace clsasr {

struct LexiconCandidate {
  std::string native;
  std::uint64_t count = 0;

  friend bool operator==(const LexiconCandidate&, const LexiconCandidate&) = default;
};

// Common-label key -> native spellings seen in a corpus, most frequent
// first (ties broken by the native string).
class Lexicon {
 public:
  explicit Lexicon(LanguageId lang) : lang_(lang) {}

  LanguageId language() const { return lang_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::map<std::string, std::vector<LexiconCandidate>>& entries() const {
    return entries_;
  }

  // Throws Error{Argument} for a zero count.
  void add(const std::string& key, const std::string& native, std::uint64_t count = 1);

  const std::vector<LexiconCandidate>* find(std::string_view key) const;

  // The unique key that differs from `labels` in exactly one label
  // (same length); nullopt when there is none or more than one.
  std::optional<std::string> fuzzy_key(const std::vector<ClsLabel>& labels) const;

  // key<TAB>native<TAB>count lines, ordered by key then count.
  void write(std::ostream& out) const;

  // Throws Error{Parse}. With a converter, every entry is checked to
  // convert back to its own key.
  static Lexicon read(std::istream& in, LanguageId lang,
                      const ClsConverter* validate_with = nullptr,
                      ConversionOptions opts = {});

 private:
  LanguageId lang_;
  std::map<std::string, std::vector<LexiconCandidate>> entries_;
  // label count -> keys, for fuzzy lookup
  std::map<std::size_t, std::vector<std::string>> by_length_;
};

struct LexiconBuild {
  Lexicon lexicon;
  std::size_t words = 0;    // tokens converted and counted
  std::size_t skipped = 0;  // tokens that failed conversion
};

// Reads native-script lines and counts every word under its common-label
// key. Digit tokens are ignored; failing words are tallied.
LexiconBuild build_lexicon(std::istream& corpus, LanguageId lang,
                           const ClsConverter& converter, ConversionOptions opts = {});

enum class NsFlag { Exact, LexiconHit, RuleFallbackAmbiguous };
std::string_view name(NsFlag flag);

struct NsWord {
  std::string native;
  NsFlag flag = NsFlag::Exact;
};

struct NsOptions {
  ConversionOptions forward;  // the options the labels were produced with
  bool fuzzy = false;
  bool strict = true;
  std::string boundary = "|";
  LidFormat lid;
  // Upper bound on unvoiced consonants explored when inverting schwa
  // deletion; longer words fall back to the canonical spelling.
  std::size_t max_enumerated = 16;
};

// Lexicon lookup (exact, then optionally fuzzy), then the rule inverse of
// the forward converter for `lang`. Throws Error{UnknownLabel} and
// Error{MalformedCls}.
NsWord cls_word_to_ns(const ClsWord& word, LanguageId lang,
                      const ClsConverter& converter, const Lexicon* lexicon = nullptr,
                      const NsOptions& opts = {});

class NsMode {
 public:
  static NsMode mono(LanguageId lang) { return NsMode(lang); }
  static NsMode unified() { return NsMode(std::nullopt); }

  bool is_unified() const { return !lang_; }
  LanguageId language() const { return *lang_; }

 private:
  explicit NsMode(std::optional<LanguageId> lang) : lang_(lang) {}
  std::optional<LanguageId> lang_;
};

using LexiconSet = std::map<LanguageId, Lexicon>;

struct NsResult {
  std::string text;
  std::vector<NsFlag> flags;        // one per converted word
  std::vector<WordError> errors;    // lenient mode only
  std::optional<LanguageId> language;
};

// Words are split on the boundary token and joined by single spaces. Unified
// mode reads the language from the leading LID token (Error{MissingLid} when
// absent).
NsResult cls_text_to_ns(std::string_view text, const NsMode& mode,
                        const LexiconSet& lexicons, const ClsConverter& converter,
                        const NsOptions& opts = {});

}  // namespace clsasr
