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

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "clsasr/akshara.hpp"
#include "clsasr/script.hpp"

namespace clsasr {

// A common label such as "aa" or "kh". Geminates are the doubled consonant
// label ("kk").
using ClsLabel = std::string;

struct ClsWord {
  std::vector<ClsLabel> labels;
  std::optional<LanguageId> source_lang;

  // Labels joined by single spaces; the lexicon key.
  std::string key() const;

  friend bool operator==(const ClsWord& a, const ClsWord& b) {
    return a.labels == b.labels;
  }
};

enum class LabelKind { Vowel, Consonant, Geminate, Sign, Unknown };

// Partner independent vowel of a vowel sign, e.g. 0x3E (aa matra) -> 0x06.
std::optional<CommonIndex> independent_for_matra(CommonIndex matra);

// The label inventory. Built from the inventory data file:
//
//   index<TAB>category<TAB>label[<TAB>script]
//
// A four-column row overrides the label of that slot for one script.
class ClsInventory {
 public:
  // Validates totality over every assigned vowel, vowel-sign, consonant and
  // sign slot of all four blocks, matra/vowel label agreement, and that no
  // doubled consonant collides with another label. Throws Error{Parse}.
  static ClsInventory parse(std::string_view tsv,
                            const CategoryTable& table = CategoryTable::builtin());
  static const ClsInventory& builtin();

  const ClsLabel& schwa() const { return schwa_; }

  // Label for a slot of the given category; nullopt is an inventory gap.
  std::optional<ClsLabel> label(ScriptId s, CommonIndex i, CharCategory c) const;

  LabelKind kind(std::string_view label) const;
  // "kk" -> "k".
  std::optional<ClsLabel> geminate_base(std::string_view label) const;

  // Reverse lookups restricted to slots assigned in `s`.
  std::optional<CommonIndex> consonant_index(ScriptId s, std::string_view label) const;
  std::optional<CommonIndex> vowel_index(ScriptId s, std::string_view label) const;
  std::optional<CommonIndex> matra_index(ScriptId s, std::string_view label) const;
  std::optional<CommonIndex> sign_index(ScriptId s, std::string_view label) const;

  bool has_override(ScriptId s, CommonIndex i) const;
  std::vector<std::pair<ScriptId, CommonIndex>> overrides() const;

 private:
  enum Slot { kVowel, kMatra, kConsonant, kSign, kSlotCount };

  static std::optional<Slot> slot_for(CharCategory c);
  const ClsLabel* lookup(ScriptId s, Slot slot, CommonIndex i) const;
  std::optional<CommonIndex> reverse(ScriptId s, Slot slot, std::string_view label) const;

  std::array<std::array<std::optional<ClsLabel>, 128>, kSlotCount> base_{};
  using OverrideKey = std::tuple<ScriptId, Slot, std::uint8_t>;
  std::map<OverrideKey, ClsLabel> overrides_;
  // [script][slot]: label -> lowest index carrying it.
  std::array<std::array<std::unordered_map<std::string, CommonIndex>, kSlotCount>, 4>
      reverse_{};
  std::unordered_map<std::string, LabelKind> kinds_;
  std::unordered_map<std::string, ClsLabel> geminates_;
  ClsLabel schwa_;
};

struct SchwaRuleSet {
  LanguageId lang = LanguageId::Hindi;
  bool delete_word_final = false;
  bool delete_medial = false;

  bool deletes_anything() const { return delete_word_final || delete_medial; }
};

// One record per language, loaded from the rule-set data file:
//
//   language<TAB>delete_word_final<TAB>delete_medial
class SchwaRules {
 public:
  // Throws Error{Parse}, including when a language is missing or repeated.
  static SchwaRules parse(std::string_view tsv);
  static const SchwaRules& builtin();

  const SchwaRuleSet& at(LanguageId l) const { return rules_[index_of(l)]; }

 private:
  std::array<SchwaRuleSet, 5> rules_{};
};

// Labels of one akshara, kept apart so the schwa rules can see syllable
// boundaries.
struct LabeledSyllable {
  std::vector<ClsLabel> onset;
  std::optional<ClsLabel> vowel;
  bool inherent = false;  // vowel is the inherent schwa
  std::vector<ClsLabel> coda;

  friend bool operator==(const LabeledSyllable&, const LabeledSyllable&) = default;
};
using SyllabifiedLabels = std::vector<LabeledSyllable>;

std::vector<ClsLabel> flatten(const SyllabifiedLabels& syllables);

// Word-final rule: drop the inherent vowel of the last akshara when the word
// has at least two aksharas and that akshara has a single onset consonant.
// Medial rule: scanning right to left, drop an inherent vowel in V C _ C V
// context (previous akshara still voiced, next akshara a single consonant
// plus vowel), never forming a run of three or more consonants. Only
// inherent vowels are touched.
SyllabifiedLabels schwa_delete(SyllabifiedLabels syllables, const SchwaRuleSet& rules);

// Merges identical adjacent consonants inside each onset cluster (the
// C-virama-C spelling) into one doubled label.
SyllabifiedLabels geminate_correct(SyllabifiedLabels syllables);

// Flat-list form: merges any two identical adjacent consonant labels.
std::vector<ClsLabel> geminate_correct(std::vector<ClsLabel> labels,
                                       const ClsInventory& inventory = ClsInventory::builtin());

struct ConversionOptions {
  bool schwa = true;
  bool geminate = true;
};

struct TextOptions {
  ConversionOptions word;
  bool strict = false;
  std::string boundary = "|";
};

struct WordError {
  std::size_t word_position = 0;  // index among the cleaned words
  std::string word;
  ErrorCode code = ErrorCode::MalformedWord;
  std::string message;
};

struct TextConversion {
  std::string text;
  std::vector<WordError> errors;
};

// Splits normalized text on whitespace and removes punctuation code points;
// tokens left empty are dropped.
std::vector<std::string> clean_words(std::string_view normalized_text);

// True when every code point is a decimal digit (ASCII or Indic).
bool is_digit_token(std::string_view token);

// Native script -> common labels. Immutable; safe to share across threads.
class ClsConverter {
 public:
  ClsConverter();
  ClsConverter(CategoryTable categories, ClsInventory inventory, SchwaRules rules);

  const CategoryTable& categories() const { return categories_; }
  const ClsInventory& inventory() const { return inventory_; }
  const SchwaRules& rules() const { return rules_; }

  // Throws Error{InventoryGap} for a slot without a label.
  SyllabifiedLabels emit(const ParsedWord& word) const;

  // The word is normalized first.
  ClsWord word_to_cls(std::string_view word, LanguageId lang,
                      ConversionOptions opts = {}) const;
  // Same pipeline with an explicit script and rule set.
  ClsWord word_to_cls(std::string_view word, ScriptId script,
                      const SchwaRuleSet& rules, ConversionOptions opts = {}) const;

  // Normalizes, strips punctuation, converts word by word. Labels are joined
  // by a space and words by " <boundary> ". Digit tokens pass through. In
  // strict mode the first failing word throws (position = word index);
  // otherwise failing words are skipped and reported.
  TextConversion text_to_cls(std::string_view text, LanguageId lang,
                             const TextOptions& opts = {}) const;

 private:
  CategoryTable categories_;
  ClsInventory inventory_;
  SchwaRules rules_;
};

}  // namespace clsasr
