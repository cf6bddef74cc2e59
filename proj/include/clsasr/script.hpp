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
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clsasr/error.hpp"

namespace clsasr {

enum class ScriptId : std::uint8_t { Devanagari, Gujarati, Bengali, Odia };
enum class LanguageId : std::uint8_t { Hindi, Marathi, Gujarati, Bengali, Odia };

inline constexpr std::array<ScriptId, 4> kAllScripts = {
    ScriptId::Devanagari, ScriptId::Gujarati, ScriptId::Bengali,
    ScriptId::Odia};
inline constexpr std::array<LanguageId, 5> kAllLanguages = {
    LanguageId::Hindi, LanguageId::Marathi, LanguageId::Gujarati,
    LanguageId::Bengali, LanguageId::Odia};

constexpr std::size_t index_of(ScriptId s) { return static_cast<std::size_t>(s); }
constexpr std::size_t index_of(LanguageId l) { return static_cast<std::size_t>(l); }

constexpr char32_t block_base(ScriptId s) {
  switch (s) {
    case ScriptId::Devanagari: return 0x0900;
    case ScriptId::Bengali: return 0x0980;
    case ScriptId::Gujarati: return 0x0A80;
    case ScriptId::Odia: return 0x0B00;
  }
  return 0;
}

constexpr ScriptId script_of(LanguageId l) {
  switch (l) {
    case LanguageId::Hindi:
    case LanguageId::Marathi: return ScriptId::Devanagari;
    case LanguageId::Gujarati: return ScriptId::Gujarati;
    case LanguageId::Bengali: return ScriptId::Bengali;
    case LanguageId::Odia: return ScriptId::Odia;
  }
  return ScriptId::Devanagari;
}

std::vector<LanguageId> languages_of(ScriptId s);

// "Devanagari", "Gujarati", ...
std::string_view name(ScriptId s);
// Lower-case language name as used in LID tokens and manifests: "hindi".
std::string_view name(LanguageId l);
// Capitalised form for reports: "Hindi".
std::string display_name(LanguageId l);

// Case-insensitive.
std::optional<LanguageId> parse_language(std::string_view text);
std::optional<ScriptId> parse_script(std::string_view text);

// Offset of a code point inside its 128-slot script block.
class CommonIndex {
 public:
  constexpr explicit CommonIndex(unsigned value) : value_(check(value)) {}
  constexpr std::uint8_t value() const { return value_; }
  friend constexpr bool operator==(CommonIndex, CommonIndex) = default;
  friend constexpr auto operator<=>(CommonIndex, CommonIndex) = default;

 private:
  static constexpr std::uint8_t check(unsigned v) {
    if (v > 0x7F) throw Error(ErrorCode::Argument, "common index out of range");
    return static_cast<std::uint8_t>(v);
  }
  std::uint8_t value_;
};

enum class CharCategory : std::uint8_t {
  IndependentVowel,
  Consonant,
  VowelSign,
  Virama,
  Nukta,
  Anusvara,
  Visarga,
  Candrabindu,
  Digit,
  Punctuation,
  ZeroWidth,
  Other,
};

std::string_view name(CharCategory c);
std::optional<CharCategory> parse_category(std::string_view text);

inline constexpr unsigned kVirama = 0x4D;
inline constexpr unsigned kNukta = 0x3C;
inline constexpr char32_t kDanda = 0x0964;
inline constexpr char32_t kDoubleDanda = 0x0965;
inline constexpr char32_t kZwnj = 0x200C;
inline constexpr char32_t kZwj = 0x200D;

// Per-script category of every slot, loaded from the categories data file.
// Unassigned slots have no category.
class CategoryTable {
 public:
  // Throws Error{Parse} on malformed records.
  static CategoryTable parse(std::string_view tsv);
  // Table compiled into the library from data/categories.tsv.
  static const CategoryTable& builtin();

  bool assigned(ScriptId s, CommonIndex i) const {
    return table_[index_of(s)][i.value()].has_value();
  }
  std::optional<CharCategory> category(ScriptId s, CommonIndex i) const {
    return table_[index_of(s)][i.value()];
  }

 private:
  std::array<std::array<std::optional<CharCategory>, 128>, 4> table_{};
};

// NFC with ZWJ/ZWNJ removed. Consonant+nukta pairs are composed whenever the
// block has a precomposed letter, including the letters NFC leaves
// decomposed (U+0958..U+095F, U+09DC/U+09DD/U+09DF, U+0B5C/U+0B5D).
// Throws Error{Decode} on invalid UTF-8.
std::string normalize(std::string_view text);

struct DetectionResult {
  enum class Kind { Single, Mixed, None };
  Kind kind = Kind::None;
  ScriptId script = ScriptId::Devanagari;  // meaningful for Single only
  std::array<std::size_t, 4> counts{};     // indexed by index_of(ScriptId)

  std::size_t count(ScriptId s) const { return counts[index_of(s)]; }
};

// Danda and double danda are shared punctuation and do not vote.
DetectionResult detect_script(std::string_view text);

struct IndicPosition {
  ScriptId script;
  CommonIndex index;
  friend bool operator==(const IndicPosition&, const IndicPosition&) = default;
};

std::optional<IndicPosition> to_common_index(char32_t cp);

// nullopt when the slot is unassigned in that script's block.
std::optional<char32_t> from_common_index(
    ScriptId s, CommonIndex i,
    const CategoryTable& table = CategoryTable::builtin());

// Shifts every code point of `from` into the `to` block; everything else
// passes through. Throws Error{UnmappableChar} (position = code point
// offset) when the target slot is unassigned, Error{MixedScript} when the
// text carries letters of a third script.
std::string transliterate_offset(
    std::string_view text, ScriptId from, ScriptId to,
    const CategoryTable& table = CategoryTable::builtin());

}  // namespace clsasr
