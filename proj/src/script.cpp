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

#include "clsasr/script.hpp"

#include <unicode/normalizer2.h>
#include <unicode/unistr.h>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <utility>

#include "builtin_data.hpp"
#include "clsasr/utf8.hpp"

namespace clsasr {

namespace {

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

// Nukta letters that NFC keeps decomposed (composition exclusions).
const std::map<std::pair<char32_t, char32_t>, char32_t>& nukta_compositions() {
  static const std::map<std::pair<char32_t, char32_t>, char32_t> table = {
      {{0x0915, 0x093C}, 0x0958}, {{0x0916, 0x093C}, 0x0959},
      {{0x0917, 0x093C}, 0x095A}, {{0x091C, 0x093C}, 0x095B},
      {{0x0921, 0x093C}, 0x095C}, {{0x0922, 0x093C}, 0x095D},
      {{0x092B, 0x093C}, 0x095E}, {{0x092F, 0x093C}, 0x095F},
      {{0x09A1, 0x09BC}, 0x09DC}, {{0x09A2, 0x09BC}, 0x09DD},
      {{0x09AF, 0x09BC}, 0x09DF}, {{0x0B21, 0x0B3C}, 0x0B5C},
      {{0x0B22, 0x0B3C}, 0x0B5D},
  };
  return table;
}

bool is_shared_punctuation(char32_t cp) {
  return cp == kDanda || cp == kDoubleDanda;
}

}  // namespace

std::vector<LanguageId> languages_of(ScriptId s) {
  std::vector<LanguageId> out;
  for (LanguageId l : kAllLanguages)
    if (script_of(l) == s) out.push_back(l);
  return out;
}

std::string_view name(ScriptId s) {
  switch (s) {
    case ScriptId::Devanagari: return "Devanagari";
    case ScriptId::Gujarati: return "Gujarati";
    case ScriptId::Bengali: return "Bengali";
    case ScriptId::Odia: return "Odia";
  }
  return "?";
}

std::string_view name(LanguageId l) {
  switch (l) {
    case LanguageId::Hindi: return "hindi";
    case LanguageId::Marathi: return "marathi";
    case LanguageId::Gujarati: return "gujarati";
    case LanguageId::Bengali: return "bengali";
    case LanguageId::Odia: return "odia";
  }
  return "?";
}

std::string display_name(LanguageId l) {
  std::string out(name(l));
  out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  return out;
}

std::optional<LanguageId> parse_language(std::string_view text) {
  for (LanguageId l : kAllLanguages)
    if (iequals(text, name(l))) return l;
  return std::nullopt;
}

std::optional<ScriptId> parse_script(std::string_view text) {
  for (ScriptId s : kAllScripts)
    if (iequals(text, name(s))) return s;
  if (iequals(text, "oriya")) return ScriptId::Odia;
  return std::nullopt;
}

std::string_view name(CharCategory c) {
  switch (c) {
    case CharCategory::IndependentVowel: return "IndependentVowel";
    case CharCategory::Consonant: return "Consonant";
    case CharCategory::VowelSign: return "VowelSign";
    case CharCategory::Virama: return "Virama";
    case CharCategory::Nukta: return "Nukta";
    case CharCategory::Anusvara: return "Anusvara";
    case CharCategory::Visarga: return "Visarga";
    case CharCategory::Candrabindu: return "Candrabindu";
    case CharCategory::Digit: return "Digit";
    case CharCategory::Punctuation: return "Punctuation";
    case CharCategory::ZeroWidth: return "ZeroWidth";
    case CharCategory::Other: return "Other";
  }
  return "?";
}

std::optional<CharCategory> parse_category(std::string_view text) {
  for (int i = 0; i <= static_cast<int>(CharCategory::Other); ++i) {
    const auto c = static_cast<CharCategory>(i);
    if (text == name(c)) return c;
  }
  return std::nullopt;
}

CategoryTable CategoryTable::parse(std::string_view tsv) {
  std::array<std::optional<CharCategory>, 128> shared{};
  std::array<std::array<std::optional<CharCategory>, 128>, 4> overrides{};
  std::array<std::array<bool, 128>, 4> unassigned{};
  std::array<std::array<bool, 128>, 4> overridden{};

  std::size_t line_no = 0;
  while (!tsv.empty()) {
    const auto nl = tsv.find('\n');
    std::string_view line = tsv.substr(0, nl);
    tsv.remove_prefix(nl == std::string_view::npos ? tsv.size() : nl + 1);
    ++line_no;
    line = utf8::trim(line);
    if (line.empty() || line.front() == '#') continue;

    const auto fields = utf8::split_ws(line);
    auto fail = [&](const std::string& why) {
      return Error(ErrorCode::Parse, "categories line " +
                                         std::to_string(line_no) + ": " + why);
    };
    if (fields.size() != 3) throw fail("expected 3 fields");
    unsigned index = 0;
    try {
      index = static_cast<unsigned>(std::stoul(fields[1], nullptr, 0));
    } catch (const std::exception&) {
      throw fail("bad index '" + fields[1] + "'");
    }
    if (index > 0x7F) throw fail("index out of range");

    const bool is_unassigned = fields[2] == "Unassigned";
    std::optional<CharCategory> cat = parse_category(fields[2]);
    if (!cat && !is_unassigned) throw fail("unknown category '" + fields[2] + "'");

    if (fields[0] == "*") {
      if (is_unassigned) throw fail("shared rows cannot be Unassigned");
      shared[index] = cat;
      continue;
    }
    const auto script = parse_script(fields[0]);
    if (!script) throw fail("unknown script '" + fields[0] + "'");
    if (is_unassigned) {
      unassigned[index_of(*script)][index] = true;
    } else {
      overrides[index_of(*script)][index] = cat;
      overridden[index_of(*script)][index] = true;
    }
  }

  CategoryTable table;
  for (std::size_t s = 0; s < 4; ++s) {
    for (std::size_t i = 0; i < 128; ++i) {
      if (unassigned[s][i]) continue;
      table.table_[s][i] = overridden[s][i] ? overrides[s][i] : shared[i];
      if (!table.table_[s][i]) {
        throw Error(ErrorCode::Parse,
                    "categories: no category for " +
                        std::string(name(kAllScripts[s])) + " slot " +
                        std::to_string(i));
      }
    }
  }
  return table;
}

const CategoryTable& CategoryTable::builtin() {
  static const CategoryTable table = parse(data::kCategories);
  return table;
}

std::string normalize(std::string_view text) {
  const std::u32string decoded = utf8::decode(text);

  icu::UnicodeString ustr;
  for (char32_t cp : decoded) {
    if (cp == kZwj || cp == kZwnj) continue;
    ustr.append(static_cast<UChar32>(cp));
  }

  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) {
    throw std::runtime_error(std::string("ICU NFC unavailable: ") +
                             u_errorName(status));
  }
  const icu::UnicodeString composed = nfc->normalize(ustr, status);
  if (U_FAILURE(status)) {
    throw std::runtime_error(std::string("ICU normalize failed: ") +
                             u_errorName(status));
  }

  std::u32string cps;
  cps.reserve(static_cast<std::size_t>(composed.length()));
  for (int32_t i = 0; i < composed.length();) {
    const UChar32 c = composed.char32At(i);
    cps.push_back(static_cast<char32_t>(c));
    i += U16_LENGTH(c);
  }

  const auto& nukta = nukta_compositions();
  std::u32string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) {
    if (!out.empty()) {
      const auto it = nukta.find({out.back(), cp});
      if (it != nukta.end()) {
        out.back() = it->second;
        continue;
      }
    }
    out.push_back(cp);
  }
  return utf8::encode(out);
}

std::optional<IndicPosition> to_common_index(char32_t cp) {
  for (ScriptId s : kAllScripts) {
    const char32_t base = block_base(s);
    if (cp >= base && cp < base + 0x80)
      return IndicPosition{s, CommonIndex(static_cast<unsigned>(cp - base))};
  }
  return std::nullopt;
}

std::optional<char32_t> from_common_index(ScriptId s, CommonIndex i,
                                          const CategoryTable& table) {
  if (!table.assigned(s, i)) return std::nullopt;
  return block_base(s) + i.value();
}

DetectionResult detect_script(std::string_view text) {
  DetectionResult result;
  for (char32_t cp : utf8::decode(text)) {
    if (is_shared_punctuation(cp)) continue;
    if (const auto pos = to_common_index(cp)) ++result.counts[index_of(pos->script)];
  }
  std::size_t present = 0;
  for (ScriptId s : kAllScripts) {
    if (result.count(s) > 0) {
      ++present;
      result.script = s;
    }
  }
  if (present == 0) result.kind = DetectionResult::Kind::None;
  else if (present == 1) result.kind = DetectionResult::Kind::Single;
  else result.kind = DetectionResult::Kind::Mixed;
  return result;
}

std::string transliterate_offset(std::string_view text, ScriptId from,
                                 ScriptId to, const CategoryTable& table) {
  const std::u32string cps = utf8::decode(text);
  std::u32string out;
  out.reserve(cps.size());
  for (std::size_t i = 0; i < cps.size(); ++i) {
    const char32_t cp = cps[i];
    const auto pos = to_common_index(cp);
    if (!pos || is_shared_punctuation(cp)) {
      out.push_back(cp);
      continue;
    }
    if (pos->script != from) {
      throw Error(ErrorCode::MixedScript,
                  "code point at " + std::to_string(i) + " is " +
                      std::string(name(pos->script)) + ", expected " +
                      std::string(name(from)),
                  i);
    }
    const auto mapped = from_common_index(to, pos->index, table);
    if (!mapped) {
      char buf[16];
      std::snprintf(buf, sizeof buf, "U+%04X", static_cast<unsigned>(cp));
      throw Error(ErrorCode::UnmappableChar,
                  std::string(buf) + " at " + std::to_string(i) +
                      " has no counterpart in " + std::string(name(to)),
                  i);
    }
    out.push_back(*mapped);
  }
  return utf8::encode(out);
}

}  // namespace clsasr
