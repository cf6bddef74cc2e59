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

#include "clsasr/cls.hpp"

#include <unicode/uchar.h>

#include <cctype>
#include <cstdio>

#include "builtin_data.hpp"
#include "clsasr/utf8.hpp"

namespace clsasr {

namespace {

std::string hex_slot(ScriptId s, CommonIndex i) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%s slot 0x%02X", std::string(name(s)).c_str(),
                static_cast<unsigned>(i.value()));
  return buf;
}

bool valid_label(std::string_view label) {
  if (label.empty()) return false;
  for (char c : label)
    if (!std::isalnum(static_cast<unsigned char>(c))) return false;
  return true;
}

struct LineReader {
  std::string_view rest;
  std::size_t line_no = 0;

  // Next non-blank, non-comment line split on whitespace.
  std::optional<std::vector<std::string>> next() {
    while (!rest.empty()) {
      const auto nl = rest.find('\n');
      std::string_view line = rest.substr(0, nl);
      rest.remove_prefix(nl == std::string_view::npos ? rest.size() : nl + 1);
      ++line_no;
      line = utf8::trim(line);
      if (line.empty() || line.front() == '#') continue;
      return utf8::split_ws(line);
    }
    return std::nullopt;
  }
};

}  // namespace

std::string ClsWord::key() const { return utf8::join(labels, " "); }

std::optional<CommonIndex> independent_for_matra(CommonIndex matra) {
  const unsigned m = matra.value();
  if ((m >= 0x3E && m <= 0x43) || (m >= 0x45 && m <= 0x4C))
    return CommonIndex(m - 0x38);
  if (m == 0x44) return CommonIndex(0x60);
  if (m == 0x62) return CommonIndex(0x0C);
  if (m == 0x63) return CommonIndex(0x61);
  return std::nullopt;
}

std::optional<ClsInventory::Slot> ClsInventory::slot_for(CharCategory c) {
  switch (c) {
    case CharCategory::IndependentVowel: return kVowel;
    case CharCategory::VowelSign: return kMatra;
    case CharCategory::Consonant: return kConsonant;
    case CharCategory::Anusvara:
    case CharCategory::Visarga:
    case CharCategory::Candrabindu: return kSign;
    default: return std::nullopt;
  }
}

const ClsLabel* ClsInventory::lookup(ScriptId s, Slot slot, CommonIndex i) const {
  const auto it = overrides_.find({s, slot, i.value()});
  if (it != overrides_.end()) return &it->second;
  const auto& label = base_[slot][i.value()];
  return label ? &*label : nullptr;
}

ClsInventory ClsInventory::parse(std::string_view tsv, const CategoryTable& table) {
  ClsInventory inv;
  LineReader reader{tsv};
  while (auto fields = reader.next()) {
    auto fail = [&](const std::string& why) {
      return Error(ErrorCode::Parse,
                   "inventory line " + std::to_string(reader.line_no) + ": " + why);
    };
    if (fields->size() != 3 && fields->size() != 4)
      throw fail("expected 3 or 4 fields");
    unsigned index = 0;
    try {
      index = static_cast<unsigned>(std::stoul((*fields)[0], nullptr, 0));
    } catch (const std::exception&) {
      throw fail("bad index '" + (*fields)[0] + "'");
    }
    if (index > 0x7F) throw fail("index out of range");
    const auto cat = parse_category((*fields)[1]);
    if (!cat || !slot_for(*cat)) throw fail("unsupported category '" + (*fields)[1] + "'");
    const std::string& label = (*fields)[2];
    if (!valid_label(label)) throw fail("invalid label '" + label + "'");

    if (fields->size() == 4) {
      const auto script = parse_script((*fields)[3]);
      if (!script) throw fail("unknown script '" + (*fields)[3] + "'");
      const OverrideKey key{*script, *slot_for(*cat), static_cast<std::uint8_t>(index)};
      if (!inv.overrides_.emplace(key, label).second)
        throw fail("duplicate override");
    } else {
      auto& slot = inv.base_[*slot_for(*cat)][index];
      if (slot) throw fail("duplicate row");
      slot = label;
    }
  }

  if (!inv.base_[kVowel][0x05]) throw Error(ErrorCode::Parse, "inventory: no label for the inherent vowel (0x05)");
  inv.schwa_ = *inv.base_[kVowel][0x05];

  auto add_kind = [&](const ClsLabel& label, LabelKind kind) {
    const auto [it, inserted] = inv.kinds_.emplace(label, kind);
    if (!inserted && it->second != kind)
      throw Error(ErrorCode::Parse, "inventory: label '" + label + "' used for two kinds of sound");
  };

  for (ScriptId s : kAllScripts) {
    for (unsigned i = 0; i < 128; ++i) {
      const CommonIndex ci(i);
      const auto cat = table.category(s, ci);
      if (!cat) continue;
      const auto slot = slot_for(*cat);
      if (!slot) continue;
      const ClsLabel* label = inv.lookup(s, *slot, ci);
      if (!label) throw Error(ErrorCode::Parse, "inventory gap: " + hex_slot(s, ci));
      const ClsLabel copy = *label;
      if (*slot == kMatra) {
        const auto partner = independent_for_matra(ci);
        const ClsLabel* vowel = partner ? inv.lookup(s, kVowel, *partner) : nullptr;
        if (!vowel || *vowel != copy)
          throw Error(ErrorCode::Parse, "inventory: vowel sign label differs from its vowel at " + hex_slot(s, ci));
      }
      add_kind(copy, *slot == kConsonant ? LabelKind::Consonant
                     : *slot == kSign    ? LabelKind::Sign
                                         : LabelKind::Vowel);
      inv.reverse_[index_of(s)][*slot].emplace(copy, ci);
    }
  }

  for (const auto& [label, kind] : std::vector<std::pair<std::string, LabelKind>>(inv.kinds_.begin(), inv.kinds_.end())) {
    if (kind != LabelKind::Consonant) continue;
    const std::string doubled = label + label;
    if (inv.kinds_.count(doubled))
      throw Error(ErrorCode::Parse, "inventory: geminate '" + doubled + "' collides with a label");
    inv.geminates_.emplace(doubled, label);
  }
  for (const auto& [doubled, base] : inv.geminates_) inv.kinds_.emplace(doubled, LabelKind::Geminate);
  return inv;
}

const ClsInventory& ClsInventory::builtin() {
  static const ClsInventory inv = parse(data::kInventory);
  return inv;
}

std::optional<ClsLabel> ClsInventory::label(ScriptId s, CommonIndex i, CharCategory c) const {
  const auto slot = slot_for(c);
  if (!slot) return std::nullopt;
  const ClsLabel* found = lookup(s, *slot, i);
  if (!found) return std::nullopt;
  return *found;
}

LabelKind ClsInventory::kind(std::string_view label) const {
  const auto it = kinds_.find(std::string(label));
  return it == kinds_.end() ? LabelKind::Unknown : it->second;
}

std::optional<ClsLabel> ClsInventory::geminate_base(std::string_view label) const {
  const auto it = geminates_.find(std::string(label));
  if (it == geminates_.end()) return std::nullopt;
  return it->second;
}

std::optional<CommonIndex> ClsInventory::reverse(ScriptId s, Slot slot,
                                                 std::string_view label) const {
  const auto& m = reverse_[index_of(s)][slot];
  const auto it = m.find(std::string(label));
  if (it == m.end()) return std::nullopt;
  return it->second;
}

std::optional<CommonIndex> ClsInventory::consonant_index(ScriptId s, std::string_view label) const {
  return reverse(s, kConsonant, label);
}
std::optional<CommonIndex> ClsInventory::vowel_index(ScriptId s, std::string_view label) const {
  return reverse(s, kVowel, label);
}
std::optional<CommonIndex> ClsInventory::matra_index(ScriptId s, std::string_view label) const {
  return reverse(s, kMatra, label);
}
std::optional<CommonIndex> ClsInventory::sign_index(ScriptId s, std::string_view label) const {
  return reverse(s, kSign, label);
}

bool ClsInventory::has_override(ScriptId s, CommonIndex i) const {
  for (const auto& [k, label] : overrides_)
    if (std::get<0>(k) == s && std::get<2>(k) == i.value()) return true;
  return false;
}

std::vector<std::pair<ScriptId, CommonIndex>> ClsInventory::overrides() const {
  std::vector<std::pair<ScriptId, CommonIndex>> out;
  for (const auto& [k, label] : overrides_)
    out.emplace_back(std::get<0>(k), CommonIndex(std::get<2>(k)));
  return out;
}

SchwaRules SchwaRules::parse(std::string_view tsv) {
  SchwaRules rules;
  std::array<bool, 5> seen{};
  LineReader reader{tsv};
  while (auto fields = reader.next()) {
    auto fail = [&](const std::string& why) {
      return Error(ErrorCode::Parse,
                   "schwa rules line " + std::to_string(reader.line_no) + ": " + why);
    };
    if (fields->size() != 3) throw fail("expected 3 fields");
    const auto lang = parse_language((*fields)[0]);
    if (!lang) throw fail("unknown language '" + (*fields)[0] + "'");
    auto flag = [&](const std::string& v) {
      if (v == "1" || v == "yes" || v == "true") return true;
      if (v == "0" || v == "no" || v == "false") return false;
      throw fail("bad switch '" + v + "'");
    };
    if (seen[index_of(*lang)]) throw fail("language listed twice");
    seen[index_of(*lang)] = true;
    rules.rules_[index_of(*lang)] = {*lang, flag((*fields)[1]), flag((*fields)[2])};
  }
  for (LanguageId l : kAllLanguages)
    if (!seen[index_of(l)])
      throw Error(ErrorCode::Parse, "schwa rules: no record for " + std::string(name(l)));
  return rules;
}

const SchwaRules& SchwaRules::builtin() {
  static const SchwaRules rules = parse(data::kSchwaRules);
  return rules;
}

std::vector<ClsLabel> flatten(const SyllabifiedLabels& syllables) {
  std::vector<ClsLabel> out;
  for (const auto& syl : syllables) {
    out.insert(out.end(), syl.onset.begin(), syl.onset.end());
    if (syl.vowel) out.push_back(*syl.vowel);
    out.insert(out.end(), syl.coda.begin(), syl.coda.end());
  }
  return out;
}

SyllabifiedLabels schwa_delete(SyllabifiedLabels syl, const SchwaRuleSet& rules) {
  const std::size_t n = syl.size();
  if (n < 2) return syl;

  if (rules.delete_word_final) {
    auto& last = syl.back();
    if (last.inherent && last.vowel && last.onset.size() == 1) {
      last.vowel.reset();
      last.inherent = false;
    }
  }

  if (rules.delete_medial && n >= 3) {
    for (std::size_t k = n - 2; k >= 1; --k) {
      auto& cur = syl[k];
      const auto& prev = syl[k - 1];
      const auto& next = syl[k + 1];
      if (!cur.inherent || !cur.vowel || cur.onset.size() != 1 || !cur.coda.empty())
        continue;
      if (!prev.vowel) continue;
      if (next.onset.size() != 1 || !next.vowel) continue;
      if (cur.onset.size() + next.onset.size() >= 3) continue;
      cur.vowel.reset();
      cur.inherent = false;
    }
  }
  return syl;
}

SyllabifiedLabels geminate_correct(SyllabifiedLabels syl) {
  for (auto& s : syl) {
    std::vector<ClsLabel> merged;
    for (std::size_t i = 0; i < s.onset.size(); ++i) {
      if (i + 1 < s.onset.size() && s.onset[i] == s.onset[i + 1]) {
        merged.push_back(s.onset[i] + s.onset[i]);
        ++i;
      } else {
        merged.push_back(s.onset[i]);
      }
    }
    s.onset = std::move(merged);
  }
  return syl;
}

std::vector<ClsLabel> geminate_correct(std::vector<ClsLabel> labels,
                                       const ClsInventory& inventory) {
  std::vector<ClsLabel> out;
  out.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i + 1 < labels.size() && labels[i] == labels[i + 1] &&
        inventory.kind(labels[i]) == LabelKind::Consonant) {
      out.push_back(labels[i] + labels[i]);
      ++i;
    } else {
      out.push_back(std::move(labels[i]));
    }
  }
  return out;
}

std::vector<std::string> clean_words(std::string_view normalized_text) {
  std::vector<std::string> out;
  for (const auto& token : utf8::split_ws(normalized_text)) {
    std::string kept;
    for (char32_t cp : utf8::decode(token))
      if (!u_ispunct(static_cast<UChar32>(cp))) utf8::append(kept, cp);
    if (!kept.empty()) out.push_back(std::move(kept));
  }
  return out;
}

bool is_digit_token(std::string_view token) {
  const auto cps = utf8::decode(token);
  if (cps.empty()) return false;
  for (char32_t cp : cps)
    if (!u_isdigit(static_cast<UChar32>(cp))) return false;
  return true;
}

ClsConverter::ClsConverter()
    : categories_(CategoryTable::builtin()),
      inventory_(ClsInventory::builtin()),
      rules_(SchwaRules::builtin()) {}

ClsConverter::ClsConverter(CategoryTable categories, ClsInventory inventory,
                           SchwaRules rules)
    : categories_(std::move(categories)),
      inventory_(std::move(inventory)),
      rules_(std::move(rules)) {}

SyllabifiedLabels ClsConverter::emit(const ParsedWord& word) const {
  const ScriptId s = word.script;
  auto get = [&](CommonIndex i, CharCategory c) {
    auto label = inventory_.label(s, i, c);
    if (!label)
      throw Error(ErrorCode::InventoryGap, "no label for " + hex_slot(s, i));
    return *label;
  };

  SyllabifiedLabels out;
  out.reserve(word.aksharas.size());
  for (const Akshara& ak : word.aksharas) {
    LabeledSyllable syl;
    for (CommonIndex c : ak.onset) syl.onset.push_back(get(c, CharCategory::Consonant));
    switch (ak.nucleus.kind) {
      case VowelKind::Inherent:
        syl.vowel = inventory_.schwa();
        syl.inherent = true;
        break;
      case VowelKind::Matra:
        syl.vowel = get(*ak.nucleus.index, CharCategory::VowelSign);
        break;
      case VowelKind::Independent:
        syl.vowel = get(*ak.nucleus.index, CharCategory::IndependentVowel);
        break;
      case VowelKind::NoVowel: break;
    }
    for (CommonIndex t : ak.trailing) {
      const auto cat = categories_.category(s, t);
      syl.coda.push_back(get(t, cat.value_or(CharCategory::Anusvara)));
    }
    out.push_back(std::move(syl));
  }
  return out;
}

ClsWord ClsConverter::word_to_cls(std::string_view word, ScriptId script,
                                  const SchwaRuleSet& rules,
                                  ConversionOptions opts) const {
  const ParsedWord parsed = segment_aksharas(normalize(word), script, categories_);
  SyllabifiedLabels syl = emit(parsed);
  if (opts.schwa) syl = schwa_delete(std::move(syl), rules);
  if (opts.geminate) syl = geminate_correct(std::move(syl));
  ClsWord out;
  out.labels = flatten(syl);
  return out;
}

ClsWord ClsConverter::word_to_cls(std::string_view word, LanguageId lang,
                                  ConversionOptions opts) const {
  ClsWord out = word_to_cls(word, script_of(lang), rules_.at(lang), opts);
  out.source_lang = lang;
  return out;
}

TextConversion ClsConverter::text_to_cls(std::string_view text, LanguageId lang,
                                         const TextOptions& opts) const {
  const std::string normalized = normalize(text);
  const auto words = clean_words(normalized);

  TextConversion out;
  std::vector<std::string> rendered;
  rendered.reserve(words.size());
  for (std::size_t k = 0; k < words.size(); ++k) {
    if (is_digit_token(words[k])) {
      rendered.push_back(words[k]);
      continue;
    }
    try {
      rendered.push_back(word_to_cls(words[k], lang, opts.word).key());
    } catch (const Error& e) {
      const std::string message =
          "word " + std::to_string(k) + " '" + words[k] + "': " + e.what();
      if (opts.strict) throw Error(e.code(), message, k);
      out.errors.push_back({k, words[k], e.code(), message});
    }
  }
  out.text = utf8::join(rendered, " " + opts.boundary + " ");
  return out;
}

}  // namespace clsasr
