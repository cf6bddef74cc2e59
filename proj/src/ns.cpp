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

#include "clsasr/ns.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>

#include "clsasr/utf8.hpp"

namespace clsasr {

namespace {

std::vector<std::string> split_tabs(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    out.emplace_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

struct Unit {
  enum Kind { Vowel, Consonant, Sign } kind;
  std::string label;
  CommonIndex index{0};
  bool geminate_link = false;  // virama to the next consonant is forced
};

std::vector<Unit> to_units(const ClsWord& word, ScriptId script,
                           const ClsInventory& inv) {
  std::vector<Unit> units;
  for (std::size_t k = 0; k < word.labels.size(); ++k) {
    const std::string& label = word.labels[k];
    auto unknown = [&](const std::string& why) {
      return Error(ErrorCode::UnknownLabel, "label '" + label + "' " + why, k);
    };
    switch (inv.kind(label)) {
      case LabelKind::Unknown: throw unknown("is not in the inventory");
      case LabelKind::Vowel:
        units.push_back({Unit::Vowel, label});
        break;
      case LabelKind::Consonant: {
        const auto idx = inv.consonant_index(script, label);
        if (!idx) throw unknown("has no " + std::string(name(script)) + " letter");
        units.push_back({Unit::Consonant, label, *idx});
        break;
      }
      case LabelKind::Geminate: {
        const ClsLabel base = *inv.geminate_base(label);
        const auto idx = inv.consonant_index(script, base);
        if (!idx) throw unknown("has no " + std::string(name(script)) + " letter");
        units.push_back({Unit::Consonant, base, *idx, true});
        units.push_back({Unit::Consonant, base, *idx});
        break;
      }
      case LabelKind::Sign: {
        const auto idx = inv.sign_index(script, label);
        if (!idx) throw unknown("has no " + std::string(name(script)) + " sign");
        units.push_back({Unit::Sign, label, *idx});
        break;
      }
    }
  }
  return units;
}

// How a consonant that is not followed by a vowel label is closed.
enum class Close { Virama, Bare };

struct InverseSkeleton {
  std::vector<Unit> units;
  // Per consonant unit: fixed close, or free (nullopt) with a canonical
  // preference.
  std::vector<std::optional<Close>> fixed;
  std::vector<Close> canonical;
  std::vector<std::size_t> free_units;
};

InverseSkeleton plan(std::vector<Unit> units, ScriptId script,
                     const ClsInventory& inv, const SchwaRuleSet& rules) {
  InverseSkeleton sk;
  const std::size_t n = units.size();
  sk.fixed.assign(n, std::nullopt);
  sk.canonical.assign(n, Close::Virama);

  // Index past the last consonant-or-vowel unit; anything after is signs.
  std::size_t last_core = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (units[i].kind != Unit::Sign) last_core = i;

  for (std::size_t i = 0; i < n; ++i) {
    const Unit& u = units[i];
    if (u.kind == Unit::Sign && i == 0)
      throw Error(ErrorCode::MalformedCls, "sign label '" + u.label + "' starts the word", 0);
    if (u.kind != Unit::Consonant) continue;
    if (u.geminate_link) {
      sk.fixed[i] = Close::Virama;
      continue;
    }
    const bool next_vowel = i + 1 < n && units[i + 1].kind == Unit::Vowel;
    if (next_vowel) {
      const std::string& v = units[i + 1].label;
      if (v == inv.schwa() || inv.matra_index(script, v)) continue;  // nucleus
      sk.fixed[i] = Close::Virama;  // vowel without a sign form
      continue;
    }
    const bool is_final = i == last_core;
    const bool may_be_bare =
        rules.delete_medial || (rules.delete_word_final && is_final);
    if (!may_be_bare) {
      sk.fixed[i] = Close::Virama;
      continue;
    }
    sk.canonical[i] = is_final ? Close::Bare : Close::Virama;
    sk.free_units.push_back(i);
  }
  sk.units = std::move(units);
  return sk;
}

std::string realize(const InverseSkeleton& sk, const std::vector<Close>& close,
                    ScriptId script, const ClsInventory& inv) {
  const char32_t base = block_base(script);
  std::u32string out;
  const auto& units = sk.units;
  for (std::size_t i = 0; i < units.size(); ++i) {
    const Unit& u = units[i];
    switch (u.kind) {
      case Unit::Sign: out.push_back(base + u.index.value()); break;
      case Unit::Vowel: {
        const auto idx = inv.vowel_index(script, u.label);
        if (!idx)
          throw Error(ErrorCode::UnknownLabel,
                      "label '" + u.label + "' has no " + std::string(name(script)) +
                          " vowel letter",
                      i);
        out.push_back(base + idx->value());
        break;
      }
      case Unit::Consonant: {
        out.push_back(base + u.index.value());
        const bool next_vowel = i + 1 < units.size() && units[i + 1].kind == Unit::Vowel;
        if (next_vowel && !sk.fixed[i]) {
          const std::string& v = units[i + 1].label;
          if (v != inv.schwa()) out.push_back(base + inv.matra_index(script, v)->value());
          ++i;  // vowel consumed as the nucleus
        } else if (close[i] == Close::Virama) {
          out.push_back(base + kVirama);
        }
        break;
      }
    }
  }
  return utf8::encode(out);
}

std::string describe_labels(const ClsWord& w) { return "'" + w.key() + "'"; }

}  // namespace

void Lexicon::add(const std::string& key, const std::string& native, std::uint64_t count) {
  if (count == 0) throw Error(ErrorCode::Argument, "lexicon counts must be positive");
  auto [it, inserted] = entries_.try_emplace(key);
  if (inserted) by_length_[utf8::split_ws(key).size()].push_back(key);
  auto& cands = it->second;
  auto found = std::find_if(cands.begin(), cands.end(),
                            [&](const LexiconCandidate& c) { return c.native == native; });
  if (found != cands.end()) found->count += count;
  else cands.push_back({native, count});
  std::sort(cands.begin(), cands.end(), [](const LexiconCandidate& a, const LexiconCandidate& b) {
    if (a.count != b.count) return a.count > b.count;
    return a.native < b.native;
  });
}

const std::vector<LexiconCandidate>* Lexicon::find(std::string_view key) const {
  const auto it = entries_.find(std::string(key));
  return it == entries_.end() ? nullptr : &it->second;
}

std::optional<std::string> Lexicon::fuzzy_key(const std::vector<ClsLabel>& labels) const {
  const auto bucket = by_length_.find(labels.size());
  if (bucket == by_length_.end()) return std::nullopt;
  std::optional<std::string> match;
  for (const std::string& key : bucket->second) {
    const auto other = utf8::split_ws(key);
    std::size_t diff = 0;
    for (std::size_t i = 0; i < labels.size() && diff < 2; ++i)
      diff += labels[i] != other[i];
    if (diff != 1) continue;
    if (match) return std::nullopt;
    match = key;
  }
  return match;
}

void Lexicon::write(std::ostream& out) const {
  for (const auto& [key, cands] : entries_)
    for (const auto& c : cands) out << key << '\t' << c.native << '\t' << c.count << '\n';
}

Lexicon Lexicon::read(std::istream& in, LanguageId lang, const ClsConverter* validate_with,
                      ConversionOptions opts) {
  Lexicon lex(lang);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (utf8::trim(line).empty() || line.front() == '#') continue;
    auto fail = [&](const std::string& why) {
      return Error(ErrorCode::Parse, "lexicon line " + std::to_string(line_no) + ": " + why);
    };
    const auto fields = split_tabs(line);
    if (fields.size() != 3) throw fail("expected key<TAB>native<TAB>count");
    std::uint64_t count = 0;
    try {
      std::size_t used = 0;
      count = std::stoull(fields[2], &used);
      if (used != fields[2].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw fail("bad count '" + fields[2] + "'");
    }
    if (count == 0) throw fail("count must be positive");
    if (const auto* cands = lex.find(fields[0])) {
      for (const auto& c : *cands)
        if (c.native == fields[1]) throw fail("duplicate entry");
    }
    if (validate_with) {
      std::string got;
      try {
        got = validate_with->word_to_cls(fields[1], lang, opts).key();
      } catch (const Error& e) {
        throw fail("'" + fields[1] + "' does not convert: " + e.what());
      }
      if (got != fields[0])
        throw fail("'" + fields[1] + "' converts to '" + got + "', not '" + fields[0] + "'");
    }
    lex.add(fields[0], fields[1], count);
  }
  if (in.bad()) throw Error(ErrorCode::Io, "lexicon read failed");
  return lex;
}

LexiconBuild build_lexicon(std::istream& corpus, LanguageId lang,
                           const ClsConverter& converter, ConversionOptions opts) {
  LexiconBuild out{Lexicon(lang)};
  std::string line;
  while (std::getline(corpus, line)) {
    std::string normalized;
    try {
      normalized = normalize(line);
    } catch (const Error&) {
      ++out.skipped;
      continue;
    }
    for (const auto& word : clean_words(normalized)) {
      if (is_digit_token(word)) continue;
      try {
        const ClsWord cls = converter.word_to_cls(word, lang, opts);
        out.lexicon.add(cls.key(), word);
        ++out.words;
      } catch (const Error&) {
        ++out.skipped;
      }
    }
  }
  if (corpus.bad()) throw Error(ErrorCode::Io, "corpus read failed");
  return out;
}

std::string_view name(NsFlag flag) {
  switch (flag) {
    case NsFlag::Exact: return "Exact";
    case NsFlag::LexiconHit: return "LexiconHit";
    case NsFlag::RuleFallbackAmbiguous: return "RuleFallback-Ambiguous";
  }
  return "?";
}

NsWord cls_word_to_ns(const ClsWord& word, LanguageId lang, const ClsConverter& converter,
                      const Lexicon* lexicon, const NsOptions& opts) {
  if (word.labels.empty()) throw Error(ErrorCode::MalformedCls, "empty CLS word");
  if (word.labels.size() == 1 && is_digit_token(word.labels[0]))
    return {word.labels[0], NsFlag::Exact};

  if (lexicon && lexicon->language() == lang) {
    if (const auto* cands = lexicon->find(word.key()))
      return {cands->front().native, NsFlag::LexiconHit};
  }

  const ClsInventory& inv = converter.inventory();
  const ScriptId script = script_of(lang);
  auto units = to_units(word, script, inv);

  if (lexicon && lexicon->language() == lang && opts.fuzzy) {
    if (const auto key = lexicon->fuzzy_key(word.labels))
      return {lexicon->find(*key)->front().native, NsFlag::LexiconHit};
  }

  SchwaRuleSet rules = converter.rules().at(lang);
  if (!opts.forward.schwa) rules = {lang, false, false};
  const InverseSkeleton sk = plan(std::move(units), script, inv, rules);

  std::vector<Close> canonical(sk.units.size(), Close::Virama);
  for (std::size_t i = 0; i < sk.units.size(); ++i)
    canonical[i] = sk.fixed[i].value_or(sk.canonical[i]);

  auto forward_matches = [&](const std::string& candidate) {
    try {
      return converter.word_to_cls(candidate, script, rules, opts.forward).labels == word.labels;
    } catch (const Error&) {
      return false;
    }
  };

  const std::size_t free = sk.free_units.size();
  if (free == 0 || free > opts.max_enumerated) {
    const std::string candidate = realize(sk, canonical, script, inv);
    const bool unique = free == 0 && forward_matches(candidate);
    return {candidate, unique ? NsFlag::Exact : NsFlag::RuleFallbackAmbiguous};
  }

  std::size_t matches = 0;
  std::optional<std::string> best;
  int best_distance = 0;
  std::vector<Close> close = canonical;
  for (std::uint32_t mask = 0; mask < (1u << free); ++mask) {
    // Bit set = flip the canonical choice for that consonant.
    for (std::size_t b = 0; b < free; ++b) {
      const std::size_t u = sk.free_units[b];
      const bool flip = (mask >> b) & 1u;
      close[u] = flip ? (canonical[u] == Close::Virama ? Close::Bare : Close::Virama)
                      : canonical[u];
    }
    const std::string candidate = realize(sk, close, script, inv);
    if (!forward_matches(candidate)) continue;
    ++matches;
    const int distance = std::popcount(mask);
    if (!best || distance < best_distance) {
      best = candidate;
      best_distance = distance;
    }
  }
  if (!best) return {realize(sk, canonical, script, inv), NsFlag::RuleFallbackAmbiguous};
  return {*best, matches == 1 ? NsFlag::Exact : NsFlag::RuleFallbackAmbiguous};
}

NsResult cls_text_to_ns(std::string_view text, const NsMode& mode,
                        const LexiconSet& lexicons, const ClsConverter& converter,
                        const NsOptions& opts) {
  NsResult result;
  std::string body;
  LanguageId lang;
  if (mode.is_unified()) {
    auto [tagged_lang, rest] = strip_lid(text, opts.lid);
    lang = tagged_lang;
    body = std::move(rest);
  } else {
    lang = mode.language();
    if (const auto tag = leading_lid(text, opts.lid)) {
      throw Error(ErrorCode::Argument,
                  "mono-mode input carries the LID token " + opts.lid.surface(*tag));
    }
    body = std::string(text);
  }
  result.language = lang;

  const auto lex_it = lexicons.find(lang);
  const Lexicon* lexicon = lex_it == lexicons.end() ? nullptr : &lex_it->second;

  std::vector<ClsWord> words(1);
  for (auto& token : utf8::split_ws(body)) {
    if (token == opts.boundary) {
      if (!words.back().labels.empty()) words.emplace_back();
    } else {
      words.back().labels.push_back(std::move(token));
    }
  }
  if (words.back().labels.empty()) words.pop_back();

  std::vector<std::string> out;
  for (std::size_t k = 0; k < words.size(); ++k) {
    try {
      NsWord w = cls_word_to_ns(words[k], lang, converter, lexicon, opts);
      out.push_back(std::move(w.native));
      result.flags.push_back(w.flag);
    } catch (const Error& e) {
      const std::string message =
          "word " + std::to_string(k) + " " + describe_labels(words[k]) + ": " + e.what();
      if (opts.strict) throw Error(e.code(), message, k);
      result.errors.push_back({k, words[k].key(), e.code(), message});
    }
  }
  result.text = utf8::join(out, " ");
  return result;
}

}  // namespace clsasr
