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

#include "clsasr/akshara.hpp"

#include "clsasr/utf8.hpp"

namespace clsasr {

namespace {

bool is_sign(CharCategory c) {
  return c == CharCategory::Anusvara || c == CharCategory::Visarga ||
         c == CharCategory::Candrabindu;
}

std::string describe(char32_t cp) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "U+%04X", static_cast<unsigned>(cp));
  return buf;
}

}  // namespace

std::size_t Akshara::length() const {
  std::size_t n = 0;
  if (!onset.empty()) n += 2 * onset.size() - 1;
  switch (nucleus.kind) {
    case VowelKind::Inherent: break;
    case VowelKind::Matra:
    case VowelKind::Independent:
    case VowelKind::NoVowel: ++n; break;
  }
  return n + trailing.size();
}

CharCategory classify_char(ScriptId script, CommonIndex index,
                           const CategoryTable& table) {
  const auto cat = table.category(script, index);
  if (!cat) {
    throw Error(ErrorCode::Argument,
                std::string(name(script)) + " slot " +
                    std::to_string(index.value()) + " is unassigned");
  }
  return *cat;
}

ParsedWord segment_aksharas(std::string_view word, ScriptId script,
                            const CategoryTable& table) {
  const std::u32string cps = utf8::decode(word);
  const std::size_t n = cps.size();

  std::vector<CommonIndex> idx;
  std::vector<CharCategory> cat;
  idx.reserve(n);
  cat.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto pos = to_common_index(cps[i]);
    if (!pos) {
      throw Error(ErrorCode::MalformedWord,
                  describe(cps[i]) + " at " + std::to_string(i) +
                      " is not an Indic letter",
                  i);
    }
    if (pos->script != script) {
      throw Error(ErrorCode::MixedScript,
                  describe(cps[i]) + " at " + std::to_string(i) + " is " +
                      std::string(name(pos->script)) + ", expected " +
                      std::string(name(script)),
                  i);
    }
    const auto c = table.category(script, pos->index);
    if (!c) {
      throw Error(ErrorCode::MalformedWord,
                  describe(cps[i]) + " is unassigned", i);
    }
    idx.push_back(pos->index);
    cat.push_back(*c);
  }

  ParsedWord out;
  out.script = script;
  out.surface = std::string(word);

  std::size_t i = 0;
  while (i < n) {
    Akshara ak;
    if (cat[i] == CharCategory::IndependentVowel) {
      ak.nucleus = {VowelKind::Independent, idx[i]};
      ++i;
    } else if (cat[i] == CharCategory::Consonant) {
      ak.onset.push_back(idx[i++]);
      while (i + 1 < n && cat[i] == CharCategory::Virama &&
             cat[i + 1] == CharCategory::Consonant) {
        ak.onset.push_back(idx[i + 1]);
        i += 2;
      }
      if (i < n && cat[i] == CharCategory::Virama) {
        ak.nucleus = {VowelKind::NoVowel, std::nullopt};
        ++i;
      } else if (i < n && cat[i] == CharCategory::VowelSign) {
        ak.nucleus = {VowelKind::Matra, idx[i]};
        ++i;
      } else {
        ak.nucleus = {VowelKind::Inherent, std::nullopt};
      }
    } else {
      throw Error(ErrorCode::MalformedWord,
                  describe(cps[i]) + " (" + std::string(name(cat[i])) +
                      ") cannot start an akshara at " + std::to_string(i),
                  i);
    }
    while (i < n && is_sign(cat[i])) ak.trailing.push_back(idx[i++]);
    out.aksharas.push_back(std::move(ak));
  }
  return out;
}

std::u32string render_codepoints(const std::vector<Akshara>& aksharas,
                                 ScriptId script) {
  const char32_t base = block_base(script);
  std::u32string out;
  for (const Akshara& ak : aksharas) {
    for (std::size_t k = 0; k < ak.onset.size(); ++k) {
      if (k) out.push_back(base + kVirama);
      out.push_back(base + ak.onset[k].value());
    }
    switch (ak.nucleus.kind) {
      case VowelKind::Inherent: break;
      case VowelKind::NoVowel: out.push_back(base + kVirama); break;
      case VowelKind::Matra:
      case VowelKind::Independent:
        out.push_back(base + ak.nucleus.index->value());
        break;
    }
    for (CommonIndex s : ak.trailing) out.push_back(base + s.value());
  }
  return out;
}

std::string render(const std::vector<Akshara>& aksharas, ScriptId script) {
  return utf8::encode(render_codepoints(aksharas, script));
}

}  // namespace clsasr
