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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clsasr/script.hpp"

namespace clsasr {

enum class VowelKind { Inherent, Matra, Independent, NoVowel };

struct Nucleus {
  VowelKind kind = VowelKind::Inherent;
  std::optional<CommonIndex> index;  // set for Matra and Independent

  friend bool operator==(const Nucleus&, const Nucleus&) = default;
};

// One orthographic syllable. Invariants: Independent implies an empty onset;
// Inherent implies a non-empty onset.
struct Akshara {
  std::vector<CommonIndex> onset;
  Nucleus nucleus;
  std::vector<CommonIndex> trailing;  // anusvara, visarga, candrabindu

  // Number of code points in the surface form.
  std::size_t length() const;

  friend bool operator==(const Akshara&, const Akshara&) = default;
};

struct ParsedWord {
  std::vector<Akshara> aksharas;
  ScriptId script = ScriptId::Devanagari;
  std::string surface;

  friend bool operator==(const ParsedWord&, const ParsedWord&) = default;
};

// Throws Error{Argument} for an unassigned slot.
CharCategory classify_char(ScriptId script, CommonIndex index,
                           const CategoryTable& table = CategoryTable::builtin());

// Greedy left-to-right parse:
//
//   Akshara := Consonant (Virama Consonant)* (Virama | Matra | e) Sign*
//            | IndependentVowel Sign*
//
// Throws Error{MixedScript} for a letter of another Indic block and
// Error{MalformedWord} (position = code point offset) for anything the
// grammar does not accept, e.g. a leading matra or a stray nukta.
ParsedWord segment_aksharas(std::string_view word, ScriptId script,
                            const CategoryTable& table = CategoryTable::builtin());

std::u32string render_codepoints(const std::vector<Akshara>& aksharas,
                                 ScriptId script);
std::string render(const std::vector<Akshara>& aksharas, ScriptId script);
inline std::string render(const ParsedWord& word) {
  return render(word.aksharas, word.script);
}

}  // namespace clsasr
