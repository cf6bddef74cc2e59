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

// Random inputs for the property tests. Everything is driven by an explicit
// std::mt19937 so failures reproduce from the printed seed.

#include <random>
#include <string>
#include <vector>

#include "clsasr/akshara.hpp"
#include "clsasr/cls.hpp"
#include "clsasr/script.hpp"
#include "clsasr/utf8.hpp"

namespace clsasr::testing {

// Slots of each category that are assigned in one script.
struct ScriptSlots {
  std::vector<unsigned> vowels, consonants, matras, signs;

  explicit ScriptSlots(ScriptId s, const CategoryTable& table = CategoryTable::builtin()) {
    for (unsigned i = 0; i < 128; ++i) {
      const auto c = table.category(s, CommonIndex(i));
      if (!c) continue;
      switch (*c) {
        case CharCategory::IndependentVowel: vowels.push_back(i); break;
        case CharCategory::Consonant: consonants.push_back(i); break;
        case CharCategory::VowelSign: matras.push_back(i); break;
        case CharCategory::Anusvara:
        case CharCategory::Visarga:
        case CharCategory::Candrabindu: signs.push_back(i); break;
        default: break;
      }
    }
  }
};

struct WordShape {
  int min_aksharas = 1;
  int max_aksharas = 5;
  int max_cluster = 3;           // consonants per onset
  double p_independent = 0.15;   // akshara is an independent vowel
  double p_matra = 0.5;
  double p_sign = 0.15;
  double p_final_virama = 0.1;   // dead consonant at the end of the word
};

template <typename T>
const T& pick(std::mt19937& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

inline bool chance(std::mt19937& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

// A word of the akshara grammar. Independent vowels only start the word
// or follow a voiced akshara, and a dead consonant only ends it, so the
// spelling is the canonical one for its sound.
inline std::string random_word(std::mt19937& rng, ScriptId script, const ScriptSlots& slots,
                               const WordShape& shape = {}) {
  const char32_t base = block_base(script);
  std::u32string out;
  const int n = std::uniform_int_distribution<int>(shape.min_aksharas, shape.max_aksharas)(rng);
  for (int k = 0; k < n; ++k) {
    if (chance(rng, shape.p_independent)) {
      out += base + pick(rng, slots.vowels);
    } else {
      const int cluster = std::uniform_int_distribution<int>(1, shape.max_cluster)(rng);
      for (int c = 0; c < cluster; ++c) {
        if (c) out += base + kVirama;
        out += base + pick(rng, slots.consonants);
      }
      if (k == n - 1 && chance(rng, shape.p_final_virama)) {
        out += base + kVirama;
        continue;
      }
      if (chance(rng, shape.p_matra)) out += base + pick(rng, slots.matras);
    }
    if (chance(rng, shape.p_sign)) out += base + pick(rng, slots.signs);
  }
  return utf8::encode(out);
}

// Labels joined the way text_to_cls joins them.
inline std::string cls_text(const std::vector<ClsWord>& words, const std::string& boundary = "|") {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += " " + boundary + " ";
    out += w.key();
  }
  return out;
}

}  // namespace clsasr::testing
