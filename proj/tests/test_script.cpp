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

#include <random>

#include "doctest.h"
#include "generators.hpp"

using namespace clsasr;

namespace {
std::string u(std::u32string_view s) { return utf8::encode(s); }
}  // namespace

TEST_CASE("block bases are distinct and 128 wide") {
  CHECK(block_base(ScriptId::Devanagari) == 0x0900);
  CHECK(block_base(ScriptId::Bengali) == 0x0980);
  CHECK(block_base(ScriptId::Gujarati) == 0x0A80);
  CHECK(block_base(ScriptId::Odia) == 0x0B00);
  for (ScriptId a : kAllScripts)
    for (ScriptId b : kAllScripts)
      if (a != b) CHECK((block_base(a) > block_base(b) ? block_base(a) - block_base(b) : block_base(b) - block_base(a)) >= 0x80);
}

TEST_CASE("languages map to scripts") {
  CHECK(script_of(LanguageId::Hindi) == ScriptId::Devanagari);
  CHECK(script_of(LanguageId::Marathi) == ScriptId::Devanagari);
  CHECK(script_of(LanguageId::Gujarati) == ScriptId::Gujarati);
  CHECK(script_of(LanguageId::Bengali) == ScriptId::Bengali);
  CHECK(script_of(LanguageId::Odia) == ScriptId::Odia);
  CHECK(languages_of(ScriptId::Devanagari).size() == 2);
  for (ScriptId s : {ScriptId::Gujarati, ScriptId::Bengali, ScriptId::Odia})
    CHECK(languages_of(s).size() == 1);
  for (LanguageId l : kAllLanguages) CHECK(parse_language(name(l)) == l);
  CHECK(parse_script("oriya") == ScriptId::Odia);
  CHECK_FALSE(parse_language("tamil"));
}

TEST_CASE("common index range") {
  CHECK(CommonIndex(0x7F).value() == 0x7F);
  CHECK_THROWS_AS(CommonIndex(0x80), Error);
}

TEST_CASE("normalize") {
  CHECK(normalize("") == "");
  CHECK(normalize("abc") == "abc");
  CHECK(normalize(u(U"\u0928\u093C")) == u(U"\u0929"));
  // Composition exclusions are composed as well.
  CHECK(normalize(u(U"\u0915\u093C")) == u(U"\u0958"));
  CHECK(normalize(u(U"\u09A1\u09BC")) == u(U"\u09DC"));
  CHECK(normalize(u(U"\u0B21\u0B3C")) == u(U"\u0B5C"));
  CHECK(normalize(u(U"\u0958")) == u(U"\u0958"));
  CHECK(normalize(u(U"\u0915\u094D\u200D\u0937")) == u(U"\u0915\u094D\u0937"));
  CHECK(normalize(u(U"\u0915\u200C")) == u(U"\u0915"));
  CHECK_THROWS_AS(normalize("\xff"), Error);
  try {
    normalize("ab\xc3");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Decode);
  }
}

TEST_CASE("normalize is idempotent on random text") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> cp(0x0900, 0x0B7F);
  for (int n = 0; n < 2000; ++n) {
    std::u32string s;
    for (int k = 0; k < 6; ++k) s += static_cast<char32_t>(cp(rng));
    s += U" \u200D";
    const std::string once = normalize(u(s));
    CHECK(normalize(once) == once);
  }
}

TEST_CASE("detect_script") {
  auto d = detect_script(u(U"क"));
  CHECK(d.kind == DetectionResult::Kind::Single);
  CHECK(d.script == ScriptId::Devanagari);
  CHECK(detect_script("hello 123").kind == DetectionResult::Kind::None);
  CHECK(detect_script("").kind == DetectionResult::Kind::None);
  d = detect_script(u(U"क ક"));
  CHECK(d.kind == DetectionResult::Kind::Mixed);
  CHECK(d.count(ScriptId::Devanagari) == 1);
  CHECK(d.count(ScriptId::Gujarati) == 1);
  // Danda is shared between blocks.
  d = detect_script(u(U"ক।"));
  CHECK(d.kind == DetectionResult::Kind::Single);
  CHECK(d.script == ScriptId::Bengali);
}

TEST_CASE("common index mapping") {
  CHECK(to_common_index(0x0915) == IndicPosition{ScriptId::Devanagari, CommonIndex(0x15)});
  CHECK(to_common_index(0x0A95) == IndicPosition{ScriptId::Gujarati, CommonIndex(0x15)});
  CHECK_FALSE(to_common_index(U'A'));
  CHECK(from_common_index(ScriptId::Gujarati, CommonIndex(0x15)) == char32_t{0x0A95});
  // Bengali has no letter va.
  CHECK_FALSE(from_common_index(ScriptId::Bengali, CommonIndex(0x35)));
}

TEST_CASE("from/to common index round trip over every assigned slot") {
  const auto& table = CategoryTable::builtin();
  std::size_t assigned = 0;
  for (ScriptId s : kAllScripts) {
    for (unsigned i = 0; i < 128; ++i) {
      const auto cp = from_common_index(s, CommonIndex(i));
      CHECK(cp.has_value() == table.assigned(s, CommonIndex(i)));
      if (!cp) continue;
      ++assigned;
      CHECK(to_common_index(*cp) == IndicPosition{s, CommonIndex(i)});
    }
  }
  CHECK(assigned > 300);
}

TEST_CASE("categories") {
  const auto& t = CategoryTable::builtin();
  CHECK(t.category(ScriptId::Devanagari, CommonIndex(0x4D)) == CharCategory::Virama);
  CHECK(t.category(ScriptId::Devanagari, CommonIndex(0x06)) == CharCategory::IndependentVowel);
  CHECK(t.category(ScriptId::Bengali, CommonIndex(0x15)) == CharCategory::Consonant);
  CHECK(t.category(ScriptId::Odia, CommonIndex(0x66)) == CharCategory::Digit);
  CHECK(t.category(ScriptId::Devanagari, CommonIndex(0x64)) == CharCategory::Punctuation);
  CHECK_FALSE(t.category(ScriptId::Gujarati, CommonIndex(0x04)));
  CHECK_THROWS_AS(CategoryTable::parse("devanagari\t15\tNoSuchCategory\n"), Error);
}

TEST_CASE("transliterate_offset") {
  CHECK(transliterate_offset(u(U"क"), ScriptId::Devanagari, ScriptId::Gujarati) == u(U"ક"));
  CHECK(transliterate_offset("", ScriptId::Devanagari, ScriptId::Odia) == "");
  CHECK(transliterate_offset("abc 12", ScriptId::Devanagari, ScriptId::Odia) == "abc 12");
  CHECK(transliterate_offset(u(U"क।"), ScriptId::Devanagari, ScriptId::Bengali) ==
        u(U"ক।"));
  try {
    transliterate_offset(u(U"कव"), ScriptId::Devanagari, ScriptId::Bengali);
    FAIL("expected UnmappableChar");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnmappableChar);
    CHECK(e.position() == 1);
  }
}

TEST_CASE("transliteration properties on random words") {
  std::mt19937 rng(11);
  const testing::ScriptSlots deva(ScriptId::Devanagari);
  int checked = 0;
  for (int n = 0; n < 3000; ++n) {
    const std::string w = testing::random_word(rng, ScriptId::Devanagari, deva);
    for (ScriptId to : {ScriptId::Gujarati, ScriptId::Bengali, ScriptId::Odia}) {
      std::string t;
      try {
        t = transliterate_offset(w, ScriptId::Devanagari, to);
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnmappableChar);
        continue;
      }
      ++checked;
      const auto d = detect_script(t);
      CHECK(d.kind == DetectionResult::Kind::Single);
      CHECK(d.script == to);
      CHECK(transliterate_offset(t, to, ScriptId::Devanagari) == w);
    }
  }
  CHECK(checked > 1000);
}
