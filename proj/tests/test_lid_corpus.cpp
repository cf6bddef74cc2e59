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
#include "clsasr/corpus.hpp"

using namespace clsasr;

namespace {

std::string u(std::u32string_view s) { return utf8::encode(s); }

const ClsConverter& conv() {
  static const ClsConverter c;
  return c;
}

}  // namespace

TEST_CASE("LID format") {
  const LidFormat f;
  CHECK(f.surface(LanguageId::Gujarati) == "<gujarati");
  CHECK(f.parse("<odia") == LanguageId::Odia);
  CHECK_FALSE(f.parse("<tamil"));
  CHECK_FALSE(f.parse("odia"));
  CHECK_THROWS_AS(LidFormat("lang"), Error);
  CHECK_THROWS_AS(LidFormat("< {lang}"), Error);
  const LidFormat bracket("<{lang}>");
  CHECK(bracket.surface(LanguageId::Hindi) == "<hindi>");
  CHECK(bracket.parse("<hindi>") == LanguageId::Hindi);
  CHECK_FALSE(bracket.parse("<hindi"));
}

TEST_CASE("inject_lid and strip_lid") {
  CHECK(inject_lid(LanguageId::Hindi, u(U"आ")) == "<hindi " + u(U"आ"));
  CHECK(inject_lid(LanguageId::Gujarati, "") == "<gujarati");
  try {
    inject_lid(LanguageId::Hindi, "<hindi " + u(U"आ"));
    FAIL("expected AlreadyTagged");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AlreadyTagged);
  }
  CHECK(strip_lid("<hindi " + u(U"आ")) == std::make_pair(LanguageId::Hindi, u(U"आ")));
  CHECK(strip_lid("<odia") == std::make_pair(LanguageId::Odia, std::string()));
  try {
    strip_lid(u(U"आ"));
    FAIL("expected MissingLid");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingLid);
  }
  // "<hindix" is not the tag "<hindi".
  CHECK_THROWS_AS(strip_lid("<hindix aa"), Error);
}

TEST_CASE("inject and strip are mutually inverse") {
  std::mt19937 rng(8);
  for (int n = 0; n < 500; ++n) {
    const LanguageId lang = testing::pick(rng, std::vector<LanguageId>(kAllLanguages.begin(), kAllLanguages.end()));
    const ScriptId s = script_of(lang);
    const testing::ScriptSlots slots(s);
    std::string text;
    const int words = std::uniform_int_distribution<int>(0, 4)(rng);
    for (int k = 0; k < words; ++k) text += (k ? " " : "") + testing::random_word(rng, s, slots);
    const std::string tagged = inject_lid(lang, text);
    CHECK(strip_lid(tagged) == std::make_pair(lang, text));
    const auto [l, rest] = strip_lid(tagged);
    CHECK(inject_lid(l, rest) == tagged);
  }
}

TEST_CASE("parse_duration_ms") {
  CHECK(parse_duration_ms("1.5") == 1500);
  CHECK(parse_duration_ms("3600") == 3600000);
  CHECK(parse_duration_ms("0.0005") == 1);
  CHECK(parse_duration_ms("-2") == -2000);
  CHECK(parse_duration_ms(".25") == 250);
  CHECK_FALSE(parse_duration_ms("abc"));
  CHECK_FALSE(parse_duration_ms("1.2.3"));
  CHECK_FALSE(parse_duration_ms(""));
}

TEST_CASE("manifest parsing") {
  const Manifest m = parse_manifest("# header\n\nu1\thindi\t1.25\ta.wav\t" + u(U"आ") + "\n");
  REQUIRE(m.utterances.size() == 1);
  CHECK(m.utterances[0].id == "u1");
  CHECK(m.utterances[0].lang == LanguageId::Hindi);
  CHECK(m.utterances[0].duration_ms == 1250);
  CHECK(m.utterances[0].transcript == u(U"आ"));
  CHECK_THROWS_AS(parse_manifest("u1\thindi\t1\n"), Error);
  CHECK_THROWS_AS(parse_manifest("u1\ttamil\t1\ta\tb\n"), Error);
  CHECK_THROWS_AS(parse_manifest("u1\thindi\tx\ta\tb\n"), Error);
  CHECK(parse_manifest("").utterances.empty());
}

TEST_CASE("prep_corpus flavors") {
  const std::string text = "u1\thindi\t1\ta.wav\t" + u(U"आ") + "\n";
  const Manifest m = parse_manifest(text);
  auto target = [&](TargetFlavor f) {
    const PrepResult r = prep_corpus(m, f, conv());
    REQUIRE(r.targets.size() == 1);
    return r.targets[0].second;
  };
  CHECK(target(TargetFlavor::Native) == u(U"आ"));
  CHECK(target(TargetFlavor::NativeLid) == "<hindi " + u(U"आ"));
  CHECK(target(TargetFlavor::Cls) == "aa");
  CHECK(target(TargetFlavor::ClsLid) == "<hindi aa");

  const PrepResult empty = prep_corpus(Manifest{}, TargetFlavor::Cls, conv());
  CHECK(empty.targets.empty());
  CHECK(empty.errors.empty());
}

TEST_CASE("prep_corpus error records") {
  const std::string text =
      "a\thindi\t1\tx\t" + u(U"आ") + "\n" +
      "a\thindi\t1\tx\t" + u(U"आ") + "\n" +           // duplicate id
      "b\thindi\t-1\tx\t" + u(U"आ") + "\n" +          // negative duration
      "c\tgujarati\t1\tx\t" + u(U"आ") + "\n" +        // wrong script
      "d\thindi\t1\tx\t" + u(U"ाक") + "\n" +          // malformed word
      "e\thindi\t1\tx\t\n" +                           // empty transcript
      "f\thindi\t1\tx\t<hindi " + u(U"आ") + "\n" +     // already tagged
      "g\thindi\t1\tx\t\xff\n";                        // bad UTF-8
  const Manifest m = parse_manifest(text);
  PrepOptions strict;
  strict.text.strict = true;
  for (TargetFlavor f : {TargetFlavor::Native, TargetFlavor::NativeLid, TargetFlavor::Cls, TargetFlavor::ClsLid}) {
    const PrepResult r = prep_corpus(m, f, conv(), strict);
    CHECK(r.targets.size() + r.errors.size() == m.utterances.size());
    CHECK(r.warnings.size() == 1);
  }
  const PrepResult lid = prep_corpus(m, TargetFlavor::ClsLid, conv(), strict);
  CHECK(lid.errors.size() == 6);
  CHECK(lid.targets.back() == std::make_pair(std::string("e"), std::string("<hindi")));
  // Native keeps the pre-tagged transcript as-is.
  CHECK(prep_corpus(m, TargetFlavor::Native, conv(), strict).errors.size() == 4);
}

TEST_CASE("corpus_stats") {
  CorpusStats s = corpus_stats(parse_manifest("u\thindi\t3600\ta\tb\n"));
  CHECK(s.at(LanguageId::Hindi).display_hours() == 1);
  CHECK(s.at(LanguageId::Hindi).utterances == 1);
  CHECK(s.total.display_hours() == 1);

  s = corpus_stats(Manifest{});
  CHECK(s.total.duration_ms == 0);
  CHECK(s.total.utterances == 0);

  s = corpus_stats(parse_manifest("u\thindi\t-1\ta\tb\nv\todia\t0.001\ta\tb\n"));
  CHECK(s.errors.size() == 1);
  CHECK(s.total.duration_ms == 1);
}

TEST_CASE("corpus_stats totals are exact sums") {
  std::mt19937 rng(12);
  std::uniform_int_distribution<std::int64_t> ms(0, 30'000'000);
  Manifest m;
  std::int64_t expected = 0;
  for (int n = 0; n < 5000; ++n) {
    Utterance u;
    u.id = std::to_string(n);
    u.lang = kAllLanguages[static_cast<std::size_t>(n % 5)];
    u.duration_ms = ms(rng);
    expected += u.duration_ms;
    m.utterances.push_back(u);
  }
  const CorpusStats s = corpus_stats(m);
  CHECK(s.total.duration_ms == expected);
  std::int64_t sum = 0;
  for (const auto& l : s.per_language) sum += l.duration_ms;
  CHECK(sum == expected);
}
