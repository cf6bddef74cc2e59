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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.
//
// Usage: clsasr_acceptance <fixture-dir>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "generators.hpp"
#include "oracle.hpp"
#include "clsasr/corpus.hpp"
#include "clsasr/eval.hpp"
#include "clsasr/ns.hpp"

using namespace clsasr;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned thresholds.
constexpr int kInvarianceWords = 1000;
constexpr double kInvarianceSeconds = 5.0;
constexpr int kRoundTripWordsPerLanguage = 1000;
constexpr std::size_t kFixtureMinWords = 200;
constexpr int kLidPairs = 100;
constexpr std::size_t kOracleMaxLength = 6;
constexpr int kOracleAlphabet = 3;
constexpr double kOracleSeconds = 60.0;
constexpr double kPooledExpected = 0.1;
constexpr double kPooledTolerance = 1e-12;
constexpr int kAksharaWords = 10000;
constexpr std::size_t kPrepUtterances = 1000;
constexpr std::int64_t kTrainTotalHours = 1038;

const ClsConverter& conv() {
  static const ClsConverter c;
  return c;
}

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 1. Cross-script invariance.
Outcome cross_script_invariance() {
  const auto t0 = Clock::now();
  std::mt19937 rng(1001);
  const testing::ScriptSlots deva(ScriptId::Devanagari);
  const SchwaRuleSet& rules = conv().rules().at(LanguageId::Hindi);
  int words = 0, comparisons = 0, mismatches = 0, attempts = 0;
  while (words < kInvarianceWords && attempts < 100 * kInvarianceWords) {
    ++attempts;
    const std::string w = testing::random_word(rng, ScriptId::Devanagari, deva);
    bool any = false;
    const ClsWord ref = conv().word_to_cls(w, ScriptId::Devanagari, rules);
    for (ScriptId to : {ScriptId::Gujarati, ScriptId::Bengali, ScriptId::Odia}) {
      std::string t;
      try {
        t = transliterate_offset(w, ScriptId::Devanagari, to);
      } catch (const Error&) {
        continue;
      }
      any = true;
      ++comparisons;
      if (conv().word_to_cls(t, to, rules).labels != ref.labels) ++mismatches;
    }
    if (any) ++words;
  }
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << words << " words, " << comparisons << " comparisons, " << mismatches << " mismatches, "
    << secs << " s";
  return {words >= kInvarianceWords && mismatches == 0 && secs < kInvarianceSeconds, d.str()};
}

// 2. Rule-only round trip on schwa-safe words.
Outcome rule_round_trip() {
  std::mt19937 rng(2002);
  testing::WordShape single;
  single.max_aksharas = 1;
  int total = 0, failures = 0;
  std::string first_failure;
  for (LanguageId lang : kAllLanguages) {
    const ScriptId s = script_of(lang);
    const testing::ScriptSlots slots(s);
    for (int n = 0; n < kRoundTripWordsPerLanguage; ++n) {
      // Alternate single-akshara words under the language's own rules with
      // longer words under disabled rules.
      const bool one = n % 2 == 0;
      const std::string w = testing::random_word(rng, s, slots, one ? single : testing::WordShape{});
      NsOptions opts;
      opts.forward.schwa = one;
      ++total;
      const NsWord back = cls_word_to_ns(conv().word_to_cls(w, lang, opts.forward), lang, conv(), nullptr, opts);
      if (back.native != w || back.flag != NsFlag::Exact) {
        if (!failures) first_failure = std::string(name(lang)) + " " + w + " -> " + back.native;
        ++failures;
      }
    }
  }
  std::ostringstream d;
  d << total << " words, " << failures << " failures";
  if (failures) d << " (first: " << first_failure << ")";
  return {failures == 0, d.str()};
}

// 3. Lexicon round trip on the bundled corpora.
Outcome lexicon_round_trip(const std::string& dir) {
  std::ostringstream d;
  bool ok = true;
  for (LanguageId lang : kAllLanguages) {
    const std::string text = read_file(dir + "/corpus_" + std::string(name(lang)) + ".txt");
    std::istringstream in(text);
    const LexiconBuild built = build_lexicon(in, lang, conv());
    std::set<std::string> words;
    // Corpus words in their normalized spelling (nukta composed).
    for (const auto& w : utf8::split_ws(normalize(text))) words.insert(w);
    std::size_t collisions = 0;
    for (const auto& [key, cands] : built.lexicon.entries())
      if (cands.size() > 1) ++collisions;
    std::size_t recovered = 0;
    for (const auto& w : words) {
      const NsWord back = cls_word_to_ns(conv().word_to_cls(w, lang), lang, conv(), &built.lexicon);
      if (back.native == w && (back.flag == NsFlag::LexiconHit || back.flag == NsFlag::Exact)) ++recovered;
    }
    const bool lang_ok = words.size() >= kFixtureMinWords && collisions == 0 && built.skipped == 0 &&
                         recovered == words.size();
    ok = ok && lang_ok;
    d << name(lang) << " " << recovered << "/" << words.size() << (collisions ? " collisions!" : "") << "; ";
  }
  return {ok, d.str()};
}

// 4. LID transparency.
Outcome lid_transparency() {
  std::mt19937 rng(4004);
  const std::vector<LanguageId> langs(kAllLanguages.begin(), kAllLanguages.end());
  LexiconSet lexicons;
  int equal = 0;
  for (int n = 0; n < kLidPairs; ++n) {
    const LanguageId lang = testing::pick(rng, langs);
    const ScriptId s = script_of(lang);
    const testing::ScriptSlots slots(s);
    std::vector<ClsWord> words;
    const int count = std::uniform_int_distribution<int>(1, 6)(rng);
    for (int k = 0; k < count; ++k) words.push_back(conv().word_to_cls(testing::random_word(rng, s, slots), lang));
    const std::string text = testing::cls_text(words);
    auto run = [&](const std::string& input, const NsMode& mode) {
      try {
        return cls_text_to_ns(input, mode, lexicons, conv()).text;
      } catch (const Error& e) {
        return std::string("error:") + e.what();
      }
    };
    const std::string mono = run(text, NsMode::mono(lang));
    const std::string unified = run(LidFormat().surface(lang) + " " + text, NsMode::unified());
    if (mono == unified) ++equal;
  }
  std::ostringstream d;
  d << equal << "/" << kLidPairs << " identical";
  return {equal == kLidPairs, d.str()};
}

// 5. DP alignment against the brute-force recursion.
Outcome oracle_equivalence() {
  const auto t0 = Clock::now();
  std::vector<std::vector<std::string>> lists;
  std::function<void(std::vector<std::string>&)> grow = [&](std::vector<std::string>& cur) {
    lists.push_back(cur);
    if (cur.size() == kOracleMaxLength) return;
    for (int s = 0; s < kOracleAlphabet; ++s) {
      cur.push_back(std::string(1, static_cast<char>('a' + s)));
      grow(cur);
      cur.pop_back();
    }
  };
  std::vector<std::string> cur;
  grow(cur);
  std::size_t pairs = 0, mismatches = 0;
  for (const auto& r : lists) {
    for (const auto& h : lists) {
      ++pairs;
      const ErrorCounts c = edit_distance_alignment(r, h).counts;
      if (c.errors() != testing::edit_distance(r, h)) ++mismatches;
    }
  }
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << pairs << " pairs, " << mismatches << " mismatches, " << secs << " s";
  return {mismatches == 0 && secs < kOracleSeconds, d.str()};
}

// 6. Pooled WER.
Outcome pooled_wer() {
  const std::map<std::string, std::string> refs{{"u1", "w1 w2"}, {"u2", "w1 w2 w3 w4 w5 w6 w7 w8"}};
  const std::map<std::string, std::string> hyps{{"u1", "w1 x"}, {"u2", "w1 w2 w3 w4 w5 w6 w7 w8"}};
  const CorpusScore s = score_corpus(refs, hyps, {});
  const double rate = s.overall_wer.rate().value_or(-1);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f (errors %zu / ref %zu)", rate, s.overall_wer.errors(),
                s.overall_wer.ref_tokens);
  return {std::fabs(rate - kPooledExpected) < kPooledTolerance, buf};
}

// 7. Report and manifest fixtures.
Outcome table_fidelity(const std::string& dir) {
  std::ostringstream d;
  bool ok = true;
  std::size_t checked = 0;
  for (const char* file : {"published_wer.tsv", "published_ns_wer.tsv"}) {
    const std::string raw = read_file(dir + "/" + file);
    std::istringstream in(raw);
    const EvalReport report = parse_report_tsv(in);
    const std::string text = render_report(report, ReportFormat::Text);
    const std::string tsv = render_report(report, ReportFormat::Tsv);
    std::istringstream tsv_in(tsv);
    const EvalReport rendered = parse_report_tsv(tsv_in);
    // Printed values as written in the fixture, cell by cell.
    std::istringstream lines(raw);
    std::string line;
    std::getline(lines, line);
    for (std::size_t r = 0; std::getline(lines, line); ++r) {
      std::vector<std::string> cells;
      std::stringstream ss(line);
      for (std::string c; std::getline(ss, c, '\t');) cells.push_back(c);
      for (std::size_t k = 1; k < cells.size(); ++k) {
        const std::string& printed = cells[k];
        const double value = std::stod(printed);
        const std::string shown = format_percent(rendered.rows[r].wer[k - 1]);
        // One-decimal values must appear verbatim; finer values must round
        // to what is shown.
        const auto dot = printed.find('.');
        const std::size_t decimals = dot == std::string::npos ? 0 : printed.size() - dot - 1;
        const bool exact = decimals <= 1 ? std::stod(shown) == value : std::fabs(std::stod(shown) - value) <= 0.05 + 1e-9;
        const bool in_text = text.find(shown) != std::string::npos;
        if (!exact || !in_text) {
          ok = false;
          d << "mismatch " << cells[0] << "/" << report.languages[k - 1] << " " << printed << "->" << shown << "; ";
        }
        ++checked;
      }
    }
  }
  // Named spot checks.
  auto row_values = [&](const std::string& file, const std::string& system) {
    std::istringstream in(read_file(dir + "/" + file));
    const EvalReport rep = parse_report_tsv(in);
    std::vector<std::string> out;
    for (const auto& row : rep.rows)
      if (row.system == system)
        for (const auto& v : row.wer) out.push_back(format_percent(v));
    return out;
  };
  const auto cls_lid = row_values("published_wer.tsv", "Multilingual CLS with LID");
  const auto mono = row_values("published_ns_wer.tsv", "Monolingual");
  const bool spot = cls_lid == std::vector<std::string>{"14.2", "22.8", "43.9", "19.5", "27.0"} &&
                    mono == std::vector<std::string>{"34.9", "43.1", "57.8"};
  ok = ok && spot;

  const CorpusStats stats = corpus_stats(parse_manifest(std::string_view(read_file(dir + "/train_manifest.tsv"))));
  const std::map<LanguageId, std::int64_t> expected{{LanguageId::Hindi, 206}, {LanguageId::Marathi, 201},
                                                     {LanguageId::Gujarati, 213}, {LanguageId::Bengali, 207},
                                                     {LanguageId::Odia, 211}};
  bool hours_ok = stats.total.display_hours() == kTrainTotalHours &&
                  stats.total.duration_ms == kTrainTotalHours * 3'600'000;
  for (const auto& [lang, h] : expected) hours_ok = hours_ok && stats.at(lang).display_hours() == h;
  ok = ok && hours_ok;
  d << checked << " cells, CLS+LID row " << (spot ? "ok" : "WRONG") << ", training total "
    << stats.total.display_hours() << " h";
  return {ok, d.str()};
}

// 8. Akshara concatenation.
Outcome akshara_round_trip() {
  std::mt19937 rng(8008);
  int failures = 0, total = 0;
  for (int n = 0; n < kAksharaWords; ++n) {
    const ScriptId s = kAllScripts[static_cast<std::size_t>(n % 4)];
    static const std::array<testing::ScriptSlots, 4> slots{
        testing::ScriptSlots(ScriptId::Devanagari), testing::ScriptSlots(ScriptId::Gujarati),
        testing::ScriptSlots(ScriptId::Bengali), testing::ScriptSlots(ScriptId::Odia)};
    const std::string w = testing::random_word(rng, s, slots[index_of(s)]);
    ++total;
    try {
      if (normalize(w) != w || render(segment_aksharas(w, s)) != w) ++failures;
    } catch (const Error&) {
      ++failures;
    }
  }
  std::ostringstream d;
  d << total << " words, " << failures << " failures";
  return {failures == 0, d.str()};
}

// 9. prep_corpus conservation.
Outcome prep_conservation() {
  std::mt19937 rng(9009);
  const std::vector<LanguageId> langs(kAllLanguages.begin(), kAllLanguages.end());
  std::ostringstream manifest;
  for (std::size_t n = 0; n < kPrepUtterances; ++n) {
    const LanguageId lang = testing::pick(rng, langs);
    const ScriptId s = script_of(lang);
    const testing::ScriptSlots slots(s);
    std::string transcript;
    const int kind = std::uniform_int_distribution<int>(0, 19)(rng);
    const int words = std::uniform_int_distribution<int>(1, 8)(rng);
    for (int k = 0; k < words; ++k) transcript += (k ? " " : "") + testing::random_word(rng, s, slots);
    std::string id = "utt" + std::to_string(n);
    std::string duration = std::to_string(std::uniform_int_distribution<int>(1, 20000)(rng) / 1000.0);
    switch (kind) {
      case 0: id = "utt0"; break;                                         // duplicate id
      case 1: duration = "-" + duration; break;                           // negative duration
      case 2: transcript = utf8::encode(std::u32string(1, s == ScriptId::Odia ? 0x0915 : 0x0B15)) + " " + transcript; break;  // wrong script
      case 3: transcript = utf8::encode(std::u32string(1, block_base(s) + 0x3E)) + transcript; break;  // leading matra
      case 4: transcript.clear(); break;
      case 5: transcript = LidFormat().surface(lang) + " " + transcript; break;
      default: break;
    }
    manifest << id << '\t' << name(lang) << '\t' << duration << "\taudio/" << n << ".wav\t" << transcript << '\n';
  }
  const Manifest m = parse_manifest(std::string_view(manifest.str()));
  std::ostringstream d;
  bool ok = m.utterances.size() == kPrepUtterances;
  const LidFormat lid;
  for (TargetFlavor f : {TargetFlavor::Native, TargetFlavor::NativeLid, TargetFlavor::Cls, TargetFlavor::ClsLid}) {
    PrepOptions opts;
    opts.text.strict = true;
    const PrepResult r = prep_corpus(m, f, conv(), opts);
    std::ostringstream lines;
    write_targets(lines, r);
    std::size_t out_lines = 0;
    std::istringstream back(lines.str());
    bool tags_ok = true;
    for (std::string line; std::getline(back, line); ++out_lines) {
      const std::string target = line.substr(line.find('\t') + 1);
      const bool tagged = leading_lid(target, lid).has_value();
      if (f == TargetFlavor::ClsLid && !tagged) tags_ok = false;
      if (f == TargetFlavor::Cls && tagged) tags_ok = false;
    }
    const bool conserved = out_lines + r.errors.size() == m.utterances.size();
    ok = ok && conserved && tags_ok;
    d << name(f) << " " << out_lines << "+" << r.errors.size() << (tags_ok ? "" : " bad-tags") << "; ";
  }
  return {ok, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: " << argv[0] << " <fixture-dir>\n";
    return 2;
  }
  const std::string dir = argv[1];
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 cross-script CLS invariance", cross_script_invariance},
      {"2 rule-only round trip", rule_round_trip},
      {"3 lexicon round trip", [&] { return lexicon_round_trip(dir); }},
      {"4 LID transparency", lid_transparency},
      {"5 edit-distance oracle", oracle_equivalence},
      {"6 pooled WER", pooled_wer},
      {"7 report fixtures", [&] { return table_fidelity(dir); }},
      {"8 akshara concatenation", akshara_round_trip},
      {"9 prep conservation", prep_conservation},
  };
  int failed = 0;
  for (const auto& [label, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS " : "FAIL ") << label << ": " << o.detail << std::endl;
  }
  return failed ? 1 : 0;
}
