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

#include "clsasr/corpus.hpp"

#include <cctype>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

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

}  // namespace

std::optional<std::int64_t> parse_duration_ms(std::string_view text) {
  text = utf8::trim(text);
  if (text.empty()) return std::nullopt;
  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::int64_t whole = 0;
  std::size_t i = 0;
  bool any_digit = false;
  for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
    whole = whole * 10 + (text[i] - '0');
    any_digit = true;
    if (whole > 1'000'000'000'000LL) return std::nullopt;
  }
  std::int64_t millis = 0;
  if (i < text.size() && text[i] == '.') {
    ++i;
    int digits = 0;
    bool round_up = false;
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
      any_digit = true;
      if (digits < 3) {
        millis = millis * 10 + (text[i] - '0');
      } else if (digits == 3) {
        round_up = text[i] >= '5';
      }
      ++digits;
    }
    for (; digits < 3; ++digits) millis *= 10;
    if (round_up) ++millis;
  }
  if (!any_digit || i != text.size()) return std::nullopt;
  const std::int64_t total = whole * 1000 + millis;
  return negative ? -total : total;
}

Manifest parse_manifest(std::istream& in) {
  Manifest m;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (utf8::trim(line).empty() || line.front() == '#') continue;
    auto fail = [&](const std::string& why) {
      return Error(ErrorCode::Parse, "manifest line " + std::to_string(line_no) + ": " + why);
    };
    const auto fields = split_tabs(line);
    if (fields.size() != 5)
      throw fail("expected 5 tab-separated fields (id, lang, duration_sec, audio_path, transcript), got " +
                 std::to_string(fields.size()));
    Utterance u;
    u.id = std::string(utf8::trim(fields[0]));
    if (u.id.empty()) throw fail("empty id");
    const auto lang = parse_language(utf8::trim(fields[1]));
    if (!lang) throw fail("unknown language '" + fields[1] + "'");
    u.lang = *lang;
    const auto ms = parse_duration_ms(fields[2]);
    if (!ms) throw fail("bad duration '" + fields[2] + "'");
    u.duration_ms = *ms;
    u.audio_path = fields[3];
    u.transcript = fields[4];
    u.line = line_no;
    m.utterances.push_back(std::move(u));
  }
  if (in.bad()) throw Error(ErrorCode::Io, "manifest read failed");
  return m;
}

Manifest parse_manifest(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_manifest(in);
}

std::string_view name(TargetFlavor f) {
  switch (f) {
    case TargetFlavor::Native: return "native";
    case TargetFlavor::NativeLid: return "native-lid";
    case TargetFlavor::Cls: return "cls";
    case TargetFlavor::ClsLid: return "cls-lid";
  }
  return "?";
}

std::optional<TargetFlavor> parse_flavor(std::string_view text) {
  std::string t(text);
  for (char& c : t) {
    if (c == '_') c = '-';
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  for (TargetFlavor f : {TargetFlavor::Native, TargetFlavor::NativeLid, TargetFlavor::Cls,
                         TargetFlavor::ClsLid})
    if (t == name(f)) return f;
  return std::nullopt;
}

PrepResult prep_corpus(const Manifest& manifest, TargetFlavor flavor,
                       const ClsConverter& converter, const PrepOptions& opts) {
  PrepResult result;
  std::unordered_set<std::string> seen;

  for (const Utterance& u : manifest.utterances) {
    auto error = [&](std::string stage, std::string message) {
      result.errors.push_back({u.id, std::move(stage), std::move(message)});
    };
    if (!seen.insert(u.id).second) {
      error("validate", "duplicate id");
      continue;
    }
    if (u.duration_ms < 0) {
      error("validate", "negative duration");
      continue;
    }
    DetectionResult detected;
    try {
      detected = detect_script(normalize(u.transcript));
    } catch (const Error& e) {
      error("decode", e.what());
      continue;
    }
    const ScriptId expected = script_of(u.lang);
    if (detected.kind == DetectionResult::Kind::Mixed ||
        (detected.kind == DetectionResult::Kind::Single && detected.script != expected)) {
      error("validate", "transcript script does not match " + std::string(name(u.lang)) +
                            " (" + std::string(name(expected)) + ")");
      continue;
    }
    if (utf8::trim(u.transcript).empty())
      result.warnings.push_back({u.id, "warning", "empty transcript"});

    try {
      std::string target;
      if (flavor == TargetFlavor::Native || flavor == TargetFlavor::NativeLid) {
        target = u.transcript;
      } else {
        TextConversion conv = converter.text_to_cls(u.transcript, u.lang, opts.text);
        for (const WordError& w : conv.errors)
          result.warnings.push_back({u.id, "warning", "dropped " + w.message});
        target = std::move(conv.text);
      }
      if (flavor == TargetFlavor::NativeLid || flavor == TargetFlavor::ClsLid)
        target = inject_lid(u.lang, target, opts.lid);
      result.targets.emplace_back(u.id, std::move(target));
    } catch (const Error& e) {
      const bool lid = e.code() == ErrorCode::AlreadyTagged;
      error(lid ? "lid" : "cls", e.what());
    }
  }
  return result;
}

void write_targets(std::ostream& out, const PrepResult& result) {
  for (const auto& [id, target] : result.targets) out << id << '\t' << target << '\n';
}

void write_report(std::ostream& out, const std::vector<ReportRecord>& records) {
  for (const auto& r : records) out << r.id << '\t' << r.stage << '\t' << r.message << '\n';
}

std::int64_t LanguageStats::display_hours() const {
  return static_cast<std::int64_t>(std::llround(hours()));
}

CorpusStats corpus_stats(const Manifest& manifest) {
  CorpusStats stats;
  for (const Utterance& u : manifest.utterances) {
    if (u.duration_ms < 0) {
      stats.errors.push_back({u.id, "validate", "negative duration"});
      continue;
    }
    auto& s = stats.per_language[index_of(u.lang)];
    s.duration_ms += u.duration_ms;
    ++s.utterances;
  }
  for (const auto& s : stats.per_language) {
    stats.total.duration_ms += s.duration_ms;
    stats.total.utterances += s.utterances;
  }
  return stats;
}

std::string render_stats(const CorpusStats& stats) {
  std::ostringstream out;
  auto row = [&](const std::string& label, const LanguageStats& s) {
    out << std::left << std::setw(10) << label << std::right << std::setw(8)
        << s.display_hours() << std::setw(12) << s.utterances << std::setw(14)
        << std::fixed << std::setprecision(3) << s.hours() << '\n';
  };
  out << std::left << std::setw(10) << "Language" << std::right << std::setw(8) << "Hours"
      << std::setw(12) << "Utterances" << std::setw(14) << "ExactHours" << '\n';
  for (LanguageId l : kAllLanguages) row(display_name(l), stats.at(l));
  row("Total", stats.total);
  return out.str();
}

}  // namespace clsasr
