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

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clsasr/cls.hpp"
#include "clsasr/lid.hpp"

namespace clsasr {

struct Utterance {
  std::string id;
  LanguageId lang = LanguageId::Hindi;
  std::int64_t duration_ms = 0;
  std::string audio_path;  // carried through, never opened
  std::string transcript;
  std::size_t line = 0;    // 1-based manifest line
};

struct Manifest {
  std::vector<Utterance> utterances;
};

// Tab-separated records: id, lang, duration_sec, audio_path, transcript.
// Blank lines and '#' comments are skipped. Structural problems (field
// count, unknown language, unparsable duration) throw Error{Parse};
// record-level problems such as negative durations are left for the
// consumers to report.
Manifest parse_manifest(std::istream& in);
Manifest parse_manifest(std::string_view text);

// Seconds with up to millisecond precision; "1.5" -> 1500.
std::optional<std::int64_t> parse_duration_ms(std::string_view text);

enum class TargetFlavor { Native, NativeLid, Cls, ClsLid };
std::string_view name(TargetFlavor f);
// Accepts "native", "native-lid", "cls", "cls-lid" (and '_' for '-').
std::optional<TargetFlavor> parse_flavor(std::string_view text);

struct ReportRecord {
  std::string id;
  std::string stage;
  std::string message;
};

struct PrepOptions {
  TextOptions text;
  LidFormat lid;
};

struct PrepResult {
  std::vector<std::pair<std::string, std::string>> targets;  // manifest order
  std::vector<ReportRecord> errors;
  std::vector<ReportRecord> warnings;
};

// One target per valid utterance; every other utterance yields exactly one
// error record, so targets.size() + errors.size() equals the manifest size.
// Empty transcripts and words dropped in lenient mode are warnings.
PrepResult prep_corpus(const Manifest& manifest, TargetFlavor flavor,
                       const ClsConverter& converter, const PrepOptions& opts = {});

void write_targets(std::ostream& out, const PrepResult& result);
// id<TAB>stage<TAB>message
void write_report(std::ostream& out, const std::vector<ReportRecord>& records);

struct LanguageStats {
  std::int64_t duration_ms = 0;
  std::size_t utterances = 0;

  double hours() const { return static_cast<double>(duration_ms) / 3'600'000.0; }
  std::int64_t display_hours() const;
};

struct CorpusStats {
  std::array<LanguageStats, 5> per_language{};  // indexed by index_of(LanguageId)
  LanguageStats total;
  std::vector<ReportRecord> errors;

  const LanguageStats& at(LanguageId l) const { return per_language[index_of(l)]; }
};

// Records with a negative duration are reported and left out.
CorpusStats corpus_stats(const Manifest& manifest);

std::string render_stats(const CorpusStats& stats);

}  // namespace clsasr
